from __future__ import annotations

import pytest

from latmod.errors import NotAnExpansion
from latmod.expansion import (
    delta_primary_by_colon,
    delta_primary_by_residuals,
    delta_primary_on_compacts,
    deltaL_primary_by_colon,
    deltaL_primary_by_residuals,
    deltaL_primary_on_compacts,
    from_table_l,
    from_table_m,
    is_delta_primary,
    is_delta_primary_alt,
    is_delta_primary_l,
    is_deltaL_primary,
    is_meet_preserving_l,
    is_meet_preserving_m,
    make_delta0,
    make_delta0_l,
    make_delta1,
    make_delta1_l,
    make_delta2,
    make_delta2_l,
    make_E_delta,
    meet_expansions,
)


def _table_of(d):
    names = d.module.carrier.names
    return {a: d(a) for a in names}


def test_delta0_is_identity(z12):
    d0 = make_delta0(z12.module)
    assert all(d0(a) == a for a in z12.carrier.names)


def test_delta1_table_frozen(z12):
    d1 = make_delta1(z12.module)
    assert _table_of(d1) == {
        "(0)": "(6)",
        "(1)": "(1)",
        "(2)": "(2)",
        "(3)": "(3)",
        "(4)": "(2)",
        "(6)": "(6)",
    }


def test_delta2_table_frozen(z12):
    d2 = make_delta2(z12.module)
    assert _table_of(d2) == {
        "(0)": "(6)",
        "(1)": "(1)",
        "(2)": "(2)",
        "(3)": "(3)",
        "(4)": "(2)",
        "(6)": "(6)",
    }


def test_delta1_rejected_on_non_multiplication_module(separator_bundle):
    with pytest.raises(NotAnExpansion) as err:
        make_delta1(separator_bundle.module)
    assert err.value.witness == ("Y",)


def test_E_delta0_is_meet_of_primes_above(z12):
    d = make_E_delta(z12.module, make_delta0(z12.module))
    assert _table_of(d) == {
        "(0)": "(6)",
        "(1)": "(1)",
        "(2)": "(2)",
        "(3)": "(3)",
        "(4)": "(2)",
        "(6)": "(6)",
    }


def test_E_delta_fixes_delta_primary_elements(z12):
    mod = z12.module
    d1 = make_delta1(mod)
    e = make_E_delta(mod, d1)
    for p in mod.carrier.names:
        if is_delta_primary(mod, d1, p):
            assert e(p) == p


def test_meet_expansions_with_delta0_gives_delta0(z12):
    mod = z12.module
    d0 = make_delta0(mod)
    for other in (make_delta1(mod), make_delta2(mod)):
        met = meet_expansions(d0, other)
        assert (met.table == d0.table).all()
        same = meet_expansions(other, other)
        assert (same.table == other.table).all()


def test_meet_expansions_requires_same_module(z12, separator_bundle):
    with pytest.raises(ValueError):
        meet_expansions(make_delta0(z12.module), make_delta0(separator_bundle.module))


def test_from_table_rejects_non_monotone(z12):
    mod = z12.module
    table = {n: n for n in mod.carrier.names}
    table["(6)"] = "(2)"
    # (6) <= (3) but table[(6)] = (2) not<= (3) = table[(3)]
    with pytest.raises(NotAnExpansion) as err:
        from_table_m(mod, table, label="bad")
    assert err.value.witness == ("(6)", "(3)")


def test_from_table_accepts_constant_top(z12):
    mod = z12.module
    d = from_table_m(mod, {n: "(1)" for n in mod.carrier.names}, label="const")
    assert all(d(n) == "(1)" for n in mod.carrier.names)


def test_meet_preserving_flags(z12):
    mod = z12.module
    assert is_meet_preserving_m(make_delta0(mod))
    assert is_meet_preserving_m(make_delta1(mod))
    assert is_meet_preserving_m(make_delta2(mod))
    assert is_meet_preserving_l(make_delta1_l(mod.scalars))


def test_example_e_c1_reproduction(z12):
    mod = z12.module
    d0, d1 = make_delta0(mod), make_delta1(mod)
    assert is_delta_primary(mod, d1, "(4)")
    assert not is_delta_primary(mod, d0, "(4)")
    assert not is_delta_primary(mod, d0, "(1)"), "top is never delta-primary"


def test_alt_form_coincides_for_delta0(z12):
    mod = z12.module
    d0 = make_delta0(mod)
    for p in mod.carrier.names:
        assert is_delta_primary(mod, d0, p) == is_delta_primary_alt(mod, d0, p)


def test_alt_form_separates_on_non_multiplication_module(separator_bundle):
    mod = separator_bundle.module
    dsep = next(d for d in separator_bundle.extra_expansions_m if d.label == "dsep")
    assert is_delta_primary(mod, dsep, "O")
    assert not is_delta_primary_alt(mod, dsep, "O")


def test_three_characterization_routes_agree_on_z12(z12):
    mod = z12.module
    for d in (make_delta0(mod), make_delta1(mod), make_delta2(mod)):
        res_form = delta_primary_by_residuals(mod, d)
        colon_form = delta_primary_by_colon(mod, d)
        for p in mod.carrier.names:
            if p == "(1)":
                continue
            direct = is_delta_primary(mod, d, p)
            i = mod.elem(p)
            assert direct == bool(res_form[i]) == bool(colon_form[i])
            assert direct == delta_primary_on_compacts(mod, d, p)


def test_deltaL_primary_examples(z12):
    mod = z12.module
    dl0 = make_delta0_l(mod.scalars)
    dl1 = make_delta1_l(mod.scalars)
    assert is_deltaL_primary(mod, dl0, "(2)")
    assert is_deltaL_primary(mod, dl1, "(4)")
    assert not is_deltaL_primary(mod, dl0, "(4)")
    assert not is_deltaL_primary(mod, dl0, "(1)")


def test_deltaL_three_routes_agree(z12):
    mod = z12.module
    for dl in (make_delta0_l(mod.scalars), make_delta1_l(mod.scalars), make_delta2_l(mod.scalars)):
        res_form = deltaL_primary_by_residuals(mod, dl)
        colon_form = deltaL_primary_by_colon(mod, dl)
        for p in mod.carrier.names:
            if p == "(1)":
                continue
            direct = is_deltaL_primary(mod, dl, p)
            i = mod.elem(p)
            assert direct == bool(res_form[i]) == bool(colon_form[i])
            assert direct == deltaL_primary_on_compacts(mod, dl, p)


def test_scalar_deltaL_primary(z12):
    ml = z12.scalars
    dl0 = make_delta0_l(ml)
    dl1 = make_delta1_l(ml)
    # (delta0)_L-primary scalars are exactly the primes
    assert [p for p in ml.names if is_delta_primary_l(ml, dl0, p)] == ["(2)", "(3)"]
    assert is_delta_primary_l(ml, dl1, "(4)")


def test_delta0_pointwise_least(z12):
    mod = z12.module
    d0 = make_delta0(mod)
    for d in (make_delta1(mod), make_delta2(mod), make_E_delta(mod, d0)):
        assert mod.carrier.leq[d0.table, d.table].all()


def test_from_table_l_roundtrip(z12):
    ml = z12.scalars
    dl = from_table_l(ml, {a: a for a in ml.names}, label="id")
    assert all(dl(a) == a for a in ml.names)


def test_meet_of_delta1_delta2_value(z12):
    mod = z12.module
    met = meet_expansions(make_delta1(mod), make_delta2(mod))
    assert met("(4)") == "(2)"
    assert met.label == "meet(delta1,delta2)"
