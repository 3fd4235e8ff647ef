from __future__ import annotations

import numpy as np
import pytest

import zn_oracle as oracle
from latmod.lattice import build_lattice
from latmod.module import (
    LatticeModule,
    check_meet_distribution,
    is_faithful,
    is_multiplication_module,
    is_pg_module,
    is_principal_m,
    residual_ma,
    residual_mm,
    self_module,
    validate_module,
)


def test_z12_self_module_validates(z12):
    assert validate_module(z12.module).ok


def test_broken_identity_axiom_reports_witness(z12):
    mod = z12.module
    action = mod.action.copy()
    action[mod.scalars.top, 2] = 0  # 1.A no longer A
    report = validate_module(LatticeModule(mod.scalars, mod.carrier, action))
    failed = dict(report.failures)
    assert "identity-action" in failed
    assert failed["identity-action"] == (mod.carrier.names[2],)


def test_residual_ma_by_identity_scalar(z12):
    mod = z12.module
    for n in mod.carrier.names:
        assert residual_ma(mod, n, "(1)") == n


def test_residual_ma_matches_scalar_residual_on_self_module(z12):
    # the action is the multiplication, so (N:a) agrees with the oracle
    mod = z12.module
    assert residual_ma(mod, "(4)", "(2)") == "(2)"
    for n in mod.carrier.names:
        for a in mod.scalars.names:
            assert residual_ma(mod, n, a) == oracle.residual_name(12, n, a)


def test_residual_ma_top_absorbs(z12):
    mod = z12.module
    for a in mod.scalars.names:
        assert residual_ma(mod, "(1)", a) == "(1)"


def test_residual_mm_against_top(z12):
    mod = z12.module
    assert residual_mm(mod, "(4)", "(1)") == "(4)"
    for a in mod.carrier.names:
        assert residual_mm(mod, a, a) == "(1)"


def test_faithful_examples(z12, nonfaithful_bundle):
    assert is_faithful(z12.module)
    assert not nonfaithful_bundle.faithful
    assert residual_mm(nonfaithful_bundle.module, "O", "I") == "m"


def test_singleton_carrier_is_not_faithful(z12):
    carrier = build_lattice(["*"], [])
    action = np.zeros((len(z12.scalars), 1), dtype=np.int64)
    mod = LatticeModule(z12.scalars, carrier, action)
    assert validate_module(mod).ok
    assert not is_faithful(mod)


def test_multiplication_module_examples(z12, separator_bundle):
    assert is_multiplication_module(z12.module)
    assert not separator_bundle.multiplication_module  # Y is not of the form a.I
    assert is_multiplication_module(self_module(z12.scalars))


def test_z12_principal_and_pg(z12):
    mod = z12.module
    assert is_principal_m(mod, "(1)") == (True, True)
    assert is_principal_m(mod, "(0)") == (True, True)
    assert all(is_principal_m(mod, n) == (True, True) for n in mod.carrier.names)
    assert is_pg_module(mod)


def test_separator_carrier_not_pg(separator_bundle):
    assert not separator_bundle.pg_module


def test_meet_distribution_examples(z12):
    mod = z12.module
    assert check_meet_distribution(mod, ["(2)", "(3)"])
    assert check_meet_distribution(mod, ["(2)"])
    with pytest.raises(ValueError):
        check_meet_distribution(mod, [])


def test_meet_distribution_all_families_on_z12(z12):
    mod = z12.module
    names = mod.scalars.names
    for mask in range(1, 1 << len(names)):
        family = [names[i] for i in range(len(names)) if mask >> i & 1]
        assert check_meet_distribution(mod, family)


def test_action_monotone_in_both_arguments(z12, separator_bundle):
    for bundle in (z12, separator_bundle):
        mod = bundle.module
        leq_l, leq_m, act = mod.scalars.leq, mod.carrier.leq, mod.action
        nl, nm = act.shape
        for a in range(nl):
            for b in range(nl):
                if leq_l[a, b]:
                    assert leq_m[act[a], act[b]].all()
        for x in range(nm):
            for y in range(nm):
                if leq_m[x, y]:
                    assert leq_m[act[:, x], act[:, y]].all()


def test_colon_im_representation_tight_iff_multiplication(z12, separator_bundle):
    # (A:I_M).I_M <= A always; equality for every A exactly on
    # multiplication modules
    for bundle, expect in ((z12, True), (separator_bundle, False)):
        mod = bundle.module
        tight = True
        for i in range(len(mod.carrier)):
            rep = int(mod.action[mod.colon_im[i], mod.top_m])
            assert mod.carrier.leq[rep, i]
            tight &= rep == i
        assert tight == expect


def test_bundle_flags_recorded(z12):
    assert z12.im_compact
    assert z12.label == "zn(12)"


def test_singleton_carrier_is_pg(z12):
    carrier = build_lattice(["*"], [])
    action = np.zeros((len(z12.scalars), 1), dtype=np.int64)
    mod = LatticeModule(z12.scalars, carrier, action)
    assert is_pg_module(mod)


def test_bundle_flags_match_predicates(z12, separator_bundle, nonfaithful_bundle):
    from latmod.lattice import is_pg_lattice

    for b in (z12, separator_bundle, nonfaithful_bundle):
        assert b.faithful == is_faithful(b.module)
        assert b.multiplication_module == is_multiplication_module(b.module)
        assert b.pg_lattice == is_pg_lattice(b.scalars)
        assert b.pg_module == is_pg_module(b.module)
