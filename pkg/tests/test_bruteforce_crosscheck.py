"""Naive name-based reimplementations of the core predicates, checked
against the kernel-backed flags.  These deliberately share no code with
the kernels: quantifiers run over element names through the public
accessors."""

from __future__ import annotations

import pytest

from latmod.expansion import (
    is_delta_primary,
    is_deltaL_primary,
    make_delta0,
    make_delta1_l,
    make_delta2,
)
from latmod.generators import gen_frame, gen_zn
from latmod.lattice import is_2abs_l, is_primary_l, is_prime_l, radical_l, residual_ll
from latmod.module import residual_ma, residual_mm


def _les(struct):
    return struct.le


def _mul(ml):
    def mul(a, b):
        return ml.names[int(ml.mul[ml.index(a), ml.index(b)])]

    return mul


def _act(mod):
    def act(a, x):
        return mod.carrier.names[int(mod.action[mod.scalar(a), mod.elem(x)])]

    return act


def naive_residual_ll(ml, a, b):
    mul = _mul(ml)
    le = ml.lat.le
    return ml.lat.join_of(x for x in ml.names if le(mul(x, b), a))


def naive_radical(ml, a):
    mul = _mul(ml)
    le = ml.lat.le
    members = []
    for x in ml.names:
        p = x
        for _ in range(len(ml.names)):
            if le(p, a):
                members.append(x)
                break
            p = mul(p, x)
    return ml.lat.join_of(members)


def naive_prime_l(ml, p):
    if p == ml.names[ml.top]:
        return False
    mul = _mul(ml)
    le = ml.lat.le
    return all(
        not le(mul(a, b), p) or le(a, p) or le(b, p) for a in ml.names for b in ml.names
    )


def naive_primary_l(ml, p):
    if p == ml.names[ml.top]:
        return False
    mul = _mul(ml)
    le = ml.lat.le

    def some_power_below(b):
        q = b
        for _ in range(len(ml.names)):
            if le(q, p):
                return True
            q = mul(q, b)
        return le(q, p)

    return all(
        not le(mul(a, b), p) or le(a, p) or some_power_below(b)
        for a in ml.names
        for b in ml.names
    )


def naive_2abs_l(ml, q):
    if q == ml.names[ml.top]:
        return False
    mul = _mul(ml)
    le = ml.lat.le
    for a in ml.names:
        for b in ml.names:
            for c in ml.names:
                if le(mul(mul(a, b), c), q):
                    if not (le(mul(a, b), q) or le(mul(b, c), q) or le(mul(c, a), q)):
                        return False
    return True


def naive_residual_mm(mod, a, b):
    act = _act(mod)
    le = mod.carrier.le
    return mod.scalars.lat.join_of(x for x in mod.scalars.names if le(act(x, b), a))


def naive_residual_ma(mod, n, a):
    act = _act(mod)
    le = mod.carrier.le
    return mod.carrier.join_of(x for x in mod.carrier.names if le(act(a, x), n))


def naive_delta_primary(mod, d, p):
    if p == mod.carrier.names[mod.top_m]:
        return False
    act = _act(mod)
    le = mod.carrier.le
    top = mod.carrier.names[mod.top_m]
    return all(
        not le(act(a, x), p) or le(x, p) or le(act(a, top), d(p))
        for a in mod.scalars.names
        for x in mod.carrier.names
    )


def naive_deltaL_primary(mod, dl, p):
    if p == mod.carrier.names[mod.top_m]:
        return False
    act = _act(mod)
    le = mod.carrier.le
    colon = naive_residual_mm(mod, p, mod.carrier.names[mod.top_m])
    bound = dl(colon)
    return all(
        not le(act(a, x), p) or le(x, p) or mod.scalars.lat.le(a, bound)
        for a in mod.scalars.names
        for x in mod.carrier.names
    )


@pytest.fixture(
    scope="module",
    params=["zn(12)", "zn(36)", "zn(16)", "boolean(3)", "chain(3)"],
)
def instance(request):
    kind, _, arg = request.param.partition("(")
    if kind == "zn":
        return gen_zn(int(arg[:-1]))
    return gen_frame(request.param)


def test_residuals_match_naive(instance):
    ml = instance.scalars
    for a in ml.names:
        for b in ml.names:
            assert residual_ll(ml, a, b) == naive_residual_ll(ml, a, b)
    mod = instance.module
    for a in mod.carrier.names:
        for b in mod.carrier.names:
            assert residual_mm(mod, a, b) == naive_residual_mm(mod, a, b)
    for n in mod.carrier.names:
        for a in mod.scalars.names:
            assert residual_ma(mod, n, a) == naive_residual_ma(mod, n, a)


def test_radical_matches_naive(instance):
    ml = instance.scalars
    for a in ml.names:
        assert radical_l(ml, a) == naive_radical(ml, a)


def test_scalar_classifications_match_naive(instance):
    ml = instance.scalars
    for p in ml.names:
        assert is_prime_l(ml, p) == naive_prime_l(ml, p)
        assert is_primary_l(ml, p) == naive_primary_l(ml, p)
        assert is_2abs_l(ml, p) == naive_2abs_l(ml, p)


def test_delta_primary_matches_naive(instance):
    mod = instance.module
    for d in (make_delta0(mod), make_delta2(mod)):
        for p in mod.carrier.names:
            assert is_delta_primary(mod, d, p) == naive_delta_primary(mod, d, p)


def test_deltaL_primary_matches_naive(instance):
    mod = instance.module
    dl = make_delta1_l(mod.scalars)
    for p in mod.carrier.names:
        assert is_deltaL_primary(mod, dl, p) == naive_deltaL_primary(mod, dl, p)


def test_delta_primary_matches_naive_on_nonself_module(separator_bundle):
    mod = separator_bundle.module
    dsep = separator_bundle.extra_expansions_m[0]
    for d in (make_delta0(mod), dsep):
        for p in mod.carrier.names:
            assert is_delta_primary(mod, d, p) == naive_delta_primary(mod, d, p)
