"""Witness soundness for the axiom validators: every reported witness must
actually violate its axiom when re-evaluated naively, under random
single-entry corruption of the tables."""

from __future__ import annotations

import numpy as np
from hypothesis import given, strategies as st

from latmod.generators import gen_zn
from latmod.lattice import MulLattice, validate_mul
from latmod.module import LatticeModule, validate_module


def _violates_mul_axiom(ml, axiom, names):
    lat = ml.lat
    idx = [lat.index(x) for x in names]
    mul = lambda a, b: int(ml.mul[a, b])
    if axiom == "commutative":
        a, b = idx
        return mul(a, b) != mul(b, a)
    if axiom == "associative":
        a, b, c = idx
        return mul(mul(a, b), c) != mul(a, mul(b, c))
    if axiom == "join-distributive":
        a, b, c = idx
        return mul(a, int(lat.join[b, c])) != int(lat.join[mul(a, b), mul(a, c)])
    if axiom == "identity":
        (a,) = idx
        return mul(lat.top, a) != a
    if axiom == "zero-annihilates":
        (a,) = idx
        return mul(lat.bottom, a) != lat.bottom
    if axiom == "product-below-meet":
        a, b = idx
        return not lat.leq[mul(a, b), int(lat.meet[a, b])]
    raise AssertionError(f"unknown axiom {axiom}")


def _violates_module_axiom(mod, axiom, names):
    ml, car = mod.scalars, mod.carrier
    act = lambda a, x: int(mod.action[a, x])
    if axiom == "scalar-join-distributive":
        a, b = ml.index(names[0]), ml.index(names[1])
        x = car.index(names[2])
        return act(int(ml.lat.join[a, b]), x) != int(car.join[act(a, x), act(b, x)])
    if axiom == "carrier-join-distributive":
        a = ml.index(names[0])
        x, y = car.index(names[1]), car.index(names[2])
        return act(a, int(car.join[x, y])) != int(car.join[act(a, x), act(a, y)])
    if axiom == "acts-on-bottom":
        a = ml.index(names[0])
        return act(a, car.bottom) != car.bottom
    if axiom == "associative-action":
        a, b = ml.index(names[0]), ml.index(names[1])
        x = car.index(names[2])
        return act(int(ml.mul[a, b]), x) != act(a, act(b, x))
    if axiom == "identity-action":
        x = car.index(names[0])
        return act(ml.top, x) != x
    if axiom == "zero-scalar-annihilates":
        x = car.index(names[0])
        return act(ml.bottom, x) != car.bottom
    raise AssertionError(f"unknown axiom {axiom}")


@given(
    st.integers(min_value=4, max_value=60),
    st.data(),
)
def test_mul_validation_witnesses_replay(n, data):
    ml = gen_zn(n).scalars
    size = len(ml)
    i = data.draw(st.integers(0, size - 1))
    j = data.draw(st.integers(0, size - 1))
    v = data.draw(st.integers(0, size - 1))
    mul = ml.mul.copy()
    mul[i, j] = v
    cand = MulLattice(ml.lat, mul)
    report = validate_mul(cand)
    if mul[i, j] == ml.mul[i, j]:
        assert report.ok
        return
    for axiom, names in report.failures:
        assert _violates_mul_axiom(cand, axiom, names), (axiom, names)


@given(
    st.integers(min_value=4, max_value=60),
    st.data(),
)
def test_module_validation_witnesses_replay(n, data):
    mod = gen_zn(n).module
    nl, nm = mod.action.shape
    i = data.draw(st.integers(0, nl - 1))
    j = data.draw(st.integers(0, nm - 1))
    v = data.draw(st.integers(0, nm - 1))
    action = mod.action.copy()
    action[i, j] = v
    cand = LatticeModule(mod.scalars, mod.carrier, action)
    report = validate_module(cand)
    if action[i, j] == mod.action[i, j]:
        assert report.ok
        return
    for axiom, names in report.failures:
        assert _violates_module_axiom(cand, axiom, names), (axiom, names)


@given(st.integers(min_value=4, max_value=60), st.data())
def test_corrupted_identity_row_is_always_caught(n, data):
    mod = gen_zn(n).module
    nm = mod.action.shape[1]
    j = data.draw(st.integers(0, nm - 1))
    v = data.draw(st.integers(0, nm - 1).filter(lambda k: k != j))
    action = mod.action.copy()
    action[mod.scalars.top, j] = v
    report = validate_module(LatticeModule(mod.scalars, mod.carrier, action))
    assert not report.ok
    assert "identity-action" in {axiom for axiom, _ in report.failures}
