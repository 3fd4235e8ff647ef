from __future__ import annotations

import pytest

import zn_oracle as oracle
from latmod.errors import BadParameter
from latmod.generators import gen_frame, gen_zn
from latmod.lattice import radical_l, validate_mul
from latmod.module import validate_module


def test_gen_zn_12_elements(z12):
    assert z12.scalars.names == ("(0)", "(1)", "(2)", "(3)", "(4)", "(6)")


def test_gen_zn_formula_example(z12):
    ml = z12.scalars
    assert ml.names[int(ml.mul[ml.index("(2)"), ml.index("(6)")])] == "(0)"


def test_gen_zn_prime_gives_two_chain():
    for p in (2, 3, 5, 7, 11):
        b = gen_zn(p)
        assert b.scalars.names == ("(0)", "(1)")


def test_gen_zn_bad_parameter():
    with pytest.raises(BadParameter):
        gen_zn(1)
    with pytest.raises(BadParameter):
        gen_zn(0)


def test_gen_zn_hypothesis_flags_up_to_40():
    for n in range(2, 41):
        b = gen_zn(n)
        assert validate_mul(b.scalars).ok
        assert validate_module(b.module).ok
        assert b.faithful
        assert b.multiplication_module
        assert b.pg_lattice
        assert b.pg_module


def test_gen_zn_tables_match_oracle():
    for n in (6, 8, 9, 30):
        ml = gen_zn(n).scalars
        for a in ml.names:
            for b in ml.names:
                assert ml.names[int(ml.mul[ml.index(a), ml.index(b)])] == oracle.mul_name(
                    n, a, b
                )


def test_gen_frame_chain_shapes():
    b = gen_frame("chain(1)")
    assert b.scalars.names == ("c0", "c1")
    b = gen_frame("chain(3)")
    ml = b.scalars
    # idempotent multiplication: every radical is the element itself
    assert all(radical_l(ml, a) == a for a in ml.names)


def test_gen_frame_boolean_shapes():
    b = gen_frame("boolean(2)")
    ml = b.scalars
    assert ml.names == ("0", "a", "ab", "b")
    assert all(int(ml.mul[i, i]) == i for i in range(len(ml)))


def test_gen_frame_validates():
    for shape in ("chain(1)", "chain(4)", "boolean(1)", "boolean(3)"):
        b = gen_frame(shape)
        assert validate_mul(b.scalars).ok
        assert validate_module(b.module).ok
        assert b.multiplication_module


def test_gen_frame_bad_parameters():
    for shape in ("chain(0)", "boolean(0)", "boolean(5)", "cube(2)", "chain", "chain(x)"):
        with pytest.raises(BadParameter):
            gen_frame(shape)
