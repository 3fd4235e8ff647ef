from __future__ import annotations

import pytest

from latmod.errors import BadParameter, UnknownTheorem
from latmod.expansion import is_delta_primary, make_delta0, make_delta1
from latmod.generators import gen_zn
from latmod.search import SearchGoal, parse_goal, search


def test_parse_goal_forms():
    assert parse_goal("delta1-not-delta0") == ("delta1-not-delta0", None)
    assert parse_goal("theorem-fail(T-C41)") == ("theorem-fail", "T-C41")
    with pytest.raises(BadParameter):
        parse_goal("theorem-fail(T-C41")


def test_delta1_not_delta0_includes_z12_four():
    hits = search(SearchGoal("delta1-not-delta0", "zn", 12))
    assert ("zn(12)", "(4)") in hits
    assert hits == sorted(hits, key=lambda h: 0)  # already deterministic order
    for label, name in hits:
        n = int(label[3:-1])
        mod = gen_zn(n).module
        assert is_delta_primary(mod, make_delta1(mod), name)
        assert not is_delta_primary(mod, make_delta0(mod), name)


def test_primary_not_prime_includes_z4_zero():
    hits = search(SearchGoal("primary-not-prime", "zn", 11))
    assert ("zn(4)", "(0)") in hits


def test_2abs_not_prime_finds_witnesses():
    hits = search(SearchGoal("2abs-not-prime", "zn", 12))
    assert ("zn(4)", "(0)") in hits
    assert ("zn(6)", "(0)") in hits


def test_theorem_fail_empty_for_sound_theorem():
    assert search(SearchGoal("theorem-fail", "zn", 30, theorem="T-C41")) == []


def test_theorem_fail_unknown_id():
    with pytest.raises(UnknownTheorem):
        search(SearchGoal("theorem-fail", "zn", 5, theorem="NOPE"))


def test_hypothesis_boundary_on_chains():
    hits = search(SearchGoal("hypothesis-boundary", "frame-chain", 4, theorem="T-C4"))
    labels = [label for label, _ in hits]
    assert labels == ["chain(2)", "chain(3)", "chain(4)"]
    for _, flags in hits:
        assert "pg_lattice=False" in flags


def test_frame_families_bounded():
    hits = search(SearchGoal("delta1-not-delta0", "frame-boolean", 10))
    assert hits == []  # delta1 is the identity on every frame


def test_bad_goal_and_family():
    with pytest.raises(BadParameter):
        search(SearchGoal("no-such-goal", "zn", 5))
    with pytest.raises(BadParameter):
        search(SearchGoal("primary-not-prime", "mystery", 5))
    with pytest.raises(BadParameter):
        search(SearchGoal("primary-not-prime", "zn", 0))
    with pytest.raises(BadParameter):
        search(SearchGoal("theorem-fail", "zn", 5))
