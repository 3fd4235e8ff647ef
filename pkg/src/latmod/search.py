"""Counterexample and witness search over generated instance families."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParameter, NotAnExpansion
from .expansion import is_delta_primary, make_delta0, make_delta1
from .generators import gen_frame, gen_zn
from .module import InstanceBundle
from .verify import registry_entry, verify

GOALS = (
    "delta1-not-delta0",
    "primary-not-prime",
    "2abs-not-prime",
    "theorem-fail",
    "hypothesis-boundary",
)
FAMILIES = ("zn", "frame-boolean", "frame-chain")


@dataclass(frozen=True)
class SearchGoal:
    goal: str  # one of GOALS; theorem goals carry the id in `theorem`
    family: str  # one of FAMILIES
    bound: int
    theorem: str | None = None


def parse_goal(text: str) -> tuple[str, str | None]:
    """Split `theorem-fail(ID)` style goal syntax into (goal, theorem)."""
    if "(" in text:
        goal, _, rest = text.partition("(")
        if not rest.endswith(")"):
            raise BadParameter(f"bad goal syntax {text!r}")
        return goal, rest[:-1]
    return text, None


def _instances(family: str, bound: int):
    if bound < 1:
        raise BadParameter("bound must be >= 1")
    if family == "zn":
        for n in range(2, bound + 1):
            yield gen_zn(n)
    elif family == "frame-chain":
        for k in range(1, bound + 1):
            yield gen_frame(f"chain({k})")
    elif family == "frame-boolean":
        for k in range(1, min(bound, 4) + 1):
            yield gen_frame(f"boolean({k})")
    else:
        raise BadParameter(f"unknown family {family!r}")


def _element_goal(bundle: InstanceBundle, goal: str) -> list[str]:
    mod = bundle.module
    hits = []
    if goal == "delta1-not-delta0":
        d0 = make_delta0(mod)
        try:
            d1 = make_delta1(mod)
        except NotAnExpansion:
            return []
        for name in mod.carrier.names:
            if is_delta_primary(mod, d1, name) and not is_delta_primary(mod, d0, name):
                hits.append(name)
        return hits
    prime = mod.prime_primary_flags[:, 0]
    if goal == "primary-not-prime":
        flags = mod.prime_primary_flags[:, 1] & ~prime
    else:  # 2abs-not-prime
        flags = mod.two_abs_flags[:, 0] & ~prime
    return [mod.carrier.names[i] for i in range(len(mod.carrier)) if flags[i]]


def search(goal: SearchGoal) -> list[tuple[str, str]]:
    """Scan the family up to the bound; return (instance label, witness)
    pairs in family order."""
    if goal.goal not in GOALS:
        raise BadParameter(f"unknown goal {goal.goal!r}")
    if goal.goal in ("theorem-fail", "hypothesis-boundary"):
        if not goal.theorem:
            raise BadParameter(f"goal {goal.goal} needs a theorem id")
        registry_entry(goal.theorem)  # raises UnknownTheorem early
    out: list[tuple[str, str]] = []
    for bundle in _instances(goal.family, goal.bound):
        if goal.goal == "theorem-fail":
            report = verify(bundle, goal.theorem)
            if report.outcome == "FAIL":
                out.append((bundle.label, report.witness_str()))
        elif goal.goal == "hypothesis-boundary":
            report = verify(bundle, goal.theorem)
            if report.outcome == "VACUOUS":
                flags = (
                    f"faithful={bundle.faithful} mult={bundle.multiplication_module} "
                    f"pg_lattice={bundle.pg_lattice} pg_module={bundle.pg_module}"
                )
                out.append((bundle.label, flags))
        else:
            for name in _element_goal(bundle, goal.goal):
                out.append((bundle.label, name))
    return out
