"""Lattice modules: a multiplicative lattice acting on a complete lattice.

The action is a total int64 table of shape (|L|, |M|).  As in `lattice`,
everything is immutable after construction; derived tables and predicate
vectors are computed once per instance and cached.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .errors import IncompleteTable
from .lattice import Lattice, MulLattice, ValidationReport

MODULE_AXIOMS = (
    "scalar-join-distributive",
    "carrier-join-distributive",
    "acts-on-bottom",
    "associative-action",
    "identity-action",
    "zero-scalar-annihilates",
)


@dataclass(frozen=True, eq=False)
class LatticeModule:
    scalars: MulLattice
    carrier: Lattice
    action: np.ndarray  # int64 (|L|, |M|)

    @property
    def bottom_m(self) -> int:
        return self.carrier.bottom

    @property
    def top_m(self) -> int:
        return self.carrier.top

    def scalar(self, name: str) -> int:
        return self.scalars.index(name)

    def elem(self, name: str) -> int:
        return self.carrier.index(name)

    def act(self, a: str, x: str) -> str:
        return self.carrier.names[self.action[self.scalar(a), self.elem(x)]]

    # derived tables

    @cached_property
    def ai(self) -> np.ndarray:
        # a.I_M for every scalar a
        return self.action[:, self.top_m].copy()

    @cached_property
    def aipow(self) -> np.ndarray:
        # (a**cap).I_M; powers of a scalar descend, so this decides
        # "a**n . I_M <= N for some n"
        return self.action[self.scalars.powcap, self.top_m]

    @cached_property
    def res_mm(self) -> np.ndarray:
        # (A : B) in L
        return kernels.residual_mm_table(
            self.carrier.leq, self.scalars.lat.join, self.action, self.scalars.bottom
        )

    @cached_property
    def res_ma(self) -> np.ndarray:
        # (N : a) in M
        return kernels.residual_ma_table(
            self.carrier.leq, self.carrier.join, self.action, self.bottom_m
        )

    @cached_property
    def colon_im(self) -> np.ndarray:
        # (N : I_M) for every carrier element
        return self.res_mm[:, self.top_m].copy()

    @cached_property
    def sqrt_colon_im(self) -> np.ndarray:
        return self.scalars.rad[self.colon_im]

    @cached_property
    def rad_i(self) -> np.ndarray:
        # (sqrt(N : I_M)).I_M
        return self.action[self.sqrt_colon_im, self.top_m]

    @cached_property
    def prime_primary_flags(self) -> np.ndarray:
        return kernels.module_prime_primary_flags(
            self.carrier.leq, self.action, self.ai, self.aipow, self.top_m
        )

    @cached_property
    def semiprime_flags(self) -> np.ndarray:
        return kernels.module_semiprime_flags(
            self.carrier.leq, self.scalars.mul, self.ai, self.top_m
        )

    @cached_property
    def meet_prime_flags(self) -> np.ndarray:
        return kernels.module_meet_prime_flags(self.carrier.leq, self.carrier.meet, self.top_m)

    @cached_property
    def two_abs_flags(self) -> np.ndarray:
        return kernels.module_2abs_flags(
            self.scalars.leq,
            self.carrier.leq,
            self.scalars.mul,
            self.action,
            self.colon_im,
            self.rad_i,
            self.top_m,
        )

    @cached_property
    def principal_flags(self) -> np.ndarray:
        return kernels.module_principal_flags(
            self.scalars.lat.meet,
            self.scalars.lat.join,
            self.carrier.meet,
            self.carrier.join,
            self.action,
            self.res_mm,
        )

    @cached_property
    def maximal_flags(self) -> np.ndarray:
        n = len(self.carrier)
        strict_up = self.carrier.leq & ~np.eye(n, dtype=bool)
        out = np.zeros(n, dtype=bool)
        for i in range(n):
            if i == self.top_m:
                continue
            above = np.flatnonzero(strict_up[i])
            out[i] = len(above) == 1 and above[0] == self.top_m
        return out

    @cached_property
    def prime_elements(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self.prime_primary_flags[:, 0]))


def action_table_from_facts(module_scalars: MulLattice, carrier: Lattice, facts) -> np.ndarray:
    """Assemble the action table from (scalar, X, Y) facts meaning a.X = Y."""
    from .errors import ConflictingFact

    nl, nm = len(module_scalars), len(carrier)
    table = np.full((nl, nm), -1, dtype=np.int64)
    for a, x, y in facts:
        i = module_scalars.index(a)
        j = carrier.index(x)
        k = carrier.index(y)
        if table[i, j] not in (-1, k):
            raise ConflictingFact(f"act {a} {x}", 0)
        table[i, j] = k
    missing = np.argwhere(table < 0)
    if len(missing):
        i, j = missing[0]
        raise IncompleteTable("action", (module_scalars.names[i], carrier.names[j]))
    return table


def validate_module(mod: LatticeModule) -> ValidationReport:
    """Check the five module axioms on binary joins plus the empty join.

    In a finite lattice the binary checks imply the arbitrary-join axioms;
    the bottom cases are checked separately so table bugs localize.
    """
    wit = kernels.module_axiom_witnesses(
        mod.scalars.lat.join,
        mod.scalars.mul,
        mod.carrier.join,
        mod.action,
        mod.scalars.bottom,
        mod.scalars.top,
        mod.bottom_m,
    )
    sides = (
        ("ll", "m"),  # a, b, A
        ("l", "mm"),  # a, A, B
        ("l", ""),  # a
        ("ll", "m"),  # a, b, A
        ("m", ""),  # A
        ("m", ""),  # A
    )
    failures = []
    for row, axiom in enumerate(MODULE_AXIOMS):
        if wit[row, 0] >= 0:
            kinds = sides[row][0] + sides[row][1]
            names = []
            for pos, v in enumerate(wit[row]):
                if v < 0:
                    break
                source = mod.scalars.names if kinds[pos] == "l" else mod.carrier.names
                names.append(source[int(v)])
            failures.append((axiom, tuple(names)))
    return ValidationReport(not failures, tuple(failures))


def self_module(ml: MulLattice) -> LatticeModule:
    """The lattice as a module over itself, acting by its multiplication."""
    return LatticeModule(ml, ml.lat, ml.mul.copy())


def residual_ma(mod: LatticeModule, n: str, a: str) -> str:
    """(N : a) = join of {X in M : a.X <= N}."""
    return mod.carrier.names[int(mod.res_ma[mod.elem(n), mod.scalar(a)])]


def residual_mm(mod: LatticeModule, a: str, b: str) -> str:
    """(A : B) = join of {x in L : x.B <= A}."""
    return mod.scalars.names[int(mod.res_mm[mod.elem(a), mod.elem(b)])]


def is_faithful(mod: LatticeModule) -> bool:
    return int(mod.colon_im[mod.bottom_m]) == mod.scalars.bottom


def is_multiplication_module(mod: LatticeModule) -> bool:
    """True iff every N has the form a.I_M."""
    images = set(int(v) for v in mod.ai)
    return len(images) == len(mod.carrier)


def is_principal_m(mod: LatticeModule, n: str) -> tuple[bool, bool]:
    flags = mod.principal_flags[mod.elem(n)]
    return bool(flags[0]), bool(flags[1])


def is_pg_module(mod: LatticeModule) -> bool:
    principal = mod.principal_flags.all(axis=1)
    leq = mod.carrier.leq
    for a in range(len(mod.carrier)):
        acc = mod.bottom_m
        for p in np.flatnonzero(principal & leq[:, a]):
            acc = int(mod.carrier.join[acc, p])
        if acc != a:
            return False
    return True


def check_meet_distribution(mod: LatticeModule, scalars_family) -> bool:
    """Whether the meet of {a.I_M} over the family equals (meet of a's).I_M."""
    family = list(scalars_family)
    if not family:
        raise ValueError("family must be non-empty")
    idx = [mod.scalar(a) for a in family]
    lhs = mod.top_m
    for i in idx:
        lhs = int(mod.carrier.meet[lhs, mod.ai[i]])
    rhs_scalar = mod.scalars.top
    for i in idx:
        rhs_scalar = int(mod.scalars.lat.meet[rhs_scalar, i])
    return lhs == int(mod.action[rhs_scalar, mod.top_m])


@dataclass(frozen=True, eq=False)
class InstanceBundle:
    """A validated module plus the standing hypothesis flags the theorem
    registry consumes.  I_M is compact in every finite lattice; the flag is
    recorded for report completeness.  User-supplied expansion functions
    ride along so the verifier can quantify over them too."""

    module: LatticeModule
    label: str
    faithful: bool
    multiplication_module: bool
    pg_lattice: bool
    pg_module: bool
    im_compact: bool = True
    extra_expansions_m: tuple = ()
    extra_expansions_l: tuple = ()

    @property
    def scalars(self) -> MulLattice:
        return self.module.scalars

    @property
    def carrier(self) -> Lattice:
        return self.module.carrier


def make_bundle(mod: LatticeModule, label: str, extra_m=(), extra_l=()) -> InstanceBundle:
    from .lattice import is_pg_lattice

    return InstanceBundle(
        module=mod,
        label=label,
        faithful=is_faithful(mod),
        multiplication_module=is_multiplication_module(mod),
        pg_lattice=is_pg_lattice(mod.scalars),
        pg_module=is_pg_module(mod),
        extra_expansions_m=tuple(extra_m),
        extra_expansions_l=tuple(extra_l),
    )
