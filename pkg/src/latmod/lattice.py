"""Finite bounded lattices and multiplicative lattices.

Elements are identified by strings and stored in lexicographic order;
every table is an int64 index array over that ordering, so all sweeps,
witnesses and rendered output are deterministic.  Instances are immutable
after construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .errors import (
    DuplicateElement,
    IncompleteTable,
    NotALattice,
    NotAPartialOrder,
    UnknownElement,
)

MUL_AXIOMS = (
    "commutative",
    "associative",
    "join-distributive",
    "identity",
    "zero-annihilates",
    "product-below-meet",
)


@dataclass(frozen=True, eq=False)
class ValidationReport:
    """Outcome of an axiom sweep; ok iff no axiom has a witness."""

    ok: bool
    failures: tuple[tuple[str, tuple[str, ...]], ...]

    def render(self) -> str:
        if self.ok:
            return "ok"
        lines = [f"FAIL {axiom}: witness {witness}" for axiom, witness in self.failures]
        return "\n".join(lines)


@dataclass(frozen=True, eq=False)
class Lattice:
    names: tuple[str, ...]
    leq: np.ndarray  # bool (n, n)
    meet: np.ndarray  # int64 (n, n)
    join: np.ndarray  # int64 (n, n)
    bottom: int
    top: int

    def __len__(self) -> int:
        return len(self.names)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownElement(name) from None

    def name(self, i: int) -> str:
        return self.names[i]

    def le(self, a: str, b: str) -> bool:
        return bool(self.leq[self.index(a), self.index(b)])

    def join_of(self, items) -> str:
        """Join of any finite family of names (empty family gives bottom)."""
        acc = self.bottom
        for x in items:
            acc = int(self.join[acc, self.index(x)])
        return self.names[acc]

    def meet_of(self, items) -> str:
        """Meet of any finite family of names (empty family gives top)."""
        acc = self.top
        for x in items:
            acc = int(self.meet[acc, self.index(x)])
        return self.names[acc]

    def covers(self) -> tuple[tuple[str, str], ...]:
        """Cover pairs (a, b) with a covered by b, sorted."""
        n = len(self.names)
        lt = self.leq & ~np.eye(n, dtype=bool)
        cov = lt & ~(lt.astype(np.int64) @ lt.astype(np.int64)).astype(bool)
        pairs = [(self.names[i], self.names[j]) for i, j in np.argwhere(cov)]
        return tuple(sorted(pairs))


def build_lattice(elements, pairs) -> Lattice:
    """Build a lattice from element names and generating relations a <= b.

    The relation is closed reflexively and transitively; any generating
    set (Hasse covers or the full order) is accepted.
    """
    names = list(elements)
    seen = set()
    for name in names:
        if not name:
            raise ValueError("element names must be non-empty")
        if name in seen:
            raise DuplicateElement(name)
        seen.add(name)
    if not names:
        raise NotALattice("a bounded lattice needs at least one element")
    names = sorted(names)
    idx = {name: i for i, name in enumerate(names)}
    n = len(names)
    rel = np.eye(n, dtype=bool)
    for a, b in pairs:
        if a not in idx:
            raise UnknownElement(a)
        if b not in idx:
            raise UnknownElement(b)
        rel[idx[a], idx[b]] = True
    while True:
        nxt = rel | (rel.astype(np.int64) @ rel.astype(np.int64)).astype(bool)
        if (nxt == rel).all():
            break
        rel = nxt
    cyc = rel & rel.T & ~np.eye(n, dtype=bool)
    if cyc.any():
        i, j = np.argwhere(cyc)[0]
        raise NotAPartialOrder(names[i], names[j])

    meet = np.empty((n, n), dtype=np.int64)
    join = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            lower = rel[:, i] & rel[:, j]
            glb = [k for k in np.flatnonzero(lower) if (~lower | rel[:, k]).all()]
            if len(glb) != 1:
                raise NotALattice("no unique meet", (names[i], names[j]))
            meet[i, j] = glb[0]
            upper = rel[i, :] & rel[j, :]
            lub = [k for k in np.flatnonzero(upper) if (~upper | rel[k, :]).all()]
            if len(lub) != 1:
                raise NotALattice("no unique join", (names[i], names[j]))
            join[i, j] = lub[0]
    bottoms = np.flatnonzero(rel.all(axis=1))
    tops = np.flatnonzero(rel.all(axis=0))
    if len(bottoms) != 1 or len(tops) != 1:
        raise NotALattice("no global bottom or top")
    return Lattice(tuple(names), rel, meet, join, int(bottoms[0]), int(tops[0]))


@dataclass(frozen=True, eq=False)
class MulLattice:
    """A lattice with a commutative multiplication table (index form)."""

    lat: Lattice
    mul: np.ndarray  # int64 (n, n)

    def __len__(self) -> int:
        return len(self.lat)

    @property
    def names(self) -> tuple[str, ...]:
        return self.lat.names

    @property
    def leq(self) -> np.ndarray:
        return self.lat.leq

    @property
    def bottom(self) -> int:
        return self.lat.bottom

    @property
    def top(self) -> int:
        return self.lat.top

    def index(self, name: str) -> int:
        return self.lat.index(name)

    def name(self, i: int) -> str:
        return self.lat.names[i]

    # derived tables, computed once per instance

    @cached_property
    def res(self) -> np.ndarray:
        return kernels.residual_scalar_table(self.leq, self.lat.join, self.mul, self.bottom)

    @cached_property
    def powcap(self) -> np.ndarray:
        return kernels.power_cap_vec(self.mul, self.top)

    @cached_property
    def rad(self) -> np.ndarray:
        return kernels.radical_vec(self.leq, self.lat.join, self.powcap, self.bottom)

    @cached_property
    def principal_flags(self) -> np.ndarray:
        return kernels.principal_scalar_flags(self.lat.meet, self.lat.join, self.mul, self.res)

    @cached_property
    def class_flags(self) -> np.ndarray:
        # columns: prime, primary, 2-absorbing, 2-absorbing-primary
        return kernels.scalar_classification_flags(
            self.leq, self.mul, self.rad, self.powcap, self.top
        )

    @cached_property
    def maximal_flags(self) -> np.ndarray:
        n = len(self)
        strict_up = self.leq & ~np.eye(n, dtype=bool)
        out = np.zeros(n, dtype=bool)
        for i in range(n):
            if i == self.top:
                continue
            above = np.flatnonzero(strict_up[i])
            out[i] = len(above) == 1 and above[0] == self.top
        return out


def mul_table_from_facts(lat: Lattice, facts) -> np.ndarray:
    """Assemble a full multiplication table from (a, b, c) facts.

    Commutativity is implied; both orders may be given if consistent.
    """
    from .errors import ConflictingFact

    n = len(lat)
    table = np.full((n, n), -1, dtype=np.int64)
    for a, b, c in facts:
        i, j, k = lat.index(a), lat.index(b), lat.index(c)
        for x, y in ((i, j), (j, i)):
            if table[x, y] not in (-1, k):
                raise ConflictingFact(f"mul {a} {b}", 0)
            table[x, y] = k
    missing = np.argwhere(table < 0)
    if len(missing):
        i, j = missing[0]
        raise IncompleteTable("multiplication", (lat.names[i], lat.names[j]))
    return table


def validate_mul(ml: MulLattice) -> ValidationReport:
    """Check the multiplicative-lattice axioms, reporting one witness per
    violated axiom rather than failing fast."""
    wit = kernels.mul_axiom_witnesses(
        ml.leq, ml.lat.meet, ml.lat.join, ml.mul, ml.bottom, ml.top
    )
    failures = []
    for row, axiom in enumerate(MUL_AXIOMS):
        if wit[row, 0] >= 0:
            names = tuple(ml.name(int(v)) for v in wit[row] if v >= 0)
            failures.append((axiom, names))
    return ValidationReport(not failures, tuple(failures))


def residual_ll(ml: MulLattice, a: str, b: str) -> str:
    """(a : b), the largest x with x*b <= a."""
    return ml.name(int(ml.res[ml.index(a), ml.index(b)]))


def radical_l(ml: MulLattice, a: str) -> str:
    """Join of every x some power of which lies below a."""
    return ml.name(int(ml.rad[ml.index(a)]))


def is_principal_l(ml: MulLattice, e: str) -> tuple[bool, bool]:
    """(meet principal, join principal) for e."""
    flags = ml.principal_flags[ml.index(e)]
    return bool(flags[0]), bool(flags[1])


def is_pg_lattice(ml: MulLattice) -> bool:
    """True iff every element is the join of the principal elements below it."""
    principal = ml.principal_flags.all(axis=1)
    for a in range(len(ml)):
        acc = ml.bottom
        for p in np.flatnonzero(principal & ml.leq[:, a]):
            acc = int(ml.lat.join[acc, p])
        if acc != a:
            return False
    return True


def is_prime_l(ml: MulLattice, p: str) -> bool:
    return bool(ml.class_flags[ml.index(p), 0])


def is_primary_l(ml: MulLattice, p: str) -> bool:
    return bool(ml.class_flags[ml.index(p), 1])


def is_2abs_l(ml: MulLattice, q: str) -> bool:
    return bool(ml.class_flags[ml.index(q), 2])


def is_2abs_primary_l(ml: MulLattice, q: str) -> bool:
    return bool(ml.class_flags[ml.index(q), 3])
