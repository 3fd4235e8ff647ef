"""Expansion functions on a module and on its scalar lattice.

An expansion function is an inflationary monotone self-map, given here as
a total index table.  Construction always validates both axioms; the
standard expansions are the identity, the radical-of-colon map (which
needs the multiplication-module proviso to be inflationary), and the meet
of maximal elements above.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .errors import IncompleteTable, NotAnExpansion
from .lattice import Lattice, MulLattice
from .module import LatticeModule


def _check_expansion(names, leq, table, what: str) -> None:
    n = len(names)
    for i in range(n):
        if not leq[i, table[i]]:
            raise NotAnExpansion(f"{what} is not inflationary", (names[i],))
    for i in range(n):
        for j in range(n):
            if leq[i, j] and not leq[table[i], table[j]]:
                raise NotAnExpansion(f"{what} is not monotone", (names[i], names[j]))


@dataclass(frozen=True, eq=False)
class ExpansionM:
    module: LatticeModule
    table: np.ndarray  # int64 (|M|,)
    label: str

    def __call__(self, a: str) -> str:
        return self.module.carrier.names[int(self.table[self.module.elem(a)])]

    @cached_property
    def primary_flags(self) -> np.ndarray:
        # columns: as-defined form, swapped form
        return kernels.delta_primary_flags(
            self.module.carrier.leq,
            self.module.action,
            self.module.ai,
            self.table,
            self.module.top_m,
        )

    @cached_property
    def meet_preserving(self) -> bool:
        meet = self.module.carrier.meet
        t = self.table
        return bool((t[meet] == meet[t[:, None], t[None, :]]).all())


@dataclass(frozen=True, eq=False)
class ExpansionL:
    lattice: MulLattice
    table: np.ndarray  # int64 (|L|,)
    label: str

    def __call__(self, a: str) -> str:
        return self.lattice.names[int(self.table[self.lattice.index(a)])]

    @cached_property
    def scalar_primary_flags(self) -> np.ndarray:
        return kernels.scalar_dl_primary_flags(
            self.lattice.leq, self.lattice.mul, self.table, self.lattice.top
        )

    @cached_property
    def meet_preserving(self) -> bool:
        meet = self.lattice.lat.meet
        t = self.table
        return bool((t[meet] == meet[t[:, None], t[None, :]]).all())


def make_delta0(mod: LatticeModule) -> ExpansionM:
    """The identity expansion."""
    return ExpansionM(mod, np.arange(len(mod.carrier), dtype=np.int64), "delta0")


def make_delta1(mod: LatticeModule) -> ExpansionM:
    """A -> (sqrt(A:I_M)).I_M.

    Always monotone; on multiplication modules also inflationary. When
    inflation fails (possible only off that proviso) construction raises
    with the offending element.
    """
    table = mod.action[mod.sqrt_colon_im, mod.top_m].astype(np.int64)
    _check_expansion(mod.carrier.names, mod.carrier.leq, table, "delta1")
    return ExpansionM(mod, table, "delta1")


def make_delta2(mod: LatticeModule) -> ExpansionM:
    """A -> meet of the maximal elements above A (empty meet is I_M)."""
    nm = len(mod.carrier)
    meet = mod.carrier.meet
    leq = mod.carrier.leq
    table = np.empty(nm, dtype=np.int64)
    maxima = np.flatnonzero(mod.maximal_flags)
    for a in range(nm):
        acc = mod.top_m
        for h in maxima:
            if leq[a, h]:
                acc = int(meet[acc, h])
        table[a] = acc
    table[mod.top_m] = mod.top_m
    return ExpansionM(mod, table, "delta2")


def meet_expansions(d1: ExpansionM, d2: ExpansionM) -> ExpansionM:
    """Pointwise meet of two expansions on the same module, revalidated."""
    if d1.module is not d2.module:
        raise ValueError("expansions live on different modules")
    mod = d1.module
    table = mod.carrier.meet[d1.table, d2.table].astype(np.int64)
    label = f"meet({d1.label},{d2.label})"
    _check_expansion(mod.carrier.names, mod.carrier.leq, table, label)
    return ExpansionM(mod, table, label)


def make_E_delta(mod: LatticeModule, d: ExpansionM) -> ExpansionM:
    """A -> meet of the d-primary elements above A (empty meet is I_M)."""
    nm = len(mod.carrier)
    leq = mod.carrier.leq
    meet = mod.carrier.meet
    prim = np.flatnonzero(d.primary_flags[:, 0])
    table = np.empty(nm, dtype=np.int64)
    for a in range(nm):
        acc = mod.top_m
        for j in prim:
            if leq[a, j]:
                acc = int(meet[acc, j])
        table[a] = acc
    table[mod.top_m] = mod.top_m
    label = f"E({d.label})"
    _check_expansion(mod.carrier.names, mod.carrier.leq, table, label)
    return ExpansionM(mod, table, label)


def _table_from_mapping(names, mapping, index) -> np.ndarray:
    table = np.full(len(names), -1, dtype=np.int64)
    for a, b in mapping.items():
        table[index(a)] = index(b)
    missing = np.flatnonzero(table < 0)
    if len(missing):
        raise IncompleteTable("expansion", (names[int(missing[0])], "?"))
    return table


def from_table_m(mod: LatticeModule, table, label: str = "custom") -> ExpansionM:
    """Wrap a user-supplied total table after validating both axioms."""
    if isinstance(table, dict):
        table = _table_from_mapping(mod.carrier.names, table, mod.elem)
    table = np.asarray(table, dtype=np.int64)
    _check_expansion(mod.carrier.names, mod.carrier.leq, table, label)
    return ExpansionM(mod, table, label)


def from_table_l(ml: MulLattice, table, label: str = "custom") -> ExpansionL:
    if isinstance(table, dict):
        table = _table_from_mapping(ml.names, table, ml.index)
    table = np.asarray(table, dtype=np.int64)
    _check_expansion(ml.names, ml.leq, table, label)
    return ExpansionL(ml, table, label)


def make_delta0_l(ml: MulLattice) -> ExpansionL:
    return ExpansionL(ml, np.arange(len(ml), dtype=np.int64), "delta0_L")


def make_delta1_l(ml: MulLattice) -> ExpansionL:
    """a -> sqrt(a); inflationary and monotone on any multiplicative lattice."""
    return ExpansionL(ml, ml.rad.astype(np.int64), "delta1_L")


def make_delta2_l(ml: MulLattice) -> ExpansionL:
    """a -> meet of the maximal scalars above a (empty meet is 1)."""
    n = len(ml)
    table = np.empty(n, dtype=np.int64)
    maxima = np.flatnonzero(ml.maximal_flags)
    for a in range(n):
        acc = ml.top
        for h in maxima:
            if ml.leq[a, h]:
                acc = int(ml.lat.meet[acc, h])
        table[a] = acc
    table[ml.top] = ml.top
    return ExpansionL(ml, table, "delta2_L")


def meet_expansions_l(d1: ExpansionL, d2: ExpansionL) -> ExpansionL:
    if d1.lattice is not d2.lattice:
        raise ValueError("expansions live on different lattices")
    ml = d1.lattice
    table = ml.lat.meet[d1.table, d2.table].astype(np.int64)
    label = f"meet({d1.label},{d2.label})"
    _check_expansion(ml.names, ml.leq, table, label)
    return ExpansionL(ml, table, label)


def is_meet_preserving_m(d: ExpansionM) -> bool:
    return d.meet_preserving


def is_meet_preserving_l(d: ExpansionL) -> bool:
    return d.meet_preserving


def is_delta_primary(mod: LatticeModule, d: ExpansionM, p: str) -> bool:
    """a.A <= P forces A <= P or a.I_M <= d(P); False for P = I_M."""
    return bool(d.primary_flags[mod.elem(p), 0])


def is_delta_primary_alt(mod: LatticeModule, d: ExpansionM, p: str) -> bool:
    """The swapped form: a.A <= P forces A <= d(P) or a.I_M <= P."""
    return bool(d.primary_flags[mod.elem(p), 1])


def deltaL_colon_table(mod: LatticeModule, dl: ExpansionL) -> np.ndarray:
    # dl[(N : I_M)] for every carrier element
    return dl.table[mod.colon_im]


def deltaL_primary_vec(mod: LatticeModule, dl: ExpansionL) -> np.ndarray:
    return kernels.deltaL_primary_flags(
        mod.scalars.leq,
        mod.carrier.leq,
        mod.action,
        deltaL_colon_table(mod, dl),
        mod.top_m,
    )


def is_deltaL_primary(mod: LatticeModule, dl: ExpansionL, p: str) -> bool:
    """a.A <= P forces A <= P or a <= dl(P:I_M); False for P = I_M."""
    return bool(deltaL_primary_vec(mod, dl)[mod.elem(p)])


def is_delta_primary_l(ml: MulLattice, dl: ExpansionL, p: str) -> bool:
    """Scalar level: a*b <= p forces a <= p or b <= dl(p)."""
    return bool(dl.scalar_primary_flags[ml.index(p)])


# The two characterization routes, kept as separate code paths from the
# defining quantifier so the verifier can compare them independently.


def delta_primary_by_residuals(mod: LatticeModule, d: ExpansionM) -> np.ndarray:
    """(N:r) = N for every r with r not<= (d(N):I_M), per proper N."""
    thresh = mod.colon_im[d.table]
    return kernels.char_residual_form(mod.scalars.leq, mod.res_ma, thresh, mod.top_m)


def delta_primary_by_colon(mod: LatticeModule, d: ExpansionM) -> np.ndarray:
    """(N:A) <= (d(N):I_M) for every A not<= N, per proper N."""
    thresh = mod.colon_im[d.table]
    return kernels.char_colon_form(
        mod.scalars.leq, mod.carrier.leq, mod.res_mm, thresh, mod.top_m
    )


def deltaL_primary_by_residuals(mod: LatticeModule, dl: ExpansionL) -> np.ndarray:
    thresh = deltaL_colon_table(mod, dl)
    return kernels.char_residual_form(mod.scalars.leq, mod.res_ma, thresh, mod.top_m)


def deltaL_primary_by_colon(mod: LatticeModule, dl: ExpansionL) -> np.ndarray:
    thresh = deltaL_colon_table(mod, dl)
    return kernels.char_colon_form(
        mod.scalars.leq, mod.carrier.leq, mod.res_mm, thresh, mod.top_m
    )


def compacts_l(ml: MulLattice) -> tuple[str, ...]:
    """Compact scalars; in a finite lattice, every element."""
    return ml.names


def compacts_m(lat: Lattice) -> tuple[str, ...]:
    """Compact carrier elements; in a finite lattice, every element."""
    return lat.names


def delta_primary_on_compacts(mod: LatticeModule, d: ExpansionM, p: str) -> bool:
    """The compact-pair form, quantified over compact elements only.

    Evaluated by plain iteration, independent of the kernel sweep."""
    i = mod.elem(p)
    if i == mod.top_m:
        return False
    leq = mod.carrier.leq
    dp = int(d.table[i])
    for a in (mod.scalars.index(x) for x in compacts_l(mod.scalars)):
        for x in (mod.elem(y) for y in compacts_m(mod.carrier)):
            if leq[mod.action[a, x], i] and not leq[x, i] and not leq[mod.ai[a], dp]:
                return False
    return True


def deltaL_primary_on_compacts(mod: LatticeModule, dl: ExpansionL, p: str) -> bool:
    i = mod.elem(p)
    if i == mod.top_m:
        return False
    leq = mod.carrier.leq
    leq_l = mod.scalars.leq
    t = int(dl.table[mod.colon_im[i]])
    for a in (mod.scalars.index(x) for x in compacts_l(mod.scalars)):
        for x in (mod.elem(y) for y in compacts_m(mod.carrier)):
            if leq[mod.action[a, x], i] and not leq[x, i] and not leq_l[a, t]:
                return False
    return True
