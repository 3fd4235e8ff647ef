"""Theorem registry and the exhaustive verifier.

Every statement is registered as an id, a parameter space, a hypothesis
predicate and a conclusion predicate over a validated instance.  `verify`
instantiates the quantifiers exhaustively: the outcome is VACUOUS when no
instantiation satisfies the hypothesis, FAIL with the first witness whose
conclusion is false, and PASS otherwise.  A FAIL witness always replays:
re-evaluating the two predicates on it yields (True, False).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterable
from weakref import WeakKeyDictionary

import numpy as np

from .errors import NotAnExpansion, UnknownTheorem
from .expansion import (
    ExpansionL,
    ExpansionM,
    delta_primary_by_colon,
    delta_primary_by_residuals,
    delta_primary_on_compacts,
    deltaL_primary_by_colon,
    deltaL_primary_by_residuals,
    deltaL_primary_on_compacts,
    deltaL_primary_vec,
    make_delta0,
    make_delta0_l,
    make_delta1,
    make_delta1_l,
    make_delta2,
    make_delta2_l,
    make_E_delta,
    meet_expansions,
    meet_expansions_l,
)
from .module import InstanceBundle

FAMILY_EXHAUSTIVE_CAP = 12  # all subsets up to this ground-set size
CHAIN_EXHAUSTIVE_CAP = 8  # all chains up to this carrier size


def _expansion_axioms_ok(leq: np.ndarray, table: np.ndarray) -> bool:
    n = len(table)
    if not leq[np.arange(n), table].all():
        return False
    return bool((~leq | leq[table][:, table]).all())


def _subset_families(size: int) -> list[tuple[int, ...]]:
    """Non-empty index families per the enumeration policy."""
    if size <= FAMILY_EXHAUSTIVE_CAP:
        out = []
        for mask in range(1, 1 << size):
            out.append(tuple(i for i in range(size) if mask >> i & 1))
        return out
    out = [pair for pair in combinations(range(size), 2)]
    out += [tri for tri in combinations(range(size), 3)]
    out.append(tuple(range(size)))
    return out


class _Ctx:
    """Per-instance derived data shared by the registry entries."""

    def __init__(self, bundle: InstanceBundle):
        self.bundle = bundle
        self.mod = bundle.module
        self.ml = bundle.module.scalars
        self.car = bundle.module.carrier
        self.leq_m = self.car.leq
        self.leq_l = self.ml.leq
        self.nm = len(self.car)
        self.nl = len(self.ml)
        self.top_m = self.mod.top_m
        self._char_cache: dict[tuple[str, str], np.ndarray] = {}
        self._dl_cache: dict[tuple[str, str], np.ndarray] = {}

    # element helpers

    def im(self, name: str) -> int:
        return self.car.index(name)

    def il(self, name: str) -> int:
        return self.ml.index(name)

    def nm_name(self, i: int) -> str:
        return self.car.names[int(i)]

    def nl_name(self, i: int) -> str:
        return self.ml.names[int(i)]

    @cached_property
    def proper_m(self) -> list[int]:
        return [i for i in range(self.nm) if i != self.top_m]

    def meet_m_fold(self, items: Iterable[int]) -> int:
        acc = self.top_m
        for i in items:
            acc = int(self.car.meet[acc, i])
        return acc

    def join_m_fold(self, items: Iterable[int]) -> int:
        acc = self.car.bottom
        for i in items:
            acc = int(self.car.join[acc, i])
        return acc

    def meet_l_fold(self, items: Iterable[int]) -> int:
        acc = self.ml.top
        for i in items:
            acc = int(self.ml.lat.meet[acc, i])
        return acc

    # hypothesis flags

    @property
    def mult(self) -> bool:
        return self.bundle.multiplication_module

    @property
    def full_package(self) -> bool:
        b = self.bundle
        return b.pg_lattice and b.faithful and b.multiplication_module and b.pg_module

    # expansion pools

    @cached_property
    def _constructed_m(self) -> tuple[ExpansionM, ...]:
        base = [make_delta0(self.mod)]
        try:
            base.append(make_delta1(self.mod))
        except NotAnExpansion:
            pass
        base.append(make_delta2(self.mod))
        pool = list(base)
        for d in base:
            pool.append(make_E_delta(self.mod, d))
        for d1, d2 in combinations(base, 2):
            pool.append(meet_expansions(d1, d2))
        pool.extend(self.bundle.extra_expansions_m)
        return tuple(pool)

    @cached_property
    def pool_m(self) -> tuple[ExpansionM, ...]:
        # quantification pool: one representative per distinct table
        seen: dict[bytes, ExpansionM] = {}
        for d in self._constructed_m:
            seen.setdefault(d.table.tobytes(), d)
        return tuple(seen.values())

    @cached_property
    def _constructed_l(self) -> tuple[ExpansionL, ...]:
        base = [make_delta0_l(self.ml), make_delta1_l(self.ml), make_delta2_l(self.ml)]
        pool = list(base)
        for d1, d2 in combinations(base, 2):
            pool.append(meet_expansions_l(d1, d2))
        pool.extend(self.bundle.extra_expansions_l)
        return tuple(pool)

    @cached_property
    def pool_l(self) -> tuple[ExpansionL, ...]:
        seen: dict[bytes, ExpansionL] = {}
        for d in self._constructed_l:
            seen.setdefault(d.table.tobytes(), d)
        return tuple(seen.values())

    @cached_property
    def _pool_m_by_label(self) -> dict[str, ExpansionM]:
        return {d.label: d for d in self._constructed_m}

    @cached_property
    def _pool_l_by_label(self) -> dict[str, ExpansionL]:
        return {d.label: d for d in self._constructed_l}

    def exp_m(self, label: str) -> ExpansionM:
        return self._pool_m_by_label[label]

    def exp_l(self, label: str) -> ExpansionL:
        return self._pool_l_by_label[label]

    @property
    def has_delta1(self) -> bool:
        return "delta1" in self._pool_m_by_label

    def dpv(self, label: str) -> np.ndarray:
        return self.exp_m(label).primary_flags[:, 0]

    def dpv_alt(self, label: str) -> np.ndarray:
        return self.exp_m(label).primary_flags[:, 1]

    def dlv(self, label: str) -> np.ndarray:
        key = ("dlv", label)
        if key not in self._dl_cache:
            self._dl_cache[key] = deltaL_primary_vec(self.mod, self.exp_l(label))
        return self._dl_cache[key]

    def dls(self, label: str) -> np.ndarray:
        return self.exp_l(label).scalar_primary_flags

    def char_res_m(self, label: str) -> np.ndarray:
        key = ("crm", label)
        if key not in self._char_cache:
            self._char_cache[key] = delta_primary_by_residuals(self.mod, self.exp_m(label))
        return self._char_cache[key]

    def char_colon_m(self, label: str) -> np.ndarray:
        key = ("ccm", label)
        if key not in self._char_cache:
            self._char_cache[key] = delta_primary_by_colon(self.mod, self.exp_m(label))
        return self._char_cache[key]

    def char_res_l(self, label: str) -> np.ndarray:
        key = ("crl", label)
        if key not in self._char_cache:
            self._char_cache[key] = deltaL_primary_by_residuals(self.mod, self.exp_l(label))
        return self._char_cache[key]

    def char_colon_l(self, label: str) -> np.ndarray:
        key = ("ccl", label)
        if key not in self._char_cache:
            self._char_cache[key] = deltaL_primary_by_colon(self.mod, self.exp_l(label))
        return self._char_cache[key]

    # classification shortcuts

    @property
    def prime_m_vec(self) -> np.ndarray:
        return self.mod.prime_primary_flags[:, 0]

    @property
    def primary_m_vec(self) -> np.ndarray:
        return self.mod.prime_primary_flags[:, 1]

    @property
    def two_abs_vec(self) -> np.ndarray:
        return self.mod.two_abs_flags[:, 0]

    @property
    def two_abs_pri_vec(self) -> np.ndarray:
        return self.mod.two_abs_flags[:, 1]

    @property
    def prime_l_vec(self) -> np.ndarray:
        return self.ml.class_flags[:, 0]

    @property
    def two_abs_l_vec(self) -> np.ndarray:
        return self.ml.class_flags[:, 2]

    @property
    def two_abs_pri_l_vec(self) -> np.ndarray:
        return self.ml.class_flags[:, 3]

    @cached_property
    def rad_m_vec(self) -> np.ndarray:
        out = np.empty(self.nm, dtype=np.int64)
        for i in range(self.nm):
            acc = self.top_m
            for p in self.mod.prime_elements:
                if self.leq_m[i, p]:
                    acc = int(self.car.meet[acc, p])
            out[i] = acc
        return out

    def minimal_primes(self, i: int) -> tuple[int, ...]:
        over = [p for p in self.mod.prime_elements if self.leq_m[i, p]]
        return tuple(p for p in over if not any(q != p and self.leq_m[q, p] for q in over))

    # quantifier domains

    @cached_property
    def families_l(self) -> list[tuple[int, ...]]:
        return _subset_families(self.nl)

    @cached_property
    def families_m(self) -> list[tuple[int, ...]]:
        return _subset_families(self.nm)

    @cached_property
    def chains_m(self) -> list[tuple[int, ...]]:
        leq = self.leq_m
        n = self.nm
        depth = leq.sum(axis=0)  # chain-sort key: size of the down-set
        if n <= CHAIN_EXHAUSTIVE_CAP:
            out = []
            for mask in range(1, 1 << n):
                elems = [i for i in range(n) if mask >> i & 1]
                if all(leq[a, b] or leq[b, a] for a, b in combinations(elems, 2)):
                    out.append(tuple(sorted(elems, key=lambda i: int(depth[i]))))
            return out
        out = [(i,) for i in range(n)]
        for i, j in combinations(range(n), 2):
            if leq[i, j]:
                out.append((i, j))
            elif leq[j, i]:
                out.append((j, i))
        cov = leq & ~np.eye(n, dtype=bool)
        cov = cov & ~(cov.astype(np.int64) @ cov.astype(np.int64)).astype(bool)
        stack = [(self.car.bottom, (self.car.bottom,))]
        while stack:
            node, path = stack.pop()
            if node == self.top_m:
                out.append(path)
                continue
            for nxt in np.flatnonzero(cov[node]):
                stack.append((int(nxt), path + (int(nxt),)))
        return out

    def family_names_m(self, fam: tuple[int, ...]) -> tuple[str, ...]:
        return tuple(self.nm_name(i) for i in fam)

    def family_names_l(self, fam: tuple[int, ...]) -> tuple[str, ...]:
        return tuple(self.nl_name(i) for i in fam)


_CTX_CACHE: WeakKeyDictionary = WeakKeyDictionary()


def _ctx(bundle: InstanceBundle) -> _Ctx:
    ctx = _CTX_CACHE.get(bundle)
    if ctx is None:
        ctx = _Ctx(bundle)
        _CTX_CACHE[bundle] = ctx
    return ctx


@dataclass(frozen=True)
class TheoremEntry:
    tid: str
    group: str
    statement: str
    params: str
    instantiate: Callable[[_Ctx], Iterable[dict]]
    hypothesis: Callable[[_Ctx, dict], bool]
    conclusion: Callable[[_Ctx, dict], bool]


@dataclass(frozen=True)
class VerificationReport:
    tid: str
    outcome: str  # PASS | VACUOUS | FAIL
    witness: dict | None
    checked: int
    satisfied: int

    def witness_str(self) -> str:
        if self.witness is None:
            return "-"
        parts = []
        for k, v in self.witness.items():
            if isinstance(v, tuple):
                v = "|".join(v)
            parts.append(f"{k}={v}")
        return ", ".join(parts)


_REGISTRY: dict[str, TheoremEntry] = {}


def _entry(tid, group, statement, params, instantiate, hypothesis, conclusion):
    _REGISTRY[tid] = TheoremEntry(tid, group, statement, params, instantiate, hypothesis, conclusion)


def registry_ids() -> tuple[str, ...]:
    return tuple(_REGISTRY.keys())


def registry_entry(tid: str) -> TheoremEntry:
    if tid not in _REGISTRY:
        raise UnknownTheorem(tid)
    return _REGISTRY[tid]


def verify(bundle: InstanceBundle, tid: str) -> VerificationReport:
    """Exhaustively check one registered statement on the instance."""
    entry = registry_entry(tid)
    ctx = _ctx(bundle)
    checked = 0
    satisfied = 0
    for p in entry.instantiate(ctx):
        checked += 1
        if entry.hypothesis(ctx, p):
            satisfied += 1
            if not entry.conclusion(ctx, p):
                return VerificationReport(tid, "FAIL", p, checked, satisfied)
    outcome = "PASS" if satisfied else "VACUOUS"
    return VerificationReport(tid, outcome, None, checked, satisfied)


def verify_all(bundle: InstanceBundle) -> list[VerificationReport]:
    """Run the whole registry in its fixed order."""
    return [verify(bundle, tid) for tid in _REGISTRY]


def replay(bundle: InstanceBundle, tid: str, witness: dict) -> tuple[bool, bool]:
    """Re-evaluate (hypothesis, conclusion) on a reported witness."""
    entry = registry_entry(tid)
    ctx = _ctx(bundle)
    return entry.hypothesis(ctx, witness), entry.conclusion(ctx, witness)


def render_table(reports: list[VerificationReport]) -> str:
    rows = [("id", "outcome", "instantiations", "witness")]
    for r in reports:
        rows.append((r.tid, r.outcome, str(r.checked), r.witness_str()))
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    lines = []
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines)


def render_tsv(reports: list[VerificationReport]) -> str:
    return "\n".join(
        f"{r.tid}\t{r.outcome}\t{r.checked}\t{r.witness_str()}" for r in reports
    )


# --------------------------------------------------------------------------
# registry entries, in source order of the statements they check
# --------------------------------------------------------------------------


def _pool_pairs_m(ctx):
    for d1, d2 in combinations_with_replacement(ctx.pool_m, 2):
        yield {"gamma1": d1.label, "gamma2": d2.label}


def _always(ctx, p) -> bool:
    return True


_entry(
    "EXP-MEET",
    "module-expansion",
    "the pointwise meet of two expansion functions on M is an expansion function",
    "pairs from the expansion pool",
    _pool_pairs_m,
    _always,
    lambda ctx, p: _expansion_axioms_ok(
        ctx.leq_m,
        ctx.car.meet[ctx.exp_m(p["gamma1"]).table, ctx.exp_m(p["gamma2"]).table],
    ),
)


def _pool_times_proper(ctx):
    for d in ctx.pool_m:
        for i in ctx.proper_m:
            yield {"delta": d.label, "N": ctx.nm_name(i)}


_entry(
    "EQUIV-DEF",
    "module-expansion",
    "the defining form of delta-primary agrees with the swapped form",
    "expansion pool x proper N",
    _pool_times_proper,
    _always,
    lambda ctx, p: bool(ctx.dpv(p["delta"])[ctx.im(p["N"])])
    == bool(ctx.dpv_alt(p["delta"])[ctx.im(p["N"])]),
)


def _edelta_table(ctx, label):
    d = ctx.exp_m(label)
    prim = np.flatnonzero(d.primary_flags[:, 0])
    table = np.empty(ctx.nm, dtype=np.int64)
    for a in range(ctx.nm):
        acc = ctx.top_m
        for j in prim:
            if ctx.leq_m[a, j]:
                acc = int(ctx.car.meet[acc, j])
        table[a] = acc
    table[ctx.top_m] = ctx.top_m
    return table


_entry(
    "EDELTA-EXP",
    "module-expansion",
    "A -> meet of the delta-primary elements above A is an expansion function",
    "expansion pool",
    lambda ctx: ({"delta": d.label} for d in ctx.pool_m),
    _always,
    lambda ctx, p: _expansion_axioms_ok(ctx.leq_m, _edelta_table(ctx, p["delta"])),
)


def _char_res_m_concl(ctx, p):
    i = ctx.im(p["N"])
    b1 = bool(ctx.dpv(p["delta"])[i])
    b2 = bool(ctx.char_res_m(p["delta"])[i])
    b3 = delta_primary_on_compacts(ctx.mod, ctx.exp_m(p["delta"]), p["N"])
    return b1 == b2 == b3


_entry(
    "CHAR-RES",
    "module-expansion",
    "N delta-primary <=> (N:r)=N for all r not<= (delta(N):I_M) <=> compact-pair form",
    "expansion pool x proper N",
    _pool_times_proper,
    _always,
    _char_res_m_concl,
)


def _char_colon_m_concl(ctx, p):
    i = ctx.im(p["N"])
    b1 = bool(ctx.dpv(p["delta"])[i])
    b2 = bool(ctx.char_colon_m(p["delta"])[i])
    b3 = delta_primary_on_compacts(ctx.mod, ctx.exp_m(p["delta"]), p["N"])
    return b1 == b2 == b3


_entry(
    "CHAR-COLON",
    "module-expansion",
    "N delta-primary <=> (N:A) <= (delta(N):I_M) for all A not<= N <=> compact-pair form",
    "expansion pool x proper N",
    _pool_times_proper,
    _always,
    _char_colon_m_concl,
)


def _proper_only(ctx):
    for i in ctx.proper_m:
        yield {"P": ctx.nm_name(i)}


_entry(
    "T-C41",
    "module-expansion",
    "delta0-primary <=> prime",
    "proper P",
    _proper_only,
    _always,
    lambda ctx, p: bool(ctx.dpv("delta0")[ctx.im(p["P"])])
    == bool(ctx.prime_m_vec[ctx.im(p["P"])]),
)

_entry(
    "T-C4",
    "module-expansion",
    "on a faithful multiplication PG instance: delta1-primary <=> primary",
    "proper P",
    _proper_only,
    lambda ctx, p: ctx.full_package and ctx.has_delta1,
    lambda ctx, p: bool(ctx.dpv("delta1")[ctx.im(p["P"])])
    == bool(ctx.primary_m_vec[ctx.im(p["P"])]),
)

_entry(
    "C-C01",
    "module-expansion",
    "on a multiplication module every primary element is delta1-primary",
    "proper primary P",
    _proper_only,
    lambda ctx, p: ctx.mult and bool(ctx.primary_m_vec[ctx.im(p["P"])]),
    lambda ctx, p: bool(ctx.dpv("delta1")[ctx.im(p["P"])]),
)

_entry(
    "RADICAL-D1-D0",
    "module-expansion",
    "on a multiplication module a radical delta1-primary element is delta0-primary",
    "proper radical delta1-primary P",
    _proper_only,
    lambda ctx, p: ctx.mult
    and ctx.has_delta1
    and int(ctx.mod.colon_im[ctx.im(p["P"])]) == int(ctx.mod.sqrt_colon_im[ctx.im(p["P"])])
    and bool(ctx.dpv("delta1")[ctx.im(p["P"])]),
    lambda ctx, p: bool(ctx.dpv("delta0")[ctx.im(p["P"])]),
)

_entry(
    "SEMIPRIME-D0",
    "module-expansion",
    "on a multiplication module every semiprime element is delta0-primary",
    "proper semiprime P",
    _proper_only,
    lambda ctx, p: ctx.mult and bool(ctx.mod.semiprime_flags[ctx.im(p["P"])]),
    lambda ctx, p: bool(ctx.dpv("delta0")[ctx.im(p["P"])]),
)


def _semiprimary_cor_gen(ctx):
    for clause in ("semiprimary", "p-prime", "p-primary"):
        for i in ctx.proper_m:
            yield {"clause": clause, "N": ctx.nm_name(i)}


def _semiprimary_cor_hyp(ctx, p):
    i = ctx.im(p["N"])
    sq = int(ctx.mod.sqrt_colon_im[i])
    ci = int(ctx.mod.colon_im[i])
    if p["clause"] == "semiprimary":
        return bool(ctx.prime_l_vec[sq])
    if p["clause"] == "p-prime":
        return bool(ctx.prime_m_vec[i]) and bool(ctx.prime_l_vec[ci])
    return ctx.mult and bool(ctx.primary_m_vec[i]) and bool(ctx.prime_l_vec[sq])


def _semiprimary_cor_concl(ctx, p):
    i = ctx.im(p["N"])
    sq = int(ctx.mod.sqrt_colon_im[i])
    ci = int(ctx.mod.colon_im[i])
    dl0 = ctx.dls("delta0_L")
    if p["clause"] == "semiprimary":
        return bool(dl0[sq])
    if p["clause"] == "p-prime":
        return bool(ctx.dpv("delta0")[i]) and bool(dl0[ci])
    return bool(ctx.dpv("delta1")[i]) and bool(dl0[sq])


_entry(
    "SEMIPRIMARY-COR",
    "module-expansion",
    "semiprimary/p-prime/p-primary elements map to (delta0)_L/delta0/delta1-primary data",
    "clause x proper N",
    _semiprimary_cor_gen,
    _semiprimary_cor_hyp,
    _semiprimary_cor_concl,
)


def _tc2_gen(ctx):
    for d1 in ctx.pool_m:
        for d2 in ctx.pool_m:
            yield {"part": "pointwise", "delta": d1.label, "gamma": d2.label}
    for d in ctx.pool_m:
        for i in ctx.proper_m:
            yield {"part": "prime", "delta": d.label, "P": ctx.nm_name(i)}


def _tc2_hyp(ctx, p):
    if p["part"] == "pointwise":
        td = ctx.exp_m(p["delta"]).table
        tg = ctx.exp_m(p["gamma"]).table
        return bool(ctx.leq_m[td, tg].all())
    return bool(ctx.prime_m_vec[ctx.im(p["P"])])


def _tc2_concl(ctx, p):
    if p["part"] == "pointwise":
        return bool((~ctx.dpv(p["delta"]) | ctx.dpv(p["gamma"])).all())
    return bool(ctx.dpv(p["delta"])[ctx.im(p["P"])])


_entry(
    "T-C2",
    "module-expansion",
    "delta <= gamma pointwise makes delta-primary imply gamma-primary; primes are delta-primary for every delta",
    "pool x pool, plus pool x proper prime P",
    _tc2_gen,
    _tc2_hyp,
    _tc2_concl,
)


def _deq1_gen(ctx):
    for d in ctx.pool_m:
        for i in ctx.proper_m:
            yield {"delta": d.label, "P": ctx.nm_name(i)}


_entry(
    "DELTA-EQ-DELTA1",
    "module-expansion",
    "on a faithful multiplication PG instance, delta <= delta1 pointwise forces delta(P)=delta1(P) at delta-primary P",
    "pool x proper delta-primary P",
    _deq1_gen,
    lambda ctx, p: ctx.full_package
    and ctx.has_delta1
    and bool(ctx.leq_m[ctx.exp_m(p["delta"]).table, ctx.exp_m("delta1").table].all())
    and bool(ctx.dpv(p["delta"])[ctx.im(p["P"])]),
    lambda ctx, p: int(ctx.exp_m(p["delta"]).table[ctx.im(p["P"])])
    == int(ctx.exp_m("delta1").table[ctx.im(p["P"])]),
)


def _tc90_gen(ctx):
    for d in ctx.pool_m:
        for i in ctx.proper_m:
            for a in range(ctx.nl):
                yield {
                    "part": "residual-fixed",
                    "delta": d.label,
                    "P": ctx.nm_name(i),
                    "a": ctx.nl_name(a),
                }
    for d in ctx.pool_m:
        for i in ctx.proper_m:
            for q in range(ctx.nl):
                yield {
                    "part": "colon-primary",
                    "delta": d.label,
                    "P": ctx.nm_name(i),
                    "q": ctx.nl_name(q),
                }


def _tc90_hyp(ctx, p):
    i = ctx.im(p["P"])
    if not ctx.dpv(p["delta"])[i]:
        return False
    if p["part"] == "residual-fixed":
        a = ctx.il(p["a"])
        dp = int(ctx.exp_m(p["delta"]).table[i])
        return not ctx.leq_m[ctx.mod.ai[a], dp]
    return True


def _tc90_concl(ctx, p):
    i = ctx.im(p["P"])
    if p["part"] == "residual-fixed":
        return int(ctx.mod.res_ma[i, ctx.il(p["a"])]) == i
    r = int(ctx.mod.res_ma[i, ctx.il(p["q"])])
    return r == ctx.top_m or bool(ctx.dpv(p["delta"])[r])


_entry(
    "T-C90",
    "module-expansion",
    "for delta-primary P: (P:a)=P when a.I_M not<= delta(P); (P:q) is delta-primary (or I_M) for all q",
    "pool x delta-primary P x scalar",
    _tc90_gen,
    _tc90_hyp,
    _tc90_concl,
)


def _tc91_gen(ctx):
    for d in ctx.pool_m:
        for chain in ctx.chains_m:
            yield {"delta": d.label, "chain": ctx.family_names_m(chain)}


_entry(
    "T-C91",
    "module-expansion",
    "the join of a chain of delta-primary elements is delta-primary",
    "pool x chains in M",
    _tc91_gen,
    lambda ctx, p: all(ctx.dpv(p["delta"])[ctx.im(x)] for x in p["chain"]),
    lambda ctx, p: bool(
        ctx.dpv(p["delta"])[ctx.join_m_fold(ctx.im(x) for x in p["chain"])]
    ),
)


def _pairs_m(ctx):
    for i in range(ctx.nm):
        for j in range(ctx.nm):
            yield {"A": ctx.nm_name(i), "B": ctx.nm_name(j)}


_entry(
    "D0-MEET",
    "meet-preserving",
    "delta0 has the meet preserving property",
    "pairs in M",
    _pairs_m,
    _always,
    lambda ctx, p: int(
        ctx.exp_m("delta0").table[ctx.car.meet[ctx.im(p["A"]), ctx.im(p["B"])]]
    )
    == int(
        ctx.car.meet[
            ctx.exp_m("delta0").table[ctx.im(p["A"])],
            ctx.exp_m("delta0").table[ctx.im(p["B"])],
        ]
    ),
)


def _tc92_gen(ctx):
    for d in ctx.pool_m:
        prim = [i for i in ctx.proper_m if ctx.dpv(d.label)[i]]
        groups: dict[int, list[int]] = {}
        for i in prim:
            groups.setdefault(int(d.table[i]), []).append(i)
        for _, group in sorted(groups.items()):
            for fam in _subset_families(len(group)):
                yield {
                    "delta": d.label,
                    "Q": tuple(ctx.nm_name(group[k]) for k in fam),
                }


def _tc92_hyp(ctx, p):
    d = ctx.exp_m(p["delta"])
    idx = [ctx.im(x) for x in p["Q"]]
    if not d.meet_preserving:
        return False
    if not all(ctx.dpv(p["delta"])[i] for i in idx):
        return False
    values = {int(d.table[i]) for i in idx}
    return len(values) == 1


_entry(
    "T-C92",
    "meet-preserving",
    "for meet-preserving delta, the meet of delta-primaries with equal delta-value is delta-primary",
    "pool x families of delta-primaries sharing their delta value",
    _tc92_gen,
    _tc92_hyp,
    lambda ctx, p: bool(
        ctx.dpv(p["delta"])[ctx.meet_m_fold(ctx.im(x) for x in p["Q"])]
    ),
)


def _lc91_gen(ctx):
    for fam in ctx.families_l:
        yield {"a": ctx.family_names_l(fam)}


def _lc91_concl(ctx, p):
    idx = [ctx.il(x) for x in p["a"]]
    lhs = ctx.meet_m_fold(int(ctx.mod.ai[i]) for i in idx)
    rhs = int(ctx.mod.action[ctx.meet_l_fold(idx), ctx.top_m])
    return lhs == rhs


_entry(
    "L-C91",
    "meet-preserving",
    "on a faithful multiplication PG instance: meet of a_i.I_M equals (meet of a_i).I_M",
    "families of scalars",
    _lc91_gen,
    lambda ctx, p: ctx.full_package,
    _lc91_concl,
)

_entry(
    "D1-MEET",
    "meet-preserving",
    "on a faithful multiplication PG instance delta1 has the meet preserving property",
    "pairs in M",
    _pairs_m,
    lambda ctx, p: ctx.full_package and ctx.has_delta1,
    lambda ctx, p: int(
        ctx.exp_m("delta1").table[ctx.car.meet[ctx.im(p["A"]), ctx.im(p["B"])]]
    )
    == int(
        ctx.car.meet[
            ctx.exp_m("delta1").table[ctx.im(p["A"])],
            ctx.exp_m("delta1").table[ctx.im(p["B"])],
        ]
    ),
)

_entry(
    "L-C92",
    "meet-preserving",
    "on a multiplication module every maximal element is meet prime",
    "maximal H",
    lambda ctx: ({"H": ctx.nm_name(i)} for i in np.flatnonzero(ctx.mod.maximal_flags)),
    lambda ctx, p: ctx.mult,
    lambda ctx, p: bool(ctx.mod.meet_prime_flags[ctx.im(p["H"])]),
)

_entry(
    "D2-MEET",
    "meet-preserving",
    "on a multiplication module delta2 has the meet preserving property",
    "pairs in M",
    _pairs_m,
    lambda ctx, p: ctx.mult,
    lambda ctx, p: int(
        ctx.exp_m("delta2").table[ctx.car.meet[ctx.im(p["A"]), ctx.im(p["B"])]]
    )
    == int(
        ctx.car.meet[
            ctx.exp_m("delta2").table[ctx.im(p["A"])],
            ctx.exp_m("delta2").table[ctx.im(p["B"])],
        ]
    ),
)


def _n_only(ctx):
    for i in ctx.proper_m:
        yield {"N": ctx.nm_name(i)}


_entry(
    "T-C04",
    "absorbing",
    "every prime element is primary and 2-absorbing",
    "proper prime N",
    _n_only,
    lambda ctx, p: bool(ctx.prime_m_vec[ctx.im(p["N"])]),
    lambda ctx, p: bool(ctx.primary_m_vec[ctx.im(p["N"])])
    and bool(ctx.two_abs_vec[ctx.im(p["N"])]),
)


def _sq_of(ctx, p):
    return int(ctx.mod.sqrt_colon_im[ctx.im(p["N"] if "N" in p else p["Q"])])


def _ci_of(ctx, p):
    return int(ctx.mod.colon_im[ctx.im(p["N"] if "N" in p else p["Q"])])


def _q_only(ctx):
    for i in ctx.proper_m:
        yield {"Q": ctx.nm_name(i)}


_entry(
    "T-C05",
    "absorbing",
    "for primary Q: sqrt(Q:I_M) is prime, 2-absorbing and 2-absorbing primary in L",
    "proper primary Q",
    _q_only,
    lambda ctx, p: bool(ctx.primary_m_vec[ctx.im(p["Q"])]),
    lambda ctx, p: bool(ctx.prime_l_vec[_sq_of(ctx, p)])
    and bool(ctx.two_abs_l_vec[_sq_of(ctx, p)])
    and bool(ctx.two_abs_pri_l_vec[_sq_of(ctx, p)]),
)

_entry(
    "T-C06",
    "absorbing",
    "for 2-absorbing Q: sqrt(Q:I_M) and (Q:I_M) are 2-absorbing and 2-absorbing primary in L",
    "proper 2-absorbing Q",
    _q_only,
    lambda ctx, p: bool(ctx.two_abs_vec[ctx.im(p["Q"])]),
    lambda ctx, p: bool(ctx.two_abs_l_vec[_sq_of(ctx, p)])
    and bool(ctx.two_abs_l_vec[_ci_of(ctx, p)])
    and bool(ctx.two_abs_pri_l_vec[_sq_of(ctx, p)])
    and bool(ctx.two_abs_pri_l_vec[_ci_of(ctx, p)]),
)

_entry(
    "T-C01",
    "absorbing",
    "on a multiplication module every 2-absorbing element is 2-absorbing primary",
    "proper 2-absorbing Q",
    _q_only,
    lambda ctx, p: ctx.mult and bool(ctx.two_abs_vec[ctx.im(p["Q"])]),
    lambda ctx, p: bool(ctx.two_abs_pri_vec[ctx.im(p["Q"])]),
)

_entry(
    "T-C02",
    "absorbing",
    "on a multiplication module every primary element is 2-absorbing primary",
    "proper primary Q",
    _q_only,
    lambda ctx, p: ctx.mult and bool(ctx.primary_m_vec[ctx.im(p["Q"])]),
    lambda ctx, p: bool(ctx.two_abs_pri_vec[ctx.im(p["Q"])]),
)

_entry(
    "T-C07",
    "absorbing",
    "on a faithful multiplication PG instance, 2-absorbing primary Q gives (Q:I_M) 2-absorbing primary and sqrt(Q:I_M) 2-absorbing in L",
    "proper 2-absorbing-primary Q",
    _q_only,
    lambda ctx, p: ctx.full_package and bool(ctx.two_abs_pri_vec[ctx.im(p["Q"])]),
    lambda ctx, p: bool(ctx.two_abs_pri_l_vec[_ci_of(ctx, p)])
    and bool(ctx.two_abs_l_vec[_sq_of(ctx, p)]),
)

_entry(
    "T-C08",
    "absorbing",
    "delta0-primary Q is primary and 2-absorbing; sqrt(Q:I_M) and (Q:I_M) are 2-absorbing and 2-absorbing primary in L",
    "proper delta0-primary Q",
    _q_only,
    lambda ctx, p: bool(ctx.dpv("delta0")[ctx.im(p["Q"])]),
    lambda ctx, p: bool(ctx.primary_m_vec[ctx.im(p["Q"])])
    and bool(ctx.two_abs_vec[ctx.im(p["Q"])])
    and bool(ctx.two_abs_l_vec[_sq_of(ctx, p)])
    and bool(ctx.two_abs_l_vec[_ci_of(ctx, p)])
    and bool(ctx.two_abs_pri_l_vec[_sq_of(ctx, p)])
    and bool(ctx.two_abs_pri_l_vec[_ci_of(ctx, p)]),
)


def _clause_q(ctx):
    for clause in ("module", "scalar"):
        for i in ctx.proper_m:
            yield {"clause": clause, "Q": ctx.nm_name(i)}


_entry(
    "T-C09",
    "absorbing",
    "delta0-primary Q of a multiplication module is 2-absorbing primary; on the PG package (Q:I_M) is 2-absorbing primary and sqrt(Q:I_M) 2-absorbing in L",
    "clause x proper delta0-primary Q",
    _clause_q,
    lambda ctx, p: bool(ctx.dpv("delta0")[ctx.im(p["Q"])])
    and (ctx.mult if p["clause"] == "module" else ctx.full_package),
    lambda ctx, p: bool(ctx.two_abs_pri_vec[ctx.im(p["Q"])])
    if p["clause"] == "module"
    else bool(ctx.two_abs_pri_l_vec[_ci_of(ctx, p)]) and bool(ctx.two_abs_l_vec[_sq_of(ctx, p)]),
)

_entry(
    "T-C03",
    "absorbing",
    "delta1-primary Q of a multiplication module is 2-absorbing primary",
    "proper delta1-primary Q",
    _q_only,
    lambda ctx, p: ctx.mult and ctx.has_delta1 and bool(ctx.dpv("delta1")[ctx.im(p["Q"])]),
    lambda ctx, p: bool(ctx.two_abs_pri_vec[ctx.im(p["Q"])]),
)

_entry(
    "T-C10",
    "absorbing",
    "on a faithful multiplication PG instance, delta1-primary Q gives (Q:I_M) 2-absorbing primary and sqrt(Q:I_M) 2-absorbing in L",
    "proper delta1-primary Q",
    _q_only,
    lambda ctx, p: ctx.full_package
    and ctx.has_delta1
    and bool(ctx.dpv("delta1")[ctx.im(p["Q"])]),
    lambda ctx, p: bool(ctx.two_abs_pri_l_vec[_ci_of(ctx, p)])
    and bool(ctx.two_abs_l_vec[_sq_of(ctx, p)]),
)


def _d1_table(ctx):
    return ctx.exp_m("delta1").table


_entry(
    "T-C14",
    "radical-relation",
    "on a multiplication module, prime N satisfies sqrt(N:I_M).delta1(N) <= N <= delta1(N)",
    "proper prime N",
    _n_only,
    lambda ctx, p: ctx.mult and ctx.has_delta1 and bool(ctx.prime_m_vec[ctx.im(p["N"])]),
    lambda ctx, p: bool(
        ctx.leq_m[
            ctx.mod.action[_sq_of(ctx, p), _d1_table(ctx)[ctx.im(p["N"])]], ctx.im(p["N"])
        ]
    )
    and bool(ctx.leq_m[ctx.im(p["N"]), _d1_table(ctx)[ctx.im(p["N"])]]),
)

_entry(
    "PD1N",
    "radical-relation",
    "on a multiplication module, p-primary 2-absorbing N satisfies p.delta1(N) <= N <= delta1(N)",
    "proper p-primary 2-absorbing N",
    _n_only,
    lambda ctx, p: ctx.mult
    and ctx.has_delta1
    and bool(ctx.primary_m_vec[ctx.im(p["N"])])
    and bool(ctx.prime_l_vec[_sq_of(ctx, p)])
    and bool(ctx.two_abs_vec[ctx.im(p["N"])]),
    lambda ctx, p: bool(
        ctx.leq_m[
            ctx.mod.action[_sq_of(ctx, p), _d1_table(ctx)[ctx.im(p["N"])]], ctx.im(p["N"])
        ]
    )
    and bool(ctx.leq_m[ctx.im(p["N"]), _d1_table(ctx)[ctx.im(p["N"])]]),
)


def _nled1nn_concl(ctx, p):
    i = ctx.im(p["N"])
    inner = int(ctx.mod.action[ctx.mod.colon_im[i], i])
    d1nn = int(_d1_table(ctx)[inner])
    if not ctx.leq_m[i, d1nn]:
        return False
    if ctx.prime_m_vec[i]:
        return d1nn == i
    return True


_entry(
    "N-LE-D1NN",
    "radical-relation",
    "on a multiplication module N <= delta1((N:I_M).N), with equality for prime N",
    "proper N",
    _n_only,
    lambda ctx, p: ctx.mult and ctx.has_delta1,
    _nled1nn_concl,
)

_entry(
    "T-C13",
    "radical-relation",
    "on a faithful multiplication PG instance (delta1(N):I_M) = sqrt(N:I_M)",
    "proper N",
    _n_only,
    lambda ctx, p: ctx.full_package and ctx.has_delta1,
    lambda ctx, p: int(ctx.mod.colon_im[_d1_table(ctx)[ctx.im(p["N"])]])
    == int(ctx.mod.sqrt_colon_im[ctx.im(p["N"])]),
)


def _lc93_gen(ctx):
    for fam in ctx.families_l:
        yield {"q": ctx.family_names_l(fam)}


def _lc93_concl(ctx, p):
    idx = [ctx.il(x) for x in p["q"]]
    lhs = ctx.meet_l_fold(int(ctx.ml.rad[i]) for i in idx)
    rhs = int(ctx.ml.rad[ctx.meet_l_fold(idx)])
    return lhs == rhs


_entry(
    "L-C93",
    "radical-relation",
    "meet of sqrt(q_i) equals sqrt(meet of q_i)",
    "families of scalars",
    _lc93_gen,
    _always,
    _lc93_concl,
)


def _d1bigmeet_gen(ctx):
    for fam in ctx.families_m:
        yield {"N": ctx.family_names_m(fam)}


def _d1bigmeet_concl(ctx, p):
    idx = [ctx.im(x) for x in p["N"]]
    t1 = _d1_table(ctx)
    lhs = ctx.meet_m_fold(int(t1[i]) for i in idx)
    rhs = int(t1[ctx.meet_m_fold(idx)])
    return lhs == rhs


_entry(
    "D1-BIGMEET",
    "radical-relation",
    "on a faithful multiplication PG instance, meet of delta1(N_i) equals delta1(meet of N_i)",
    "families in M",
    _d1bigmeet_gen,
    lambda ctx, p: ctx.full_package and ctx.has_delta1,
    _d1bigmeet_concl,
)

_entry(
    "D1-LE-RAD",
    "radical-relation",
    "on a multiplication module delta1(N) <= rad(N)",
    "proper N",
    _n_only,
    lambda ctx, p: ctx.mult and ctx.has_delta1,
    lambda ctx, p: bool(
        ctx.leq_m[_d1_table(ctx)[ctx.im(p["N"])], ctx.rad_m_vec[ctx.im(p["N"])]]
    ),
)

_entry(
    "T-C11",
    "radical-relation",
    "on a faithful multiplication PG instance delta1(N) = rad(N)",
    "proper N",
    _n_only,
    lambda ctx, p: ctx.full_package and ctx.has_delta1,
    lambda ctx, p: int(_d1_table(ctx)[ctx.im(p["N"])]) == int(ctx.rad_m_vec[ctx.im(p["N"])]),
)

_entry(
    "T-C12",
    "radical-relation",
    "on a faithful multiplication PG instance, 2-absorbing N gives delta1(N) 2-absorbing and 2-absorbing primary",
    "proper 2-absorbing N",
    _n_only,
    lambda ctx, p: ctx.full_package
    and ctx.has_delta1
    and bool(ctx.two_abs_vec[ctx.im(p["N"])]),
    lambda ctx, p: bool(ctx.two_abs_vec[_d1_table(ctx)[ctx.im(p["N"])]])
    and bool(ctx.two_abs_pri_vec[_d1_table(ctx)[ctx.im(p["N"])]]),
)


def _minprime_concl(ctx, p):
    i = ctx.im(p["N"])
    t1 = _d1_table(ctx)
    d1n = int(t1[i])
    sq = int(ctx.mod.sqrt_colon_im[i])
    mul_l = ctx.ml.mul
    # first case: delta1(N) prime with sqrt(N:I_M)**2 . I_M <= N
    if ctx.prime_m_vec[d1n] and ctx.leq_m[ctx.mod.action[mul_l[sq, sq], ctx.top_m], i]:
        return True
    mp = ctx.minimal_primes(i)
    if len(mp) != 2:
        return False
    p1, p2 = mp
    if d1n != int(ctx.car.meet[p1, p2]):
        return False
    c1 = int(ctx.mod.colon_im[p1])
    c2 = int(ctx.mod.colon_im[p2])
    return bool(ctx.leq_m[ctx.mod.action[mul_l[c1, c2], ctx.top_m], i])


_entry(
    "MINPRIME-DECOMP",
    "radical-relation",
    "for 2-absorbing N, delta1(N) is a prime p.I_M with p^2.I_M <= N, or the meet of exactly two minimal primes p1.I_M, p2.I_M with p1p2.I_M <= N",
    "proper 2-absorbing N",
    _n_only,
    lambda ctx, p: ctx.full_package
    and ctx.has_delta1
    and bool(ctx.two_abs_vec[ctx.im(p["N"])]),
    _minprime_concl,
)


def _chain2abs_gen(ctx):
    if not ctx.has_delta1:
        return
    t1 = _d1_table(ctx)
    two_abs = [i for i in ctx.proper_m if ctx.two_abs_vec[i]]
    fams = set()
    for i in two_abs:
        fams.add((i,))
    for i, j in combinations(two_abs, 2):
        if ctx.leq_m[t1[i], t1[j]] or ctx.leq_m[t1[j], t1[i]]:
            fams.add((i, j))
    for chain in ctx.chains_m:
        chain_set = set(chain)
        fam = tuple(i for i in two_abs if int(t1[i]) in chain_set)
        if fam:
            fams.add(fam)
    for fam in sorted(fams):
        yield {"N": ctx.family_names_m(fam)}


def _chain2abs_hyp(ctx, p):
    if not (ctx.full_package and ctx.has_delta1):
        return False
    t1 = _d1_table(ctx)
    idx = [ctx.im(x) for x in p["N"]]
    if not all(i != ctx.top_m and ctx.two_abs_vec[i] for i in idx):
        return False
    return all(
        ctx.leq_m[t1[i], t1[j]] or ctx.leq_m[t1[j], t1[i]] for i, j in combinations(idx, 2)
    )


def _chain2abs_concl(ctx, p):
    t1 = _d1_table(ctx)
    idx = [ctx.im(x) for x in p["N"]]
    lo = ctx.meet_m_fold(int(t1[i]) for i in idx)
    hi = ctx.join_m_fold(int(t1[i]) for i in idx)
    return (
        bool(ctx.two_abs_vec[lo])
        and bool(ctx.two_abs_pri_vec[lo])
        and bool(ctx.two_abs_vec[hi])
        and bool(ctx.two_abs_pri_vec[hi])
    )


_entry(
    "CHAIN-2ABS",
    "radical-relation",
    "for 2-absorbing N_i whose delta1(N_i) form a chain, both meet and join of the delta1(N_i) are 2-absorbing and 2-absorbing primary",
    "families of 2-absorbing elements with chained delta1 image",
    _chain2abs_gen,
    _chain2abs_hyp,
    _chain2abs_concl,
)


def _sqrtnk_gen(ctx):
    for i in ctx.proper_m:
        for k in ctx.proper_m:
            yield {"N": ctx.nm_name(i), "K": ctx.nm_name(k)}


_entry(
    "SQRT-NK",
    "radical-relation",
    "on a faithful multiplication PG instance, (sqrt(N:K)).K <= delta1(N) for proper K not<= N",
    "proper N x proper K not below N",
    _sqrtnk_gen,
    lambda ctx, p: ctx.full_package
    and ctx.has_delta1
    and not ctx.leq_m[ctx.im(p["K"]), ctx.im(p["N"])],
    lambda ctx, p: bool(
        ctx.leq_m[
            ctx.mod.action[
                ctx.ml.rad[ctx.mod.res_mm[ctx.im(p["N"]), ctx.im(p["K"])]], ctx.im(p["K"])
            ],
            _d1_table(ctx)[ctx.im(p["N"])],
        ]
    ),
)


# ---- scalar-expansion statements ----


def _pool_l_times_proper(ctx):
    for dl in ctx.pool_l:
        for i in ctx.proper_m:
            yield {"deltaL": dl.label, "N": ctx.nm_name(i)}


def _dl_char_res_concl(ctx, p):
    i = ctx.im(p["N"])
    b1 = bool(ctx.dlv(p["deltaL"])[i])
    b2 = bool(ctx.char_res_l(p["deltaL"])[i])
    b3 = deltaL_primary_on_compacts(ctx.mod, ctx.exp_l(p["deltaL"]), p["N"])
    return b1 == b2 == b3


_entry(
    "DL-CHAR-RES",
    "scalar-expansion",
    "N deltaL-primary <=> (N:r)=N for all r not<= deltaL(N:I_M) <=> compact-pair form",
    "scalar pool x proper N",
    _pool_l_times_proper,
    _always,
    _dl_char_res_concl,
)


def _dl_char_colon_concl(ctx, p):
    i = ctx.im(p["N"])
    b1 = bool(ctx.dlv(p["deltaL"])[i])
    b2 = bool(ctx.char_colon_l(p["deltaL"])[i])
    b3 = deltaL_primary_on_compacts(ctx.mod, ctx.exp_l(p["deltaL"]), p["N"])
    return b1 == b2 == b3


_entry(
    "DL-CHAR-COLON",
    "scalar-expansion",
    "N deltaL-primary <=> (N:A) <= deltaL(N:I_M) for all A not<= N <=> compact-pair form",
    "scalar pool x proper N",
    _pool_l_times_proper,
    _always,
    _dl_char_colon_concl,
)

_entry(
    "DL-0",
    "scalar-expansion",
    "(delta0)_L-primary <=> prime",
    "proper P",
    _proper_only,
    _always,
    lambda ctx, p: bool(ctx.dlv("delta0_L")[ctx.im(p["P"])])
    == bool(ctx.prime_m_vec[ctx.im(p["P"])]),
)

_entry(
    "DL-1",
    "scalar-expansion",
    "(delta1)_L-primary <=> primary",
    "proper P",
    _proper_only,
    _always,
    lambda ctx, p: bool(ctx.dlv("delta1_L")[ctx.im(p["P"])])
    == bool(ctx.primary_m_vec[ctx.im(p["P"])]),
)

_entry(
    "DL-2ABS-0",
    "scalar-expansion",
    "(delta0)_L-primary Q is primary and 2-absorbing; sqrt(Q:I_M) and (Q:I_M) are 2-absorbing and 2-absorbing primary in L",
    "proper (delta0)_L-primary Q",
    _q_only,
    lambda ctx, p: bool(ctx.dlv("delta0_L")[ctx.im(p["Q"])]),
    lambda ctx, p: bool(ctx.primary_m_vec[ctx.im(p["Q"])])
    and bool(ctx.two_abs_vec[ctx.im(p["Q"])])
    and bool(ctx.two_abs_l_vec[_sq_of(ctx, p)])
    and bool(ctx.two_abs_l_vec[_ci_of(ctx, p)])
    and bool(ctx.two_abs_pri_l_vec[_sq_of(ctx, p)])
    and bool(ctx.two_abs_pri_l_vec[_ci_of(ctx, p)]),
)

_entry(
    "DL-2ABS-0-MULT",
    "scalar-expansion",
    "(delta0)_L-primary Q of a multiplication module is 2-absorbing primary; on the PG package (Q:I_M) is 2-absorbing primary and sqrt(Q:I_M) 2-absorbing in L",
    "clause x proper (delta0)_L-primary Q",
    _clause_q,
    lambda ctx, p: bool(ctx.dlv("delta0_L")[ctx.im(p["Q"])])
    and (ctx.mult if p["clause"] == "module" else ctx.full_package),
    lambda ctx, p: bool(ctx.two_abs_pri_vec[ctx.im(p["Q"])])
    if p["clause"] == "module"
    else bool(ctx.two_abs_pri_l_vec[_ci_of(ctx, p)]) and bool(ctx.two_abs_l_vec[_sq_of(ctx, p)]),
)

_entry(
    "DL-2ABS-1",
    "scalar-expansion",
    "(delta1)_L-primary Q of a multiplication module is 2-absorbing primary",
    "proper (delta1)_L-primary Q",
    _q_only,
    lambda ctx, p: ctx.mult and bool(ctx.dlv("delta1_L")[ctx.im(p["Q"])]),
    lambda ctx, p: bool(ctx.two_abs_pri_vec[ctx.im(p["Q"])]),
)

_entry(
    "DL-2ABS-1-PG",
    "scalar-expansion",
    "on a faithful multiplication PG instance, (delta1)_L-primary Q gives (Q:I_M) 2-absorbing primary and sqrt(Q:I_M) 2-absorbing in L",
    "proper (delta1)_L-primary Q",
    _q_only,
    lambda ctx, p: ctx.full_package and bool(ctx.dlv("delta1_L")[ctx.im(p["Q"])]),
    lambda ctx, p: bool(ctx.two_abs_pri_l_vec[_ci_of(ctx, p)])
    and bool(ctx.two_abs_l_vec[_sq_of(ctx, p)]),
)


def _dlmono_gen(ctx):
    for d1 in ctx.pool_l:
        for d2 in ctx.pool_l:
            yield {"part": "pointwise", "deltaL": d1.label, "gammaL": d2.label}
    for dl in ctx.pool_l:
        for i in ctx.proper_m:
            yield {"part": "prime", "deltaL": dl.label, "N": ctx.nm_name(i)}


def _dlmono_hyp(ctx, p):
    if p["part"] == "pointwise":
        td = ctx.exp_l(p["deltaL"]).table
        tg = ctx.exp_l(p["gammaL"]).table
        ci = ctx.mod.colon_im[ctx.proper_m]
        return bool(ctx.leq_l[td[ci], tg[ci]].all())
    return bool(ctx.prime_m_vec[ctx.im(p["N"])])


def _dlmono_concl(ctx, p):
    if p["part"] == "pointwise":
        return bool((~ctx.dlv(p["deltaL"]) | ctx.dlv(p["gammaL"])).all())
    return bool(ctx.dls(p["deltaL"])[ctx.mod.colon_im[ctx.im(p["N"])]])


_entry(
    "DL-MONO",
    "scalar-expansion",
    "deltaL <= gammaL on every (N:I_M) makes deltaL-primary imply gammaL-primary; for prime N, (N:I_M) is deltaL-primary in L for every deltaL",
    "scalar pool x scalar pool, plus scalar pool x proper prime N",
    _dlmono_gen,
    _dlmono_hyp,
    _dlmono_concl,
)


def _dlcolon_gen(ctx):
    for dl in ctx.pool_l:
        for i in ctx.proper_m:
            for a in range(ctx.nl):
                yield {
                    "part": "residual-fixed",
                    "deltaL": dl.label,
                    "P": ctx.nm_name(i),
                    "a": ctx.nl_name(a),
                }
    for dl in ctx.pool_l:
        for i in ctx.proper_m:
            for q in range(ctx.nl):
                yield {
                    "part": "colon-primary",
                    "deltaL": dl.label,
                    "P": ctx.nm_name(i),
                    "q": ctx.nl_name(q),
                }


def _dlcolon_hyp(ctx, p):
    i = ctx.im(p["P"])
    if not ctx.dlv(p["deltaL"])[i]:
        return False
    if p["part"] == "residual-fixed":
        a = ctx.il(p["a"])
        t = int(ctx.exp_l(p["deltaL"]).table[ctx.mod.colon_im[i]])
        return not ctx.leq_l[a, t]
    return True


def _dlcolon_concl(ctx, p):
    i = ctx.im(p["P"])
    if p["part"] == "residual-fixed":
        return int(ctx.mod.res_ma[i, ctx.il(p["a"])]) == i
    r = int(ctx.mod.res_ma[i, ctx.il(p["q"])])
    return r == ctx.top_m or bool(ctx.dlv(p["deltaL"])[r])


_entry(
    "DL-COLON",
    "scalar-expansion",
    "for deltaL-primary P: (P:a)=P when a not<= deltaL(P:I_M); (P:q) is deltaL-primary (or I_M) for all q",
    "scalar pool x deltaL-primary P x scalar",
    _dlcolon_gen,
    _dlcolon_hyp,
    _dlcolon_concl,
)


def _dlchain_gen(ctx):
    for dl in ctx.pool_l:
        for chain in ctx.chains_m:
            yield {"deltaL": dl.label, "chain": ctx.family_names_m(chain)}


_entry(
    "DL-CHAIN",
    "scalar-expansion",
    "the join of a chain of deltaL-primary elements is deltaL-primary",
    "scalar pool x chains in M",
    _dlchain_gen,
    lambda ctx, p: all(ctx.dlv(p["deltaL"])[ctx.im(x)] for x in p["chain"]),
    lambda ctx, p: bool(
        ctx.dlv(p["deltaL"])[ctx.join_m_fold(ctx.im(x) for x in p["chain"])]
    ),
)


def _dlmeet_gen(ctx):
    for dl in ctx.pool_l:
        prim = [i for i in ctx.proper_m if ctx.dlv(dl.label)[i]]
        groups: dict[int, list[int]] = {}
        for i in prim:
            groups.setdefault(int(dl.table[ctx.mod.colon_im[i]]), []).append(i)
        for _, group in sorted(groups.items()):
            for fam in _subset_families(len(group)):
                yield {
                    "deltaL": dl.label,
                    "Q": tuple(ctx.nm_name(group[k]) for k in fam),
                }


def _dlmeet_hyp(ctx, p):
    dl = ctx.exp_l(p["deltaL"])
    idx = [ctx.im(x) for x in p["Q"]]
    if not dl.meet_preserving:
        return False
    if not all(ctx.dlv(p["deltaL"])[i] for i in idx):
        return False
    values = {int(dl.table[ctx.mod.colon_im[i]]) for i in idx}
    return len(values) == 1


_entry(
    "DL-MEET",
    "scalar-expansion",
    "for meet-preserving deltaL, the meet of deltaL-primaries sharing deltaL(Q_i:I_M) is deltaL-primary",
    "scalar pool x families of deltaL-primaries sharing their deltaL value",
    _dlmeet_gen,
    _dlmeet_hyp,
    lambda ctx, p: bool(
        ctx.dlv(p["deltaL"])[ctx.meet_m_fold(ctx.im(x) for x in p["Q"])]
    ),
)


def _tc1_concl(ctx, p):
    i = ctx.im(p["N"])
    b1 = bool(ctx.dlv(p["deltaL"])[i])
    b2 = bool(ctx.dls(p["deltaL"])[ctx.mod.colon_im[i]])
    dls = ctx.dls(p["deltaL"])
    b3 = any(bool(dls[q]) and int(ctx.mod.ai[q]) == i for q in range(ctx.nl))
    return b1 == b2 == b3


_entry(
    "T-C1",
    "scalar-expansion",
    "on a faithful multiplication PG instance: N deltaL-primary <=> (N:I_M) deltaL-primary in L <=> N = q.I_M for some deltaL-primary q",
    "scalar pool x proper N",
    _pool_l_times_proper,
    lambda ctx, p: ctx.full_package,
    _tc1_concl,
)


def _tc1cor_gen(ctx):
    for part in ("forward", "converse"):
        for dl in ctx.pool_l:
            for i in ctx.proper_m:
                yield {"part": part, "deltaL": dl.label, "N": ctx.nm_name(i)}


def _tc1cor_hyp(ctx, p):
    i = ctx.im(p["N"])
    if p["part"] == "forward":
        return bool(ctx.dlv(p["deltaL"])[i])
    return ctx.mult and bool(ctx.dls(p["deltaL"])[ctx.mod.colon_im[i]])


def _tc1cor_concl(ctx, p):
    i = ctx.im(p["N"])
    if p["part"] == "forward":
        return bool(ctx.dls(p["deltaL"])[ctx.mod.colon_im[i]])
    return bool(ctx.dlv(p["deltaL"])[i])


_entry(
    "T-C1-COR",
    "scalar-expansion",
    "deltaL-primary N gives (N:I_M) deltaL-primary in L; the converse holds on multiplication modules",
    "part x scalar pool x proper N",
    _tc1cor_gen,
    _tc1cor_hyp,
    _tc1cor_concl,
)
