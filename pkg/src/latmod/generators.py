"""Instance generators: divisor lattices of Z_n and frames with meet
multiplication, each packaged as a validated module-over-itself."""

from __future__ import annotations

from functools import lru_cache
from math import gcd

import numpy as np

from .errors import BadParameter, InvalidStructure
from .lattice import Lattice, MulLattice, validate_mul
from .module import InstanceBundle, make_bundle, self_module, validate_module


def _finish(names, values, leq_fn, meet_fn, join_fn, mul_fn, label) -> InstanceBundle:
    order = sorted(range(len(names)), key=lambda i: names[i])
    names = [names[i] for i in order]
    values = [values[i] for i in order]
    n = len(names)
    leq = np.zeros((n, n), dtype=bool)
    meet = np.empty((n, n), dtype=np.int64)
    join = np.empty((n, n), dtype=np.int64)
    mul = np.empty((n, n), dtype=np.int64)
    pos = {v: i for i, v in enumerate(values)}
    for i in range(n):
        for j in range(n):
            leq[i, j] = leq_fn(values[i], values[j])
            meet[i, j] = pos[meet_fn(values[i], values[j])]
            join[i, j] = pos[join_fn(values[i], values[j])]
            mul[i, j] = pos[mul_fn(values[i], values[j])]
    bottoms = np.flatnonzero(leq.all(axis=1))
    tops = np.flatnonzero(leq.all(axis=0))
    lat = Lattice(tuple(names), leq, meet, join, int(bottoms[0]), int(tops[0]))
    ml = MulLattice(lat, mul)
    report = validate_mul(ml)
    if not report.ok:
        raise InvalidStructure("multiplicative lattice", report)
    mod = self_module(ml)
    report = validate_module(mod)
    if not report.ok:
        raise InvalidStructure("module", report)
    return make_bundle(mod, label)


@lru_cache(maxsize=None)
def gen_zn(n: int) -> InstanceBundle:
    """The lattice of ideals of Z_n acting on itself.

    One element (d) per divisor d of n, with (n) written (0); the order is
    reverse divisibility and (d)(e) = (gcd(d*e, n)).
    """
    if not isinstance(n, int) or n < 2:
        raise BadParameter(f"gen_zn needs an integer n >= 2, got {n!r}")
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    names = ["(0)" if d == n else f"({d})" for d in divisors]
    return _finish(
        names,
        divisors,
        leq_fn=lambda d, e: d % e == 0,
        meet_fn=lambda d, e: d * e // gcd(d, e),
        join_fn=gcd,
        mul_fn=lambda d, e: gcd(d * e, n),
        label=f"zn({n})",
    )


@lru_cache(maxsize=None)
def gen_frame(shape: str) -> InstanceBundle:
    """A distributive lattice with multiplication = meet, over itself.

    Shapes: ``chain(k)`` for the (k+1)-chain (k >= 1) and ``boolean(k)``
    for the Boolean algebra 2**k (1 <= k <= 4).
    """
    kind, _, rest = shape.partition("(")
    if not rest.endswith(")"):
        raise BadParameter(f"bad frame shape {shape!r}; use chain(k) or boolean(k)")
    try:
        k = int(rest[:-1])
    except ValueError:
        raise BadParameter(f"bad frame shape {shape!r}") from None
    if kind == "chain":
        if k < 1:
            raise BadParameter("chain(k) needs k >= 1")
        values = list(range(k + 1))
        names = [f"c{v}" for v in values]
        return _finish(
            names,
            values,
            leq_fn=lambda a, b: a <= b,
            meet_fn=min,
            join_fn=max,
            mul_fn=min,
            label=f"chain({k})",
        )
    if kind == "boolean":
        if not 1 <= k <= 4:
            raise BadParameter("boolean(k) needs 1 <= k <= 4")
        letters = "abcd"[:k]
        values = list(range(2**k))
        names = ["".join(c for i, c in enumerate(letters) if v >> i & 1) or "0" for v in values]
        return _finish(
            names,
            values,
            leq_fn=lambda a, b: a | b == b,
            meet_fn=lambda a, b: a & b,
            join_fn=lambda a, b: a | b,
            mul_fn=lambda a, b: a & b,
            label=f"boolean({k})",
        )
    raise BadParameter(f"unknown frame shape {kind!r}")
