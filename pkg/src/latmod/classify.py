"""Element-level classification of carrier elements, rad(N), minimal primes."""

from __future__ import annotations

from dataclasses import dataclass


from .errors import NotProper
from .module import LatticeModule


@dataclass(frozen=True)
class MClassification:
    """All classification flags of one carrier element.

    The witness scalar for p_prime is (N:I_M); for p_primary it is
    sqrt(N:I_M).  The top element is never classified: proper is False and
    every other flag is False.
    """

    element: str
    proper: bool
    maximal: bool
    prime: bool
    p_prime: bool
    primary: bool
    p_primary: bool
    semiprime: bool
    semiprimary: bool
    radical_element: bool
    meet_prime: bool
    two_absorbing: bool
    two_absorbing_primary: bool
    colon_im: str
    sqrt_colon_im: str


def classify_m(mod: LatticeModule, n: str) -> MClassification:
    i = mod.elem(n)
    ci = int(mod.colon_im[i])
    sci = int(mod.sqrt_colon_im[i])
    ln = mod.scalars.names
    if i == mod.top_m:
        return MClassification(
            element=n,
            proper=False,
            maximal=False,
            prime=False,
            p_prime=False,
            primary=False,
            p_primary=False,
            semiprime=False,
            semiprimary=False,
            radical_element=False,
            meet_prime=False,
            two_absorbing=False,
            two_absorbing_primary=False,
            colon_im=ln[ci],
            sqrt_colon_im=ln[sci],
        )
    prime = bool(mod.prime_primary_flags[i, 0])
    primary = bool(mod.prime_primary_flags[i, 1])
    scalar_prime = mod.scalars.class_flags[:, 0]
    return MClassification(
        element=n,
        proper=True,
        maximal=bool(mod.maximal_flags[i]),
        prime=prime,
        p_prime=prime and bool(scalar_prime[ci]),
        primary=primary,
        p_primary=primary and bool(scalar_prime[sci]),
        semiprime=bool(mod.semiprime_flags[i]),
        semiprimary=bool(scalar_prime[sci]),
        radical_element=ci == sci,
        meet_prime=bool(mod.meet_prime_flags[i]),
        two_absorbing=bool(mod.two_abs_flags[i, 0]),
        two_absorbing_primary=bool(mod.two_abs_flags[i, 1]),
        colon_im=ln[ci],
        sqrt_colon_im=ln[sci],
    )


def rad_m(mod: LatticeModule, n: str) -> str:
    """Meet of all prime elements above N; empty family gives I_M."""
    i = mod.elem(n)
    if i == mod.top_m:
        raise NotProper(n)
    acc = mod.top_m
    for p in mod.prime_elements:
        if mod.carrier.leq[i, p]:
            acc = int(mod.carrier.meet[acc, p])
    return mod.carrier.names[acc]


def minimal_primes_over(mod: LatticeModule, x: str) -> tuple[str, ...]:
    """Primes above X with no prime strictly between X and them, sorted."""
    i = mod.elem(x)
    leq = mod.carrier.leq
    over = [p for p in mod.prime_elements if leq[i, p]]
    out = []
    for p in over:
        if not any(q != p and leq[q, p] for q in over):
            out.append(mod.carrier.names[p])
    return tuple(sorted(out))
