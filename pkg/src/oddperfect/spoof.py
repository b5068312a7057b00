"""Descartes-style spoof perfect numbers: verify one, or search for them.

A spoof candidate is an odd square base times one declared "pretend
prime" d carried at exponent 1, whose divisor sum is taken to be d + 1.
The pretend exponent is fixed at 1; higher pretend powers are out of
scope here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd, isqrt

from .arith import DEFAULT_BUDGET, Factorization, FactorBudget, Ordering, factor, sigma
from .primes import is_prime


@dataclass(frozen=True)
class SpoofCandidate:
    """Genuine odd square part plus one coprime pretend prime d >= 3."""

    base: Factorization
    pretend: int

    def __post_init__(self) -> None:
        d = self.pretend
        if d < 3 or d % 2 == 0:
            raise ValueError("pretend prime must be odd and >= 3")
        if self.base.pretend:
            raise ValueError("base must consist of genuine primes")
        for p, e in self.base:
            if p == 2:
                raise ValueError("base primes must be odd")
            if e % 2:
                raise ValueError("base exponents must all be even")
        if gcd(self.base.value, d) != 1:
            raise ValueError("pretend prime must be coprime to the base")

    @property
    def value(self) -> int:
        return self.base.value * self.pretend


@dataclass(frozen=True)
class SpoofVerdict:
    spoof_sigma_value: int
    two_N: int
    is_spoof_perfect: bool
    d_is_composite: bool
    d_mod4: int
    q_vs_n: Ordering


def spoof_sigma(c: SpoofCandidate) -> int:
    """Divisor sum under the pretense: sigma(base) * (d + 1)."""
    return sigma(c.base) * (c.pretend + 1)


def verify_spoof(c: SpoofCandidate) -> SpoofVerdict:
    """Full verdict: pretend-perfection, compositeness of d, and q vs n.

    A genuinely prime d would make the candidate an actual odd perfect
    number, so compositeness is always reported rather than assumed.
    """
    sig = spoof_sigma(c)
    two_n = 2 * c.value
    n = isqrt(c.base.value)
    return SpoofVerdict(
        spoof_sigma_value=sig,
        two_N=two_n,
        is_spoof_perfect=sig == two_n,
        d_is_composite=not is_prime(c.pretend),
        d_mod4=c.pretend % 4,
        q_vs_n=Ordering.compare(c.pretend, n),
    )


@dataclass(frozen=True)
class SearchHit:
    candidate: SpoofCandidate
    d_factorization: Factorization
    verdict: SpoofVerdict

    @property
    def d(self) -> int:
        return self.candidate.pretend

    @property
    def flag(self) -> str:
        # A prime d is a genuine odd perfect number, never silently dropped.
        return "SPOOF" if self.verdict.d_is_composite else "GENUINE_PERFECT"


def search_descartes(
    base_primes,
    max_exponent: int,
    d_limit: int,
    require_d_1mod4: bool = True,
    budget: FactorBudget = DEFAULT_BUDGET,
) -> list[SearchHit]:
    """Enumerate square bases over the given primes and solve for d.

    For each m built from even exponents <= max_exponent, the pretend
    prime is forced: d = sigma(m^2) / (2 m^2 - sigma(m^2)) whenever that
    quotient is a positive odd integer coprime to m. Every emitted hit is
    re-verified. The enumeration is lexicographic over exponent vectors,
    so results depend only on the prime set and bounds.
    """
    primes = tuple(sorted(set(base_primes)))
    for p in primes:
        if p == 2 or not is_prime(p):
            raise ValueError(f"base primes must be odd primes, got {p}")
    if max_exponent < 0 or max_exponent % 2:
        raise ValueError("max_exponent must be even and >= 0")
    if d_limit < 1:
        raise ValueError("d_limit must be >= 1")
    exponent_choices = range(0, max_exponent + 1, 2)
    hits: list[SearchHit] = []
    for vector in product(exponent_choices, repeat=len(primes)):
        base = Factorization(tuple((p, e) for p, e in zip(primes, vector) if e))
        m_squared = base.value
        s = sigma(base)
        deficit = 2 * m_squared - s
        if deficit <= 0 or s % deficit:
            continue
        d = s // deficit
        if d <= 1 or d % 2 == 0 or d > d_limit:
            continue
        if gcd(d, m_squared) != 1:
            continue
        if require_d_1mod4 and d % 4 != 1:
            continue
        candidate = SpoofCandidate(base, d)
        verdict = verify_spoof(candidate)
        if not verdict.is_spoof_perfect:
            raise AssertionError(f"search emitted an unverified candidate d={d}")
        hits.append(SearchHit(candidate, factor(d, budget), verdict))
    return hits
