"""Structural decomposition N = q^k * n^2 of odd candidate factorizations.

Parsing is purely structural: it never demands sigma(N) = 2N, since the
point is to analyze hypothetical and spoof candidates, not known perfect
numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import Factorization
from .errors import (
    EvenInput,
    MultipleOddExponents,
    NoSpecialPrime,
    SpecialExponentResidue,
    SpecialPrimeResidue,
)


@dataclass(frozen=True)
class EulerianForm:
    """The unique odd-exponent prime q^k split off from the square part n^2."""

    q: int
    k: int
    n_factorization: Factorization
    N_factorization: Factorization

    def __post_init__(self) -> None:
        if self.q % 4 != 1:
            raise SpecialPrimeResidue(f"q = {self.q} is {self.q % 4} (mod 4), need 1")
        if self.k % 4 != 1:
            raise SpecialExponentResidue(f"k = {self.k} is {self.k % 4} (mod 4), need 1")
        if self.q in self.n_factorization.primes:
            raise ValueError("q must not divide n")
        if any(p == 2 for p in self.n_factorization.primes):
            raise EvenInput("n must be odd")
        reconstructed = self.q**self.k * self.n_factorization.value ** 2
        if reconstructed != self.N_factorization.value:
            raise ValueError("q^k * n^2 does not reconstruct N")

    @property
    def n_value(self) -> int:
        return self.n_factorization.value

    @property
    def N_value(self) -> int:
        return self.N_factorization.value

    @property
    def pretend(self) -> frozenset[int]:
        return self.N_factorization.pretend


def to_eulerian(f: Factorization) -> EulerianForm:
    """Split f into q^k * n^2, validating the residue conditions.

    The special prime and exponent must both be 1 (mod 4), q must not
    divide n (automatic here since entries are distinct primes), and the
    value must be odd. Declared pretend units are accepted as q.
    """
    if f.value % 2 == 0:
        raise EvenInput(f"{f.value} is even")
    odd_entries = [(p, e) for p, e in f.entries if e % 2 == 1]
    if not odd_entries:
        raise NoSpecialPrime("every exponent is even")
    if len(odd_entries) > 1:
        raise MultipleOddExponents(f"odd exponents at {[p for p, _ in odd_entries]}")
    q, k = odd_entries[0]
    if q % 4 != 1:
        raise SpecialPrimeResidue(f"q = {q} is {q % 4} (mod 4), need 1")
    if k % 4 != 1:
        raise SpecialExponentResidue(f"k = {k} is {k % 4} (mod 4), need 1")
    n_fact = Factorization(
        tuple((p, e // 2) for p, e in f.entries if p != q), f.pretend
    )
    return EulerianForm(q, k, n_fact, f)


def n_of(e: EulerianForm) -> int:
    """The n in N = q^k * n^2."""
    return e.n_value


@dataclass(frozen=True)
class AdmissibilityReport:
    """Distinct-prime count versus the nine-prime floor, plus the k=1 cube test."""

    distinct_primes: int
    min_distinct: int
    meets_prime_bound: bool
    cube_check_applicable: bool
    q_cubed: int
    three_N: int
    cube_bound_holds: bool | None


def admissibility_report(e: EulerianForm, min_distinct: int = 9) -> AdmissibilityReport:
    """Count distinct primes of N and, when k = 1, test q^3 < 3N exactly.

    An odd perfect number needs at least nine distinct primes, and for
    k = 1 the special prime is bounded by the cube root of 3N; candidates
    failing either test are flagged, not rejected.
    """
    distinct = len(e.N_factorization)
    q_cubed = e.q**3
    three_n = 3 * e.N_value
    applicable = e.k == 1
    return AdmissibilityReport(
        distinct_primes=distinct,
        min_distinct=min_distinct,
        meets_prime_bound=distinct >= min_distinct,
        cube_check_applicable=applicable,
        q_cubed=q_cubed,
        three_N=three_n,
        cube_bound_holds=(q_cubed < three_n) if applicable else None,
    )
