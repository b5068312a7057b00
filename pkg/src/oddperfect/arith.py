"""Exact divisor-sum arithmetic on explicit factorizations.

All integers are arbitrary precision and every ratio is an exact
``fractions.Fraction`` (exposed as ``ExactRatio``): stored in lowest
terms, positive denominator, total exact comparison. Nothing in this
module touches floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from functools import cached_property
from math import prod

from .cache import FactorCache
from .errors import NotPrime, ParseError
from .ln2 import DEFAULT_BRACKET, DEFAULT_MAX_TERMS, Comparison, Ln2Bracket, compare_to_ln2
from .primes import DEFAULT_RHO_ROUNDS, DEFAULT_TRIAL_LIMIT, factor_entries, is_prime

ExactRatio = Fraction


class Ordering(Enum):
    LESS = "<"
    EQUAL = "="
    GREATER = ">"

    @classmethod
    def compare(cls, a, b) -> "Ordering":
        if a < b:
            return cls.LESS
        if a > b:
            return cls.GREATER
        return cls.EQUAL


@dataclass(frozen=True)
class FactorBudget:
    """Effort cap for factoring plus an optional persistent cache."""

    trial_limit: int = DEFAULT_TRIAL_LIMIT
    rho_rounds: int = DEFAULT_RHO_ROUNDS
    cache: FactorCache | None = None

    def without_cache(self) -> "FactorBudget":
        return replace(self, cache=None) if self.cache is not None else self


DEFAULT_BUDGET = FactorBudget()

_TOKEN_SPLIT = re.compile(r"[\s*]+")


@dataclass(frozen=True)
class Factorization:
    """Multiset of (prime, exponent) pairs, ascending; () is the integer 1.

    ``pretend`` lists bases accepted as prime-like units without proof
    (Descartes semantics). Every other base must pass the primality check.
    """

    entries: tuple[tuple[int, int], ...]
    pretend: frozenset[int] = field(default=frozenset())

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple((int(p), int(e)) for p, e in self.entries))
        object.__setattr__(self, "pretend", frozenset(self.pretend))
        prev = 1
        for p, e in self.entries:
            if e < 1:
                raise ValueError(f"exponent of {p} must be >= 1")
            if p <= prev:
                raise ValueError("primes must be strictly increasing")
            if p not in self.pretend and not is_prime(p):
                raise NotPrime(f"{p} is not prime")
            prev = p

    @classmethod
    def from_pairs(cls, pairs, pretend=()) -> "Factorization":
        """Sort and merge duplicate bases; order of input is irrelevant."""
        merged: dict[int, int] = {}
        for p, e in pairs:
            merged[p] = merged.get(p, 0) + e
        return cls(tuple(sorted(merged.items())), frozenset(pretend))

    @classmethod
    def parse(cls, text: str, pretend=()) -> "Factorization":
        """Parse ``p^e*p^e`` (CLI grammar) or space-separated cache syntax."""
        s = text.strip()
        if s in ("", "1"):
            return cls((), frozenset(pretend))
        pairs = []
        for token in _TOKEN_SPLIT.split(s):
            base, sep, exp = token.partition("^")
            try:
                p = int(base)
                e = int(exp) if sep else 1
            except ValueError:
                raise ParseError(f"bad prime power {token!r}; expected p^e") from None
            if p < 2 or e < 1:
                raise ParseError(f"bad prime power {token!r}; expected p^e with p>=2, e>=1")
            pairs.append((p, e))
        return cls.from_pairs(pairs, pretend)

    def text(self, sep: str = "*") -> str:
        if not self.entries:
            return "1"
        return sep.join(f"{p}^{e}" for p, e in self.entries)

    @cached_property
    def value(self) -> int:
        return prod(p**e for p, e in self.entries)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.entries)

    def exponent_of(self, p: int) -> int:
        for q, e in self.entries:
            if q == p:
                return e
        return 0

    def restrict(self, keep) -> "Factorization":
        """Sub-factorization of the entries whose prime satisfies keep."""
        return Factorization(tuple((p, e) for p, e in self.entries if keep(p)), self.pretend)

    def scaled(self, factor: int) -> "Factorization":
        """Same primes with every exponent multiplied by factor >= 1."""
        if factor < 1:
            raise ValueError("exponent factor must be >= 1")
        return Factorization(tuple((p, e * factor) for p, e in self.entries), self.pretend)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def factor(n: int, budget: FactorBudget = DEFAULT_BUDGET) -> Factorization:
    """Complete factorization of n >= 1; factor(1) is the empty product."""
    if n < 1:
        raise ValueError("factor needs n >= 1")
    if budget.cache is not None:
        hit = budget.cache.get(n)
        if hit is not None:
            return Factorization(hit)
    entries = factor_entries(n, trial_limit=budget.trial_limit, rho_rounds=budget.rho_rounds)
    if budget.cache is not None:
        budget.cache.record(n, entries)
    return Factorization(entries)


def sigma_prime_power(p: int, b: int, *, assume_prime: bool = False) -> int:
    """sigma(p^b) = 1 + p + ... + p^b; composite p is rejected unless declared."""
    if b < 0:
        raise ValueError("exponent must be >= 0")
    if p < 2:
        raise NotPrime(f"{p} is not prime")
    if not assume_prime and not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return (p ** (b + 1) - 1) // (p - 1)


def sigma(f: Factorization) -> int:
    """Divisor sum of the factored value; multiplicative across entries."""
    out = 1
    for p, e in f.entries:
        out *= sigma_prime_power(p, e, assume_prime=p in f.pretend)
    return out


def is_perfect(n: int, budget: FactorBudget = DEFAULT_BUDGET) -> bool:
    return sigma(factor(n, budget)) == 2 * n


def abundancy(f: Factorization) -> Fraction:
    """sigma(value)/value in lowest terms; equals 2 exactly iff perfect."""
    return Fraction(sigma(f), f.value)


def multiplicity(base: int, m: int) -> int:
    """Largest e with base^e | m, for any base >= 2 (no primality demand)."""
    if base < 2:
        raise ValueError("base must be >= 2")
    if m == 0:
        raise ValueError("m must be nonzero")
    e = 0
    while m % base == 0:
        m //= base
        e += 1
    return e


def valuation(p: int, m: int) -> int:
    """p-adic valuation of m >= 1: the exact exponent with p^e || m."""
    if m < 1:
        raise ValueError("valuation needs m >= 1")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return multiplicity(p, m)


def two_thirds_bound_check(p: int, b: int) -> tuple[bool, bool]:
    """Exact checks ((p-1)/p)*sigma(p^2b) < p^2b and (2/3)*sigma(p^2b) < p^2b.

    Both hold for every odd prime; p = 2 is rejected.
    """
    if p == 2:
        raise NotPrime("an odd prime is required")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if b < 1:
        raise ValueError("exponent must be >= 1")
    s = sigma_prime_power(p, 2 * b)
    power = p ** (2 * b)
    holds_general = Fraction(p - 1, p) * s < power
    holds_two_thirds = Fraction(2, 3) * s < power
    return holds_general, holds_two_thirds


def reciprocal_prime_sum(
    f: Factorization,
    bracket: Ln2Bracket = DEFAULT_BRACKET,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> tuple[Fraction, Comparison]:
    """Exact sum of 1/p over the distinct primes, classified against ln 2."""
    total = sum((Fraction(1, p) for p in f.primes), Fraction(0))
    return total, compare_to_ln2(total, bracket, max_terms)
