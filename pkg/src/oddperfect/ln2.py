"""Certified rational brackets around ln 2, for exact comparisons.

No floating point anywhere: a comparison either resolves against a
rational window that provably contains ln 2, or reports Inconclusive so
the caller can retry with a tighter window.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class Comparison(Enum):
    BELOW = "Below"
    ABOVE = "Above"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Ln2Bracket:
    """Rational window lower < ln 2 < upper, both bounds strict."""

    lower: Fraction
    upper: Fraction

    def __post_init__(self) -> None:
        if not self.lower < self.upper:
            raise ValueError("bracket needs lower < upper")

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def classify(self, x: Fraction) -> Comparison:
        """Side of ln 2 that x lies on, if the window can tell."""
        if x <= self.lower:
            return Comparison.BELOW
        if x >= self.upper:
            return Comparison.ABOVE
        return Comparison.INCONCLUSIVE


# Six-digit window shipped as a constant; re-certified by the test suite
# against ln2_bracket(), which derives its bounds from scratch.
DEFAULT_BRACKET = Ln2Bracket(Fraction(693147, 1_000_000), Fraction(693148, 1_000_000))

# Refinement cap: ln2_bracket(8192) is ~1.9e-9 wide, ample for desk work.
DEFAULT_MAX_TERMS = 8192


def ln2_bracket(terms: int) -> Ln2Bracket:
    """Certified bracket from the alternating series 1 - 1/2 + 1/3 - ...

    Pairing consecutive terms gives the even partial sum
    S = sum_{j<=m} 1/((2j-1)(2j)), and the positive tail telescopes to
    strict bounds 1/(2(2m+1)) < ln 2 - S < 1/(4m), so the window narrows
    like 1/(8 m^2) instead of the raw partial sums' 1/m.
    """
    if terms < 1:
        raise ValueError("terms must be >= 1")
    s = Fraction(0)
    for j in range(1, terms + 1):
        s += Fraction(1, (2 * j - 1) * (2 * j))
    return Ln2Bracket(s + Fraction(1, 2 * (2 * terms + 1)), s + Fraction(1, 4 * terms))


def _resolve(
    classify,
    bracket: Ln2Bracket,
    max_terms: int,
) -> Comparison:
    verdict = classify(bracket)
    terms = 64
    while verdict is Comparison.INCONCLUSIVE and terms <= max_terms:
        verdict = classify(ln2_bracket(terms))
        terms *= 4
    return verdict


def compare_to_ln2(
    x: Fraction,
    bracket: Ln2Bracket = DEFAULT_BRACKET,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> Comparison:
    """Exact side of ln 2 for the rational x, refining as needed."""
    return _resolve(lambda b: b.classify(Fraction(x)), bracket, max_terms)


def threshold_bracket(bracket: Ln2Bracket) -> tuple[Fraction, Fraction]:
    """Window around 2/(1 - ln 2); t -> 2/(1-t) is increasing on (0, 1)."""
    return 2 / (1 - bracket.lower), 2 / (1 - bracket.upper)


def compare_to_threshold(
    x: Fraction,
    bracket: Ln2Bracket = DEFAULT_BRACKET,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> Comparison:
    """Exact side of 2/(1 - ln 2) (about 6.5178) for the rational x."""

    def classify(b: Ln2Bracket) -> Comparison:
        lo, hi = threshold_bracket(b)
        if x <= lo:
            return Comparison.BELOW
        if x >= hi:
            return Comparison.ABOVE
        return Comparison.INCONCLUSIVE

    return _resolve(classify, bracket, max_terms)
