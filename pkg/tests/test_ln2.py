import math
from fractions import Fraction

import pytest

from oddperfect.ln2 import (
    DEFAULT_BRACKET,
    Comparison,
    Ln2Bracket,
    compare_to_ln2,
    compare_to_threshold,
    ln2_bracket,
    threshold_bracket,
)

def test_default_bracket_contains_ln2():
    assert float(DEFAULT_BRACKET.lower) < math.log(2) < float(DEFAULT_BRACKET.upper)
    assert DEFAULT_BRACKET.width == Fraction(1, 10**6)


def test_series_bracket_certifies_default():
    # The from-scratch bracket lands strictly inside the shipped constant,
    # which certifies the constant without floating point.
    fine = ln2_bracket(1000)
    assert DEFAULT_BRACKET.lower < fine.lower
    assert fine.upper < DEFAULT_BRACKET.upper


def test_series_brackets_nest_and_shrink():
    prev = ln2_bracket(1)
    for terms in (4, 16, 64, 256):
        cur = ln2_bracket(terms)
        assert prev.lower < cur.lower < cur.upper < prev.upper
        assert cur.width < prev.width
        assert float(cur.lower) < math.log(2) < float(cur.upper)
        prev = cur


def test_bracket_width_scaling():
    b = ln2_bracket(100)
    assert b.width == Fraction(1, 4 * 100) - Fraction(1, 2 * 201)


def test_bracket_validation():
    with pytest.raises(ValueError):
        Ln2Bracket(Fraction(1), Fraction(1))
    with pytest.raises(ValueError):
        ln2_bracket(0)


def test_compare_far_values():
    assert compare_to_ln2(Fraction(1, 2)) is Comparison.BELOW
    assert compare_to_ln2(Fraction(7, 10)) is Comparison.ABOVE
    assert compare_to_ln2(Fraction(0)) is Comparison.BELOW


def test_compare_inside_default_bracket_refines():
    # 0.6931471 and 0.6931472 straddle ln 2 inside the default window.
    assert compare_to_ln2(Fraction(6931471, 10**7)) is Comparison.BELOW
    assert compare_to_ln2(Fraction(6931472, 10**7)) is Comparison.ABOVE


def test_compare_respects_precision_cap():
    inside = Fraction(6931471, 10**7)
    assert compare_to_ln2(inside, max_terms=4) is Comparison.INCONCLUSIVE


def test_threshold_bracket_orientation():
    lo, hi = threshold_bracket(DEFAULT_BRACKET)
    assert lo < hi
    assert float(lo) < 2 / (1 - math.log(2)) < float(hi)


def test_compare_to_threshold():
    # 2/(1 - ln 2) = 6.51778...
    assert compare_to_threshold(Fraction(6)) is Comparison.BELOW
    assert compare_to_threshold(Fraction(7)) is Comparison.ABOVE
    assert compare_to_threshold(Fraction(13, 2)) is Comparison.BELOW
    assert compare_to_threshold(Fraction(65177, 10**4)) is Comparison.BELOW
    assert compare_to_threshold(Fraction(65178, 10**4)) is Comparison.ABOVE


def test_compare_to_threshold_near_boundary_refines():
    # Within the default window around the threshold; refinement decides.
    x = Fraction(6517783, 10**6)
    verdict = compare_to_threshold(x)
    assert verdict is not Comparison.INCONCLUSIVE
    fine_lo, fine_hi = threshold_bracket(ln2_bracket(4096))
    expected = Comparison.BELOW if x <= fine_lo else Comparison.ABOVE
    assert verdict is expected
