from fractions import Fraction
from math import gcd

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from oddperfect.arith import (
    Factorization,
    abundancy,
    factor,
    is_perfect,
    multiplicity,
    reciprocal_prime_sum,
    sigma,
    sigma_prime_power,
    two_thirds_bound_check,
    valuation,
)
from oddperfect.errors import NotPrime, ParseError
from oddperfect.ln2 import Comparison
from oddperfect.primes import sieve_primes

ODD_PRIMES = [p for p in sieve_primes(500) if p > 2]


def divisor_sum_oracle(n: int) -> int:
    """Independent brute force: enumerate divisors by trial division."""
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d
            if d != n // d:
                total += n // d
        d += 1
    return total


# --- Factorization type ------------------------------------------------------


def test_factor_examples():
    assert factor(1).entries == ()
    assert factor(22021).entries == ((19, 2), (61, 1))
    assert 19**2 * 61 == 22021
    f = factor(9018009)
    assert f.entries == ((3, 2), (7, 2), (11, 2), (13, 2))
    assert f.value == 9018009


def test_factor_rejects_nonpositive():
    with pytest.raises(ValueError):
        factor(0)


def test_entries_must_be_prime():
    with pytest.raises(NotPrime):
        Factorization(((4, 1),))
    # declared pretend units pass
    f = Factorization(((3, 2), (22021, 1)), pretend={22021})
    assert f.value == 9 * 22021


def test_entries_must_be_sorted_and_positive():
    with pytest.raises(ValueError):
        Factorization(((5, 1), (3, 1)))
    with pytest.raises(ValueError):
        Factorization(((3, 0),))
    with pytest.raises(ValueError):
        Factorization(((3, 1), (3, 1)))


def test_parse_grammar():
    assert Factorization.parse("3^2*7^2").entries == ((3, 2), (7, 2))
    assert Factorization.parse("7^1 3^2").entries == ((3, 2), (7, 1))
    assert Factorization.parse("5").entries == ((5, 1),)
    assert Factorization.parse("1").entries == ()
    # duplicate bases merge as a multiset
    assert Factorization.parse("3^1*3^2").entries == ((3, 3),)


@pytest.mark.parametrize("bad", ["3^^2", "x", "3^", "^2", "0^2", "3^0", "3*-5"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(ParseError):
        Factorization.parse(bad)


def test_parse_order_independent():
    a = Factorization.parse("3^2*7^2*11^2")
    b = Factorization.parse("11^2*3^2*7^2")
    assert a == b


def test_text_round_trip():
    f = factor(9018009)
    assert Factorization.parse(f.text()) == f
    assert Factorization.parse("1").text() == "1"


# --- sigma and friends -------------------------------------------------------


def test_sigma_prime_power_examples():
    assert sigma_prime_power(3, 0) == 1
    assert sigma_prime_power(97, 0) == 1
    assert sigma_prime_power(3, 2) == 13 == 1 + 3 + 9
    assert sigma_prime_power(7, 2) == 57 == 1 + 7 + 49
    with pytest.raises(NotPrime):
        sigma_prime_power(6, 2)
    assert sigma_prime_power(22021, 1, assume_prime=True) == 22022


def test_sigma_examples():
    assert sigma(Factorization(())) == 1
    assert sigma(factor(6)) == 12
    assert sigma(factor(9018009)) == 18035199
    assert 13 * 57 * 133 * 183 == 18035199


def test_sigma_small_oracle():
    for n in range(1, 2000):
        assert sigma(factor(n)) == divisor_sum_oracle(n), n


@settings(max_examples=100)
@given(st.integers(min_value=1, max_value=10**4), st.integers(min_value=1, max_value=10**4))
def test_sigma_multiplicative_on_coprime(a, b):
    assume(gcd(a, b) == 1)
    assert sigma(factor(a * b)) == sigma(factor(a)) * sigma(factor(b))


@given(st.sampled_from(ODD_PRIMES), st.integers(min_value=1, max_value=5))
def test_sigma_even_power_is_one_mod_p(p, b):
    assert sigma_prime_power(p, 2 * b) % p == 1


def test_is_perfect():
    assert is_perfect(6)
    assert is_perfect(28)
    assert not is_perfect(12)
    assert 9018009 * 22021 == 198585576189
    assert not is_perfect(198585576189)


def test_abundancy_examples():
    assert abundancy(factor(6)) == Fraction(2)
    assert abundancy(factor(1)) == Fraction(1)
    assert abundancy(factor(9)) == Fraction(13, 9)


def test_abundancy_reduced_invariant():
    for n in (6, 9, 12, 360, 9018009):
        r = abundancy(factor(n))
        assert gcd(r.numerator, r.denominator) == 1
        assert r.denominator >= 1


# --- valuations ---------------------------------------------------------------


def test_valuation_examples():
    assert valuation(3, 1) == 0
    assert 7**3 * 307 == 105301
    assert valuation(7, 105301) == 3
    assert valuation(11, 121) == 2
    with pytest.raises(NotPrime):
        valuation(6, 36)
    with pytest.raises(ValueError):
        valuation(3, 0)


def test_multiplicity_accepts_composite_base():
    assert multiplicity(6, 216) == 3


@given(st.sampled_from(ODD_PRIMES), st.integers(min_value=0, max_value=6),
       st.integers(min_value=1, max_value=10**6))
def test_valuation_exactness(p, e, cofactor):
    if cofactor % p == 0:
        cofactor += 1
    m = p**e * cofactor
    v = valuation(p, m)
    assert v == e
    assert m % p**v == 0
    assert m % p ** (v + 1) != 0


# --- bound checks --------------------------------------------------------------


def test_two_thirds_examples():
    assert two_thirds_bound_check(3, 1) == (True, True)
    assert Fraction(2, 3) * 13 < 9
    assert two_thirds_bound_check(5, 1) == (True, True)
    assert Fraction(4, 5) * 31 < 25
    assert two_thirds_bound_check(3, 2) == (True, True)
    assert Fraction(2, 3) * 121 < 81


def test_two_thirds_rejects_two_and_composites():
    with pytest.raises(NotPrime):
        two_thirds_bound_check(2, 1)
    with pytest.raises(NotPrime):
        two_thirds_bound_check(9, 1)


# --- reciprocal sums ------------------------------------------------------------


def test_reciprocal_prime_sum_examples():
    total, verdict = reciprocal_prime_sum(Factorization(()))
    assert total == 0 and verdict is Comparison.BELOW

    total, verdict = reciprocal_prime_sum(factor(6))
    assert total == Fraction(5, 6) and verdict is Comparison.ABOVE

    spoof = Factorization.parse("3^2*7^2*11^2*13^2*22021^1", pretend={22021})
    total, verdict = reciprocal_prime_sum(spoof)
    expected = (
        Fraction(1, 3) + Fraction(1, 7) + Fraction(1, 11) + Fraction(1, 13) + Fraction(1, 22021)
    )
    assert total == expected
    assert abs(float(total) - 0.64407) < 1e-4
    assert verdict is Comparison.BELOW
