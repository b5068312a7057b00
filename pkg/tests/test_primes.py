from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddperfect.primes import factor_entries, iroot, is_prime, sieve_primes


def test_sieve_matches_known_prefix():
    assert sieve_primes(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert sieve_primes(1) == []


def test_is_prime_small_table():
    primes = set(sieve_primes(2000))
    for n in range(2000):
        assert is_prime(n) == (n in primes)


def test_is_prime_large_values():
    assert is_prime(2**61 - 1)
    assert not is_prime((2**61 - 1) * (2**31 - 1))
    # Carmichael numbers must not fool the test.
    for carmichael in (561, 1105, 1729, 41041, 825265):
        assert not is_prime(carmichael)


def test_iroot_exact():
    assert iroot(0, 3) == 0
    assert iroot(1, 5) == 1
    assert iroot(26, 3) == 2
    assert iroot(27, 3) == 3
    assert iroot(10**18, 2) == 10**9


@given(st.integers(min_value=0, max_value=10**12), st.integers(min_value=1, max_value=12))
def test_iroot_floor_property(n, k):
    r = iroot(n, k)
    assert r**k <= n
    assert (r + 1) ** k > n


def test_factor_entries_examples():
    assert factor_entries(1) == ()
    assert factor_entries(22021) == ((19, 2), (61, 1))
    assert factor_entries(9018009) == ((3, 2), (7, 2), (11, 2), (13, 2))
    # semiprime beyond the small trial bound forces the rho path
    p, q = 1_000_003, 1_000_033
    assert factor_entries(p * q) == ((p, 1), (q, 1))
    # prime powers are rho's worst case; the perfect-power assist covers them
    assert factor_entries(1_000_003**3) == ((1_000_003, 3),)


@settings(max_examples=200)
@given(st.integers(min_value=1, max_value=10**9))
def test_factor_entries_round_trip(n):
    entries = factor_entries(n)
    assert prod(p**e for p, e in entries) == n
    assert all(is_prime(p) for p, _ in entries)
    assert list(entries) == sorted(entries)


def test_factor_entries_rejects_zero():
    with pytest.raises(ValueError):
        factor_entries(0)


def test_factoring_limit_when_budget_exhausted():
    from oddperfect.errors import FactoringLimit

    semiprime = 1_000_003 * 1_000_033
    with pytest.raises(FactoringLimit):
        factor_entries(semiprime, trial_limit=100, rho_rounds=0)
    # the same number factors once any fallback is allowed
    assert factor_entries(semiprime, trial_limit=100, rho_rounds=40) == (
        (1_000_003, 1),
        (1_000_033, 1),
    )
