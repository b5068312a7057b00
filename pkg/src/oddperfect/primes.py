"""Primality testing and integer factorization at desk scale.

Everything here runs deterministically: the Miller-Rabin witness set is
fixed (provably sufficient below ~3.3e24, which covers 2^64), and the rho
fallback sweeps a fixed parameter schedule, so identical inputs always
factor identically across runs and processes.
"""

from __future__ import annotations

from math import gcd, isqrt

from .errors import FactoringLimit

DEFAULT_TRIAL_LIMIT = 1_000_000
DEFAULT_RHO_ROUNDS = 40
_RHO_STEP_CAP = 1 << 21

# Witnesses 2..37 decide primality for every n below this bound.
_MR_PROVEN_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_EXTRA_BASES = (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def sieve_primes(limit: int) -> list[int]:
    """All primes <= limit by a plain sieve of Eratosthenes."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i, f in enumerate(flags) if f]


_SMALL_TRIAL_BOUND = 10_000
_SMALL_PRIMES = sieve_primes(_SMALL_TRIAL_BOUND)


def is_prime(n: int) -> bool:
    """Deterministic below 2^64; fixed extra witnesses above that."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    bases = _MR_BASES if n < _MR_PROVEN_BOUND else _MR_BASES + _MR_EXTRA_BASES
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n, exact integer Newton iteration."""
    if n < 0 or k < 1:
        raise ValueError("iroot needs n >= 0, k >= 1")
    if n < 2 or k == 1:
        return n
    if k >= n.bit_length():
        return 1
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _as_perfect_power(n: int) -> tuple[int, int] | None:
    """(base, k) with base**k == n and k > 1 prime, if such k exists."""
    for k in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        if (1 << k) > n:
            return None
        r = iroot(n, k)
        if r > 1 and r**k == n:
            return r, k
    return None


def _brent_rho(n: int, c: int, step_cap: int) -> int | None:
    """Brent-cycle rho with increment c; None if no factor within budget."""
    y, r, q = 2, 1, 1
    g, x, ys = 1, 0, 0
    steps = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(128, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = gcd(q, n)
            k += 128
        steps += r
        r <<= 1
        if steps > step_cap:
            return None
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if 1 < g < n else None


def _split(n: int, rho_rounds: int, trial_limit: int) -> int:
    """Some nontrivial factor of the odd composite n."""
    power = _as_perfect_power(n)
    if power is not None:
        return power[0] ** (power[1] - 1)
    for c in range(1, rho_rounds + 1):
        d = _brent_rho(n, c, _RHO_STEP_CAP)
        if d is not None:
            return d
    # Last resort: resume trial division where the small-prime pass stopped.
    f = _SMALL_TRIAL_BOUND + 1
    top = min(trial_limit, isqrt(n))
    while f <= top:
        if n % f == 0:
            return f
        f += 2
    raise FactoringLimit(f"no factor of {n} within budget")


def factor_entries(
    n: int,
    *,
    trial_limit: int = DEFAULT_TRIAL_LIMIT,
    rho_rounds: int = DEFAULT_RHO_ROUNDS,
) -> tuple[tuple[int, int], ...]:
    """Complete factorization of n >= 1 as a sorted tuple of (p, e)."""
    if n < 1:
        raise ValueError("factor_entries needs n >= 1")
    counts: dict[int, int] = {}
    small_bound = min(trial_limit, _SMALL_TRIAL_BOUND)
    for p in _SMALL_PRIMES:
        if p > small_bound or p * p > n:
            break
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m < small_bound * small_bound or is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        d = _split(m, rho_rounds, trial_limit)
        stack.append(d)
        stack.append(m // d)
    return tuple(sorted(counts.items()))
