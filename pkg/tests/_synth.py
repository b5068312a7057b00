"""Synthetic special decompositions with freely chosen valuations.

The honest path computes every valuation from the input; these builders
fabricate decompositions directly so the case classifier and condition
checker can be exercised on configurations no known number realizes.
"""

import random

from oddperfect.arith import Factorization
from oddperfect.dris import SpecialDecomposition, SpecialPrime
from oddperfect.eulerian import EulerianForm
from oddperfect.primes import sieve_primes

PRIMES_1MOD4 = [p for p in sieve_primes(300) if p % 4 == 1]
ODD_PRIMES = [p for p in sieve_primes(300) if p > 2]


def build_synthetic(q, k, specials, residual_pairs=()):
    """specials: iterable of (p, b, t, c, c_q) tuples."""
    specials = tuple(sorted(specials))
    n_pairs = [(p, b) for p, b, _, _, _ in specials] + list(residual_pairs)
    n_fact = Factorization.from_pairs(n_pairs)
    big_fact = Factorization.from_pairs([(q, k)] + [(p, 2 * e) for p, e in n_pairs])
    form = EulerianForm(q, k, n_fact, big_fact)
    return SpecialDecomposition(
        form,
        tuple(SpecialPrime(*s) for s in specials),
        Factorization.from_pairs(residual_pairs),
    )


def random_synthetic(rng: random.Random) -> SpecialDecomposition:
    q = rng.choice(PRIMES_1MOD4)
    k = rng.choice([1, 1, 5, 5, 9])
    pool = [p for p in ODD_PRIMES if p != q]
    count = rng.randint(0, 3)
    chosen = rng.sample(pool, count + 2)
    specials = [
        (p, rng.randint(1, 3), rng.randint(1, 2), rng.randint(0, 3), rng.randint(0, 3))
        for p in chosen[:count]
    ]
    residual = [(p, rng.randint(1, 2)) for p in chosen[count:]] if rng.random() < 0.7 else []
    return build_synthetic(q, k, specials, residual)
