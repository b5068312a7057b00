import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddperfect.arith import Factorization
from oddperfect.errors import (
    EvenInput,
    MultipleOddExponents,
    NoSpecialPrime,
    SpecialExponentResidue,
    SpecialPrimeResidue,
)
from oddperfect.eulerian import admissibility_report, n_of, to_eulerian
from oddperfect.primes import sieve_primes

DESCARTES = Factorization.parse("3^2*7^2*11^2*13^2*22021^1", pretend={22021})

PRIMES_1MOD4 = [p for p in sieve_primes(500) if p % 4 == 1]
ODD_PRIMES = [p for p in sieve_primes(500) if p > 2]


def test_descartes_parse():
    form = to_eulerian(DESCARTES)
    assert (form.q, form.k) == (22021, 1)
    assert form.n_value == 3003 == 3 * 7 * 11 * 13
    assert n_of(form) == 3003


def test_parse_errors():
    with pytest.raises(NoSpecialPrime):
        to_eulerian(Factorization.parse("3^2"))
    with pytest.raises(NoSpecialPrime):
        to_eulerian(Factorization.parse("1"))
    with pytest.raises(EvenInput):
        to_eulerian(Factorization.parse("2^2*3^2"))
    with pytest.raises(MultipleOddExponents):
        to_eulerian(Factorization.parse("5^1*13^1*3^2"))
    with pytest.raises(SpecialPrimeResidue):
        to_eulerian(Factorization.parse("7^1*3^2"))
    with pytest.raises(SpecialExponentResidue):
        to_eulerian(Factorization.parse("5^3*3^2"))


def test_small_structural_parse():
    form = to_eulerian(Factorization.parse("5^1*3^2"))
    assert (form.q, form.k, form.n_value) == (5, 1, 3)
    assert n_of(to_eulerian(Factorization.parse("5^1"))) == 1
    assert n_of(to_eulerian(Factorization.parse("5^1*3^4"))) == 9


def test_admissibility_descartes():
    report = admissibility_report(to_eulerian(DESCARTES))
    assert report.distinct_primes == 5
    assert not report.meets_prime_bound
    assert report.cube_check_applicable
    assert report.q_cubed == 22021**3 == 10678521115261
    assert report.three_N == 3 * 198585576189 == 595756728567
    assert report.cube_bound_holds is False


def test_admissibility_small_and_synthetic():
    report = admissibility_report(to_eulerian(Factorization.parse("5^1*3^2")))
    assert report.distinct_primes == 2
    assert not report.meets_prime_bound

    nine = Factorization.from_pairs(
        [(5, 1)] + [(p, 2) for p in (3, 7, 11, 13, 17, 19, 23, 29)]
    )
    report = admissibility_report(to_eulerian(nine))
    assert report.distinct_primes == 9
    assert report.meets_prime_bound


def test_admissibility_k_gt_1_skips_cube_check():
    report = admissibility_report(to_eulerian(Factorization.parse("5^5*3^2")))
    assert not report.cube_check_applicable
    assert report.cube_bound_holds is None


@settings(max_examples=60)
@given(
    q=st.sampled_from(PRIMES_1MOD4),
    k=st.sampled_from([1, 5, 9]),
    square_part=st.lists(
        st.tuples(st.sampled_from(ODD_PRIMES), st.integers(min_value=1, max_value=3)),
        max_size=4,
    ),
)
def test_round_trip(q, k, square_part):
    pairs = {p: 2 * b for p, b in square_part if p != q}
    pairs[q] = pairs.get(q, 0) + k
    f = Factorization.from_pairs(pairs.items())
    form = to_eulerian(f)
    assert form.q == q and form.k == pairs[q]
    assert form.q ** form.k * n_of(form) ** 2 == f.value
    assert all(b % 2 == 0 for _, b in form.n_factorization.scaled(2))


def test_parse_is_entry_order_independent():
    pairs = [(22021, 1), (3, 2), (13, 2), (7, 2), (11, 2)]
    rng = random.Random(7)
    forms = []
    for _ in range(5):
        rng.shuffle(pairs)
        forms.append(to_eulerian(Factorization.from_pairs(pairs, pretend={22021})))
    assert all(f == forms[0] for f in forms)
