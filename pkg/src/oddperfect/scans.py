"""Empirical scanners: square prime divisors of the even-power sums
E(q, k) = 1 + q^2 + ... + q^(k-1), residue classes of their prime
divisors, and the u-cofactor sweep.

Scanners record findings; they never adjudicate. Grids can be split
across worker processes; cells are pure, and results are merged in grid
order, so output is identical at any parallelism.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum

from .arith import DEFAULT_BUDGET, FactorBudget, factor, sigma_prime_power
from .primes import sieve_primes


class ScanMode(Enum):
    PRIMES_1MOD4 = "1mod4"  # default: primes congruent to 1 mod 4
    ALL_PRIMES = "primes"
    PROBE = "probe"  # every integer >= 2, composites included


def even_power_sum(q: int, k: int) -> int:
    """1 + q^2 + q^4 + ... + q^(k-1) for odd k; sigma(q^k) = (q+1) * this."""
    if k < 1 or k % 2 == 0:
        raise ValueError("k must be odd and >= 1")
    return sum(q ** (2 * i) for i in range((k + 1) // 2))


def _q_values(q_max: int, mode: ScanMode) -> list[int]:
    if mode is ScanMode.PROBE:
        return list(range(2, q_max + 1))
    primes = sieve_primes(q_max)
    if mode is ScanMode.ALL_PRIMES:
        return primes
    return [p for p in primes if p % 4 == 1]


def _k_values(k_set) -> tuple[int, ...]:
    ks = tuple(sorted(set(int(k) for k in k_set)))
    for k in ks:
        if k <= 1 or k % 4 != 1:
            raise ValueError(f"k must be > 1 and 1 (mod 4), got {k}")
    return ks


def _map_cells(fn, cells, parallelism: int) -> list:
    if parallelism <= 1 or len(cells) <= 1:
        return [fn(cell) for cell in cells]
    chunk = max(1, len(cells) // (4 * parallelism))
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(fn, cells, chunksize=chunk))


@dataclass(frozen=True)
class SquarefreeViolation:
    """A prime dividing E(q, k) more than once."""

    q: int
    k: int
    prime: int
    valuation: int
    e_value: int


@dataclass(frozen=True)
class _CellJob:
    q: int
    k: int
    budget: FactorBudget


def _squarefree_cell(job: _CellJob) -> tuple[SquarefreeViolation, ...]:
    e_value = even_power_sum(job.q, job.k)
    f = factor(e_value, job.budget)
    return tuple(
        SquarefreeViolation(job.q, job.k, p, e, e_value) for p, e in f.entries if e >= 2
    )


def cyclotomic_squarefree_scan(
    q_max: int,
    k_set,
    *,
    mode: ScanMode = ScanMode.PRIMES_1MOD4,
    budget: FactorBudget = DEFAULT_BUDGET,
    parallelism: int = 1,
) -> list[SquarefreeViolation]:
    """Factor E(q, k) over the grid and report every squared prime divisor."""
    worker_budget = budget.without_cache() if parallelism > 1 else budget
    cells = [
        _CellJob(q, k, worker_budget) for q in _q_values(q_max, mode) for k in _k_values(k_set)
    ]
    out: list[SquarefreeViolation] = []
    for group in _map_cells(_squarefree_cell, cells, parallelism):
        out.extend(group)
    return out


@dataclass(frozen=True)
class ResidueException:
    """A prime divisor r of E(q, k) with r != 1 (mod (k+1)/2).

    is_full_value marks r == E(q, k) itself, where the residue argument
    was never claimed to apply.
    """

    q: int
    k: int
    r: int
    modulus: int
    residue: int
    is_full_value: bool


def _residue_cell(job: _CellJob) -> tuple[ResidueException, ...]:
    e_value = even_power_sum(job.q, job.k)
    modulus = (job.k + 1) // 2
    f = factor(e_value, job.budget)
    return tuple(
        ResidueException(job.q, job.k, r, modulus, r % modulus, r == e_value)
        for r, _ in f.entries
        if r % modulus != 1 % modulus
    )


def cyclotomic_residue_scan(
    q_max: int,
    k_set,
    *,
    mode: ScanMode = ScanMode.PRIMES_1MOD4,
    budget: FactorBudget = DEFAULT_BUDGET,
    parallelism: int = 1,
) -> list[ResidueException]:
    """Report prime divisors of E(q, k) outside the class 1 mod (k+1)/2."""
    worker_budget = budget.without_cache() if parallelism > 1 else budget
    cells = [
        _CellJob(q, k, worker_budget) for q in _q_values(q_max, mode) for k in _k_values(k_set)
    ]
    out: list[ResidueException] = []
    for group in _map_cells(_residue_cell, cells, parallelism):
        out.extend(group)
    return out


@dataclass(frozen=True)
class LemmaUTriple:
    """A (p, b, q) hit: q prime, q | sigma(p^2b), p | q + 1.

    u = sigma(p^2b)/q (one division, matching the chain's definition);
    t records the full q-valuation of sigma(p^2b).
    """

    p: int
    b: int
    q: int
    t: int
    u: int
    congruence_ok: bool  # u = -1 (mod p)
    size_ok: bool  # u = 1 or u >= 2p - 1

    @property
    def flagged(self) -> bool:
        return not (self.congruence_ok and self.size_ok)


@dataclass(frozen=True)
class _LemmaJob:
    p: int
    b: int
    budget: FactorBudget


def _lemma_cell(job: _LemmaJob) -> tuple[LemmaUTriple, ...]:
    p, b = job.p, job.b
    sig = sigma_prime_power(p, 2 * b)
    triples = []
    for q, t in factor(sig, job.budget).entries:
        if (q + 1) % p:
            continue
        u = sig // q
        triples.append(
            LemmaUTriple(
                p=p,
                b=b,
                q=q,
                t=t,
                u=u,
                congruence_ok=u % p == p - 1,
                size_ok=u == 1 or u >= 2 * p - 1,
            )
        )
    return tuple(triples)


def lemma_u_scan(
    p_max: int,
    b_max: int,
    *,
    budget: FactorBudget = DEFAULT_BUDGET,
    parallelism: int = 1,
) -> list[LemmaUTriple]:
    """Sweep odd primes p <= p_max, 1 <= b <= b_max for u-cofactor triples.

    Every hit is emitted with its assertion outcomes; violations are
    flagged, never dropped.
    """
    if b_max < 0:
        raise ValueError("b_max must be >= 0")
    worker_budget = budget.without_cache() if parallelism > 1 else budget
    cells = [
        _LemmaJob(p, b, worker_budget)
        for p in sieve_primes(p_max)
        if p % 2
        for b in range(1, b_max + 1)
    ]
    out: list[LemmaUTriple] = []
    for group in _map_cells(_lemma_cell, cells, parallelism):
        out.extend(group)
    return out
