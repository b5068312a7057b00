"""Case analysis around the special-prime inequality q^k < n.

Given an Eulerian form, this module isolates the primes of n whose
even-power divisor sums are divisible by q, classifies the
configuration by how those primes interact with sigma(q^k), evaluates
the three sufficient conditions for the q^k < n guarantee exactly, and
numerically traces the k = 1 inequality chains line by line.

Constructors here validate shape, not deep arithmetic: synthetic
decompositions with freely chosen valuations are legitimate inputs (that
is how the checkers get exercised on configurations no known number
realizes). The honest path is special_decomposition(), which computes
every valuation from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, prod

from .arith import (
    DEFAULT_BUDGET,
    FactorBudget,
    Factorization,
    Ordering,
    factor,
    multiplicity,
    sigma,
    sigma_prime_power,
)
from .errors import FactoringLimit, NotApplicable, NotConstructible, PremiseFailure
from .eulerian import EulerianForm
from .ln2 import DEFAULT_BRACKET, DEFAULT_MAX_TERMS, Comparison, Ln2Bracket, compare_to_threshold
from .primes import is_prime


def _sigma_unit(p: int, e: int, pretend: frozenset[int]) -> int:
    return sigma_prime_power(p, e, assume_prime=p in pretend)


@dataclass(frozen=True)
class SpecialPrime:
    """One prime p^2b of n with q^t || sigma(p^2b), t >= 1.

    c is the p-valuation of the product of the specials' divisor sums;
    c_q is the p-valuation of sigma(q^k).
    """

    p: int
    b: int
    t: int
    c: int
    c_q: int

    def __post_init__(self) -> None:
        if self.b < 1 or self.t < 1 or self.c < 0 or self.c_q < 0:
            raise ValueError("need b >= 1, t >= 1, c >= 0, c_q >= 0")


@dataclass(frozen=True)
class SpecialDecomposition:
    form: EulerianForm
    specials: tuple[SpecialPrime, ...]
    residual: Factorization  # n's primes outside the specials, n-side exponents

    def __post_init__(self) -> None:
        ps = [sp.p for sp in self.specials]
        if ps != sorted(ps) or len(set(ps)) != len(ps):
            raise ValueError("special primes must be distinct and ascending")
        special_set = set(ps)
        residual_set = set(self.residual.primes)
        if special_set & residual_set:
            raise ValueError("special and residual primes must be disjoint")
        if special_set | residual_set != set(self.form.n_factorization.primes):
            raise ValueError("specials plus residual must cover n exactly")

    @property
    def s(self) -> int:
        return len(self.specials)

    def sigma_q_power(self) -> int:
        return _sigma_unit(self.form.q, self.form.k, self.form.pretend)

    def sigma_specials_product(self) -> int:
        pretend = self.form.pretend
        return prod(_sigma_unit(sp.p, 2 * sp.b, pretend) for sp in self.specials)


def special_decomposition(e: EulerianForm) -> SpecialDecomposition:
    """Compute the specials and all valuations honestly from e."""
    pretend = e.pretend
    sigma_by_prime = {p: _sigma_unit(p, 2 * b, pretend) for p, b in e.n_factorization}
    special_entries = [(p, b) for p, b in e.n_factorization if sigma_by_prime[p] % e.q == 0]
    sigma_qk = _sigma_unit(e.q, e.k, pretend)
    sigma_product = prod(sigma_by_prime[p] for p, _ in special_entries)
    specials = tuple(
        SpecialPrime(
            p=p,
            b=b,
            t=multiplicity(e.q, sigma_by_prime[p]),
            c=multiplicity(p, sigma_product),
            c_q=multiplicity(p, sigma_qk),
        )
        for p, b in special_entries
    )
    special_set = {p for p, _ in special_entries}
    residual = e.n_factorization.restrict(lambda p: p not in special_set)
    return SpecialDecomposition(e, specials, residual)


class CaseTag(Enum):
    CASE1 = "Case1"
    CASE2 = "Case2"
    CASE3 = "Case3"
    K_EQUALS_1 = "KEquals1"
    NOT_APPLICABLE = "NotApplicable"


def classify_case(sd: SpecialDecomposition) -> CaseTag:
    """Total classification; k = 1 short-circuits everything else."""
    if sd.form.k == 1:
        return CaseTag.K_EQUALS_1
    if sd.s == 0:
        return CaseTag.NOT_APPLICABLE
    if all(sp.c_q == 0 for sp in sd.specials):
        return CaseTag.CASE1
    if sd.s == 1:
        return CaseTag.CASE2
    return CaseTag.CASE3


@dataclass(frozen=True)
class Case2Quantities:
    """u = sigma(p1^2b1)/q^k and v = sigma(w^2)/p1^(2b1 - c_1q), exact."""

    u: int
    v: Fraction
    c_1q: int


def case2_quantities(sd: SpecialDecomposition) -> Case2Quantities:
    if sd.s != 1:
        raise NotConstructible("requires exactly one special prime")
    sp = sd.specials[0]
    sig_p = _sigma_unit(sp.p, 2 * sp.b, sd.form.pretend)
    qk = sd.form.q ** sd.form.k
    if sig_p % qk:
        raise NotConstructible("q^k does not divide sigma(p1^2b1)")
    u = sig_p // qk
    sigma_w2 = sigma(sd.residual.scaled(2)) if len(sd.residual) else 1
    shift = 2 * sp.b - sp.c_q
    if shift >= 0:
        v = Fraction(sigma_w2, sp.p**shift)
    else:
        v = Fraction(sigma_w2 * sp.p ** (-shift))
    return Case2Quantities(u=u, v=v, c_1q=sp.c_q)


@dataclass(frozen=True)
class DrisReport:
    """Outcome of the sufficient-condition check for q^k < n.

    The guarantee flag follows the stated integer threshold (7); the
    underlying derivation only needs 2/(1 - ln 2) ~ 6.5178, so both
    comparisons are surfaced. Direct orderings of q, q^k against n are
    always computed from the actual values.
    """

    case_tag: CaseTag
    cond1: bool | None
    cond2: bool | None
    cond3: bool | None
    threshold_exact: Comparison | None
    threshold_seven: Ordering | None
    guaranteed_qk_lt_n: bool
    direct_q_lt_n: Ordering
    direct_qk_lt_n: Ordering
    case1_witness_r: int | None


def _case1_witness(sd: SpecialDecomposition, budget: FactorBudget) -> int | None:
    """Smallest odd prime r with r || sigma(q^k), r not special and not q."""
    try:
        f = factor(sd.sigma_q_power(), budget)
    except FactoringLimit:
        return None
    special_set = {sp.p for sp in sd.specials}
    for p, e in f.entries:
        if e == 1 and p % 2 == 1 and p != sd.form.q and p not in special_set:
            return p
    return None


def check_dris_conditions(
    sd: SpecialDecomposition,
    *,
    bracket: Ln2Bracket = DEFAULT_BRACKET,
    max_terms: int = DEFAULT_MAX_TERMS,
    budget: FactorBudget = DEFAULT_BUDGET,
) -> DrisReport:
    """Evaluate conditions (1)-(3) and both condition-(3) thresholds."""
    tag = classify_case(sd)
    q, k = sd.form.q, sd.form.k
    n_value = sd.form.n_value
    direct_q = Ordering.compare(q, n_value)
    direct_qk = Ordering.compare(q**k, n_value)
    if sd.s == 0:
        return DrisReport(
            case_tag=tag,
            cond1=None,
            cond2=None,
            cond3=None,
            threshold_exact=None,
            threshold_seven=None,
            guaranteed_qk_lt_n=False,
            direct_q_lt_n=direct_q,
            direct_qk_lt_n=direct_qk,
            case1_witness_r=None,
        )
    lhs = prod(sp.p**sp.c for sp in sd.specials)
    rhs = prod(sp.p**sp.c_q for sp in sd.specials)
    any_divides = any(sp.c_q > 0 for sp in sd.specials)
    cond1 = not any_divides
    cond2 = sd.s == 1 and 1 <= sd.specials[0].c_q <= 2
    cond3 = sd.s > 1 and any_divides and lhs >= 7 * rhs
    threshold_seven = Ordering.compare(lhs, 7 * rhs)
    threshold_exact = compare_to_threshold(Fraction(lhs, rhs), bracket, max_terms)
    witness = _case1_witness(sd, budget) if tag is CaseTag.CASE1 else None
    return DrisReport(
        case_tag=tag,
        cond1=cond1,
        cond2=cond2,
        cond3=cond3,
        threshold_exact=threshold_exact,
        threshold_seven=threshold_seven,
        guaranteed_qk_lt_n=k > 1 and (cond1 or cond2 or cond3),
        direct_q_lt_n=direct_q,
        direct_qk_lt_n=direct_qk,
        case1_witness_r=witness,
    )


def gcd_product_diagnostic(sd: SpecialDecomposition) -> tuple[int, int, Ordering]:
    """Pairwise gcd product of the specials' sigma values versus the
    gcd(sigma(q^k), p_i^2b_i) product; the empty pair product is 1."""
    if sd.s == 0:
        raise NotApplicable("no special primes")
    pretend = sd.form.pretend
    powers = [sp.p ** (2 * sp.b) for sp in sd.specials]
    sigmas = [_sigma_unit(sp.p, 2 * sp.b, pretend) for sp in sd.specials]
    lhs = 1
    for i in range(sd.s):
        for j in range(i + 1, sd.s):
            lhs *= gcd(sigmas[i] * sigmas[j], powers[i] * powers[j])
    sigma_qk = sd.sigma_q_power()
    rhs = prod(gcd(sigma_qk, pw) for pw in powers)
    return lhs, rhs, Ordering.compare(lhs, rhs)


# ---------------------------------------------------------------------------
# k = 1 inequality chains
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class K1Shape:
    """Data for the k = 1 chains: N = q * p^2b * r1^2m1 * ... * rj^2mj.

    c_q is the p-valuation of sigma(q), c_1 that of sigma(r1^2m1), and
    w_value collects r2..rj. Whether q actually divides sigma(p^2b) is a
    reported premise, not a constructor requirement, so spoof candidates
    can be traced through the chain they evade.
    """

    q: int
    p: int
    b: int
    r_list: tuple[tuple[int, int], ...]
    w_value: int
    c_q: int
    c_1: int
    pretend: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        if self.b < 1:
            raise ValueError("b must be >= 1")
        if self.q % 2 == 0 or self.q < 3:
            raise ValueError("q must be odd and >= 3")
        if self.q not in self.pretend and not is_prime(self.q):
            raise ValueError(f"q = {self.q} is not prime (declare it pretend to probe)")
        if not is_prime(self.p) or self.p == 2:
            raise ValueError("p must be an odd prime")
        seen = {self.p, self.q}
        for r, beta in self.r_list:
            if r in seen:
                raise ValueError(f"auxiliary prime {r} repeats p, q, or another r")
            if r == 2 or not is_prime(r):
                raise ValueError(f"auxiliary prime {r} must be an odd prime")
            if beta < 1:
                raise ValueError("auxiliary exponents must be >= 1")
            seen.add(r)
        if self.w_value != prod(r**beta for r, beta in self.r_list[1:]):
            raise ValueError("w_value does not match r2..rj")
        if self.c_q != multiplicity(self.p, _sigma_unit(self.q, 1, self.pretend)):
            raise ValueError("c_q does not match the p-valuation of sigma(q)")
        expected_c1 = (
            multiplicity(self.p, _sigma_unit(self.r_list[0][0], 2 * self.r_list[0][1], self.pretend))
            if self.r_list
            else 0
        )
        if self.c_1 != expected_c1:
            raise ValueError("c_1 does not match the p-valuation of sigma(r1^2b1)")

    @classmethod
    def build(cls, q, p, b, r_list, pretend=frozenset()) -> "K1Shape":
        """Derive w_value, c_q, c_1 from the raw (q, p, b, r_list) data."""
        pretend = frozenset(pretend)
        if q not in pretend and not is_prime(q):
            raise ValueError(f"q = {q} is not prime (declare it pretend to probe)")
        r_list = tuple((int(r), int(m)) for r, m in r_list)
        c_q = multiplicity(p, _sigma_unit(q, 1, pretend))
        c_1 = multiplicity(p, _sigma_unit(r_list[0][0], 2 * r_list[0][1], pretend)) if r_list else 0
        w_value = prod(r**m for r, m in r_list[1:])
        return cls(q, p, b, r_list, w_value, c_q, c_1, pretend)

    @property
    def N_value(self) -> int:
        return self.q * self.p ** (2 * self.b) * prod(r ** (2 * m) for r, m in self.r_list)

    @property
    def n_value(self) -> int:
        return self.p**self.b * prod(r**m for r, m in self.r_list)


def _order_auxiliaries(p: int, rest, pretend: frozenset[int]):
    """Relabel so p^c1 * r2 divides sigma(r1^2b1) when any ordering allows it.

    Tries candidates for r1 in ascending order and keeps the remaining
    primes ascending, so the choice is deterministic; falls back to plain
    ascending order when no ordering satisfies the divisibility.
    """
    rest = tuple(rest)
    for i, (r1, m1) in enumerate(rest):
        sig = _sigma_unit(r1, 2 * m1, pretend)
        c_1 = multiplicity(p, sig)
        others = rest[:i] + rest[i + 1 :]
        for j, (r2, _) in enumerate(others):
            if sig % (p**c_1 * r2) == 0:
                return (rest[i], others[j]) + others[:j] + others[j + 1 :]
    return rest


def k1_shape_from_form(e: EulerianForm) -> K1Shape:
    """Pick p and an auxiliary-prime order for the k = 1 chain.

    p is the smallest prime of n whose even-power divisor sum q divides;
    when none qualifies (spoofs) the smallest prime of n stands in, so
    the chain can still be evaluated numerically.
    """
    if e.k != 1:
        raise PremiseFailure(f"the chain needs k = 1, got k = {e.k}")
    entries = e.n_factorization.entries
    if not entries:
        raise PremiseFailure("n has no prime factors to pick p from")
    qualified = [
        (p, b) for p, b in entries if _sigma_unit(p, 2 * b, e.pretend) % e.q == 0
    ]
    p, b = qualified[0] if qualified else entries[0]
    rest = tuple((r, m) for r, m in entries if r != p)
    return K1Shape.build(e.q, p, b, _order_auxiliaries(p, rest, e.pretend), e.pretend)


@dataclass(frozen=True)
class PremiseCheck:
    name: str
    holds: bool


@dataclass(frozen=True)
class TraceLine:
    line_id: str
    relation: str  # "=", ">", or ">="
    lhs: Fraction
    rhs: Fraction
    holds: bool


@dataclass(frozen=True)
class TraceK1Result:
    case_label: str  # "Case1" (p does not divide sigma(q)) or "Case2"
    premises: tuple[PremiseCheck, ...]
    lines: tuple[TraceLine, ...]
    N_value: int
    n_value: int
    q: int
    final_holds: bool
    q_lt_n: bool


_RELATION_OPS = {
    "=": lambda a, b: a == b,
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
}


def _line(line_id: str, relation: str, lhs, rhs) -> TraceLine:
    lhs_f, rhs_f = Fraction(lhs), Fraction(rhs)
    return TraceLine(line_id, relation, lhs_f, rhs_f, _RELATION_OPS[relation](lhs_f, rhs_f))


def _pow(base: int, exponent: int) -> Fraction:
    """Exact base**exponent; exponents can go negative for crafted inputs."""
    if exponent >= 0:
        return Fraction(base**exponent)
    return Fraction(1, base**-exponent)


def inequality_trace_k1(shape: K1Shape) -> TraceK1Result:
    """Evaluate every displayed inequality of the applicable k = 1 case.

    Case 1 applies when p does not divide sigma(q), Case 2 otherwise.
    Lines carry exact values and a holds flag; soft premises (the facts
    the derivation leans on) are reported alongside rather than enforced,
    so a failing chain shows exactly where it breaks. Structural gaps --
    no second auxiliary prime, or Case 2 without q | sigma(p^2b) -- raise
    PremiseFailure since the expressions cannot be formed at all.
    """
    if len(shape.r_list) < 2:
        raise PremiseFailure(
            f"the chain needs auxiliary primes r1 and r2, got {len(shape.r_list)}"
        )
    q, p, b = shape.q, shape.p, shape.b
    pretend = shape.pretend
    sigma_q = _sigma_unit(q, 1, pretend)
    sigma_p = _sigma_unit(p, 2 * b, pretend)
    (r1, m1), (r2, _) = shape.r_list[0], shape.r_list[1]
    sigma_r1 = _sigma_unit(r1, 2 * m1, pretend)
    sigma_w2 = prod(_sigma_unit(r, 2 * m, pretend) for r, m in shape.r_list[1:])
    c_1, c_q = shape.c_1, shape.c_q
    N = shape.N_value
    n_value = shape.n_value
    two_n = 2 * N

    premises = [
        PremiseCheck("q_divides_sigma_p_power", sigma_p % q == 0),
        PremiseCheck(
            "q_divides_no_auxiliary_sigma",
            all(_sigma_unit(r, 2 * m, pretend) % q for r, m in shape.r_list),
        ),
        PremiseCheck("p_c1_times_r2_divides_sigma_r1", sigma_r1 % (p**c_1 * r2) == 0),
    ]
    lines: list[TraceLine] = []

    if c_q == 0:
        case_label = "Case1"
        premises.append(
            PremiseCheck("w_valuation_is_2b_minus_c1", multiplicity(p, sigma_w2) == 2 * b - c_1)
        )
        lines.append(_line("sigma-product", "=", two_n, sigma_q * sigma_p * sigma_r1 * sigma_w2))
        lines.append(
            _line("bound-r2", ">", two_n, (q + 1) * q * (p**c_1 * r2) * _pow(p, 2 * b - c_1))
        )
        lines.append(_line("bound-two-thirds", ">", two_n, Fraction(2) * q * q * sigma_p))
        lines.append(_line("bound-q", ">", two_n, 2 * q**3))
        lines.append(_line("final", ">", N, q**3))
    else:
        case_label = "Case2"
        if sigma_p % q:
            raise PremiseFailure("Case 2 needs q | sigma(p^2b) to form u = sigma(p^2b)/q")
        u = sigma_p // q
        premises.append(PremiseCheck("u_is_odd", u % 2 == 1))
        premises.append(PremiseCheck("u_congruent_minus_one_mod_p", u % p == p - 1))
        premises.append(PremiseCheck("u_at_least_2p_minus_1", u >= 2 * p - 1))
        premises.append(
            PremiseCheck(
                "w_valuation_is_2b_minus_cq_minus_c1",
                multiplicity(p, sigma_w2) == 2 * b - c_q - c_1,
            )
        )
        premises.append(
            PremiseCheck("pminus1_u_congruent_one_mod_p_cq", (p - 1) * u % p**c_q == 1 % p**c_q)
        )
        lines.append(_line("power-identity", "=", p ** (2 * b + 1) - 1, (p - 1) * u * q))
        lines.append(_line("sigma-w-lower", ">=", sigma_w2, _pow(p, 2 * b - c_q - c_1)))
        lines.append(_line("pminus1-u-lower", ">", (p - 1) * u, p**c_q))
        lines.append(_line("combined-lower", ">", sigma_w2 * (p - 1) * u, _pow(p, 2 * b - c_1)))
        lines.append(
            _line("combined-lower-divided", ">", sigma_w2 * u, _pow(p, 2 * b - c_1) / (p - 1))
        )
        lines.append(_line("sigma-product", "=", two_n, sigma_q * sigma_p * sigma_r1 * sigma_w2))
        lines.append(
            _line("bound-u", ">", two_n, (q + 1) * u * q * (p**c_1 * r2) * sigma_w2)
        )
        lines.append(
            _line(
                "bound-w",
                ">",
                two_n,
                q * q * _pow(p, 2 * b - c_1) / (p - 1) * p**c_1 * r2,
            )
        )
        lines.append(_line("bound-p2b", ">", two_n, q * q * r2 * Fraction(p ** (2 * b), p - 1)))
        lines.append(
            _line("bound-two-thirds", ">", two_n, q * q * r2 * Fraction(2 * sigma_p, 3 * (p - 1)))
        )
        lines.append(
            _line("bound-uq", ">", two_n, q * q * r2 * Fraction(2 * u * q, 3 * (p - 1)))
        )
        lines.append(
            _line("bound-2p-minus-1", ">", two_n, 2 * q**3 * Fraction(2 * p - 1, p - 1))
        )
        lines.append(_line("final", ">", N, 2 * q**3))

    return TraceK1Result(
        case_label=case_label,
        premises=tuple(premises),
        lines=tuple(lines),
        N_value=N,
        n_value=n_value,
        q=q,
        final_holds=lines[-1].holds,
        q_lt_n=q < n_value,
    )
