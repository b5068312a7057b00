"""Exact computational toolkit around odd perfect number candidates.

Core pieces: arbitrary-precision divisor-sum arithmetic on explicit
factorizations, the q^k * n^2 decomposition of odd candidates, Descartes
pretend-prime verification and search, the case analysis behind the
special-prime inequality q^k < n, and empirical scanners for the claims
that analysis leans on.
"""

from .arith import (
    DEFAULT_BUDGET,
    ExactRatio,
    FactorBudget,
    Factorization,
    Ordering,
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
from .cache import FactorCache
from .dris import (
    Case2Quantities,
    CaseTag,
    DrisReport,
    K1Shape,
    SpecialDecomposition,
    SpecialPrime,
    TraceK1Result,
    case2_quantities,
    check_dris_conditions,
    classify_case,
    gcd_product_diagnostic,
    inequality_trace_k1,
    k1_shape_from_form,
    special_decomposition,
)
from .errors import (
    DomainError,
    EvenInput,
    FactoringLimit,
    MultipleOddExponents,
    NoSpecialPrime,
    NotApplicable,
    NotConstructible,
    NotPrime,
    ParseError,
    PremiseFailure,
    SpecialExponentResidue,
    SpecialPrimeResidue,
)
from .eulerian import AdmissibilityReport, EulerianForm, admissibility_report, n_of, to_eulerian
from .ln2 import (
    DEFAULT_BRACKET,
    Comparison,
    Ln2Bracket,
    compare_to_ln2,
    compare_to_threshold,
    ln2_bracket,
)
from .primes import is_prime, sieve_primes
from .scans import (
    LemmaUTriple,
    ResidueException,
    ScanMode,
    SquarefreeViolation,
    cyclotomic_residue_scan,
    cyclotomic_squarefree_scan,
    even_power_sum,
    lemma_u_scan,
)
from .spoof import SearchHit, SpoofCandidate, SpoofVerdict, search_descartes, spoof_sigma, verify_spoof

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityReport",
    "Case2Quantities",
    "CaseTag",
    "Comparison",
    "DEFAULT_BRACKET",
    "DEFAULT_BUDGET",
    "DomainError",
    "DrisReport",
    "EulerianForm",
    "EvenInput",
    "ExactRatio",
    "FactorBudget",
    "FactorCache",
    "FactoringLimit",
    "Factorization",
    "LemmaUTriple",
    "Ln2Bracket",
    "MultipleOddExponents",
    "NoSpecialPrime",
    "NotApplicable",
    "NotConstructible",
    "NotPrime",
    "Ordering",
    "ParseError",
    "PremiseFailure",
    "ResidueException",
    "ScanMode",
    "SearchHit",
    "K1Shape",
    "SpecialDecomposition",
    "SpecialExponentResidue",
    "SpecialPrime",
    "SpecialPrimeResidue",
    "SpoofCandidate",
    "SpoofVerdict",
    "SquarefreeViolation",
    "TraceK1Result",
    "abundancy",
    "admissibility_report",
    "case2_quantities",
    "check_dris_conditions",
    "classify_case",
    "compare_to_ln2",
    "compare_to_threshold",
    "cyclotomic_residue_scan",
    "cyclotomic_squarefree_scan",
    "even_power_sum",
    "factor",
    "gcd_product_diagnostic",
    "inequality_trace_k1",
    "is_perfect",
    "is_prime",
    "lemma_u_scan",
    "ln2_bracket",
    "multiplicity",
    "n_of",
    "reciprocal_prime_sum",
    "search_descartes",
    "k1_shape_from_form",
    "sieve_primes",
    "sigma",
    "sigma_prime_power",
    "special_decomposition",
    "spoof_sigma",
    "to_eulerian",
    "two_thirds_bound_check",
    "valuation",
    "verify_spoof",
]
