"""Exception types shared across the package.

Class names are stable identifiers: the CLI reports a domain failure by
printing the class name, so renaming one is a breaking change.
"""


class DomainError(Exception):
    """A request that is well-formed but mathematically out of domain."""

    @property
    def name(self) -> str:
        return type(self).__name__


class ParseError(DomainError):
    """Malformed factorization text or cache record."""


class NotPrime(DomainError):
    """An argument required to be prime failed the primality check."""


class EvenInput(DomainError):
    """The candidate value is even; only odd candidates decompose."""


class NoSpecialPrime(DomainError):
    """Every exponent is even, so no special prime exists."""


class MultipleOddExponents(DomainError):
    """More than one prime appears to an odd power."""


class SpecialPrimeResidue(DomainError):
    """The special prime is not congruent to 1 modulo 4."""


class SpecialExponentResidue(DomainError):
    """The special exponent is not congruent to 1 modulo 4."""


class FactoringLimit(DomainError):
    """Factoring exceeded the configured budget."""


class PremiseFailure(DomainError):
    """A structural premise of an inequality chain cannot be formed."""


class NotApplicable(DomainError):
    """The operation has nothing to act on for this input."""


class NotConstructible(DomainError):
    """The requested derived quantity does not exist for this input."""
