"""Exception hierarchy for the hypentropy package."""

from __future__ import annotations


class HypentropyError(Exception):
    """Base class for every error raised by this package."""


# --- hyperbolic arithmetic -------------------------------------------------

class DivisionByZeroDivisor(HypentropyError):
    """Division by an element with a zero idempotent component."""


class NonFinite(HypentropyError):
    """A real input was NaN or infinite."""


class DomainError(HypentropyError):
    """Argument outside the domain of an elementary hyperbolic function."""


class ParseError(HypentropyError):
    """Text could not be parsed as a hyperbolic number."""


# --- calculus --------------------------------------------------------------

class OutsideDomain(HypentropyError):
    """Evaluation point outside the declared function domain."""


class NonConvergent(HypentropyError):
    """A numerical limit did not settle within tolerance."""


class HypothesisViolated(HypentropyError):
    """A precondition of a theorem-style check does not hold."""


class EmptyDomain(HypentropyError):
    """No points could be sampled from the requested domain."""


# --- distributions ---------------------------------------------------------

class ValidationError(HypentropyError):
    """Base class for probability-distribution validation failures."""


class NegativeComponent(ValidationError):
    pass


class ComponentExceedsOne(ValidationError):
    pass


class SumInvalid(ValidationError):
    pass


class CaseMismatch(ValidationError):
    pass


class LambdaOutOfRange(ValidationError):
    pass


class BadDelta(ValidationError):
    pass


class LengthMismatch(ValidationError):
    pass


# --- entropy measures ------------------------------------------------------

class OrderOne(HypentropyError):
    """Rényi order 1 requested; use the Shannon entropy instead."""


class NegativeOrder(HypentropyError):
    pass


class NonPositiveOrder(HypentropyError):
    pass


class OrderOnZeroDivisorLine(HypentropyError):
    """Hyperbolic Rényi order with exactly one component equal to 1."""


class ZeroProbability(HypentropyError):
    """Generating-function route requires strictly positive probabilities."""


class ZeroComponent(HypentropyError):
    """Hyperbolic generating-function route requires positive components."""


class DegenerateN(HypentropyError):
    """Operation undefined (or trivial) for a single-state distribution."""
