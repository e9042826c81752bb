"""Exception hierarchy for the starrad package.

Every error raised by library code derives from :class:`StarRadError` so
callers can catch one base type.  The CLI maps subclass groups onto exit
codes; keep new exceptions inside the existing groups unless a genuinely
new failure mode appears.
"""

from __future__ import annotations


class StarRadError(Exception):
    """Base class for all starrad errors."""


class InvalidParameter(StarRadError):
    """A function parameter lies outside its admissible range."""


class InvalidQuery(StarRadError):
    """A radius query combines family/parameter/alpha in an unsupported way."""


class SingularPoint(StarRadError):
    """Evaluation requested at a pole of the normalization factor."""


class NonConvergent(StarRadError):
    """A series failed to meet its tolerance within the term budget."""


class NoSignChange(StarRadError):
    """A scan found no sign change over the allowed interval."""


class NoRootFound(StarRadError):
    """Root refinement failed to converge inside its bracket."""


class TargetBelowInfimum(StarRadError):
    """The requested level is below the infimum of an increasing function."""


class DegenerateSequence(StarRadError):
    """A Sturm sequence terminated with a non-constant gcd (repeated roots)."""


class PreconditionViolated(StarRadError):
    """A certified computation was invoked with its hypotheses unmet."""


class QuadratureFailure(StarRadError):
    """Numerical integration did not reach the requested accuracy."""
