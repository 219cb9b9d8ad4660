"""Exception hierarchy shared by all sigmasolve modules.

Every rejection that a caller can provoke with bad-but-well-formed
parameters derives from :class:`DegenerateParameterError`, so the CLI can
map the whole family to a single exit code.  Genuine programming errors
(wrong lengths, malformed input) stay on the built-in ``ValueError`` /
``ZeroDivisionError`` types.
"""


class SigmaSolveError(Exception):
    """Base class for all library-specific errors."""


class DegenerateParameterError(SigmaSolveError):
    """Parameters violate a solvability condition (e.g. a zero product target)."""


class NonGenusOneError(SigmaSolveError):
    """A quartic model is singular or of too low a degree to carry a group law."""


class DegenerateDoublingError(SigmaSolveError):
    """Tangent-parabola doubling has no residual intersection point."""


class InfiniteOrderRequiredError(SigmaSolveError):
    """A seed point turned out to be torsion, so it cannot generate
    infinitely many distinct solutions."""


class DegenerateIdentityError(SigmaSolveError):
    """Randomized identity checking exhausted its resampling budget."""
