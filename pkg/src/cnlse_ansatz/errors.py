"""Failure taxonomy shared across the toolkit.

Every exception below marks a mathematically meaningful failure mode, not a
programming error.  Callers that probe near singular configurations on
purpose (scans, pole hunts) should catch the specific class they expect and
record it instead of aborting the whole run.
"""


class PoleProximity(ArithmeticError):
    """Evaluation point is within epsilon of a double pole of the
    elliptic function, where the Laurent tail cannot be resolved."""


class NegativeRadicand(ValueError):
    """A square root of the quartic was requested where the quartic is
    negative, so no real branch exists."""


class RealityViolation(ArithmeticError):
    """A quantity required to be real and nonnegative (the squared modulus
    of the field) came out negative."""


class StencilOutOfDomain(ValueError):
    """A finite difference stencil needs samples where the field is not
    defined or not finite."""


class DegenerateResiduals(ValueError):
    """Residual magnitudes are at round-off floor, so a convergence order
    estimated from their ratios would be noise."""


class NonFiniteSamples(ValueError):
    """An input array contains NaN or infinity."""


class WindowContainsPole(ValueError):
    """The requested spatial window contains a pole of the reconstructed
    envelope, so a spectral comparison there is meaningless."""


class AliasingWarning(RuntimeWarning):
    """Step size exceeds the stability guideline for the highest resolved
    wavenumber; results may be contaminated by aliasing."""
