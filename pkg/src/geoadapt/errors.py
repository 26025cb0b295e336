"""Exception types shared across the package."""


class GeoAdaptError(Exception):
    """Base class for all package errors."""


class NotSkew(GeoAdaptError):
    """Matrix handed to vee() is not skew-symmetric within tolerance."""


class SingularMass(GeoAdaptError):
    """Generalized mass matrix is not invertible."""


class SingularInputGain(GeoAdaptError):
    """Input gain g(q) has an ill-conditioned normal matrix g^T g."""


class WrongVariant(GeoAdaptError):
    """Operation called on a model variant it does not support."""


class ShapeMismatch(GeoAdaptError):
    """Array argument has an incompatible shape."""


class NonFiniteState(GeoAdaptError):
    """Integration produced NaN/Inf.

    Carries the step index at which the non-finite value appeared.
    """

    def __init__(self, step: int, message: str = ""):
        self.step = step
        super().__init__(message or f"non-finite state at step {step}")


class TapeMismatch(GeoAdaptError):
    """Adjoint tape does not match the problem it is replayed against."""


class Diverged(GeoAdaptError):
    """Training loss became non-finite.

    Carries the iteration at which divergence was detected.
    """

    def __init__(self, iteration: int, message: str = ""):
        self.iteration = iteration
        super().__init__(message or f"training diverged at iteration {iteration}")


class ConfigError(GeoAdaptError):
    """Invalid or inconsistent experiment configuration."""
