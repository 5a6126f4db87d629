"""Exception types shared across the solvers."""


class VmazerError(Exception):
    """Base class for all package-specific errors."""


class AiryRangeError(VmazerError, ValueError):
    """Airy argument outside the representable range (Bi overflow, or absurdly deep)."""


class DegenerateFrameError(VmazerError, ValueError):
    """Dressed-state rotation requested with zero coupling but nonzero detuning."""


class ConditioningError(VmazerError, RuntimeError):
    """Linear matching system too ill-conditioned to trust.

    Carries the condition estimate in ``.condition`` when available.
    """

    def __init__(self, message, condition=None):
        super().__init__(message)
        self.condition = condition


class IntegrationError(VmazerError, RuntimeError):
    """Adaptive integrator failed (step-size underflow / overflow in the solution)."""


class ResolutionError(VmazerError, ValueError):
    """Quadrature or sweep grid too coarse for the local oscillation scale."""


class ConfigError(VmazerError, ValueError):
    """Malformed run configuration (CLI / config file)."""
