"""Exception types shared across the package."""


class UlambdaError(Exception):
    """Base class for package-specific errors."""


class ZeroConstantTerm(UlambdaError):
    """Series reciprocal requested for a (near-)zero constant term."""


class NotNormalized(UlambdaError):
    """Series is not of the form z + a2 z^2 + ... (f(0)=0, f'(0)=1)."""


class NormExceeded(UlambdaError):
    """Certification failed: |psi| exceeds one on the boundary circle."""


class DenominatorVanishes(UlambdaError):
    """The prescribed z/f polynomial has a zero inside the unit disk."""


class MembershipFailed(UlambdaError):
    """Sampled deviation |U_f - 1| does not stay below lambda with margin."""


class IndexOutOfRange(UlambdaError):
    """Functional needs a Taylor coefficient beyond the computed range."""


class UnsupportedKind(UlambdaError):
    """No bound is catalogued for this functional kind."""


class OutsideRegion(UlambdaError):
    """Point violates 0 <= x <= 1, 0 <= y <= (1 - x^2)/2."""


class SharpnessFailure(UlambdaError):
    """A sharp bound was not attained by its extremal witness."""

    def __init__(self, kind: str, lam: float, value: float, bound: float):
        super().__init__(
            f"sharpness failed for {kind} at lambda={lam}: value={value!r}, bound={bound!r}"
        )
        self.kind = kind
        self.lam = lam
        self.value = value
        self.bound = bound


class ConfigError(UlambdaError):
    """Invalid run configuration."""
