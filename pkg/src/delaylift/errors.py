"""Exception types shared across the package."""


class DelayLiftError(Exception):
    """Base class for all package errors."""


class NonPositiveDelay(DelayLiftError):
    pass


class EmptyControlLattice(DelayLiftError):
    pass


class GrowthViolated(DelayLiftError):
    def __init__(self, field, detail=""):
        self.field = field
        super().__init__(f"declared bound violated for {field!r}" + (f": {detail}" if detail else ""))


class DiscountTooSmall(DelayLiftError):
    def __init__(self, rho, rho0):
        self.rho = rho
        self.rho0 = rho0
        super().__init__(f"discount rho={rho} must exceed rho0={rho0}")


class GridMismatch(DelayLiftError):
    pass


class HorizonNotAligned(DelayLiftError):
    pass


class TimeNotAligned(DelayLiftError):
    pass


class NonFinite(DelayLiftError):
    def __init__(self, step):
        self.step = step
        super().__init__(f"state left the finite range at step {step}")


class DomainViolation(DelayLiftError):
    pass


class SingularBlock(DelayLiftError):
    pass


class NotLinearModel(DelayLiftError):
    pass


class ControlOutOfSet(DelayLiftError):
    pass


class CertificateFailed(DelayLiftError):
    def __init__(self, item, detail=""):
        self.item = item
        super().__init__(f"weak-B certificate item ({item}) failed" + (f": {detail}" if detail else ""))


class NOutOfRange(DelayLiftError):
    pass


class SearchTooLarge(DelayLiftError):
    pass


class RegressionSingular(DelayLiftError):
    pass


class ConfigError(DelayLiftError):
    """Configuration schema violation; message carries the key path."""
