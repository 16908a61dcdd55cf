"""Exception types raised by gvcurves."""


class GVError(ArithmeticError):
    """Base class for every error raised by this package."""


class OddPowerError(GVError):
    """A q-substitution was applied to a polynomial with half-integral q-powers."""


class PoleError(GVError):
    """A rational function was evaluated at a pole."""


class NotDecomposable(GVError):
    """Basis peeling left a remainder that the basis cannot absorb."""


class UnknownValues(GVError):
    """An operation needs values that are marked as undetermined."""


class NegativeAPower(GVError):
    """An a=0 specialization met a negative power of a."""


class PoleLeak(GVError):
    """A (q^-1 - q) pole survived where the result must be a polynomial."""


class RingMismatch(GVError):
    """Cohomology classes from different rings were combined."""


class DimensionError(GVError):
    """An intersection count was requested outside the zero-dimensional case."""


class InconsistentTable(GVError):
    """A stratum Euler characteristic came out non-integral or the table is off."""


class MismatchError(GVError):
    """GV and GW spectra disagree at a determined genus."""

    def __init__(self, diff):
        self.diff = dict(diff)
        lines = ", ".join(f"g={g}: {a} != {b}" for g, (a, b) in sorted(self.diff.items()))
        super().__init__(f"GV/GW mismatch at {lines}")
