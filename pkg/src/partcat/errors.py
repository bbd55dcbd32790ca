"""Exception types shared across the package."""


class PartcatError(Exception):
    """Base class for all package errors."""


class MalformedPartition(PartcatError):
    """Blocks overlap, miss a point, or reference unknown points."""


class ColorMismatch(PartcatError):
    """Vertical composition attempted along rows whose colored words differ."""


class EmptyUpperRow(PartcatError):
    """Rotation needs at least one upper leg."""


class NotAPairing(PartcatError):
    """A pairing-only predicate was applied to a diagram with a block of size != 2."""


class BudgetExceeded(PartcatError):
    """A diagram or computation exceeds the configured point budget."""


class NotSaturated(PartcatError):
    """Operation requires a saturated (fixpoint-reached) closure."""


class UnknownGeometry(PartcatError):
    """No registry entry under that name."""


class SizeOverflow(PartcatError):
    """A matrix dimension exceeds the configured cap."""
