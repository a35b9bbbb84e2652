"""Exception types shared across the package."""


class MetadiffError(Exception):
    """Base class for all package-specific errors."""


class ShapeMismatch(MetadiffError):
    pass


class SymmetryViolation(MetadiffError):
    pass


class NonBinaryInput(MetadiffError):
    pass


class InvalidTimesteps(MetadiffError):
    """Schedule length is too short to define a diffusion process."""


class InvalidTimestep(MetadiffError):
    """A 1-based timestep lies outside the schedule."""


class InvalidConfig(MetadiffError):
    pass


class NonFiniteInput(MetadiffError):
    pass


class OutOfRange(MetadiffError):
    pass


class LengthMismatch(MetadiffError):
    pass


class ScheduleMismatch(MetadiffError):
    """Sampling schedule differs from the one the checkpoint was trained with."""


class CorruptContainer(MetadiffError):
    """Checksum or structural failure while reading a binary container."""


class VersionMismatch(MetadiffError):
    pass


class CheckpointIOError(MetadiffError):
    pass
