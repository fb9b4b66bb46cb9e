"""Exception types shared across the package."""


class ChogenError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateOption(ChogenError):
    """Two options of a choice set are equal."""


class MixedWidth(ChogenError):
    """Treatments in one collection have different factor counts."""


class WidthMismatch(ChogenError):
    """Operands disagree on the number of factors."""


class ShapeMismatch(ChogenError):
    """Designs disagree on set count or set size."""


class EffectOutOfRange(ChogenError):
    """A factorial effect names a factor outside 1..n."""


class SamePair(ChogenError):
    """A component pair requires two distinct treatments."""


class SameEffect(ChogenError):
    """Pair counting requires two distinct effects."""


class BadOrder(ChogenError):
    """Argument is not admissible for the requested Hadamard construction."""


class NotHadamard(ChogenError):
    """Matrix fails the exact Hadamard check."""


class Unsupported(ChogenError):
    """Parameters outside the supported range."""


class BadGenerators(ChogenError):
    """Generator set violates the distinct/complement-free/nonzero rules."""


class BadGroup(ChogenError):
    """Group size r outside 1..n-1."""


class RangeError(ChogenError):
    """Construction parameter outside its stated admissible range."""


class FormatError(ChogenError):
    """Serialized design payload is malformed."""
