"""Exception hierarchy shared across the package."""


class Mp3SleuthError(Exception):
    """Base class for all package errors."""


class TruncatedStreamError(Mp3SleuthError):
    """A bit-level read ran past the end of the available data."""


class HeaderError(Mp3SleuthError):
    """A 4-byte candidate is not a usable frame header."""


class BadSyncError(HeaderError):
    """The 11 sync bits are not all set."""


class UnsupportedFormatError(HeaderError):
    """Valid MPEG header, but not MPEG-1 Layer III."""


class ReservedFieldError(HeaderError):
    """Free-format or forbidden bitrate index, or reserved sample-rate index."""


class SideInfoError(Mp3SleuthError):
    """Side information is truncated or structurally invalid."""


class FieldRangeError(Mp3SleuthError):
    """A value lies outside its declared bit-field range."""


class MalformedCodewordError(Mp3SleuthError):
    """No entry of the selected Huffman table matches the bitstream."""


class UnencodableSymbolError(Mp3SleuthError):
    """A value cannot be represented by the selected Huffman table."""


class TooFewFramesError(Mp3SleuthError):
    """The stream is too short for the requested feature family."""


class SchemaMismatchError(Mp3SleuthError):
    """Feature vector, normalization stats, or model schemas disagree."""


class TrainingError(Mp3SleuthError):
    """Classifier training received degenerate input."""


class ModelFormatError(Mp3SleuthError):
    """A model file has an unknown version or is structurally invalid."""


class InfeasibleSpecError(Mp3SleuthError):
    """A synthesis spec cannot produce values in the valid range."""


class FixtureError(Mp3SleuthError):
    """Fixture content does not fit the declared frame/bit budgets."""
