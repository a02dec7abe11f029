"""Exception hierarchy shared across the package."""


class FramecxnError(Exception):
    """Base class for all errors raised by framecxn."""


class SchemaError(FramecxnError):
    """A corpus record violates the interchange schema."""


class TreeError(FramecxnError):
    """A constituency tree is malformed (empty, non-contiguous, bad leaves)."""


class IngestError(FramecxnError):
    """A schema or tree error, annotated with file/line context."""

    def __init__(self, path, line_no, cause):
        super().__init__(f"{path}:{line_no}: {cause}")
        self.path = path
        self.line_no = line_no
        self.cause = cause


class DegenerateNestingError(FramecxnError):
    """A role node dominates (or equals) the frame-evoking node; no
    up-then-down path exists between the two."""


class UnknownCategoryError(FramecxnError):
    """A category id or mnemonic is not present in the network."""


class FrozenNetworkError(FramecxnError):
    """Attempted mutation of a network that has been frozen."""


class EmptyGroupError(FramecxnError):
    """A statistic was requested over an empty construction group."""


class MisalignedCorporaError(FramecxnError):
    """Predicted and gold corpora do not line up utterance by utterance."""


class VersionMismatchError(FramecxnError):
    """A grammar file with an unsupported format version."""


class CorruptFileError(FramecxnError):
    """A grammar file that fails invariant verification on load."""
