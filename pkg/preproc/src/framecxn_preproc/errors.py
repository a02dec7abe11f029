class PreprocError(Exception):
    """Base class for preprocessing errors."""


class ParserUnavailable(PreprocError):
    """The requested parser backend cannot be loaded."""


class TokenizationMismatch(PreprocError):
    """An annotation span is incompatible with the backend's
    tokenization; the record is dropped."""
