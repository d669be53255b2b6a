"""Exception hierarchy for the HitRatio toolkit.

Every error raised by the library derives from ValueError so callers that
already catch ValueError keep working. Each class carries the process exit
code the CLI returns when the error reaches main().
"""


class HitRatioError(ValueError):
    """Base class for all toolkit errors.

    Attributes:
        exit_code: Process exit status used by the CLI for this error class.
    """

    exit_code: int = 1


class ParseError(HitRatioError):
    """An input file or stream could not be parsed.

    Attributes:
        line_number: 1-based line where parsing failed, if known.
        source: Name of the file or stream being parsed, if known.
    """

    exit_code = 2

    def __init__(
        self,
        message: str,
        line_number: int | None = None,
        source: str | None = None,
    ) -> None:
        self.message = message
        self.line_number = line_number
        self.source = source
        super().__init__(self._format())

    def _format(self) -> str:
        location = self.source or "<input>"
        if self.line_number is not None:
            return f"{location}:{self.line_number}: {self.message}"
        if self.source is not None:
            return f"{location}: {self.message}"
        return self.message


class EmbeddingParseError(ParseError):
    """The word-vector text file is malformed."""


class ConfigError(HitRatioError):
    """Configuration values are invalid or inconsistent."""

    exit_code = 3


class DimensionMismatchError(ConfigError):
    """Two vectors (or a vector and a repository) have different dimensions."""


class BackendMismatchError(ConfigError):
    """A repository was built with a different vectorizer than requested."""


class EmptyResultError(HitRatioError):
    """An operation produced or received nothing to work on."""

    exit_code = 4
