"""Error types and positioned diagnostics shared by all conversion layers."""

from dataclasses import dataclass

# Diagnostic reasons, spelled exactly as they appear in CLI output.
UNKNOWN_KEY = "unknown-key"
UNTERMINATED_GROUP = "unterminated-group"
NON_ASCII_INPUT = "non-ascii-input"
UNENCODABLE_SCALAR = "unencodable-scalar"
DANGLING_HYPHEN = "dangling-hyphen"
DANGLING_BACKSLASH = "dangling-backslash"
UNKNOWN_LETTER = "unknown-letter"
UNKNOWN_SCALAR = "unknown-scalar"
ORPHAN_VOWEL_SIGN = "orphan-vowel-sign"
ORPHAN_VIRAMA = "orphan-virama"
ORPHAN_CANDRABINDU = "orphan-candrabindu"

REASONS = frozenset({
    UNKNOWN_KEY,
    UNTERMINATED_GROUP,
    NON_ASCII_INPUT,
    UNENCODABLE_SCALAR,
    DANGLING_HYPHEN,
    DANGLING_BACKSLASH,
    UNKNOWN_LETTER,
    UNKNOWN_SCALAR,
    ORPHAN_VOWEL_SIGN,
    ORPHAN_VIRAMA,
    ORPHAN_CANDRABINDU,
})


class TransliterationError(Exception):
    """Base class for every error raised by this package."""


class UnknownKeyError(TransliterationError, KeyError):
    """ASCII replacement key has no entry in the diacritic table."""


class UnmappedCodepointError(TransliterationError, KeyError):
    """Code point has no ASCII replacement in the diacritic table."""


class PhonemeNotFoundError(TransliterationError, KeyError):
    """No phoneme in the inventory carries the requested spelling."""


class LexError(TransliterationError, ValueError):
    """A positioned scan failure: byte offset, offending slice, reason.

    Offsets index the original (pre-folding) input line in UTF-8 bytes.
    """

    def __init__(self, offset: int, slice_: str, reason: str):
        super().__init__(f"{offset}: {reason}: {slice_}")
        self.offset = offset
        self.slice = slice_
        self.reason = reason


class MalformedStreamError(TransliterationError, ValueError):
    """Token stream violates well-formedness (e.g. dangling dependent vowel)."""


@dataclass(frozen=True)
class ConversionError:
    """One line-level conversion failure, ordered by input position."""

    line: int      # 1-based line number
    offset: int    # 0-based byte offset within the line
    slice: str
    reason: str

    def __str__(self) -> str:
        return f"{self.line}:{self.offset + 1}: {self.reason}: {self.slice}"


class ConversionFailed(TransliterationError, ValueError):
    """Strict-mode conversion hit one or more line errors."""

    def __init__(self, errors: list[ConversionError]):
        super().__init__("; ".join(str(e) for e in errors))
        self.errors = list(errors)
