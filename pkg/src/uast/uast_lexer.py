"""Lexer for UAST text: pure-ASCII typesetting with explicit structure marks.

UAST extends the /key/ replacement syntax with three rules that make the
romanisation parse deterministically: a consonant with no explicit vowel
carries the inherent a (``kml`` and ``kamala`` read the same), HYPHEN-MINUS
after a consonant is an explicit halanta (``k-`` is a vowel-less k), and
REVERSE SOLIDUS ends the current unit, marking a finished vowel as an
independent letter. FULL STOP is the daṇḍa.
"""

from .errors import LexError, NON_ASCII_INPUT
from .folding import byte_offset
from .scanner import ScanError, scan
from .tokens import Token
from .uast_io import decode_offset_map


def lex_uast(text: str, *, lenient: bool = False) -> list[Token]:
    """Tokenise UAST text into the pivot stream.

    The input is case-folded before scanning. Strict mode raises LexError
    at the first invalid byte; lenient mode passes offending slices
    through as Passthrough tokens.
    """
    folded = text.lower()
    if not folded.isascii() and not lenient:
        for idx, ch in enumerate(text):
            if not ch.isascii():
                raise LexError(byte_offset(text, idx), ch, NON_ASCII_INPUT)
    if "/" in folded:
        letters, offsets = decode_offset_map(folded, lenient=lenient)
    else:
        letters, offsets = folded, None
    try:
        return scan(letters, uast=True, lenient=lenient)
    except ScanError as e:
        if offsets is None:
            raise LexError(e.index, letters[e.index : e.index + e.length], e.reason) from None
        start = offsets[e.index]
        after = e.index + e.length
        end = offsets[after] if after < len(offsets) else len(folded)
        raise LexError(start, folded[start:end], e.reason) from None
