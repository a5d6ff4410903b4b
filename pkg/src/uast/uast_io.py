"""Bidirectional ASCII/IAST codec: diacritic letters written as /key/ groups.

A SOLIDUS pair encloses one replacement key from the chart; everything else
is copied verbatim. Group pairing is strictly sequential left to right, so
in ``k/r//sl/`` the groups are ``/r/`` and ``/sl/`` and the adjacent
solidi in the middle never form an empty group.
"""

from .errors import (
    LexError,
    NON_ASCII_INPUT,
    UNENCODABLE_SCALAR,
    UNKNOWN_KEY,
    UNTERMINATED_GROUP,
)
from .folding import byte_offset, fold_iast, original_span
from .tables import ASCII_TO_CODEPOINT, CODEPOINT_TO_ASCII

_ENCODE_TABLE = {cp: f"/{key}/" for key, cp in ASCII_TO_CODEPOINT.items()}


def _decode(folded: str, lenient: bool, want_map: bool):
    """Replace /key/ groups in folded text. Returns (decoded, offset map).

    The offset map gives, per decoded character, the character offset of
    its source in the folded input; built only when ``want_map`` is set.
    """
    parts = folded.split("/")
    unterminated = len(parts) % 2 == 0
    last = len(parts) - 1
    out: list[str] = []
    offsets: list[int] | None = [] if want_map else None
    pos = 0  # offset of the current part within folded
    for i, part in enumerate(parts):
        if i % 2 == 0:
            out.append(part)
            if offsets is not None:
                offsets.extend(range(pos, pos + len(part)))
        elif i == last and unterminated:
            if not lenient:
                raise LexError(pos - 1, folded[pos - 1 :], UNTERMINATED_GROUP)
            out.append("/" + part)
            if offsets is not None:
                offsets.extend(range(pos - 1, pos + len(part)))
        else:
            cp = ASCII_TO_CODEPOINT.get(part)
            if cp is not None:
                out.append(chr(cp))
                if offsets is not None:
                    offsets.append(pos - 1)
            elif not lenient:
                raise LexError(pos - 1, f"/{part}/", UNKNOWN_KEY)
            else:
                out.append(f"/{part}/")
                if offsets is not None:
                    offsets.extend(range(pos - 1, pos + len(part) + 1))
        pos += len(part) + 1
    return "".join(out), offsets


def decode_uast_io(text: str, *, lenient: bool = False) -> str:
    """Expand every /key/ group into its precomposed letter.

    Input is case-folded before scanning; all other ASCII characters pass
    through as-is. Strict mode rejects non-ASCII input and unknown or
    unterminated groups, with byte offsets into the original text.
    """
    folded = text.lower()
    if not folded.isascii() and not lenient:
        for i, ch in enumerate(text):
            if not ch.isascii():
                raise LexError(byte_offset(text, i), ch, NON_ASCII_INPUT)
    if "/" not in folded:
        return folded
    decoded, _ = _decode(folded, lenient, want_map=False)
    return decoded


def decode_offset_map(text: str, *, lenient: bool = False) -> tuple[str, list[int]]:
    """Decode and also return per-character source offsets (error path)."""
    folded = text.lower()
    return _decode(folded, lenient, want_map=True)


def encode_uast_io(text: str, *, lenient: bool = False) -> str:
    """Write composed romanised text in pure ASCII, diacritics as /key/.

    The input is composed and case-folded first, so ``a`` + combining
    macron and a capital Ā both come out as ``/a/``. Strict mode rejects
    non-ASCII scalars that are not in the chart.
    """
    folded = fold_iast(text)
    out = folded.translate(_ENCODE_TABLE)
    if out.isascii() or lenient:
        return out
    for i, ch in enumerate(folded):
        if not ch.isascii() and ord(ch) not in CODEPOINT_TO_ASCII:
            off, bad = original_span(text, i)
            raise LexError(off, bad, UNENCODABLE_SCALAR)
    raise AssertionError("non-ASCII output with no unencodable scalar")
