"""Public conversion API: any scheme to any scheme through the pivot stream.

Conversion is line-by-line and streaming: memory stays bounded by the
longest line, never by total input size. Same-scheme conversion
canonicalises (decomposed IAST is recomposed, compact UAST becomes the
explicit-a form) rather than echoing bytes.
"""

from collections.abc import Iterable, Iterator
from enum import Enum

from .errors import ConversionError, ConversionFailed, LexError
from .folding import fold_iast
from .renderers import render_devanagari, render_iast, render_uast
from .scanner import ScanError, scan
from .script_lexers import lex_devanagari, lex_iast
from .tables import CONSONANTS, MARKS, VOWELS
from .tokens import Token
from .uast_io import decode_offset_map, decode_uast_io, encode_uast_io
from .uast_lexer import lex_uast


class Scheme(str, Enum):
    UAST = "uast"
    UAST_IO = "uast-io"
    IAST = "iast"
    DEVANAGARI = "devanagari"

    @classmethod
    def coerce(cls, value: "Scheme | str") -> "Scheme":
        if isinstance(value, Scheme):
            return value
        try:
            return cls(str(value).replace("_", "-"))
        except ValueError:
            raise ValueError(f"unknown scheme: {value!r}") from None


SCHEME_NAMES = tuple(s.value for s in Scheme)

# Folded romanised text made only of these scalars is already canonical:
# lexing and re-rendering it in IAST is the identity. Lets the romanised
# conversions skip the pivot on clean input.
_IAST_STABLE = (
    frozenset("".join(p.iast for p in VOWELS + CONSONANTS + MARKS))
    | frozenset("ã0123456789.")
    | frozenset(" \t\r\v\f")
)


def _canonical_romanised(folded: str) -> bool:
    return not (set(folded) - _IAST_STABLE)


def _lex_decoded(decoded: str, original: str, lenient: bool) -> list[Token]:
    """IAST-lex the output of the /key/ codec, mapping errors back."""
    try:
        return scan(decoded, uast=False, lenient=lenient)
    except ScanError as e:
        folded = original.lower()
        _, offsets = decode_offset_map(original, lenient=lenient)
        start = offsets[e.index] if e.index < len(offsets) else len(folded)
        after = e.index + e.length
        end = offsets[after] if after < len(offsets) else len(folded)
        raise LexError(start, folded[start:end], e.reason) from None


def convert_line(
    line: str, src: "Scheme | str", dst: "Scheme | str", *, lenient: bool = False
) -> str:
    """Convert one newline-free line; raises LexError on strict failure."""
    src = Scheme.coerce(src)
    dst = Scheme.coerce(dst)
    romanised_dst = dst is Scheme.IAST or dst is Scheme.UAST_IO
    if src is Scheme.UAST_IO:
        decoded = decode_uast_io(line, lenient=lenient)
        if romanised_dst and _canonical_romanised(decoded):
            return decoded if dst is Scheme.IAST else encode_uast_io(decoded, lenient=lenient)
        tokens = _lex_decoded(decoded, line, lenient)
    elif src is Scheme.IAST:
        if romanised_dst:
            folded = fold_iast(line)
            if _canonical_romanised(folded):
                return folded if dst is Scheme.IAST else encode_uast_io(folded, lenient=lenient)
        tokens = lex_iast(line, lenient=lenient)
    elif src is Scheme.UAST:
        tokens = lex_uast(line, lenient=lenient)
    else:
        tokens = lex_devanagari(line, lenient=lenient)
    if dst is Scheme.IAST:
        return render_iast(tokens)
    if dst is Scheme.UAST:
        return render_uast(tokens)
    if dst is Scheme.DEVANAGARI:
        return render_devanagari(tokens)
    return encode_uast_io(render_iast(tokens), lenient=lenient)


def iter_convert(
    lines: Iterable[str],
    src: "Scheme | str",
    dst: "Scheme | str",
    *,
    lenient: bool = False,
) -> Iterator[tuple[str | None, ConversionError | None]]:
    """Convert lines one at a time, yielding (output, error) per line.

    In strict mode the first error wins for its line: the line produces no
    output and conversion continues with the next line. Lenient mode never
    yields errors.
    """
    src = Scheme.coerce(src)
    dst = Scheme.coerce(dst)
    for line_no, line in enumerate(lines, 1):
        try:
            yield convert_line(line, src, dst, lenient=lenient), None
        except LexError as e:
            yield None, ConversionError(line_no, e.offset, e.slice, e.reason)


def convert(
    text: str, src: "Scheme | str", dst: "Scheme | str", *, lenient: bool = False
) -> str:
    """Convert whole text between schemes; newlines always pass through.

    Strict mode raises ConversionFailed carrying every line error, in
    input order.
    """
    lines = text.split("\n")
    outputs: list[str] = []
    errors: list[ConversionError] = []
    for out, err in iter_convert(lines, src, dst, lenient=lenient):
        if err is not None:
            errors.append(err)
            outputs.append("")
        else:
            outputs.append(out or "")
    if errors:
        raise ConversionFailed(errors)
    return "\n".join(outputs)
