"""Maximal-munch scanner over resolved letters, shared by the romanised lexers.

The UAST and IAST readings differ in exactly two ways: UAST gives a
consonant the inherent vowel when nothing else claims it and understands
the ``-`` and ``\\`` marks, while IAST leaves such consonants bare. The
munch itself (two-letter units before one-letter units, aspirates joining
a following plain h, the ai/au digraphs) is identical, so one scanner
serves both with a flag.

Works in character index space of the (already folded, already
group-resolved) letter string; callers translate indices back to byte
offsets in the original input.
"""

from .errors import (
    DANGLING_BACKSLASH,
    DANGLING_HYPHEN,
    UNKNOWN_LETTER,
    UNKNOWN_SCALAR,
)
from .tables import ASPIRABLE, DANDA, DOUBLE_DANDA, DEVA_DIGIT_ZERO
from .tokens import Anusvara, Consonant, Danda, Digit, Passthrough, Token, Visarga, Vowel

_VOWEL_CHARS = frozenset("aiueo") | frozenset("āīūṛṝḷḹã")
_CONSONANT_CHARS = frozenset("kgcjtdpbmyrlvshn") | frozenset("ṅñṭḍṇśṣḻ")
_DEVA_DIGIT_LAST = chr(DEVA_DIGIT_ZERO + 9)
_DEVA_DIGIT_FIRST = chr(DEVA_DIGIT_ZERO)


class ScanError(Exception):
    """Scan failure at a character index; callers map it to a LexError."""

    def __init__(self, index: int, length: int, reason: str):
        super().__init__(f"{index}: {reason}")
        self.index = index
        self.length = length
        self.reason = reason


def scan(letters: str, *, uast: bool, lenient: bool = False) -> list[Token]:
    """Tokenise a folded letter string into the pivot stream."""
    out: list[Token] = []
    append = out.append
    open_cons: str | None = None  # consonant munched, vowel decision pending
    prev_letter = False           # a letter unit just finished (for stray '\')
    i = 0
    n = len(letters)

    def close_open() -> None:
        # UAST: the inherent vowel applies; IAST: the consonant stays bare.
        nonlocal open_cons
        if open_cons is not None:
            append(Consonant(open_cons))
            if uast:
                append(Vowel("a"))
            open_cons = None

    while i < n:
        ch = letters[i]
        if ch in _VOWEL_CHARS:
            nasal = ch == "ã"
            v = "a" if nasal else ch
            size = 1
            sealed = False  # a boundary consumed inside the munch ends the unit
            if ch == "a" and i + 1 < n:
                nxt = letters[i + 1]
                if uast and nxt == "\\":
                    size = 2
                    sealed = True
                elif nxt in "iu":
                    v = "a" + nxt
                    size = 2
            j = i + size
            if uast and not sealed and j < n and letters[j] == "\\":
                # Explicit independence mark on the finished vowel unit. A
                # consonant waiting for this vowel falls back to the
                # inherent a, since an independent vowel cannot attach.
                if open_cons is not None:
                    append(Consonant(open_cons))
                    append(Vowel("a"))
                    open_cons = None
                append(Vowel(v, independent=True, nasalized=nasal))
                i = j + 1
            elif open_cons is not None:
                append(Consonant(open_cons))
                append(Vowel(v, nasalized=nasal))
                open_cons = None
                i = j
            else:
                append(Vowel(v, independent=True, nasalized=nasal))
                i = j
            prev_letter = True
        elif ch in _CONSONANT_CHARS:
            close_open()
            i += 1
            if ch in ASPIRABLE and i < n:
                nxt = letters[i]
                if nxt == "h":
                    ch += "h"
                    i += 1
                elif uast and nxt == "\\":
                    # Boundary inside the munch: the unit ends at the
                    # letters read so far and no digraph forms.
                    append(Consonant(ch))
                    append(Vowel("a"))
                    i += 1
                    prev_letter = True
                    continue
            open_cons = ch
            prev_letter = True
        elif ch == "ṃ" or ch == "ḥ":
            close_open()
            append(Anusvara() if ch == "ṃ" else Visarga())
            i += 1
            prev_letter = True
        elif ch == "-":
            if uast and open_cons is not None:
                append(Consonant(open_cons))  # explicit halanta, no vowel
                open_cons = None
                i += 1
                prev_letter = True
            elif lenient:
                close_open()
                append(Passthrough(ch))
                i += 1
                prev_letter = False
            else:
                raise ScanError(i, 1, DANGLING_HYPHEN if uast else UNKNOWN_SCALAR)
        elif ch == "\\":
            if not uast:
                if lenient:
                    close_open()
                    append(Passthrough(ch))
                    i += 1
                    prev_letter = False
                else:
                    raise ScanError(i, 1, UNKNOWN_SCALAR)
            elif open_cons is not None:
                # Pure boundary after a consonant: blocks digraph
                # formation, the inherent vowel still applies.
                close_open()
                i += 1
                prev_letter = True
            elif prev_letter:
                i += 1  # stray boundary after a finished unit: no effect
            elif lenient:
                append(Passthrough(ch))
                i += 1
                prev_letter = False
            else:
                raise ScanError(i, 1, DANGLING_BACKSLASH)
        elif ch == ".":
            close_open()
            if i + 1 < n and letters[i + 1] == ".":
                append(Danda(double=True))
                i += 2
            else:
                append(Danda())
                i += 1
            prev_letter = False
        elif "0" <= ch <= "9":
            close_open()
            append(Digit(int(ch)))
            i += 1
            prev_letter = False
        elif ch == DANDA or ch == DOUBLE_DANDA:
            close_open()
            append(Danda(double=ch == DOUBLE_DANDA))
            i += 1
            prev_letter = False
        elif _DEVA_DIGIT_FIRST <= ch <= _DEVA_DIGIT_LAST:
            close_open()
            append(Digit(ord(ch) - DEVA_DIGIT_ZERO))
            i += 1
            prev_letter = False
        elif ch.isspace():
            close_open()
            append(Passthrough(ch))
            i += 1
            prev_letter = False
        elif lenient:
            close_open()
            append(Passthrough(ch))
            i += 1
            prev_letter = False
        else:
            reason = UNKNOWN_LETTER if ch.isascii() and ch.isalpha() else UNKNOWN_SCALAR
            raise ScanError(i, 1, reason)
    close_open()
    return out
