"""Lexers for the two script-side inputs: IAST text and Devanāgarī text.

Both feed the same pivot stream as the UAST lexer, from opposite models:
IAST consonants are bare unless a vowel follows in the text, while
Devanāgarī consonants carry the inherent a unless a virama or vowel sign
says otherwise.
"""

from dataclasses import replace

from .errors import (
    LexError,
    ORPHAN_CANDRABINDU,
    ORPHAN_VIRAMA,
    ORPHAN_VOWEL_SIGN,
    UNKNOWN_SCALAR,
)
from .folding import byte_offset, fold_iast, original_span
from .scanner import ScanError, scan
from .tables import (
    ANUSVARA_SIGN,
    CANDRABINDU_SIGN,
    DANDA,
    DEVA_CONSONANTS,
    DEVA_DIGIT_ZERO,
    DEVA_SIGNS,
    DEVA_VOWELS,
    DOUBLE_DANDA,
    VIRAMA,
    VISARGA_SIGN,
)
from .tokens import Anusvara, Consonant, Danda, Digit, Passthrough, Token, Visarga, Vowel

_DEVA_DIGIT_LAST = chr(DEVA_DIGIT_ZERO + 9)
_DEVA_DIGIT_FIRST = chr(DEVA_DIGIT_ZERO)


def lex_iast(text: str, *, lenient: bool = False) -> list[Token]:
    """Tokenise IAST text into the pivot stream.

    Input is composed and case-folded first. Units resolve by maximal
    munch; a vowel directly after a consonant attaches as its dependent
    vowel, anywhere else it is an independent letter; a consonant followed
    by another consonant, whitespace, or end of input stays bare.
    """
    folded = fold_iast(text)
    try:
        return scan(folded, uast=False, lenient=lenient)
    except ScanError as e:
        off, bad = original_span(text, e.index)
        raise LexError(off, bad or folded[e.index : e.index + e.length], e.reason) from None


def lex_devanagari(text: str, *, lenient: bool = False) -> list[Token]:
    """Tokenise Devanāgarī text into the pivot stream.

    Follows the encoding model of the script: a consonant letter carries
    the inherent a unless a vowel sign replaces it or a virama removes it.
    Candrabindu nasalises the inherent or preceding a vowel; nasalisation
    of other vowels has no romanised spelling, so strict mode rejects it.
    """
    out: list[Token] = []
    append = out.append
    open_cons: str | None = None

    def close_open() -> None:
        nonlocal open_cons
        if open_cons is not None:
            append(Consonant(open_cons))
            append(Vowel("a"))
            open_cons = None

    def fail(i: int, ch: str, reason: str) -> None:
        raise LexError(byte_offset(text, i), ch, reason)

    for i, ch in enumerate(text):
        if ch in DEVA_CONSONANTS:
            close_open()
            open_cons = DEVA_CONSONANTS[ch].iast
        elif ch in DEVA_SIGNS:
            if open_cons is None:
                if not lenient:
                    fail(i, ch, ORPHAN_VOWEL_SIGN)
                append(Passthrough(ch))
            else:
                append(Consonant(open_cons))
                append(Vowel(DEVA_SIGNS[ch].iast))
                open_cons = None
        elif ch == VIRAMA:
            if open_cons is None:
                if not lenient:
                    fail(i, ch, ORPHAN_VIRAMA)
                append(Passthrough(ch))
            else:
                append(Consonant(open_cons))  # stays bare
                open_cons = None
        elif ch in DEVA_VOWELS:
            close_open()
            append(Vowel(DEVA_VOWELS[ch].iast, independent=True))
        elif ch == ANUSVARA_SIGN:
            close_open()
            append(Anusvara())
        elif ch == VISARGA_SIGN:
            close_open()
            append(Visarga())
        elif ch == CANDRABINDU_SIGN:
            if open_cons is not None:
                append(Consonant(open_cons))
                append(Vowel("a", nasalized=True))
                open_cons = None
            elif out and type(out[-1]) is Vowel and out[-1].phoneme == "a" and not out[-1].nasalized:
                out[-1] = replace(out[-1], nasalized=True)
            elif lenient:
                append(Passthrough(ch))
            else:
                fail(i, ch, ORPHAN_CANDRABINDU)
        elif ch == DANDA or ch == DOUBLE_DANDA:
            close_open()
            append(Danda(double=ch == DOUBLE_DANDA))
        elif _DEVA_DIGIT_FIRST <= ch <= _DEVA_DIGIT_LAST:
            close_open()
            append(Digit(ord(ch) - DEVA_DIGIT_ZERO))
        elif "0" <= ch <= "9":
            close_open()
            append(Digit(int(ch)))
        elif ch.isspace():
            close_open()
            append(Passthrough(ch))
        elif lenient:
            close_open()
            append(Passthrough(ch))
        else:
            fail(i, ch, UNKNOWN_SCALAR)
    close_open()
    return out
