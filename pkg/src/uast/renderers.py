"""Serialisers from the pivot stream into each target scheme.

render_uast emits canonical UAST: every vowel explicit (``kamala``, never
``kml``), every bare consonant closed with ``-``, diacritic letters as
/key/ groups, and independent vowels after a letter marked with a
trailing ``\\``. Lexing the result reproduces the input tokens.
"""

import unicodedata

from .errors import MalformedStreamError
from .tables import (
    ANUSVARA_SIGN,
    ASPIRABLE,
    CANDRABINDU_SIGN,
    CODEPOINT_TO_ASCII,
    DANDA,
    DEVA_DIGIT_ZERO,
    DOUBLE_DANDA,
    PHONEMES,
    VIRAMA,
    VISARGA_SIGN,
)
from .tokens import Anusvara, Consonant, Danda, Digit, Passthrough, Token, Visarga, Vowel

# ASCII form of every inventory spelling, diacritic letters as groups
# ("ṭh" -> "/t/h", "ã" -> "/au/").
_UAST_SPELLING = {
    spelling: "".join(
        ch if ch.isascii() else f"/{CODEPOINT_TO_ASCII[ord(ch)]}/" for ch in spelling
    )
    for spelling in PHONEMES
}


def render_iast(tokens: list[Token]) -> str:
    """Concatenate IAST spellings; the dependent/independent split is erased."""
    parts: list[str] = []
    append = parts.append
    recompose = False
    for t in tokens:
        tt = type(t)
        if tt is Consonant:
            append(t.phoneme)
        elif tt is Vowel:
            append(t.phoneme)
            if t.nasalized:
                append("̃")  # composes to ã on the inherent vowel
                recompose = True
        elif tt is Anusvara:
            append("ṃ")
        elif tt is Visarga:
            append("ḥ")
        elif tt is Danda:
            append(".." if t.double else ".")
        elif tt is Digit:
            append(str(t.value))
        elif tt is Passthrough:
            append(t.char)
        else:
            raise MalformedStreamError(f"unknown token {t!r}")
    text = "".join(parts)
    return unicodedata.normalize("NFC", text) if recompose else text


def render_devanagari(tokens: list[Token]) -> str:
    """Write the stream in Devanāgarī scalars.

    A consonant not followed by its dependent vowel gets an explicit
    virama, also at word end. Plain scalars only; conjunct shaping is the
    font's job.
    """
    toks = list(tokens)
    parts: list[str] = []
    append = parts.append
    for idx, t in enumerate(toks):
        tt = type(t)
        if tt is Consonant:
            append(PHONEMES[t.phoneme].deva)
            nxt = toks[idx + 1] if idx + 1 < len(toks) else None
            if not (type(nxt) is Vowel and not nxt.independent):
                append(VIRAMA)
        elif tt is Vowel:
            p = PHONEMES[t.phoneme]
            if t.independent:
                append(p.deva)
            else:
                if idx == 0 or type(toks[idx - 1]) is not Consonant:
                    raise MalformedStreamError(
                        f"dependent vowel {t.phoneme!r} with no preceding consonant"
                    )
                if p.deva_sign is not None:
                    append(p.deva_sign)  # the inherent a has no sign
            if t.nasalized:
                append(CANDRABINDU_SIGN)
        elif tt is Anusvara:
            append(ANUSVARA_SIGN)
        elif tt is Visarga:
            append(VISARGA_SIGN)
        elif tt is Danda:
            append(DOUBLE_DANDA if t.double else DANDA)
        elif tt is Digit:
            append(chr(DEVA_DIGIT_ZERO + t.value))
        elif tt is Passthrough:
            append(t.char)
        else:
            raise MalformedStreamError(f"unknown token {t!r}")
    return "".join(parts)


def _droppable_inherent_a(toks: list[Token], idx: int) -> bool:
    """True when the dependent a at ``idx`` can be left implicit.

    Safe exactly when re-lexing restores it: the following token must not
    be a vowel (it would claim the consonant, or seal the unit) and must
    not fuse an aspirate digraph with the consonant before the a.
    """
    nxt = toks[idx + 1] if idx + 1 < len(toks) else None
    if type(nxt) is Vowel:
        return False
    if (
        type(nxt) is Consonant
        and nxt.phoneme == "h"
        and type(toks[idx - 1]) is Consonant
        and toks[idx - 1].phoneme in ASPIRABLE
    ):
        return False
    return True


def render_uast(tokens: list[Token], *, compact: bool = False) -> str:
    """Write UAST; lex_uast on the result reproduces the tokens.

    Canonical output spells every vowel, the inherent a included. With
    ``compact`` the redundant a is left implicit where that cannot change
    the reading (``kamala`` becomes ``kml``).
    """
    toks = list(tokens)
    parts: list[str] = []
    append = parts.append
    last_char = ""
    prev_letter = False  # previous token produced letters (consonant/vowel/mark)
    for idx, t in enumerate(toks):
        tt = type(t)
        if tt is Consonant:
            sp = _UAST_SPELLING[t.phoneme]
            nxt = toks[idx + 1] if idx + 1 < len(toks) else None
            if type(nxt) is Vowel and not nxt.independent:
                append(sp)
                last_char = sp[-1]
            else:
                append(sp + "-")
                last_char = "-"
            prev_letter = True
        elif tt is Vowel:
            if (
                compact
                and not t.independent
                and not t.nasalized
                and t.phoneme == "a"
                and idx > 0
                and type(toks[idx - 1]) is Consonant
                and _droppable_inherent_a(toks, idx)
            ):
                prev_letter = True
                continue
            if t.nasalized:
                if t.phoneme != "a":
                    raise MalformedStreamError(
                        f"nasalised {t.phoneme!r} has no romanised spelling"
                    )
                sp = "/au/"
            else:
                sp = _UAST_SPELLING[t.phoneme]
            if t.independent:
                if last_char == "a" and sp[0] in "iu":
                    append("\\")  # keep the letters from munching into ai/au
                append(sp)
                if prev_letter:
                    append("\\")
                    last_char = "\\"
                else:
                    last_char = sp[-1]
            else:
                append(sp)
                last_char = sp[-1]
            prev_letter = True
        elif tt is Anusvara:
            append("/m/")
            last_char = "/"
            prev_letter = True
        elif tt is Visarga:
            append("/h/")
            last_char = "/"
            prev_letter = True
        elif tt is Danda:
            append(".." if t.double else ".")
            last_char = "."
            prev_letter = False
        elif tt is Digit:
            append(str(t.value))
            last_char = parts[-1][-1]
            prev_letter = False
        elif tt is Passthrough:
            append(t.char)
            last_char = t.char
            prev_letter = False
        else:
            raise MalformedStreamError(f"unknown token {t!r}")
    return "".join(parts)
