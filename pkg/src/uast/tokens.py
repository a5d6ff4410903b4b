"""Scheme-neutral phoneme tokens: the pivot every conversion passes through.

Tokens follow the language model, not the encoding model: consonants carry
no vowel of their own, and every vowel (including the inherent a) is its
own token. Only the Devanāgarī lexer and renderer translate between this
model and the script's inherent-a convention.
"""

from dataclasses import dataclass


class Token:
    """Base class for pivot tokens."""

    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Consonant(Token):
    phoneme: str  # inventory spelling, e.g. "k", "kh", "ṣ"


@dataclass(frozen=True, slots=True)
class Vowel(Token):
    phoneme: str
    independent: bool = False  # full letter rather than a vowel sign
    nasalized: bool = False    # carries candrabindu


@dataclass(frozen=True, slots=True)
class Anusvara(Token):
    pass


@dataclass(frozen=True, slots=True)
class Visarga(Token):
    pass


@dataclass(frozen=True, slots=True)
class Danda(Token):
    double: bool = False


@dataclass(frozen=True, slots=True)
class Digit(Token):
    value: int  # 0-9


@dataclass(frozen=True, slots=True)
class Passthrough(Token):
    """Whitespace, and in lenient mode any scalar carried through verbatim."""

    char: str
