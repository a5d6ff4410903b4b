"""Lossless, linear-time transliteration between UAST, UAST-IO, IAST, and Devanāgarī.

Every conversion passes through a scheme-neutral phoneme-token stream, so
all source/target pairs compose from the same lexers and renderers::

    >>> from uast import convert
    >>> convert("r/a/ma/h/", "uast-io", "iast")
    'rāmaḥ'
    >>> convert("kml", "uast", "devanagari")
    'कमल'
"""

from .errors import (
    ConversionError,
    ConversionFailed,
    LexError,
    MalformedStreamError,
    PhonemeNotFoundError,
    TransliterationError,
    UnknownKeyError,
    UnmappedCodepointError,
)
from .pipeline import Scheme, SCHEME_NAMES, convert, convert_line, iter_convert
from .renderers import render_devanagari, render_iast, render_uast
from .script_lexers import lex_devanagari, lex_iast
from .tables import (
    DIACRITIC_MAPPINGS,
    PHONEMES,
    Phoneme,
    ascii_to_codepoint,
    codepoint_to_ascii,
    dump_mapping_tsv,
    lookup_phoneme_by_iast,
)
from .tokens import Anusvara, Consonant, Danda, Digit, Passthrough, Token, Visarga, Vowel
from .uast_io import decode_uast_io, encode_uast_io
from .uast_lexer import lex_uast

__version__ = "0.1.0"

__all__ = [
    "Anusvara",
    "Consonant",
    "ConversionError",
    "ConversionFailed",
    "Danda",
    "DIACRITIC_MAPPINGS",
    "Digit",
    "LexError",
    "MalformedStreamError",
    "Passthrough",
    "Phoneme",
    "PHONEMES",
    "PhonemeNotFoundError",
    "Scheme",
    "SCHEME_NAMES",
    "Token",
    "TransliterationError",
    "UnknownKeyError",
    "UnmappedCodepointError",
    "Visarga",
    "Vowel",
    "ascii_to_codepoint",
    "codepoint_to_ascii",
    "convert",
    "convert_line",
    "decode_uast_io",
    "dump_mapping_tsv",
    "encode_uast_io",
    "iter_convert",
    "lex_devanagari",
    "lex_iast",
    "lex_uast",
    "lookup_phoneme_by_iast",
    "render_devanagari",
    "render_iast",
    "render_uast",
]
