"""Normative static data: the diacritic replacement map and the phoneme inventory.

Everything downstream (codec, lexers, renderers) is driven by these tables.
They are immutable after import and safe to share across threads.
"""

from dataclasses import dataclass

from .errors import PhonemeNotFoundError, UnknownKeyError, UnmappedCodepointError

VIRAMA = "्"
CANDRABINDU_SIGN = "ँ"
ANUSVARA_SIGN = "ं"
VISARGA_SIGN = "ः"
DANDA = "।"
DOUBLE_DANDA = "॥"
DEVA_DIGIT_ZERO = 0x0966


@dataclass(frozen=True)
class Phoneme:
    """One sound of the inventory with its spelling in each script.

    ``iast`` is unique across the inventory and doubles as the phoneme id.
    ``deva`` holds the independent letter for vowels, the base letter for
    consonants, and the bare sign for marks. ``deva_sign`` is the dependent
    (matra) form; ``None`` for the inherent vowel a and for non-vowels.
    """

    iast: str
    kind: str  # vowel | consonant | anusvara | visarga | candrabindu | punctuation | digit
    deva: str
    deva_sign: str | None = None


@dataclass(frozen=True)
class DiacriticMapping:
    """One row of the replacement chart: /ascii_key/ <-> precomposed letter."""

    ascii_key: str
    codepoint: int
    phoneme: str  # iast spelling of the phoneme this letter belongs to


# ASCII replacement keys for the IAST diacritic letters, in chart order.
# The third column repeats chr(codepoint) so the table is eyeball-checkable;
# module import verifies the redundancy.
_DIACRITIC_ROWS = (
    ("a",  0x0101, "ā"),   # LATIN SMALL LETTER A WITH MACRON
    ("au", 0x00E3, "ã"),   # LATIN SMALL LETTER A WITH TILDE
    ("i",  0x012B, "ī"),   # LATIN SMALL LETTER I WITH MACRON
    ("u",  0x016B, "ū"),   # LATIN SMALL LETTER U WITH MACRON
    ("r",  0x1E5B, "ṛ"),   # LATIN SMALL LETTER R WITH DOT BELOW
    ("ru", 0x1E5D, "ṝ"),   # LATIN SMALL LETTER R WITH DOT BELOW AND MACRON
    ("l",  0x1E37, "ḷ"),   # LATIN SMALL LETTER L WITH DOT BELOW
    ("lu", 0x1E39, "ḹ"),   # LATIN SMALL LETTER L WITH DOT BELOW AND MACRON
    ("ll", 0x1E3B, "ḻ"),   # LATIN SMALL LETTER L WITH LINE BELOW
    ("t",  0x1E6D, "ṭ"),   # LATIN SMALL LETTER T WITH DOT BELOW
    ("d",  0x1E0D, "ḍ"),   # LATIN SMALL LETTER D WITH DOT BELOW
    ("n",  0x00F1, "ñ"),   # LATIN SMALL LETTER N WITH TILDE
    ("nu", 0x1E45, "ṅ"),   # LATIN SMALL LETTER N WITH DOT ABOVE
    ("nl", 0x1E47, "ṇ"),   # LATIN SMALL LETTER N WITH DOT BELOW
    ("su", 0x015B, "ś"),   # LATIN SMALL LETTER S WITH ACUTE
    ("sl", 0x1E63, "ṣ"),   # LATIN SMALL LETTER S WITH DOT BELOW
    ("m",  0x1E43, "ṃ"),   # LATIN SMALL LETTER M WITH DOT BELOW
    ("h",  0x1E25, "ḥ"),   # LATIN SMALL LETTER H WITH DOT BELOW
)

# Vowels: iast, independent letter, dependent sign (None for inherent a).
_VOWEL_ROWS = (
    ("a",  "अ", None),
    ("ā",  "आ", "ा"),
    ("i",  "इ", "ि"),
    ("ī",  "ई", "ी"),
    ("u",  "उ", "ु"),
    ("ū",  "ऊ", "ू"),
    ("ṛ",  "ऋ", "ृ"),
    ("ṝ",  "ॠ", "ॄ"),
    ("ḷ",  "ऌ", "ॢ"),
    ("ḹ",  "ॡ", "ॣ"),
    ("e",  "ए", "े"),
    ("ai", "ऐ", "ै"),
    ("o",  "ओ", "ो"),
    ("au", "औ", "ौ"),
)

_CONSONANT_ROWS = (
    ("k", "क"), ("kh", "ख"), ("g", "ग"), ("gh", "घ"), ("ṅ", "ङ"),
    ("c", "च"), ("ch", "छ"), ("j", "ज"), ("jh", "झ"), ("ñ", "ञ"),
    ("ṭ", "ट"), ("ṭh", "ठ"), ("ḍ", "ड"), ("ḍh", "ढ"), ("ṇ", "ण"),
    ("t", "त"), ("th", "थ"), ("d", "द"), ("dh", "ध"), ("n", "न"),
    ("p", "प"), ("ph", "फ"), ("b", "ब"), ("bh", "भ"), ("m", "म"),
    ("y", "य"), ("r", "र"), ("l", "ल"), ("v", "व"),
    ("ś", "श"), ("ṣ", "ष"), ("s", "स"), ("h", "ह"),
    ("ḻ", "ळ"),
)

VOWELS = tuple(Phoneme(i, "vowel", d, s) for i, d, s in _VOWEL_ROWS)
CONSONANTS = tuple(Phoneme(i, "consonant", d) for i, d in _CONSONANT_ROWS)
MARKS = (
    Phoneme("ṃ", "anusvara", ANUSVARA_SIGN),
    Phoneme("ḥ", "visarga", VISARGA_SIGN),
    Phoneme("ã", "candrabindu", CANDRABINDU_SIGN),
)
PUNCTUATION = (
    Phoneme(".", "punctuation", DANDA),
    Phoneme("..", "punctuation", DOUBLE_DANDA),
)
DIGITS = tuple(
    Phoneme(str(n), "digit", chr(DEVA_DIGIT_ZERO + n)) for n in range(10)
)

PHONEMES: dict[str, Phoneme] = {
    p.iast: p for p in VOWELS + CONSONANTS + MARKS + PUNCTUATION + DIGITS
}

DIACRITIC_MAPPINGS = tuple(
    DiacriticMapping(key, cp, chr(cp)) for key, cp, _ in _DIACRITIC_ROWS
)
ASCII_TO_CODEPOINT: dict[str, int] = {m.ascii_key: m.codepoint for m in DIACRITIC_MAPPINGS}
CODEPOINT_TO_ASCII: dict[int, str] = {m.codepoint: m.ascii_key for m in DIACRITIC_MAPPINGS}

# Derived lookup structures for the lexers and renderers.
VOWEL_SPELLINGS = frozenset(p.iast for p in VOWELS) | {"ã"}
CONSONANT_SPELLINGS = frozenset(p.iast for p in CONSONANTS)
# Consonants whose spelling extends with a following plain h (kh ... ḍh).
ASPIRABLE = frozenset(c[:-1] for c in CONSONANT_SPELLINGS if len(c) == 2 and c[1] == "h")
VOWEL_DIGRAPHS = frozenset({"ai", "au"})

DEVA_VOWELS = {p.deva: p for p in VOWELS}
DEVA_SIGNS = {p.deva_sign: p for p in VOWELS if p.deva_sign is not None}
DEVA_CONSONANTS = {p.deva: p for p in CONSONANTS}


def ascii_to_codepoint(key: str) -> int:
    """Return the code point replaced by /key/, or raise UnknownKeyError."""
    try:
        return ASCII_TO_CODEPOINT[key]
    except KeyError:
        raise UnknownKeyError(key) from None


def codepoint_to_ascii(cp: int) -> str:
    """Inverse of ascii_to_codepoint on the chart's 18-element domain."""
    try:
        return CODEPOINT_TO_ASCII[cp]
    except KeyError:
        raise UnmappedCodepointError(f"U+{cp:04X}") from None


def lookup_phoneme_by_iast(spelling: str) -> Phoneme:
    """Return the unique phoneme spelled ``spelling`` in IAST."""
    try:
        return PHONEMES[spelling]
    except KeyError:
        raise PhonemeNotFoundError(spelling) from None


def dump_mapping_tsv() -> str:
    """Render the replacement chart as TSV for documentation checks.

    Columns: ascii_key, codepoint (uppercase hex, no prefix), iast,
    devanagari. One row per chart entry, chart order, trailing newline.
    """
    lines = []
    for m in DIACRITIC_MAPPINGS:
        p = PHONEMES[m.phoneme] if m.phoneme in PHONEMES else None
        if m.phoneme == "ã":
            deva = "अ" + CANDRABINDU_SIGN  # nasalised a, shown independent
        else:
            deva = p.deva if p else ""
        lines.append(f"{m.ascii_key}\t{m.codepoint:04X}\t{m.phoneme}\t{deva}")
    return "\n".join(lines) + "\n"


def _check_tables() -> None:
    # The chart must be a bijection and the literal column must agree with
    # the code point column.
    assert len(_DIACRITIC_ROWS) == 18
    assert len(ASCII_TO_CODEPOINT) == 18
    assert len(CODEPOINT_TO_ASCII) == 18
    for key, cp, literal in _DIACRITIC_ROWS:
        assert chr(cp) == literal, f"{key}: chr(U+{cp:04X}) != {literal!r}"
        assert 1 <= len(key) <= 2 and key.isascii() and key.islower()
    assert len(VOWELS) == 14 and len(CONSONANTS) == 34
    spellings = [p.iast for p in VOWELS + CONSONANTS + MARKS + PUNCTUATION + DIGITS]
    assert len(spellings) == len(set(spellings))
    for m in DIACRITIC_MAPPINGS:
        assert m.phoneme in PHONEMES


_check_tables()
