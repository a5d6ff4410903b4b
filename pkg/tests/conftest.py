"""Shared test helpers: a generator of random valid pivot-token streams.

"Valid" means renderable in every scheme and recoverable from each
rendering. IAST erases the dependent/independent distinction and has no
halanta, so a handful of junctions are unrepresentable there and the
generator avoids them:

* a bare consonant directly before any vowel (IAST would re-attach it);
* a bare aspirable consonant (k g c j t d p b ṭ ḍ) directly before h
  (IAST would munch the digraph);
* the vowel a directly before an independent i or u (IAST would munch
  ai/au);
* a daṇḍa directly after another daṇḍa ("." + ".." reparse greedily).

Nasalisation only ever rides on the vowel a: that is the only nasal
vowel with a romanised spelling.
"""

import random

from uast.tables import ASPIRABLE, CONSONANTS, VOWELS
from uast.tokens import Anusvara, Consonant, Danda, Digit, Passthrough, Visarga, Vowel

_CONSONANT_IDS = tuple(p.iast for p in CONSONANTS)
_VOWEL_IDS = tuple(p.iast for p in VOWELS)


def _units(rng: random.Random) -> list:
    """Produce one small token unit (a syllable, mark, or separator)."""
    kind = rng.choices(
        ("cv", "bare", "vowel", "mark", "danda", "digit", "space"),
        weights=(10, 3, 3, 2, 1, 1, 3),
    )[0]
    if kind == "cv":
        c = rng.choice(_CONSONANT_IDS)
        if rng.random() < 0.06:
            return [Consonant(c), Vowel("a", nasalized=True)]
        return [Consonant(c), Vowel(rng.choice(_VOWEL_IDS))]
    if kind == "bare":
        return [Consonant(rng.choice(_CONSONANT_IDS))]
    if kind == "vowel":
        if rng.random() < 0.06:
            return [Vowel("a", independent=True, nasalized=True)]
        return [Vowel(rng.choice(_VOWEL_IDS), independent=True)]
    if kind == "mark":
        return [Anusvara() if rng.random() < 0.5 else Visarga()]
    if kind == "danda":
        return [Danda(double=rng.random() < 0.3)]
    if kind == "digit":
        return [Digit(rng.randrange(10))]
    return [Passthrough(" ")]


def _junction_ok(prev, unit) -> bool:
    last = prev[-1]
    first = unit[0]
    if type(last) is Consonant:  # a bare consonant ended the previous unit
        if type(first) is Vowel:
            return False
        if type(first) is Consonant and last.phoneme in ASPIRABLE and first.phoneme == "h":
            return False
    if type(last) is Vowel and last.phoneme == "a" and not last.nasalized:
        if type(first) is Vowel and first.phoneme in ("i", "u"):
            return False
    if type(last) is Danda and type(first) is Danda:
        return False
    return True


def make_stream(rng: random.Random, max_len: int = 64) -> list:
    """Random valid token stream, length <= max_len."""
    target = rng.randrange(0, max_len + 1)
    stream: list = []
    prev: list | None = None
    while len(stream) < target:
        unit = _units(rng)
        if prev is not None and not _junction_ok(prev, unit):
            continue
        if len(stream) + len(unit) > max_len:
            break
        stream.extend(unit)
        prev = unit
    return stream
