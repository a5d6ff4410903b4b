import random

import pytest

from uast.errors import LexError
from uast.tables import CONSONANTS
from uast.tokens import Anusvara, Consonant, Danda, Digit, Passthrough, Visarga, Vowel
from uast.uast_lexer import lex_uast

C = Consonant
V = Vowel


def test_kamala():
    assert lex_uast("kamala") == [C("k"), V("a"), C("m"), V("a"), C("l"), V("a")]


def test_kml_means_the_same_as_kamala():
    assert lex_uast("kml") == lex_uast("kamala")


def test_explicit_halanta_suppresses_the_vowel():
    assert lex_uast("k-") == [C("k")]
    assert lex_uast("s-m/r/ti") == [C("s"), C("m"), V("ṛ"), C("t"), V("i")]


def test_aspirate_munch():
    assert lex_uast("dha") == [C("dh"), V("a")]
    assert lex_uast("dah") == [C("d"), V("a"), C("h"), V("a")]


def test_group_resolved_letter_joins_the_munch():
    assert lex_uast("/d/ha") == [C("ḍh"), V("a")]
    assert lex_uast("/t/hi") == [C("ṭh"), V("i")]


def test_group_marks():
    assert lex_uast("ra/m/") == [C("r"), V("a"), Anusvara()]
    assert lex_uast("ka/h/") == [C("k"), V("a"), Visarga()]
    assert lex_uast("k/h/") == [C("k"), V("a"), Visarga()]  # mark never munches as h


def test_lone_vowel_with_boundary_is_independent():
    assert lex_uast("a\\") == [V("a", independent=True)]


def test_word_initial_vowel_is_independent():
    assert lex_uast("eva") == [V("e", independent=True), C("v"), V("a")]


def test_backslash_after_digraph_marks_whole_digraph_independent():
    # the consonant falls back to the inherent a
    assert lex_uast("kai\\") == [C("k"), V("a"), V("ai", independent=True)]


def test_boundary_inside_munch_keeps_vowel_attached():
    assert lex_uast("ka\\i\\") == [C("k"), V("a"), V("i", independent=True)]


def test_backslash_after_consonant_is_pure_boundary():
    # blocks the digraph; the inherent vowel still applies
    assert lex_uast("d\\ha") == [C("d"), V("a"), C("h"), V("a")]
    assert lex_uast("dh\\") == [C("dh"), V("a")]


def test_vowel_after_vowel_is_independent():
    assert lex_uast("kae") == [C("k"), V("a"), V("e", independent=True)]
    assert lex_uast("kaa") == [C("k"), V("a"), V("a", independent=True)]


def test_digraph_vowels():
    assert lex_uast("kai") == [C("k"), V("ai")]
    assert lex_uast("kau") == [C("k"), V("au")]
    assert lex_uast("ai") == [V("ai", independent=True)]


def test_nasalized_a_group():
    assert lex_uast("h/au/") == [C("h"), V("a", nasalized=True)]
    assert lex_uast("/au/") == [V("a", independent=True, nasalized=True)]


def test_danda_and_double_danda():
    assert lex_uast("k.") == [C("k"), V("a"), Danda()]
    assert lex_uast("k..") == [C("k"), V("a"), Danda(double=True)]
    assert lex_uast("...") == [Danda(double=True), Danda()]


def test_digits_and_whitespace_pass_through():
    assert lex_uast("k5 ") == [C("k"), V("a"), Digit(5), Passthrough(" ")]


def test_case_insensitive():
    assert lex_uast("KaMaLa") == lex_uast("kamala")
    assert lex_uast("/SL/a") == lex_uast("/sl/a")


@pytest.mark.parametrize("bad", ["-", "a-", "5-", "k--", " -"])
def test_dangling_hyphen(bad):
    with pytest.raises(LexError) as e:
        lex_uast(bad)
    assert e.value.reason == "dangling-hyphen"


def test_dangling_backslash_at_start():
    with pytest.raises(LexError) as e:
        lex_uast("\\a")
    assert e.value.reason == "dangling-backslash"
    assert e.value.offset == 0


@pytest.mark.parametrize("letter", list("fqwxz"))
def test_unknown_letters(letter):
    with pytest.raises(LexError) as e:
        lex_uast("a" + letter)
    assert e.value.reason == "unknown-letter"
    assert e.value.offset == 1


def test_group_errors_carry_original_offsets():
    with pytest.raises(LexError) as e:
        lex_uast("ka/zz/")
    assert (e.value.offset, e.value.slice, e.value.reason) == (2, "/zz/", "unknown-key")


def test_error_offset_after_groups_points_at_original_bytes():
    #       01234567
    text = "/nl/-fa"
    with pytest.raises(LexError) as e:
        lex_uast(text)
    assert e.value.reason == "unknown-letter"
    assert e.value.offset == 5
    assert text[e.value.offset] == "f"


def test_non_ascii_rejected_in_strict_mode():
    with pytest.raises(LexError) as e:
        lex_uast("kā")
    assert e.value.reason == "non-ascii-input"


def test_lenient_passthrough():
    toks = lex_uast("k/zz/!é", lenient=True)
    assert toks == [
        C("k"),
        V("a"),
        Passthrough("/"),
        Passthrough("z"),
        Passthrough("z"),
        Passthrough("/"),
        Passthrough("!"),
        Passthrough("é"),
    ]


def test_lenient_reads_chart_letters_typed_directly():
    # a known diacritic letter in lenient input is read, not passed through
    assert lex_uast("kā", lenient=True) == [C("k"), V("ā")]


def test_redundant_a_equivalence_over_full_inventory():
    """c + 'a' + s reads the same as c + s for every consonant."""
    from uast.renderers import render_uast

    suffixes = ["", "k", "ta", "m/r/", " ra", ".", "5"]
    for p in CONSONANTS:
        c = render_uast([Consonant(p.iast)])[:-1]  # spelling without the halanta
        for s in suffixes:
            assert lex_uast(c + "a" + s) == lex_uast(c + s), (p.iast, s)


def test_case_insensitivity_randomized():
    rng = random.Random(42)
    alphabet = "kgcjtdpbmyrlvshn aiueo-\\."
    for _ in range(300):
        t = "".join(rng.choice(alphabet) for _ in range(rng.randrange(0, 30)))
        try:
            expected = lex_uast(t)
        except LexError:
            with pytest.raises(LexError):
                lex_uast(t.upper())
            continue
        assert lex_uast(t.upper()) == expected


def test_deterministic():
    text = "vedai/su/-ca sar-vairaham- eva ved-yo"
    assert lex_uast(text) == lex_uast(text)


def test_strict_mode_is_total_over_byte_soup():
    """Arbitrary input either tokenises or raises a positioned LexError."""
    rng = random.Random(1009)
    pool = "kgtdh aiueo-\\./5qé।ःā"
    for _ in range(2000):
        s = "".join(rng.choice(pool) for _ in range(rng.randrange(0, 20)))
        try:
            lex_uast(s)
        except LexError as e:
            assert 0 <= e.offset <= len(s.encode("utf-8"))
            assert e.reason
