"""Tests for segmentation, collation and letter-level editing."""
import random

import pytest

from shqip.alphabet import (
    ALPHABET_ORDER,
    DIGRAPHS,
    LETTERS,
    collate,
    drop_last,
    drop_last_chars,
    parse_overrides,
    segment,
    sort_key,
    sort_words,
)
from shqip.core.errors import LetterUnderflowError, OverrideFormatError


def random_word(rng: random.Random, max_letters: int = 6) -> str:
    """Random word over the alphabet plus the odd opaque character."""
    pool = ALPHABET_ORDER + ["-", "'", "w"]
    return "".join(rng.choice(pool) for _ in range(rng.randint(0, max_letters)))


class TestAlphabet:
    """The letter inventory."""

    def test_thirty_six_letters(self):
        assert len(LETTERS) == 36
        assert sum(1 for letter in LETTERS if letter.is_vowel) == 7
        assert sum(1 for letter in LETTERS if not letter.is_vowel) == 29

    def test_nine_digraphs(self):
        assert DIGRAPHS == {"dh", "gj", "ll", "nj", "rr", "sh", "th", "xh", "zh"}

    def test_adjacent_orderings(self):
        index = {letter.chars: letter.index for letter in LETTERS}
        assert index["e"] + 1 == index["ë"]
        assert index["c"] < index["ç"] < index["d"]
        assert index["d"] < index["dh"] < index["e"]


class TestSegment:
    """Greedy digraph-aware segmentation."""

    def test_shqip(self):
        assert segment("shqip").units == ["sh", "q", "i", "p"]

    def test_vjeherr(self):
        word = segment("vjehërr")
        assert word.units == ["v", "j", "e", "h", "ë", "rr"]
        assert len(word) == 6
        assert len(word.raw) == 7

    def test_empty(self):
        assert segment("").units == []

    def test_case_insensitive_digraphs(self):
        word = segment("Dhimitër")
        assert word.units[0] == "Dh"
        assert word.letters[0].letter.chars == "dh"

    def test_opaque_characters(self):
        word = segment("Mit'hat")
        assert word.units == ["M", "i", "t", "'", "h", "a", "t"]
        assert word.letters[3].is_opaque

    def test_override_table(self):
        word = segment("Mithat", overrides={"Mithat": ["M", "i", "t", "h", "a", "t"]})
        assert word.units == ["M", "i", "t", "h", "a", "t"]

    def test_parse_override_table(self):
        table = parse_overrides("# names\nMithat\tM i t h a t\n\n")
        assert table == {"Mithat": ("M", "i", "t", "h", "a", "t")}
        assert segment("Mithat", overrides=table).units == ["M", "i", "t", "h", "a", "t"]
        assert segment("Mithat").units == ["M", "i", "th", "a", "t"]

    @pytest.mark.parametrize("line", ["Mithat\tM i th a t x", "Mithat", "Mithat\t"])
    def test_override_must_spell_word(self, line):
        with pytest.raises(OverrideFormatError) as excinfo:
            parse_overrides(line, "segmentation.tab")
        assert "segmentation.tab:1" in str(excinfo.value)

    def test_round_trip_and_determinism(self):
        rng = random.Random(7)
        for _ in range(2000):
            text = random_word(rng, 10)
            word = segment(text)
            assert "".join(word.units) == text
            assert segment(word.raw) == word
            assert len(word) <= len(text)


class TestCollate:
    """Albanian alphabetical order."""

    def test_d_before_dh(self):
        assert collate(segment("duar"), segment("dhamb")) == -1

    def test_reflexive(self):
        assert collate(segment("x"), segment("x")) == 0

    def test_sort_words(self):
        assert sort_words(["dita", "dhamb", "duar"]) == ["dita", "duar", "dhamb"]

    def test_opaque_after_letters(self):
        assert sort_words(["a1", "azh", "az"]) == ["az", "azh", "a1"]

    def test_d_family_precedes_dh_family(self):
        rng = random.Random(11)
        for _ in range(500):
            d_word = "d" + random_word(rng).lstrip("h")
            if d_word.startswith("dh"):
                continue
            dh_word = "dh" + random_word(rng)
            assert collate(segment(d_word), segment(dh_word)) == -1

    def test_total_order_laws(self):
        rng = random.Random(1972)
        for _ in range(100_000):
            a, b, c = (segment(random_word(rng)) for _ in range(3))
            assert collate(a, b) == -collate(b, a)
            if collate(a, b) <= 0 and collate(b, c) <= 0:
                assert collate(a, c) <= 0
            assert (collate(a, b) == 0) == (a.raw == b.raw)

    def test_sort_key_agrees_with_collate(self):
        rng = random.Random(3)
        words = [random_word(rng) for _ in range(300)]
        assert sorted(words, key=sort_key) == sort_words(words)


class TestDropLast:
    """Letter-level deletion."""

    def test_digraph_counts_as_one(self):
        assert drop_last(segment("djall"), 1).raw == "dja"

    def test_single_letter(self):
        assert drop_last(segment("bir"), 1).raw == "bi"

    def test_zero_is_identity(self):
        assert drop_last(segment("x"), 0).raw == "x"

    def test_underflow(self):
        with pytest.raises(LetterUnderflowError) as excinfo:
            drop_last(segment("bir"), 4)
        assert "bir" in str(excinfo.value)

    def test_char_level(self):
        assert drop_last_chars("djall", 2) == "dja"
        with pytest.raises(LetterUnderflowError):
            drop_last_chars("ab", 3)

    def test_matches_resegmentation(self):
        rng = random.Random(5)
        for _ in range(500):
            word = segment(random_word(rng, 8))
            for n in range(1, len(word) + 1):
                assert segment(drop_last(word, n).raw).units == word.units[:len(word) - n]
