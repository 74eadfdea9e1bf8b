"""Tests for numerals, XY compounds, clitic imperatives and the morphogrammar tables."""
import random

import pytest

from shqip.analysis.types import Provenance
from shqip.core.errors import TableFormatError
from shqip.features import FeatureSet
from shqip.morphogrammar.clitics import split_clitic_imperative
from shqip.morphogrammar.compounds import (
    recognize_affixed,
    recognize_numeric_compound,
    recognize_suffix_form,
)
from shqip.morphogrammar.numerals import (
    MAX_CARDINAL,
    lowest_place,
    parse_roman,
    recognize_cardinal,
    recognize_ordinal_body,
    recognize_roman,
    to_roman,
)
from shqip.morphogrammar.tables import load_affixes, load_numerals, load_numeric_suffixes


class TestCardinals:
    """Concatenated cardinal words."""

    @pytest.mark.parametrize("token,value", [
        ("pesë", 5),
        ("dhjetë", 10),
        ("dymbëdhjetë", 12),
        ("pesëdhjetë", 50),
        ("dyzetenjë", 41),
        ("dyzetnjë", 41),
        ("tridhjetetre", 33),
        ("tridhjetetri", 33),
        ("qind", 100),
        ("njëqind", 100),
        ("pesëqind", 500),
        ("dyqindedy", 202),
        ("njëmijë", 1000),
        ("dymijëenjëzetekatër", 2024),
        ("Pesëdhjetë", 50),
    ])
    def test_values(self, numerals, token, value):
        assert numerals.parse_cardinal_word(token) == value

    def test_render(self, numerals):
        assert numerals.render_cardinal_word(41) == "dyzetenjë"
        assert numerals.render_cardinal_word(1000) == "njëmijë"
        assert numerals.render_cardinal_word(202) == "dyqindedy"

    def test_render_out_of_range(self, numerals):
        with pytest.raises(ValueError):
            numerals.render_cardinal_word(0)
        with pytest.raises(ValueError):
            numerals.render_cardinal_word(MAX_CARDINAL + 1)

    def test_round_trip(self, numerals):
        values = list(range(1, 1000)) + list(range(1000, MAX_CARDINAL + 1, 997)) + [MAX_CARDINAL]
        for n in values:
            assert numerals.parse_cardinal_word(numerals.render_cardinal_word(n)) == n

    @pytest.mark.parametrize("token", ["agim", "e", "mijëmijë", "qindqind", "dyzetee", "pesëz", ""])
    def test_rejects(self, numerals, token):
        assert numerals.parse_cardinal_word(token) is None

    def test_no_false_positives_on_random_words(self, numerals):
        rng = random.Random(7)
        letters = "abcfghjklmnoprsuvxyz"
        for _ in range(500):
            word = "".join(rng.choice(letters) for _ in range(rng.randint(2, 9)))
            assert numerals.parse_cardinal_word(word) is None

    def test_recognizer(self, numerals):
        analysis = recognize_cardinal("pesëdhjetë", numerals)
        assert analysis.category == "NUM"
        assert analysis.features == FeatureSet(["Val=50"])
        assert analysis.rule == "cardinal"
        assert recognize_cardinal("agim", numerals) is None


class TestOrdinals:
    """Ordinal bodies."""

    @pytest.mark.parametrize("token,value", [
        ("parë", 1),
        ("dytë", 2),
        ("pestë", 5),
        ("tetë", 8),
        ("njëzetë", 20),
        ("dyzetenjëhtë", 41),
        ("pesëqindpesëdhjetëpestë", 555),
        ("qindtë", 100),
    ])
    def test_values(self, numerals, token, value):
        assert numerals.parse_ordinal(token) == value

    def test_alone_and_final_endings(self, numerals):
        assert numerals.parse_ordinal("njëhtë") is None
        assert numerals.parse_ordinal("dyzeteparë") is None

    def test_recognizer(self, numerals):
        analysis = recognize_ordinal_body("pestë", numerals)
        assert (analysis.category, analysis.features) == ("A", FeatureSet(["Val=5"]))
        assert analysis.provenance is Provenance.MORPHOGRAMMAR
        assert recognize_ordinal_body("agim", numerals) is None

    def test_lowest_place(self):
        assert lowest_place(41) == 1
        assert lowest_place(550) == 10
        assert lowest_place(500) == 100


class TestRoman:
    def test_round_trip(self):
        for n in range(1, 4000):
            assert parse_roman(to_roman(n)) == n

    @pytest.mark.parametrize("token", ["IIII", "VX", "IC", "MMMM", "xiv", ""])
    def test_rejects(self, token):
        assert parse_roman(token) is None

    def test_recognizer(self):
        assert recognize_roman("XIV").features == FeatureSet(["Val=14"])
        assert recognize_roman("ABC") is None

    def test_to_roman_range(self):
        with pytest.raises(ValueError):
            to_roman(4000)


class TestNumericCompounds:
    """Cardinal + numeric suffix words."""

    def readings(self, token, lexicon, numerals, tables):
        found = recognize_numeric_compound(token, lexicon, numerals, tables.numeric_suffixes)
        return {(a.lemma, a.category, a.features) for a in found}

    def test_fish(self, lexicon, numerals, tables):
        assert self.readings("dyfish", lexicon, numerals, tables) == {
            ("2fish", "N", FeatureSet()), ("2fish", "ADV", FeatureSet())
        }

    def test_verb_suffix(self, lexicon, numerals, tables):
        assert self.readings("katërfishoj", lexicon, numerals, tables) >= {("4fishoj", "V", FeatureSet())}

    @pytest.mark.parametrize("token,lemma,features", [
        ("dymbëdhjetëmujor", "12mujor", "m"),
        ("dyqindedyvjeçar", "202vjeçar", "m"),
        ("pesëdhjetëpesëvjeçar", "55vjeçar", "m"),
        ("tredhëmbësh", "3dhëmbësh", ""),
    ])
    def test_adjectives(self, lexicon, numerals, tables, token, lemma, features):
        assert self.readings(token, lexicon, numerals, tables) == {(lemma, "A", FeatureSet.parse(features))}

    def test_inflected_suffix(self, lexicon, numerals, tables):
        found = self.readings("katërfishon", lexicon, numerals, tables)
        assert {lemma for lemma, _, _ in found} == {"4fishoj"}
        assert ("4fishoj", "V", FeatureSet.parse("PR+Ind+2+s")) in found
        assert ("4fishoj", "V", FeatureSet.parse("PR+Ind+3+s")) in found

    def test_rejects(self, lexicon, numerals, tables):
        assert self.readings("dyagim", lexicon, numerals, tables) == set()
        assert self.readings("fish", lexicon, numerals, tables) == set()


class TestAffixed:
    """Prefix + known word."""

    def test_noun(self, lexicon, tables):
        found = recognize_affixed("bashkëbisedimin", lexicon, tables.affixes)
        assert [(a.lemma, a.category, a.features) for a in found] == [
            ("bashkëbisedim", "N", FeatureSet.parse("m+s+kallez+shquar"))
        ]
        assert found[0].rule == "affixed"

    def test_noun_citation_form(self, lexicon, tables):
        found = recognize_affixed("bashkëbisedim", lexicon, tables.affixes)
        assert [(a.lemma, a.features) for a in found] == [
            ("bashkëbisedim", FeatureSet.parse("m+s+emer+pashquar")),
            ("bashkëbisedim", FeatureSet.parse("m+s+kallez+pashquar")),
        ]

    def test_verb(self, lexicon, tables):
        found = recognize_affixed("mbijetonte", lexicon, tables.affixes)
        assert [(a.lemma, a.features) for a in found] == [("mbijetoj", FeatureSet.parse("I+Ind+3+s"))]

    def test_longest_prefix_only_valid_split(self, lexicon, tables):
        found = recognize_affixed("parashikoj", lexicon, tables.affixes)
        assert [(a.lemma, a.category, a.features) for a in found] == [
            ("parashikoj", "V", FeatureSet.parse("PR+Ind+1+s"))
        ]

    def test_adjective_keeps_inherent_features(self, lexicon, tables):
        found = recognize_affixed("paaftë", lexicon, tables.affixes)
        assert found
        assert {a.lemma for a in found} == {"paaftë"}
        assert all(a.category == "A" and "ei" in a.features for a in found)

    def test_invariant_head_rejected(self, lexicon, tables):
        assert recognize_affixed("paafër", lexicon, tables.affixes) == []

    def test_bare_prefix(self, lexicon, tables):
        assert recognize_affixed("bashkë", lexicon, tables.affixes) == []

    def test_suffix_forms(self, tables):
        assert [a.category for a in recognize_suffix_form("anglofob", tables.affixes)] == ["A"]
        assert [a.category for a in recognize_suffix_form("fotofobi", tables.affixes)] == ["N"]
        assert recognize_suffix_form("fob", tables.affixes) == []


class TestClitics:
    """Imperatives with an object clitic."""

    def rendered(self, token, lexicon):
        return [(pro.lemma, pro.category, verb.lemma, verb.features)
                for pro, verb in split_clitic_imperative(token, lexicon)]

    def test_plural_with_epenthesis(self, lexicon):
        assert self.rendered("tregojeni", lexicon) == [
            ("e", "PRO", "tregoj", FeatureSet.parse("IP+2+p"))
        ]

    def test_singular(self, lexicon):
        assert self.rendered("merri", lexicon) == [("i", "PRO", "marr", FeatureSet.parse("IP+2+s"))]

    def test_plural_infix(self, lexicon):
        assert self.rendered("hapini", lexicon) == [("i", "PRO", "hap", FeatureSet.parse("IP+2+p"))]

    def test_noun_is_not_split(self, lexicon):
        assert split_clitic_imperative("libri", lexicon) == []
        assert split_clitic_imperative("agimi", lexicon) == []


class TestTables:
    """Loading and rejecting table files."""

    def test_shipped(self, tables):
        assert tables.numerals.link == "e"
        assert tables.numerals.word_for(100, "hundred") == "qind"
        assert "parë" in tables.numerals.ordinals
        assert tables.affixes.prefixes_longest_first()[:2] == ["bashkë", "gjysmë"]
        assert tables.numeric_suffixes["fish"].readings == (
            ("N", FeatureSet()), ("ADV", FeatureSet())
        )

    @pytest.mark.parametrize("text", [
        "dy\t2\n",
        "dy\t2\tfoo\n",
        "dy\tx\tunit\n",
        "dy\t0\tunit\n",
        "dy\t2\tunit\ndy\t2\tunit\n",
    ])
    def test_bad_numerals(self, text):
        with pytest.raises(TableFormatError):
            load_numerals(text)

    def test_same_word_cardinal_and_ordinal(self):
        lexicon = load_numerals("tetë\t8\tunit\ntetë\t8\tordinal\n")
        assert "tetë" in lexicon.atoms
        assert "tetë" in lexicon.ordinals

    def test_affixes(self):
        table = load_affixes("# comment\npa\nmbi\npa\n-fob\tA\n-logji\n")
        assert table.prefixes == ("pa", "mbi")
        assert dict(table.suffix_forms) == {"fob": "A", "logji": "N"}

    def test_numeric_suffixes(self):
        table = load_numeric_suffixes("vjeçar\tA\t+m\nfish\tN,ADV\n")
        assert table["vjeçar"].readings == (("A", FeatureSet(["m"])),)
        with pytest.raises(TableFormatError):
            load_numeric_suffixes("a\tb\tc\td\n")
