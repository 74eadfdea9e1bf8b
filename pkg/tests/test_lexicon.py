"""Tests for entries, compilation, lookup, the binary container and printed import."""
import pytest

from shqip.core.errors import LexiconFormatError
from shqip.features import FeatureSet
from shqip.lexicon.compiled import (
    MAGIC,
    CompiledLexicon,
    build,
    compile_lexicon,
    deserialize,
    expand,
    listing,
    serialize,
)
from shqip.lexicon.entries import LexEntry, Payload, parse_dic, parse_dic_line, parse_listing, write_dic, load_dic
from shqip.lexicon.printed import (
    AdjectiveRecord,
    NounRecord,
    PrintedKind,
    VerbRecord,
    assign_paradigm,
    import_printed,
    parse_printed,
)
from shqip.paradigm import ParadigmLibrary, render_commands

TABLE_LINES = [
    "aeroplan,-i m. pl. (-ë, -ët) plane m.",
    "laj (lava, larë) to wash",
    "lahem (u lava, larë) to wash oneself",
    "mirë (i,e) good",
    "afër adv. and prep. + abl. near",
    "pjesërisht adv. partly",
    "adio! excl. adieu!",
]

MORE_PRINTED = [
    "absurd(e) absurd",
    "an/ë, -a f. pl. (-ë, -ët) side",
    "absolutisht adv. absolutely",
    "afërsisht adv. approximately",
    "possa conj. as soon as",
]


def payload(lemma, category, features, paradigm=None):
    return Payload(lemma, category, FeatureSet.parse(features), paradigm)


class TestEntries:
    """The ``.dic`` and ``.flx`` text formats."""

    def test_parse_paradigm_entry(self):
        entry = parse_dic_line("agim,N+FLX=NS2_t+m+s")
        assert entry == LexEntry("agim", "N", "NS2_t", FeatureSet.parse("m+s"))
        assert entry.render() == "agim,N+FLX=NS2_t+m+s"

    def test_parse_invariants_with_spaces(self):
        entries = parse_dic("së afërmi, ADV\nafër, PREP+rrjedh\n# comment\n\n")
        assert entries == [
            LexEntry("së afërmi", "ADV"),
            LexEntry("afër", "PREP", None, FeatureSet(["rrjedh"])),
        ]

    def test_lemma_with_apostrophe_and_hyphen(self):
        assert parse_dic_line("Mit'hat,N+m+s").lemma == "Mit'hat"
        assert parse_dic_line("projekt-ligj,N+FLX=NS2_t+m+s").lemma == "projekt-ligj"

    def test_missing_comma(self):
        with pytest.raises(LexiconFormatError):
            parse_dic_line("agim N")

    def test_missing_category(self):
        with pytest.raises(LexiconFormatError):
            parse_dic_line("agim,n+m")

    def test_write_and_load(self, tmp_path):
        entries = parse_dic("agim,N+FLX=NS2_t+m+s\nafro,ADV\n")
        path = tmp_path / "out.dic"
        assert write_dic(entries, path) == 2
        assert load_dic(path) == entries

    def test_parse_listing(self):
        pairs = list(parse_listing("të agimit,agim,N+FLX=NS2_t+m+s+gjin+shquar\n"))
        assert pairs == [("të agimit", payload("agim", "N", "m+s+gjin+shquar", "NS2_t"))]

    def test_bad_listing_line(self):
        with pytest.raises(LexiconFormatError):
            list(parse_listing("agimi,agim\n"))


class TestCompile:
    """Expansion, minimization and lookup."""

    def test_table_surfaces_accepted(self, library):
        entries = parse_dic("agim,N+FLX=NS2_t+m+s\nagim,N+FLX=NPL7+f+p\n")
        lex = compile_lexicon(entries, library)
        for surface, expected in expand(entries, library):
            assert expected in lex.lookup(surface)
        assert lex.stats.forms == 17
        assert lex.stats.surfaces == 14

    def test_invariant_entry(self):
        lex = compile_lexicon(parse_dic("afro,ADV\n"), ParadigmLibrary())
        assert lex.items() == [("afro", (payload("afro", "ADV", ""),))]
        assert lex.lookup("afr") == frozenset()

    def test_empty(self):
        lex = build([])
        assert lex.stats.states == 1
        assert lex.stats.forms == 0
        assert lex.lookup("") == frozenset()

    def test_unknown_paradigm(self, library):
        with pytest.raises(LexiconFormatError):
            compile_lexicon(parse_dic("agim,N+FLX=NOPE\n"), library)

    def test_category_mismatch(self, library):
        with pytest.raises(LexiconFormatError):
            compile_lexicon(parse_dic("agim,V+FLX=NS2_t\n"), library)

    def test_lookup_agimin(self, lexicon):
        assert lexicon.lookup("agimin") == {payload("agim", "N", "m+s+kallez+shquar", "NS2_t")}

    def test_lookup_agimit_two_payloads(self, lexicon):
        assert lexicon.lookup("agimit") == {
            payload("agim", "N", "m+s+dhan+shquar", "NS2_t"),
            payload("agim", "N", "m+s+rrjedh+shquar", "NS2_t"),
        }

    def test_lookup_unknown(self, lexicon):
        assert lexicon.lookup("zzz") == frozenset()

    def test_lookup_multiword_and_homographs(self, lexicon):
        assert payload("agim", "N", "m+s+gjin+shquar", "NS2_t") in lexicon.lookup("së agimit")
        assert {(p.category, p.features) for p in lexicon.lookup("afër")} == {
            ("ADV", FeatureSet()), ("PREP", FeatureSet(["rrjedh"]))
        }
        assert lexicon.lookup("possa që") == {payload("possa që", "CONJ", "UNAMB")}

    def test_case_folded_retry(self, lexicon):
        assert lexicon.lookup("Agimi") == lexicon.lookup("agimi")
        assert lexicon.lookup("OKB-ja")
        assert lexicon.lookup("Mit'hat")

    def test_indefinite_singular(self, lexicon):
        assert lexicon.lookup("agim") == {
            payload("agim", "N", "m+s+emer+pashquar", "NS_PASH"),
            payload("agim", "N", "m+s+kallez+pashquar", "NS_PASH"),
        }
        assert payload("agim", "N", "m+s+gjin+pashquar", "NS_PASH") in lexicon.lookup("i agimi")

    def test_seed_size(self, seed_entries):
        assert len({e.lemma for e in seed_entries if e.paradigm}) >= 25

    def test_oracle_equivalence(self, lexicon, seed_trie):
        trie, table = seed_trie
        surfaces = list(trie.items())
        assert len(surfaces) < 10_000
        for surface, index in surfaces:
            assert lexicon.lookup(surface) == frozenset(table[index])
        assert sorted(s for s, _ in lexicon.automaton.items()) == sorted(s for s, _ in surfaces)

    def test_minimization_shrinks(self, lexicon, seed_trie):
        trie, _ = seed_trie
        assert lexicon.stats.states < trie.state_count
        assert lexicon.automaton.is_acyclic()

    def test_every_form_round_trips(self, lexicon, seed_pairs):
        for surface, expected in seed_pairs:
            assert expected in lexicon.lookup(surface)

    def test_listing_reingested(self, library):
        entries = parse_dic("bir,N+FLX=NS2_t+m+s\nbir,N+FLX=NPL_J_1C+m+p\n")
        lines = listing(expand(entries, library))
        lex = build(parse_listing("\n".join(lines)))
        for surface, expected in parse_listing("\n".join(lines)):
            assert expected in lex.lookup(surface)
        assert "bij,bir,N+FLX=NPL_J_1C+m+p+emer+pashquar" in lines


class TestContainer:
    """SQMF1 serialization."""

    def test_round_trip(self, lexicon):
        again = deserialize(serialize(lexicon))
        assert again.items() == lexicon.items()
        assert again.stats == lexicon.stats

    def test_save_and_load(self, lexicon, tmp_path):
        path = tmp_path / "seed.sqmf"
        size = lexicon.save(path)
        assert size == path.stat().st_size
        assert path.read_bytes().startswith(MAGIC)
        loaded = CompiledLexicon.load(path)
        assert loaded.lookup("agimit") == lexicon.lookup("agimit")

    def test_bytes_are_deterministic(self, seed_entries, library):
        first = serialize(compile_lexicon(seed_entries, library))
        second = serialize(compile_lexicon(seed_entries, library))
        assert first == second

    def test_bad_magic(self):
        with pytest.raises(LexiconFormatError):
            deserialize(b"NOPE" + bytes(16))

    def test_truncated(self, lexicon):
        with pytest.raises(LexiconFormatError):
            deserialize(serialize(lexicon)[:-3])


class TestParsePrinted:
    """Format dispatch of printed lines."""

    @pytest.mark.parametrize("line", TABLE_LINES + MORE_PRINTED)
    def test_no_problems(self, line):
        assert parse_printed(line).ok

    def test_noun_with_split_radical(self):
        entry = parse_printed("an/ë, -a f. pl. (-ë, -ët) side")
        assert entry.kind is PrintedKind.NOUN
        assert entry.record == NounRecord("an", "ë", "a", "f", "ë", "ët")
        assert entry.record.lemma == "anë"
        assert entry.record.plural == ("anë", "anët")
        assert entry.gloss == "side"

    def test_nonactive_verb(self):
        entry = parse_printed("lahem (u lava, larë) to wash oneself")
        assert entry.kind is PrintedKind.NONACTIVE_VERB
        assert entry.record == VerbRecord("lahem", "lava", "larë", nonactive=True)
        assert entry.record.aorist == "u lava"
        assert entry.gloss == "to wash oneself"

    def test_active_verb(self):
        entry = parse_printed("laj (lava, larë) to wash")
        assert entry.kind is PrintedKind.ACTIVE_VERB
        assert entry.record.aorist == "lava"

    def test_adjectives(self):
        assert parse_printed("mirë (i,e) good").record == AdjectiveRecord("mirë", True)
        plain = parse_printed("absurd(e) absurd").record
        assert plain == AdjectiveRecord("absurd", False)
        assert plain.feminine == "absurde"

    def test_invariant_readings(self):
        record = parse_printed("afër adv. and prep. + abl. near").record
        assert record.lemma == "afër"
        assert record.readings == (("ADV", FeatureSet()), ("PREP", FeatureSet(["rrjedh"])))

    def test_conjunction(self):
        assert parse_printed("possa conj. as soon as").record.readings == (("CONJ", FeatureSet()),)

    def test_interjection(self):
        record = parse_printed("adio! excl. adieu!").record
        assert record.lemma == "adio"
        assert record.readings == (("INTERJ", FeatureSet()),)

    def test_empty(self):
        assert parse_printed("").status == "problem(empty)"

    def test_unrecognized(self):
        assert parse_printed("???").status == "problem(unrecognized)"


class TestAssignParadigm:
    """Choosing the paradigm that reproduces the printed forms."""

    def test_ambigen_noun(self, library):
        entries, problem = assign_paradigm(parse_printed("agim,-i m. pl. (-e, -et) dawn"), library)
        assert problem is None
        assert [e.render() for e in entries] == ["agim,N+FLX=NS2_t+m+s", "agim,N+FLX=NPL7+f+p"]

    def test_ambigen_endings_configurable(self, library):
        entries, _ = assign_paradigm(parse_printed("agim,-i m. pl. (-e, -et) dawn"), library, ())
        assert entries[1].render() == "agim,N+FLX=NPL7+m+p"

    def test_moter_gets_letter_swap(self, library):
        entries, problem = assign_paradigm(parse_printed("mot/ër, -ra f. sister"), library)
        assert problem is None
        assert entries == [LexEntry("motër", "N", "NF_ER_1C", FeatureSet.parse("f+s"))]
        production = library["NF_ER_1C"].productions_with("emer", "shquar")[0]
        assert render_commands(production.commands) == "a<L><B>"

    def test_feminine_noun_and_plural(self, library):
        entries, _ = assign_paradigm(parse_printed("an/ë, -a f. pl. (-ë, -ët) side"), library)
        assert [e.render() for e in entries] == ["anë,N+FLX=NSF_E+f+s", "anë,N+FLX=NPL_F+f+p"]

    @pytest.mark.parametrize("line,expected", [
        ("heq (hoqa, hequr) to pull", "heq,V+FLX=V_EO_1C"),
        ("hedh (hodha, hedhur) to throw", "hedh,V+FLX=V_EO_2C"),
        ("marr (mora, marrë) to take", "marr,V+FLX=V_MARR"),
        ("afroj (afrova, afruar) to approach", "afroj,V+FLX=Xi"),
        ("absurd(e) absurd", "absurd,A+FLX=A_CONS"),
    ])
    def test_single_entries(self, library, line, expected):
        entries, problem = assign_paradigm(parse_printed(line), library)
        assert problem is None
        assert [e.render() for e in entries] == [expected]

    def test_no_paradigm(self, library):
        entries, problem = assign_paradigm(parse_printed("xyz,-q m. thing"), library)
        assert entries == []
        assert problem == "no_paradigm"

    def test_problem_passes_through(self, library):
        assert assign_paradigm(parse_printed(""), library) == ([], "empty")

    def test_ambiguity_picks_lowest_name(self):
        library = ParadigmLibrary.from_text(
            "PARADIGM B_DEF N\ni\t+emer+shquar\n"
            "PARADIGM A_DEF N\ni\t+emer+shquar\n"
        )
        entries, problem = assign_paradigm(parse_printed("qen,-i m. dog"), library)
        assert problem is None
        assert entries[0].paradigm == "A_DEF"


class TestImportPrinted:
    """Whole-file import."""

    def test_table_lines(self, library):
        report = import_printed(TABLE_LINES, library)
        assert report.problems == []
        assert report.lines == 7
        assert [e.render() for e in report.entries] == [
            "aeroplan,N+FLX=NS2_t+m+s",
            "aeroplan,N+FLX=NPL1+m+p",
            "laj,V+FLX=V_LAJ",
            "lahem,V+FLX=V_LAHEM+joveprore",
            "mirë,A+FLX=A_E+ei",
            "afër,ADV",
            "afër,PREP+rrjedh",
            "pjesërisht,ADV",
            "adio,INTERJ",
        ]

    def test_imported_entries_compile(self, library):
        report = import_printed(TABLE_LINES, library)
        lex = compile_lexicon(report.entries, library)
        assert lex.lookup("aeroplanët")
        assert {p.lemma for p in lex.lookup("u lava")} == {"lahem"}

    def test_problem_lines(self, library):
        report = import_printed(["???", "", "# skipped"], library)
        assert report.entries == []
        assert report.problem_lines() == ["???\tunrecognized"]
