"""Recognizers for words no dictionary can list: numerals, XY compounds, clitic imperatives."""
from shqip.morphogrammar.clitics import split_clitic_imperative
from shqip.morphogrammar.compounds import (
    recognize_affixed,
    recognize_numeric_compound,
    recognize_suffix_form,
)
from shqip.morphogrammar.numerals import (
    NumeralGrammar,
    grammar_for,
    parse_cardinal_word,
    parse_roman,
    recognize_cardinal,
    recognize_ordinal_body,
    recognize_roman,
)
from shqip.morphogrammar.tables import AffixTable, Morphotables, NumeralLexicon

__all__ = [
    "AffixTable",
    "Morphotables",
    "NumeralGrammar",
    "NumeralLexicon",
    "grammar_for",
    "parse_cardinal_word",
    "parse_roman",
    "recognize_affixed",
    "recognize_cardinal",
    "recognize_numeric_compound",
    "recognize_ordinal_body",
    "recognize_roman",
    "recognize_suffix_form",
    "split_clitic_imperative",
]
