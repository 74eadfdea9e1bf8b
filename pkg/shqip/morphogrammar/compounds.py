"""XY words: a numeral or an affix concatenated with a word or bound component.

    pesëdhjetëpesëvjeçar -> 55vjeçar,A+m
    katërfishoj          -> 4fishoj,V
    bashkëbisedimin      -> bashkëbisedim,N+m+s+kallez+shquar
"""
from typing import Dict, List

from shqip.analysis.types import Analysis, Provenance
from shqip.core.logger import get_logger
from shqip.features import FeatureSet
from shqip.lexicon.compiled import CompiledLexicon
from shqip.morphogrammar.numerals import NumeralGrammar
from shqip.morphogrammar.tables import AffixTable, NumericSuffix

logger = get_logger(__name__)

AFFIX_HEAD_CATEGORIES = frozenset({"N", "V", "A"})


def _unique(analyses: List[Analysis]) -> List[Analysis]:
    seen = set()
    out = []
    for a in analyses:
        key = (a.lemma, a.category, a.features)
        if key not in seen:
            seen.add(key)
            out.append(a)
    return out


def recognize_numeric_compound(
    token: str,
    lex: CompiledLexicon,
    grammar: NumeralGrammar,
    suffixes: Dict[str, NumericSuffix],
) -> List[Analysis]:
    """Split ``token`` into a cardinal X and a numeric suffix Y.

    A registered Y gives one analysis per registered reading. Any other Y is
    looked up in the lexicon and kept when its lemma is a registered suffix,
    which covers inflected suffixes (katërfishon from fishoj). The lemma
    writes X in digits.
    """
    analyses: List[Analysis] = []
    lowered = token.lower()
    for split in range(len(lowered) - 1, 0, -1):
        head, tail = lowered[:split], lowered[split:]
        value = grammar.parse_cardinal_word(head)
        if value is None:
            continue
        if tail in suffixes:
            for category, features in suffixes[tail].readings:
                analyses.append(Analysis(
                    token, f"{value}{tail}", category, features, Provenance.MORPHOGRAMMAR, "numeric"
                ))
            continue
        for payload in lex.lookup(tail):
            if payload.lemma in suffixes:
                analyses.append(Analysis(
                    token, f"{value}{payload.lemma}", payload.category, payload.features,
                    Provenance.MORPHOGRAMMAR, "numeric",
                ))
    return _unique(analyses)


def recognize_affixed(token: str, lex: CompiledLexicon, affixes: AffixTable) -> List[Analysis]:
    """Prefix + known noun, verb or adjective form; lemma and features come from the form.

    Every valid split is returned, longest prefix first.
    """
    analyses: List[Analysis] = []
    lowered = token.lower()
    for prefix in affixes.prefixes_longest_first():
        if not lowered.startswith(prefix) or len(lowered) == len(prefix):
            continue
        rest = lowered[len(prefix):]
        for payload in sorted(lex.lookup(rest), key=lambda p: (p.category, p.features.render())):
            if payload.category not in AFFIX_HEAD_CATEGORIES:
                continue
            analyses.append(Analysis(
                token, prefix + payload.lemma, payload.category, payload.features,
                Provenance.MORPHOGRAMMAR, "affixed",
            ))
    return _unique(analyses)


def recognize_suffix_form(token: str, affixes: AffixTable) -> List[Analysis]:
    """Tag words of a recognized suffix family (anglofob, fotofobi); no semantics."""
    lowered = token.lower()
    for suffix in sorted(affixes.suffix_forms, key=len, reverse=True):
        if lowered.endswith(suffix) and len(lowered) > len(suffix):
            category = affixes.suffix_forms[suffix]
            return [Analysis(token, lowered, category, FeatureSet(), Provenance.MORPHOGRAMMAR, "suffix")]
    return []
