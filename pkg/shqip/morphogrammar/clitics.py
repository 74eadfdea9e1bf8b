"""Imperatives carrying an object clitic.

The clitic follows a 2s imperative (merr + i -> merri) and is infixed before
the ending of a 2p imperative (tregoni + e -> tregojeni, hapni + i -> hapini).
An epenthetic j may separate a vowel-final stem from the clitic.
"""
from typing import Iterator, List, Sequence, Tuple

from shqip.analysis.types import Analysis, Provenance
from shqip.alphabet import is_vowel
from shqip.core.logger import get_logger
from shqip.features import FeatureSet
from shqip.lexicon.compiled import CompiledLexicon

logger = get_logger(__name__)

CLITICS = ("e", "i")
PLURAL_ENDING = "ni"
EPENTHETIC = "j"


def _without_epenthesis(stem: str) -> Iterator[str]:
    """The stem itself, then the stem minus a j that follows a vowel."""
    yield stem
    if len(stem) >= 2 and stem.endswith(EPENTHETIC) and is_vowel(stem[-2]):
        yield stem[:-1]


def _imperatives(lex: CompiledLexicon, form: str, number: str) -> List[Analysis]:
    return [
        Analysis(form, p.lemma, p.category, p.features, Provenance.LEXICON, "lexicon")
        for p in sorted(lex.lookup(form), key=lambda p: p.lemma)
        if p.category == "V" and {"IP", "2", number} <= set(p.features)
    ]


def split_clitic_imperative(
    token: str,
    lex: CompiledLexicon,
    clitics: Sequence[str] = CLITICS,
) -> List[Tuple[Analysis, Analysis]]:
    """Decompose ``token`` into (clitic PRO, imperative V) pairs.

    Every candidate is checked against the lexicon's imperative forms, so a
    pair is only returned when the plain imperative exists.
    """
    lowered = token.lower()
    pairs: List[Tuple[Analysis, Analysis]] = []
    seen = set()

    def emit(clitic: str, verbs: List[Analysis]) -> None:
        for verb in verbs:
            key = (clitic, verb.lemma, verb.features)
            if key in seen:
                continue
            seen.add(key)
            pairs.append((Analysis(clitic, clitic, "PRO", FeatureSet(), Provenance.MORPHOGRAMMAR, "clitic"),
                          Analysis(token, verb.lemma, "V", verb.features, Provenance.MORPHOGRAMMAR, "clitic")))

    for clitic in clitics:
        # 2p: stem + [j] + clitic + ni
        infix = clitic + PLURAL_ENDING
        if lowered.endswith(infix) and len(lowered) > len(infix):
            for stem in _without_epenthesis(lowered[:-len(infix)]):
                emit(clitic, _imperatives(lex, stem + PLURAL_ENDING, "p"))
        # 2s: imperative + [j] + clitic
        if lowered.endswith(clitic) and len(lowered) > len(clitic):
            for stem in _without_epenthesis(lowered[:-len(clitic)]):
                emit(clitic, _imperatives(lex, stem, "s"))

    if pairs:
        logger.debug(f"{token}: {len(pairs)} clitic reading(s)")
    return pairs
