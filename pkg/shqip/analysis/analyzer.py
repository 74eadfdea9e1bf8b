"""Text analyzer: tokens -> ranked analyses -> sentence grammars.

Lexicon lookup comes first; numeric XY compounds are tried on every token
since a lexicalized dyfish does not exclude 2fish. Every other recognizer only
runs when the lexicon knows nothing, and a token nobody recognizes gets an
UNKNOWN reading.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from shqip.analysis.tokenizer import Token, split_sentences
from shqip.analysis.types import (
    Analysis, AnnotatedToken, Provenance, TokenSpan, rank_analyses, unknown,
)
from shqip.core.config import Config
from shqip.core.logger import get_logger
from shqip.lexicon.compiled import CompiledLexicon, build, compile_lexicon
from shqip.lexicon.entries import load_dic, parse_listing
from shqip.morphogrammar.clitics import split_clitic_imperative
from shqip.morphogrammar.compounds import (
    recognize_affixed, recognize_numeric_compound, recognize_suffix_form,
)
from shqip.morphogrammar.numerals import (
    grammar_for, recognize_cardinal, recognize_ordinal_body, recognize_roman,
)
from shqip.morphogrammar.tables import Morphotables
from shqip.paradigm import ParadigmLibrary
from shqip.syntax.cascade import apply_cascade
from shqip.syntax.grammars import GrammarContext

logger = get_logger(__name__)


def load_lexicon(config: Config, path: Optional[Union[str, Path]] = None) -> CompiledLexicon:
    """Compiled lexicon from a container, a ``.dic``/``.flx`` file or the configured dictionaries."""
    if path is not None:
        path = Path(path)
        if path.suffix == ".dic":
            library = ParadigmLibrary.from_config(config)
            return compile_lexicon(load_dic(path), library)
        if path.suffix == ".flx":
            return build(parse_listing(path.read_text(encoding="utf-8"), str(path)))
        return CompiledLexicon.load(path)

    library = ParadigmLibrary.from_config(config)
    entries = []
    for dic in config.dictionary_paths:
        entries.extend(load_dic(dic))
    return compile_lexicon(entries, library)


@dataclass
class AnnotatedSentence:
    tokens: List[AnnotatedToken] = field(default_factory=list)
    spans: List[TokenSpan] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tokens": [t.to_dict() for t in self.tokens],
            "spans": [
                {
                    "start": s.start,
                    "end": s.end,
                    "rule": s.rule,
                    "value": s.value,
                    "analyses": [a.to_dict() for a in s.analyses],
                }
                for s in self.spans
            ],
        }


class Analyzer:
    """Annotates text with lexicon, morphogrammar and syntax readings."""

    def __init__(
        self,
        lexicon: CompiledLexicon,
        tables: Morphotables,
        clitics: Sequence[str] = ("e", "i"),
        particles: Sequence[str] = ("i", "e", "të", "së"),
        tense_particles: Optional[Dict[str, str]] = None,
        workers: int = 1,
    ):
        self.lexicon = lexicon
        self.tables = tables
        self.numerals = grammar_for(tables.numerals)
        self.clitics = tuple(clitics)
        self.workers = max(1, int(workers))
        tense = {"future": "do", "subjunctive": "të", "nonactive": "u", **(tense_particles or {})}
        self.context = GrammarContext(
            lexicon=lexicon,
            numerals=self.numerals,
            clitics=self.clitics,
            future=tense["future"],
            subjunctive=tense["subjunctive"],
            nonactive=tense["nonactive"],
            link=tables.numerals.link,
            particles=tuple(particles),
        )

    @classmethod
    def from_config(cls, config: Config, lexicon: Optional[CompiledLexicon] = None) -> "Analyzer":
        settings = config.section("analyzer")
        return cls(
            lexicon=lexicon if lexicon is not None else load_lexicon(config),
            tables=Morphotables.from_config(config),
            clitics=settings.get("clitics", ("e", "i")),
            particles=settings.get("particles", ("i", "e", "të", "së")),
            tense_particles=settings.get("tense_particles"),
            workers=settings.get("workers", 1),
        )

    def analyze_token(self, surface: str) -> List[Analysis]:
        """Ranked readings of one token; never empty."""
        analyses = [
            Analysis(surface, p.lemma, p.category, p.features, Provenance.LEXICON, "lexicon")
            for p in sorted(self.lexicon.lookup(surface), key=lambda p: (p.lemma, p.category, p.features.render()))
        ]
        analyses += recognize_numeric_compound(
            surface, self.lexicon, self.numerals, self.tables.numeric_suffixes
        )
        if not any(a.provenance is Provenance.LEXICON for a in analyses):
            for single in (
                recognize_cardinal(surface, self.numerals),
                recognize_ordinal_body(surface, self.numerals),
                recognize_roman(surface),
            ):
                if single is not None:
                    analyses.append(single)
            analyses += recognize_affixed(surface, self.lexicon, self.tables.affixes)
            analyses += recognize_suffix_form(surface, self.tables.affixes)
            for pro, verb in split_clitic_imperative(surface, self.lexicon, self.clitics):
                analyses.append(Analysis(surface, verb.lemma, verb.category, verb.features,
                                         Provenance.MORPHOGRAMMAR, "clitic", parts=(pro, verb)))
        if not analyses:
            logger.debug(f"No analysis for '{surface}'")
            return [unknown(surface)]
        return rank_analyses(analyses)

    def analyze_sentence(self, tokens: Sequence[Token]) -> AnnotatedSentence:
        annotated = [AnnotatedToken(t.surface, t.offset, self.analyze_token(t.surface)) for t in tokens]
        return AnnotatedSentence(annotated, apply_cascade(annotated, self.context))

    def analyze(self, text: str) -> List[AnnotatedSentence]:
        """Annotate a text; sentences keep input order even when analyzed in parallel."""
        sentences = split_sentences(text)
        if self.workers > 1 and len(sentences) > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                result = list(pool.map(self.analyze_sentence, sentences))
        else:
            result = [self.analyze_sentence(s) for s in sentences]

        span_id = 0
        for sentence in result:
            for span in sentence.spans:
                for index in span.tokens:
                    sentence.tokens[index].span_id = span_id
                span_id += 1
        logger.info(
            f"Analyzed {sum(len(s.tokens) for s in result)} tokens in {len(result)} sentence(s), "
            f"{span_id} span(s)"
        )
        return result
