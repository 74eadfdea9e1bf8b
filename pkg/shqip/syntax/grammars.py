"""Multi-token grammars over one sentence of annotated tokens.

Each grammar scans left to right, takes the longest match at a position and
skips tokens already covered by earlier spans, so its own spans never
overlap and re-running it changes nothing.
"""
from dataclasses import dataclass
from typing import AbstractSet, Callable, List, Optional, Sequence, Tuple

from shqip.analysis.types import Analysis, AnnotatedToken, Provenance, TokenSpan
from shqip.core.logger import get_logger
from shqip.features import FeatureSet
from shqip.lexicon.compiled import CompiledLexicon
from shqip.lexicon.entries import Payload
from shqip.morphogrammar.numerals import NumeralGrammar, lowest_place, value_feature

logger = get_logger(__name__)

MAX_JOIN = 3
ORDINAL_PARTICLES = ("i", "e", "të", "së")
PARTICLE_GENDER = {"i": "m", "e": "f"}


@dataclass(frozen=True)
class GrammarContext:
    """Lexicon, numerals and particle inventories the grammars read."""
    lexicon: CompiledLexicon
    numerals: NumeralGrammar
    clitics: Tuple[str, ...] = ("e", "i")
    future: str = "do"
    subjunctive: str = "të"
    nonactive: str = "u"
    link: str = "e"
    particles: Tuple[str, ...] = ORDINAL_PARTICLES


Grammar = Callable[[Sequence[AnnotatedToken], GrammarContext, AbstractSet[int]], List[TokenSpan]]


def _word(token: AnnotatedToken) -> str:
    return token.surface.lower()


def _free(covered: AbstractSet[int], start: int, end: int) -> bool:
    return not any(i in covered for i in range(start, end))


def _from_payload(surface: str, payload: Payload, rule: str, extra: Sequence[str] = ()) -> Analysis:
    return Analysis(surface, payload.lemma, payload.category, payload.features.union(extra),
                    Provenance.SYNTAX, rule)


def _scan(tokens: Sequence[AnnotatedToken], covered: AbstractSet[int],
          match: Callable[[int, AbstractSet[int]], Optional[TokenSpan]]) -> List[TokenSpan]:
    spans: List[TokenSpan] = []
    taken = set(covered)
    i = 0
    while i < len(tokens):
        span = match(i, taken) if i not in taken else None
        if span is None:
            i += 1
            continue
        spans.append(span)
        taken.update(span.tokens)
        i = span.end
    return spans


def join_particle_noun(tokens: Sequence[AnnotatedToken], ctx: GrammarContext,
                       covered: AbstractSet[int] = frozenset()) -> List[TokenSpan]:
    """Multiword surfaces accepted by the lexicon (të agimit, së afërmi), verbs excluded."""
    def match(i: int, taken: AbstractSet[int]) -> Optional[TokenSpan]:
        for size in range(min(MAX_JOIN, len(tokens) - i), 1, -1):
            if not _free(taken, i, i + size):
                continue
            surface = " ".join(t.surface for t in tokens[i:i + size])
            payloads = [p for p in ctx.lexicon.lookup(surface) if p.category != "V"]
            if payloads:
                analyses = tuple(_from_payload(surface, p, "join_particle_noun")
                                 for p in sorted(payloads, key=lambda p: p.features.render()))
                return TokenSpan(i, i + size, analyses, "join_particle_noun")
        return None
    return _scan(tokens, covered, match)


def _tense_span(tokens: Sequence[AnnotatedToken], ctx: GrammarContext, start: int, verb_at: int,
                particle: str, wanted: Callable[[Payload], bool]) -> Optional[TokenSpan]:
    if verb_at >= len(tokens):
        return None
    surface = f"{particle} {tokens[verb_at].surface}"
    payloads = [p for p in ctx.lexicon.lookup(surface) if p.category == "V" and wanted(p)]
    if not payloads:
        return None
    clitic = _word(tokens[verb_at - 1]) if verb_at - 1 > start and _word(tokens[verb_at - 1]) in ctx.clitics else None
    text = " ".join(t.surface for t in tokens[start:verb_at + 1])
    analyses = []
    for payload in sorted(payloads, key=lambda p: p.features.render()):
        verb = _from_payload(text, payload, "match_particle_tense")
        if clitic:
            pro = Analysis(clitic, clitic, "PRO", FeatureSet(), Provenance.SYNTAX, "match_particle_tense")
            verb = Analysis(text, verb.lemma, verb.category, verb.features, Provenance.SYNTAX,
                            "match_particle_tense", parts=(pro, verb))
        analyses.append(verb)
    return TokenSpan(start, verb_at + 1, tuple(analyses), "match_particle_tense")


def match_particle_tense(tokens: Sequence[AnnotatedToken], ctx: GrammarContext,
                         covered: AbstractSet[int] = frozenset()) -> List[TokenSpan]:
    """do të [clitic] V, të [clitic] V and u V, longest first."""
    def future(p: Payload) -> bool:
        return "F" in p.features or "Kusht" in p.features

    def subjunctive(p: Payload) -> bool:
        return "Subj" in p.features

    def nonactive(p: Payload) -> bool:
        return "joveprore" in p.features

    def match(i: int, taken: AbstractSet[int]) -> Optional[TokenSpan]:
        word = _word(tokens[i])
        candidates = []
        if word == ctx.future and i + 1 < len(tokens) and _word(tokens[i + 1]) == ctx.subjunctive:
            particle = f"{tokens[i].surface} {tokens[i + 1].surface}"
            candidates += [(i + 3, particle, future), (i + 2, particle, future)]
        if word == ctx.subjunctive:
            candidates += [(i + 2, tokens[i].surface, subjunctive), (i + 1, tokens[i].surface, subjunctive)]
        if word == ctx.nonactive:
            candidates.append((i + 1, tokens[i].surface, nonactive))
        for verb_at, particle, wanted in candidates:
            if verb_at >= len(tokens) or not _free(taken, i, verb_at + 1):
                continue
            first_free = i + len(particle.split())
            if verb_at > first_free and _word(tokens[first_free]) not in ctx.clitics:
                continue
            span = _tense_span(tokens, ctx, i, verb_at, particle.lower(), wanted)
            if span is not None:
                return span
        return None
    return _scan(tokens, covered, match)


def match_full_ordinal(tokens: Sequence[AnnotatedToken], ctx: GrammarContext,
                       covered: AbstractSet[int] = frozenset()) -> List[TokenSpan]:
    """Particle + ordinal body: i pestë -> A+Val=5+m."""
    def match(i: int, taken: AbstractSet[int]) -> Optional[TokenSpan]:
        particle = _word(tokens[i])
        if particle not in ctx.particles or i + 1 >= len(tokens) or (i + 1) in taken:
            return None
        if particle == ctx.link and i > 0 and ctx.numerals.parse_cardinal_word(tokens[i - 1].surface) is not None:
            return None  # dyzet e tetë is 48, not "the eighth"
        body = tokens[i + 1].surface
        value = ctx.numerals.parse_ordinal(body)
        if value is None:
            return None
        features = [value_feature(value)]
        if particle in PARTICLE_GENDER:
            features.append(PARTICLE_GENDER[particle])
        surface = f"{tokens[i].surface} {body}"
        analysis = Analysis(surface, body.lower(), "A", FeatureSet(features), Provenance.SYNTAX, "match_full_ordinal")
        return TokenSpan(i, i + 2, (analysis,), "match_full_ordinal", value)
    return _scan(tokens, covered, match)


def match_compound_cardinal(tokens: Sequence[AnnotatedToken], ctx: GrammarContext,
                            covered: AbstractSet[int] = frozenset()) -> List[TokenSpan]:
    """NUM (e NUM)* with strictly decreasing magnitude; the value is the sum."""
    def match(i: int, taken: AbstractSet[int]) -> Optional[TokenSpan]:
        total = ctx.numerals.parse_cardinal_word(tokens[i].surface)
        if total is None:
            return None
        end = i + 1
        while end + 1 < len(tokens) and _word(tokens[end]) == ctx.link and _free(taken, end, end + 2):
            part = ctx.numerals.parse_cardinal_word(tokens[end + 1].surface)
            if part is None or part >= lowest_place(total):
                break
            total += part
            end += 2
        surface = " ".join(t.surface for t in tokens[i:end])
        analysis = Analysis(surface, surface.lower(), "NUM", FeatureSet([value_feature(total)]),
                            Provenance.SYNTAX, "match_compound_cardinal")
        return TokenSpan(i, end, (analysis,), "match_compound_cardinal", total)
    return _scan(tokens, covered, match)


def match_xx_word(tokens: Sequence[AnnotatedToken], ctx: GrammarContext,
                  covered: AbstractSet[int] = frozenset()) -> List[TokenSpan]:
    """Hyphenated repetitions (tang-tang) proposed as ONOM, ADV or A, tagged hypo_n."""
    def match(i: int, taken: AbstractSet[int]) -> Optional[TokenSpan]:
        surface = tokens[i].surface
        parts = surface.lower().split("-")
        if len(parts) < 2 or not parts[0] or any(p != parts[0] for p in parts[1:]):
            return None
        analyses = tuple(
            Analysis(surface, surface.lower(), category, FeatureSet(["hypo_n"]), Provenance.SYNTAX, "match_xx_word")
            for category in ("ONOM", "ADV", "A")
        )
        return TokenSpan(i, i + 1, analyses, "match_xx_word")
    return _scan(tokens, covered, match)


CASCADE: Tuple[Grammar, ...] = (
    join_particle_noun,
    match_particle_tense,
    match_full_ordinal,
    match_compound_cardinal,
    match_xx_word,
)
