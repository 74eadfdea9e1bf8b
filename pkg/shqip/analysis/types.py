"""Analysis records shared by the recognizers, the grammars and the analyzer."""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from shqip.features import FeatureSet


class Provenance(Enum):
    """Which layer produced an analysis."""
    LEXICON = "lexicon"
    MORPHOGRAMMAR = "morphogrammar"
    SYNTAX = "syntax"
    UNKNOWN = "unknown"


# Rank of each recognizer; lower sorts first.
RULE_RANK = {
    "lexicon": 0,
    "numeric": 1,
    "cardinal": 1,
    "ordinal": 1,
    "roman": 1,
    "affixed": 2,
    "suffix": 2,
    "clitic": 3,
    "unknown": 4,
}


@dataclass(frozen=True)
class Analysis:
    """One reading of a token or span."""
    surface: str
    lemma: str
    category: str
    features: FeatureSet = field(default_factory=FeatureSet)
    provenance: Provenance = Provenance.LEXICON
    rule: str = "lexicon"  # recognizer or grammar name
    parts: Tuple["Analysis", ...] = ()  # clitic + verb readings of one token

    @property
    def rank(self) -> int:
        return RULE_RANK.get(self.rule, 0)

    def render(self) -> str:
        """``lemma,CAT+feats``; composite readings join their parts with a space."""
        if self.parts:
            return " ".join(p.render() for p in self.parts)
        return f"{self.lemma},{self.category}{self.features.render()}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "surface": self.surface,
            "lemma": self.lemma,
            "category": self.category,
            "features": list(self.features),
            "provenance": self.provenance.value,
            "rule": self.rule,
            "parts": [p.to_dict() for p in self.parts],
        }


def unknown(surface: str) -> Analysis:
    return Analysis(surface, surface, "UNKNOWN", FeatureSet(), Provenance.UNKNOWN, "unknown")


def rank_analyses(analyses: List[Analysis]) -> List[Analysis]:
    """Deduplicate and order: lexicon, numeric, affixed, clitic, unknown."""
    seen = set()
    ordered = []
    for analysis in sorted(analyses, key=lambda a: a.rank):
        key = (analysis.lemma, analysis.category, analysis.features, analysis.parts)
        if key not in seen:
            seen.add(key)
            ordered.append(analysis)
    return ordered


@dataclass(frozen=True)
class TokenSpan:
    """Multi-token (or single-token) grammar match, end exclusive."""
    start: int
    end: int
    analyses: Tuple[Analysis, ...]
    rule: str
    value: Optional[int] = None

    @property
    def tokens(self) -> range:
        return range(self.start, self.end)

    def overlaps(self, other: "TokenSpan") -> bool:
        return self.start < other.end and other.start < self.end


@dataclass
class AnnotatedToken:
    """Token in the analyzer output stream."""
    surface: str
    offset: int
    analyses: List[Analysis] = field(default_factory=list)
    span_id: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "surface": self.surface,
            "offset": self.offset,
            "span_id": self.span_id,
            "analyses": [a.to_dict() for a in self.analyses],
        }
