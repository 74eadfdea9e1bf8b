"""Multi-token grammars: particle joins, particle tenses, ordinals, compound cardinals, X-X words."""
from shqip.syntax.cascade import apply_cascade
from shqip.syntax.grammars import (
    CASCADE,
    GrammarContext,
    join_particle_noun,
    match_compound_cardinal,
    match_full_ordinal,
    match_particle_tense,
    match_xx_word,
)

__all__ = [
    "CASCADE",
    "GrammarContext",
    "apply_cascade",
    "join_particle_noun",
    "match_compound_cardinal",
    "match_full_ordinal",
    "match_particle_tense",
    "match_xx_word",
]
