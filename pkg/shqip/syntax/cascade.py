"""Fixed-order application of the sentence grammars."""
from typing import Iterable, List, Optional, Sequence, Set

from shqip.analysis.types import AnnotatedToken, TokenSpan
from shqip.core.logger import get_logger
from shqip.syntax.grammars import CASCADE, Grammar, GrammarContext

logger = get_logger(__name__)


def apply_cascade(
    tokens: Sequence[AnnotatedToken],
    ctx: GrammarContext,
    spans: Iterable[TokenSpan] = (),
    grammars: Optional[Sequence[Grammar]] = None,
) -> List[TokenSpan]:
    """Run every grammar in order over one sentence.

    Spans passed in are kept and their tokens stay untouched, so feeding the
    result back in returns it unchanged.

    Args:
        tokens: Annotated tokens of a single sentence
        ctx: Lexicon, numerals and particle inventories
        spans: Spans found by an earlier run
        grammars: Grammar order (defaults to the standard cascade)

    Returns:
        All spans, sorted by start token
    """
    result = list(spans)
    covered: Set[int] = {i for span in result for i in span.tokens}
    for grammar in grammars or CASCADE:
        found = grammar(tokens, ctx, frozenset(covered))
        for span in found:
            covered.update(span.tokens)
        if found:
            logger.debug(f"{grammar.__name__}: {len(found)} span(s)")
        result.extend(found)
    return sorted(result, key=lambda s: s.start)
