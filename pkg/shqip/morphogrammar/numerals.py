"""Cardinal, ordinal and Roman numerals written as single tokens.

Cardinals are concatenations of atoms, optionally joined by the linking
``e``: pesëdhjetë (50), dyzetenjë (41), dyqindedy (202). Ordinals replace the
last atom by its ordinal ending: pestë (5th), dyzetenjëhtë (41st).
"""
import re
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Optional

from shqip.analysis.types import Analysis, Provenance
from shqip.core.logger import get_logger
from shqip.features import FeatureSet
from shqip.morphogrammar.tables import NumeralLexicon

logger = get_logger(__name__)

MAX_BELOW_THOUSAND = 999
MAX_CARDINAL = 999_999

_ROMAN = re.compile(r"^M{0,3}(CM|CD|D?C{0,3})(XC|XL|L?X{0,3})(IX|IV|V?I{0,3})$")
_ROMAN_VALUES = (
    (1000, "M"), (900, "CM"), (500, "D"), (400, "CD"), (100, "C"), (90, "XC"),
    (50, "L"), (40, "XL"), (10, "X"), (9, "IX"), (5, "V"), (4, "IV"), (1, "I"),
)


class NumeralGrammar:
    """Generative numeral grammar over a :class:`NumeralLexicon`.

    Every spelling of 1..999 is generated up front (with and without the
    linking element, with every unit variant such as tre/tri); parsing is a
    dictionary lookup, thousands are split on the thousand atom.
    """

    def __init__(self, lexicon: NumeralLexicon):
        self.lexicon = lexicon
        self.link = lexicon.link
        self.thousand = lexicon.word_for(1000, "thousand")
        self.forms: Dict[str, int] = {}
        for n in range(1, MAX_BELOW_THOUSAND + 1):
            for form in self._spellings(n):
                self.forms.setdefault(form, n)
        self._ordinals = sorted(lexicon.ordinals.values(), key=lambda a: (-len(a.word), a.word))

    def _words(self, value: int, *kinds: str) -> List[str]:
        return [a.word for a in self.lexicon.of_kind(*kinds) if a.value == value]

    def _joined(self, left: List[str], right: List[str], canonical: bool = False) -> Iterator[str]:
        links = [self.link] if canonical else [self.link, ""]
        for a, link, b in product(left, links, right):
            yield f"{a}{link}{b}"

    def _below_hundred(self, n: int, canonical: bool = False) -> List[str]:
        if n < 10:
            return self._words(n, "unit")
        if n % 10 == 0:
            return self._words(n, "ten")
        if n < 20:
            teens = self._words(10, "teen")
            return [u + t for u, t in product(self._words(n - 10, "unit"), teens)]
        tens = self._words(n - n % 10, "ten")
        return list(self._joined(tens, self._words(n % 10, "unit"), canonical))

    def _spellings(self, n: int, canonical: bool = False) -> List[str]:
        hundreds, rest = divmod(n, 100)
        if not hundreds:
            return self._below_hundred(rest, canonical)
        heads = [u + h for u, h in product(self._words(hundreds, "unit"), self._words(100, "hundred"))]
        if hundreds == 1 and not canonical:
            heads += self._words(100, "hundred")
        if not rest:
            return heads
        return list(self._joined(heads, self._below_hundred(rest, canonical), canonical))

    def parse_cardinal_word(self, token: str) -> Optional[int]:
        """Value of a concatenated cardinal, or None."""
        token = token.lower()
        if token in self.forms:
            return self.forms[token]
        if not self.thousand or self.thousand not in token:
            return None
        head, _, tail = token.partition(self.thousand)
        multiplier = 1 if not head else self.forms.get(head)
        if multiplier is None:
            return None
        if not tail:
            return multiplier * 1000
        if tail.startswith(self.link) and tail[len(self.link):] in self.forms:
            tail = tail[len(self.link):]
        rest = self.forms.get(tail)
        return None if rest is None else multiplier * 1000 + rest

    def render_cardinal_word(self, n: int) -> str:
        """Canonical concatenated spelling, groups joined by the linking element.

        Raises:
            ValueError: n outside 1..999999
        """
        if not 1 <= n <= MAX_CARDINAL:
            raise ValueError(f"{n} outside 1..{MAX_CARDINAL}")
        thousands, rest = divmod(n, 1000)
        below = self._spellings(rest, canonical=True)[0] if rest else ""
        if not thousands:
            return below
        head = self._spellings(thousands, canonical=True)[0] if thousands > 1 else self._words(1, "unit")[0]
        text = f"{head}{self.thousand}"
        return f"{text}{self.link}{below}" if below else text

    def parse_ordinal(self, token: str) -> Optional[int]:
        """Value of an ordinal body such as pestë or dyzetenjëhtë, or None."""
        token = token.lower()
        for atom in self._ordinals:
            if not token.endswith(atom.word):
                continue
            head = token[:-len(atom.word)]
            if atom.kind == "ordinal_alone":
                if not head:
                    return atom.value
                continue
            if atom.kind == "ordinal_final" and not head:
                continue
            cardinal = self.lexicon.word_for(atom.value, "unit", "ten", "teen", "hundred", "thousand")
            if cardinal is None:
                continue
            value = self.parse_cardinal_word(head + cardinal)
            if value is not None:
                return value
        return None


def parse_roman(token: str) -> Optional[int]:
    """Subtractive Roman value of an upper-case token, None if ill-formed."""
    if not token or not _ROMAN.match(token):
        return None
    value, i = 0, 0
    for amount, symbol in _ROMAN_VALUES:
        while token.startswith(symbol, i):
            value += amount
            i += len(symbol)
    return value


def to_roman(n: int) -> str:
    if not 1 <= n <= 3999:
        raise ValueError(f"{n} outside 1..3999")
    out = []
    for amount, symbol in _ROMAN_VALUES:
        count, n = divmod(n, amount)
        out.append(symbol * count)
    return "".join(out)


def lowest_place(value: int) -> int:
    """Place of the lowest non-zero digit: 550 -> 10, 500 -> 100, 41 -> 1."""
    place = 1
    while value and value % (place * 10) == 0:
        place *= 10
    return place


@lru_cache(maxsize=8)
def grammar_for(lexicon: NumeralLexicon) -> NumeralGrammar:
    grammar = NumeralGrammar(lexicon)
    logger.debug(f"Numeral grammar ready: {len(grammar.forms)} spellings below one thousand")
    return grammar


def value_feature(value: int) -> str:
    return f"Val={value}"


def parse_cardinal_word(token: str, grammar: NumeralGrammar) -> Optional[int]:
    return grammar.parse_cardinal_word(token)


def recognize_cardinal(token: str, grammar: NumeralGrammar) -> Optional[Analysis]:
    value = grammar.parse_cardinal_word(token)
    if value is None:
        return None
    return Analysis(token, token, "NUM", FeatureSet([value_feature(value)]),
                    Provenance.MORPHOGRAMMAR, "cardinal")


def recognize_ordinal_body(token: str, grammar: NumeralGrammar) -> Optional[Analysis]:
    """Adjective reading of an ordinal body, its value as a ``Val`` feature."""
    value = grammar.parse_ordinal(token)
    if value is None:
        return None
    return Analysis(token, token, "A", FeatureSet([value_feature(value)]),
                    Provenance.MORPHOGRAMMAR, "ordinal")


def recognize_roman(token: str) -> Optional[Analysis]:
    value = parse_roman(token)
    if value is None:
        return None
    return Analysis(token, token, "NUM", FeatureSet([value_feature(value)]),
                    Provenance.MORPHOGRAMMAR, "roman")
