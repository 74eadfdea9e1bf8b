"""Morphogrammar data tables: numeral atoms, affixes and numeric suffixes.

All tables are UTF-8, TAB separated, ``#`` starts a comment.

``numerals.tab``::

    pesë        5       unit
    dyzet       40      ten
    mbëdhjetë   10      teen
    qind        100     hundred
    pestë       5       ordinal

``affixes.tab``: one prefix per line; ``-fob`` style lines are suffix forms
with an optional category column.

``numsuffix.tab``: suffix, comma separated categories, ``+`` features.
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from shqip.core.errors import TableFormatError
from shqip.core.logger import get_logger
from shqip.features import FeatureSet

logger = get_logger(__name__)

CARDINAL_KINDS = ("unit", "ten", "teen", "hundred", "thousand", "link")
ORDINAL_KINDS = ("ordinal", "ordinal_final", "ordinal_alone")
NUMERAL_KINDS = CARDINAL_KINDS + ORDINAL_KINDS


def _rows(text: str, source: str) -> Iterator[Tuple[int, List[str]]]:
    for line_no, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if body:
            yield line_no, [cell.strip() for cell in body.split("\t") if cell.strip()]


@dataclass(frozen=True)
class NumeralAtom:
    word: str
    value: int
    kind: str


@dataclass(frozen=True)
class NumeralLexicon:
    """Cardinal atoms and ordinal endings, each keyed by word form.

    An ordinal ending (pestë, njëhtë, dyzetë ...) stands for the cardinal atom
    of the same value; ``ordinal_final`` endings only close a longer numeral,
    ``ordinal_alone`` ones (parë) only stand alone.
    """
    atoms: Dict[str, NumeralAtom] = field(default_factory=dict)
    ordinals: Dict[str, NumeralAtom] = field(default_factory=dict)

    def of_kind(self, *kinds: str) -> List[NumeralAtom]:
        return [a for a in self.atoms.values() if a.kind in kinds]

    def word_for(self, value: int, *kinds: str) -> Optional[str]:
        """First listed atom of ``kinds`` with this value."""
        for atom in self.of_kind(*kinds):
            if atom.value == value:
                return atom.word
        return None

    @property
    def link(self) -> str:
        links = self.of_kind("link")
        return links[0].word if links else "e"

    def __hash__(self) -> int:
        return hash((tuple(self.atoms), tuple(self.ordinals)))


def load_numerals(text: str, source: str = "<numerals>") -> NumeralLexicon:
    """Parse ``numerals.tab``.

    Raises:
        TableFormatError: wrong column count, non-positive value, unknown kind
            or a word listed twice in the cardinal or the ordinal group
    """
    atoms: Dict[str, NumeralAtom] = {}
    ordinals: Dict[str, NumeralAtom] = {}
    for line_no, cells in _rows(text, source):
        if len(cells) != 3:
            raise TableFormatError(f"{source}:{line_no}: expected 'atom TAB value TAB kind'")
        word, value_text, kind = cells
        if kind not in NUMERAL_KINDS:
            raise TableFormatError(f"{source}:{line_no}: unknown kind '{kind}'")
        try:
            value = int(value_text)
        except ValueError:
            raise TableFormatError(f"{source}:{line_no}: value '{value_text}' is not an integer") from None
        if value <= 0 and kind != "link":
            raise TableFormatError(f"{source}:{line_no}: value of '{word}' must be positive")
        group = ordinals if kind in ORDINAL_KINDS else atoms
        if word in group:
            raise TableFormatError(f"{source}:{line_no}: '{word}' listed twice")
        group[word] = NumeralAtom(word, value, kind)
    return NumeralLexicon(atoms, ordinals)


@dataclass(frozen=True)
class AffixTable:
    """Prefixes for XY words and recognized suffix forms."""
    prefixes: Tuple[str, ...] = ()
    suffix_forms: Mapping[str, str] = field(default_factory=dict)

    def prefixes_longest_first(self) -> List[str]:
        return sorted(self.prefixes, key=lambda p: (-len(p), p))

    def __hash__(self) -> int:
        return hash(self.prefixes)


def load_affixes(text: str, source: str = "<affixes>") -> AffixTable:
    prefixes: List[str] = []
    suffixes: Dict[str, str] = {}
    for line_no, cells in _rows(text, source):
        form = cells[0]
        if form.startswith("-"):
            suffixes[form[1:]] = cells[1] if len(cells) > 1 else "N"
        elif form not in prefixes:
            prefixes.append(form)
    return AffixTable(tuple(prefixes), suffixes)


@dataclass(frozen=True)
class NumericSuffix:
    suffix: str
    readings: Tuple[Tuple[str, FeatureSet], ...]


def load_numeric_suffixes(text: str, source: str = "<numsuffix>") -> Dict[str, NumericSuffix]:
    """Parse ``numsuffix.tab`` into suffix -> (category, features) readings."""
    table: Dict[str, NumericSuffix] = {}
    for line_no, cells in _rows(text, source):
        if len(cells) not in (2, 3):
            raise TableFormatError(f"{source}:{line_no}: expected 'suffix TAB categories [TAB features]'")
        suffix, categories = cells[0], cells[1]
        features = FeatureSet.parse(cells[2]) if len(cells) == 3 else FeatureSet()
        readings = tuple((c.strip(), features) for c in categories.split(",") if c.strip())
        if suffix in table:
            readings = table[suffix].readings + readings
        table[suffix] = NumericSuffix(suffix, readings)
    return table


@dataclass(frozen=True)
class Morphotables:
    """Every table the dynamic recognizers need."""
    numerals: NumeralLexicon
    affixes: AffixTable
    numeric_suffixes: Dict[str, NumericSuffix]

    @classmethod
    def load(cls, numerals: Union[str, Path], affixes: Union[str, Path],
             numeric_suffixes: Union[str, Path]) -> "Morphotables":
        tables = cls(
            numerals=load_numerals(Path(numerals).read_text(encoding="utf-8"), str(numerals)),
            affixes=load_affixes(Path(affixes).read_text(encoding="utf-8"), str(affixes)),
            numeric_suffixes=load_numeric_suffixes(
                Path(numeric_suffixes).read_text(encoding="utf-8"), str(numeric_suffixes)
            ),
        )
        logger.info(
            f"Loaded {len(tables.numerals.atoms)} numeral atoms, {len(tables.affixes.prefixes)} prefixes, "
            f"{len(tables.numeric_suffixes)} numeric suffixes"
        )
        return tables

    @classmethod
    def from_config(cls, config) -> "Morphotables":
        return cls.load(
            config.table_path("numerals"),
            config.table_path("affixes"),
            config.table_path("numeric_suffixes"),
        )

    def __hash__(self) -> int:
        return hash((self.numerals, self.affixes, tuple(self.numeric_suffixes)))
