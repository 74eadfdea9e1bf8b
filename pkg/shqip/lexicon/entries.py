"""Dictionary entries and the NooJ-style text formats.

``.dic`` lines::

    agim,N+FLX=NS2_t+m+s
    së afërmi, ADV
    afër, PREP+rrjedh

``.flx`` listing lines (one per flexed form)::

    së agimit,agim,N+FLX=NS2_t+m+s+gjin+shquar
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, List, Optional, Tuple, Union

from shqip.core.errors import LexiconFormatError
from shqip.features import FeatureSet

FLX_KEY = "FLX"


@dataclass(frozen=True)
class LexEntry:
    """One dictionary line: lemma, category, paradigm and inherent features."""
    lemma: str
    category: str
    paradigm: Optional[str] = None
    inherent: FeatureSet = field(default_factory=FeatureSet)

    def render(self) -> str:
        flx = f"+{FLX_KEY}={self.paradigm}" if self.paradigm else ""
        return f"{self.lemma},{self.category}{flx}{self.inherent.render()}"


@dataclass(frozen=True)
class Payload:
    """What an accepted surface maps to in the compiled lexicon."""
    lemma: str
    category: str
    features: FeatureSet
    paradigm: Optional[str] = None

    def info(self) -> str:
        """``CAT+FLX=Name+feat`` rendering used by the listing."""
        flx = f"+{FLX_KEY}={self.paradigm}" if self.paradigm else ""
        return f"{self.category}{flx}{self.features.render()}"

    @property
    def key(self) -> Tuple[str, str, FeatureSet]:
        return (self.lemma, self.category, self.features)


def _parse_info(info: str, where: str) -> Tuple[str, Optional[str], FeatureSet]:
    parts = [p.strip() for p in info.split("+")]
    category = parts[0]
    if not category or not category.isupper():
        raise LexiconFormatError(f"{where}: missing category in '{info}'")
    paradigm = None
    features = []
    for part in parts[1:]:
        if not part:
            raise LexiconFormatError(f"{where}: empty feature in '{info}'")
        if part.startswith(f"{FLX_KEY}="):
            paradigm = part[len(FLX_KEY) + 1:]
        else:
            features.append(part)
    return category, paradigm, FeatureSet(features)


def parse_dic_line(line: str, where: str = "<text>") -> Optional[LexEntry]:
    """Parse one ``.dic`` line; blank and ``#`` lines give None.

    Raises:
        LexiconFormatError: missing comma or category
    """
    body = line.split("#", 1)[0].strip()
    if not body:
        return None
    lemma, sep, info = body.rpartition(",")
    if not sep or not lemma.strip():
        raise LexiconFormatError(f"{where}: expected 'lemma,CATEGORY...' in '{body}'")
    category, paradigm, features = _parse_info(info, where)
    return LexEntry(lemma.strip(), category, paradigm, features)


def parse_dic(text: str, source: str = "<text>") -> List[LexEntry]:
    entries = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        entry = parse_dic_line(line, f"{source}:{line_no}")
        if entry is not None:
            entries.append(entry)
    return entries


def load_dic(path: Union[str, Path]) -> List[LexEntry]:
    """Read a ``.dic`` file."""
    path = Path(path)
    return parse_dic(path.read_text(encoding="utf-8"), str(path))


def write_dic(entries: Iterable[LexEntry], path: Union[str, Path]) -> int:
    lines = [entry.render() for entry in entries]
    Path(path).write_text("".join(f"{line}\n" for line in lines), encoding="utf-8")
    return len(lines)


def render_listing_line(surface: str, payload: Payload) -> str:
    return f"{surface},{payload.lemma},{payload.info()}"


def parse_listing(text: str, source: str = "<text>") -> Iterator[Tuple[str, Payload]]:
    """Read ``surface,lemma,INFO`` lines back into (surface, payload) pairs."""
    for line_no, line in enumerate(text.splitlines(), start=1):
        body = line.strip()
        if not body or body.startswith("#"):
            continue
        parts = body.split(",")
        if len(parts) != 3:
            raise LexiconFormatError(f"{source}:{line_no}: expected 'surface,lemma,INFO'")
        surface, lemma, info = parts
        category, paradigm, features = _parse_info(info, f"{source}:{line_no}")
        yield surface, Payload(lemma, category, features, paradigm)
