"""Inflection paradigms: a small cursor-editing language for flexion.

A production is a sequence of commands run on a buffer that starts as the
lemma with the cursor at its end:

    literal   insert the text right after the cursor (the cursor stays put)
    <L> <L2>  move the cursor 1 or 2 units left
    <R> <R2>  move the cursor 1 or 2 units right
    <B> <B2>  delete 1 or 2 units left of the cursor
    <E>       empty sequence (the lemma itself)

A unit is a character in ``char`` mode and a letter in ``grapheme`` mode, where
digraphs such as rr or dh count as one. Example, motër with ``a<L><B>``:
motër| -> motër|a -> motë|ra -> mot|ra = motra.

Definition files hold one or more blocks::

    PARADIGM NS2_t N char
    i           +emer+shquar
    "së "it     +gjin+shquar
"""
import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import TYPE_CHECKING, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from shqip.alphabet import GraphemeString, parse_overrides, segment
from shqip.core.errors import ParadigmApplicationError, ParadigmSyntaxError, ShqipError
from shqip.core.logger import get_logger
from shqip.features import FeatureSchema, FeatureSet, validate

if TYPE_CHECKING:
    from shqip.lexicon.entries import LexEntry

logger = get_logger(__name__)

HEADER = "PARADIGM"
ONE_CHAR_SUFFIX = "_1C"
TWO_CHAR_SUFFIX = "_2C"

Overrides = Mapping[str, Sequence[str]]

_COMMAND_TOKEN = re.compile(r"<([A-Za-z]+)(\d*)>|([^<>]+)|([<>])")
_PARTICLE = re.compile(r'^"([^"]+)"')


class Mode(Enum):
    """Editing unit of a paradigm."""
    CHAR = "char"
    GRAPHEME = "grapheme"


class CommandKind(Enum):
    INSERT = "insert"
    B = "B"
    L = "L"
    R = "R"


@dataclass(frozen=True)
class Command:
    kind: CommandKind
    text: str = ""
    k: int = 1

    def __post_init__(self):
        if self.kind is CommandKind.INSERT and not self.text:
            raise ParadigmSyntaxError("insert command needs a non-empty literal")
        if self.kind is not CommandKind.INSERT and self.k not in (1, 2):
            raise ParadigmSyntaxError(f"<{self.kind.value}{self.k}>: count must be 1 or 2")

    @classmethod
    def insert(cls, text: str) -> "Command":
        return cls(CommandKind.INSERT, text=text)

    def __str__(self) -> str:
        if self.kind is CommandKind.INSERT:
            return self.text
        return f"<{self.kind.value}{self.k if self.k > 1 else ''}>"


def render_commands(commands: Iterable[Command]) -> str:
    """Inverse of :func:`parse_commands` (``<E>`` for the empty sequence)."""
    return "".join(str(c) for c in commands) or "<E>"


@dataclass(frozen=True)
class Production:
    commands: Tuple[Command, ...]
    features: FeatureSet
    particle_prefix: str = ""


@dataclass(frozen=True)
class Paradigm:
    name: str
    category: str
    mode: Mode
    productions: Tuple[Production, ...]

    def productions_with(self, *features: str, particle: Optional[str] = "") -> List[Production]:
        """Productions carrying all given features.

        Args:
            features: Feature tokens that must all be present
            particle: Required particle prefix; None accepts any
        """
        return [
            p for p in self.productions
            if all(f in p.features for f in features)
            and (particle is None or p.particle_prefix == particle)
        ]


def parse_commands(text: str, line: Optional[int] = None) -> Tuple[Command, ...]:
    """Parse a command string such as ``a<L2><B>o``.

    Raises:
        ParadigmSyntaxError: unknown ``<X>`` token or stray bracket
    """
    commands: List[Command] = []
    for match in _COMMAND_TOKEN.finditer(text.strip()):
        name, digits, literal, stray = match.groups()
        if stray:
            raise ParadigmSyntaxError(f"unbalanced '{stray}' in '{text}'", line)
        if literal is not None:
            commands.append(Command.insert(literal))
            continue
        if name == "E" and not digits:
            continue
        try:
            kind = CommandKind(name)
        except ValueError:
            raise ParadigmSyntaxError(f"unknown command <{name}{digits}>", line) from None
        if kind is CommandKind.INSERT:
            raise ParadigmSyntaxError(f"unknown command <{name}{digits}>", line)
        k = int(digits) if digits else 1
        if k not in (1, 2):
            raise ParadigmSyntaxError(f"unknown command <{name}{digits}>", line)
        commands.append(Command(kind, k=k))
    return tuple(commands)


def parse_production(text: str, line: Optional[int] = None) -> Optional[Production]:
    """Parse one production line; blank and comment lines give None."""
    body = text.split("#", 1)[0].rstrip()
    if not body.strip():
        return None
    body = body.lstrip()

    particle = ""
    match = _PARTICLE.match(body)
    if match:
        particle = match.group(1)
        body = body[match.end():]

    if "\t" in body:
        command_text, _, feature_text = body.partition("\t")
    else:
        parts = re.split(r"\s+(?=\+)", body, maxsplit=1)
        command_text, feature_text = parts[0], (parts[1] if len(parts) > 1 else "")
    feature_text = feature_text.strip()

    if feature_text and not re.fullmatch(r"(\+[^+\s]+)+", feature_text):
        raise ParadigmSyntaxError(f"malformed feature suffix '{feature_text}'", line)
    if " " in command_text.strip():
        raise ParadigmSyntaxError(f"spaces in commands '{command_text.strip()}'", line)

    return Production(
        commands=parse_commands(command_text, line),
        features=FeatureSet.parse(feature_text),
        particle_prefix=particle,
    )


def _parse_header(text: str, line: int) -> Tuple[str, str, Mode]:
    parts = text.split()
    if len(parts) not in (3, 4) or parts[0] != HEADER:
        raise ParadigmSyntaxError(f"expected '{HEADER} name CATEGORY [mode]'", line)
    mode_text = parts[3] if len(parts) == 4 else Mode.CHAR.value
    try:
        mode = Mode(mode_text)
    except ValueError:
        raise ParadigmSyntaxError(f"unknown mode '{mode_text}'", line) from None
    return parts[1], parts[2], mode


def parse_library(text: str) -> List[Paradigm]:
    """Parse every ``PARADIGM`` block of a definition text."""
    blocks: List[Tuple[Tuple[str, str, Mode], List[Production], int]] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped.startswith(HEADER + " "):
            blocks.append((_parse_header(stripped, line_no), [], line_no))
            continue
        production = parse_production(line, line_no)
        if production is None:
            continue
        if not blocks:
            raise ParadigmSyntaxError("production before any PARADIGM header", line_no)
        blocks[-1][1].append(production)

    paradigms = []
    for (name, category, mode), productions, line_no in blocks:
        if not productions:
            raise ParadigmSyntaxError(f"paradigm {name} has no productions", line_no)
        paradigms.append(Paradigm(name, category, mode, tuple(productions)))
    return paradigms


def parse_paradigm(
    text: str,
    name: str = "anonymous",
    category: str = "N",
    mode: Mode = Mode.CHAR,
) -> Paradigm:
    """Parse a single paradigm.

    The text may start with a ``PARADIGM`` header; otherwise the keyword
    arguments name it.

    Raises:
        ParadigmSyntaxError: unknown command, malformed features, no productions
    """
    if any(line.strip().startswith(HEADER + " ") for line in text.splitlines()):
        paradigms = parse_library(text)
        if len(paradigms) != 1:
            raise ParadigmSyntaxError(f"expected one paradigm, found {len(paradigms)}")
        return paradigms[0]

    productions = [
        p for p in (parse_production(line, i) for i, line in enumerate(text.splitlines(), 1))
        if p is not None
    ]
    if not productions:
        raise ParadigmSyntaxError(f"paradigm {name} has no productions")
    return Paradigm(name, category, mode, tuple(productions))


def _units(text: str, mode: Mode, overrides: Optional[Overrides] = None) -> List[str]:
    if mode is Mode.GRAPHEME:
        return segment(text, overrides).units
    return list(text)


def apply(
    commands: Iterable[Command],
    lemma: Union[str, GraphemeString],
    mode: Mode = Mode.CHAR,
    paradigm: Optional[str] = None,
    overrides: Optional[Overrides] = None,
) -> str:
    """Run a command sequence on a lemma.

    ``overrides`` replaces greedy segmentation of a string lemma in grapheme mode.

    Raises:
        ParadigmApplicationError: cursor or deletion outside the buffer
    """
    raw = lemma.raw if isinstance(lemma, GraphemeString) else lemma
    if isinstance(lemma, GraphemeString) and mode is Mode.GRAPHEME:
        buffer = lemma.units
    else:
        buffer = _units(raw, mode, overrides)
    cursor = len(buffer)

    for index, command in enumerate(commands):
        if command.kind is CommandKind.INSERT:
            buffer[cursor:cursor] = _units(command.text, mode)
        elif command.kind is CommandKind.L:
            if cursor - command.k < 0:
                raise ParadigmApplicationError(raw, paradigm, index, "cursor moved before start")
            cursor -= command.k
        elif command.kind is CommandKind.R:
            if cursor + command.k > len(buffer):
                raise ParadigmApplicationError(raw, paradigm, index, "cursor moved past end")
            cursor += command.k
        else:
            if cursor - command.k < 0:
                raise ParadigmApplicationError(raw, paradigm, index, "deletion before start")
            del buffer[cursor - command.k:cursor]
            cursor -= command.k

    return "".join(buffer)


def inflect(
    entry: "LexEntry", p: Paradigm, overrides: Optional[Overrides] = None
) -> List[Tuple[str, FeatureSet]]:
    """Generate every flexed form of an entry, in production order."""
    if entry.paradigm != p.name:
        raise ShqipError(f"entry {entry.lemma} uses {entry.paradigm}, not {p.name}")

    lemma = segment(entry.lemma, overrides)
    forms = []
    for production in p.productions:
        try:
            surface = apply(production.commands, lemma, p.mode, p.name)
        except ParadigmApplicationError as e:
            raise ParadigmApplicationError(
                e.lemma, e.paradigm, e.index, f"{e.reason} (entry {entry.render()})"
            ) from e
        forms.append((production.particle_prefix + surface, entry.inherent.union(production.features)))
    return forms


def _is_char_pair(a: Command, b: Command) -> Optional[bool]:
    """True if b is a's 2-unit variant, False if equal, None if incompatible."""
    if a.kind is not b.kind:
        return None
    if a.kind is CommandKind.INSERT:
        return False if a.text == b.text else None
    if a.k == b.k:
        return False
    if a.kind in (CommandKind.L, CommandKind.B) and a.k == 1 and b.k == 2:
        return True
    return None


def collapse_char_pairs(p1: Paradigm, p2: Paradigm, name: Optional[str] = None) -> Optional[Paradigm]:
    """Merge a one-character paradigm and its two-character twin.

    Returns:
        A grapheme-mode paradigm equivalent to ``p1`` on words ending in a
        single-character letter and to ``p2`` on words ending in a digraph,
        or None if the pair does not differ only by <L>/<B> vs <L2>/<B2>.
    """
    if p1.mode is not Mode.CHAR or p2.mode is not Mode.CHAR:
        return None
    if p1.category != p2.category or len(p1.productions) != len(p2.productions):
        return None

    differs = False
    for a, b in zip(p1.productions, p2.productions):
        if a.features != b.features or a.particle_prefix != b.particle_prefix:
            return None
        if len(a.commands) != len(b.commands):
            return None
        for ca, cb in zip(a.commands, b.commands):
            verdict = _is_char_pair(ca, cb)
            if verdict is None:
                return None
            differs = differs or verdict
    if not differs:
        return None

    if name is None:
        name = p1.name[:-len(ONE_CHAR_SUFFIX)] if p1.name.endswith(ONE_CHAR_SUFFIX) else f"{p1.name}_G"
    return Paradigm(name, p1.category, Mode.GRAPHEME, p1.productions)


class ParadigmLibrary:
    """Named collection of paradigms loaded from ``.par`` files."""

    def __init__(self, paradigms: Iterable[Paradigm] = (), overrides: Optional[Overrides] = None):
        self._paradigms: Dict[str, Paradigm] = {}
        # Lemma segmentation exceptions applied when inflecting.
        self.overrides: Dict[str, Tuple[str, ...]] = {w: tuple(s) for w, s in (overrides or {}).items()}
        for paradigm in paradigms:
            self.add(paradigm)

    def add(self, paradigm: Paradigm) -> None:
        if paradigm.name in self._paradigms:
            raise ParadigmSyntaxError(f"duplicate paradigm name {paradigm.name}")
        self._paradigms[paradigm.name] = paradigm

    @classmethod
    def from_text(cls, text: str) -> "ParadigmLibrary":
        return cls(parse_library(text))

    @classmethod
    def load_dir(cls, directory: Union[str, Path], overrides: Optional[Overrides] = None) -> "ParadigmLibrary":
        """Load every ``*.par`` file of a directory, in file name order."""
        library = cls(overrides=overrides)
        files = sorted(Path(directory).glob("*.par"))
        for path in files:
            for paradigm in parse_library(path.read_text(encoding="utf-8")):
                library.add(paradigm)
        logger.info(f"Loaded {len(library)} paradigms from {len(files)} file(s) in {directory}")
        return library

    @classmethod
    def from_config(cls, config) -> "ParadigmLibrary":
        """Configured paradigm directory plus the segmentation override table, if present."""
        path = config.segmentation_overrides_path
        overrides: Dict[str, Tuple[str, ...]] = {}
        if path.is_file():
            overrides = parse_overrides(path.read_text(encoding="utf-8"), str(path))
            logger.info(f"Loaded {len(overrides)} segmentation override(s) from {path}")
        return cls.load_dir(config.paradigms_dir, overrides)

    def get(self, name: str) -> Optional[Paradigm]:
        return self._paradigms.get(name)

    def __getitem__(self, name: str) -> Paradigm:
        return self._paradigms[name]

    def __contains__(self, name: object) -> bool:
        return name in self._paradigms

    def __iter__(self) -> Iterator[Paradigm]:
        return iter(self._paradigms.values())

    def __len__(self) -> int:
        return len(self._paradigms)

    def names(self) -> List[str]:
        return sorted(self._paradigms)

    def for_category(self, category: str) -> List[Paradigm]:
        return [self._paradigms[n] for n in self.names() if self._paradigms[n].category == category]

    def char_pairs(self) -> List[Tuple[Paradigm, Paradigm]]:
        """All (``X_1C``, ``X_2C``) pairs present in the library."""
        pairs = []
        for name in self.names():
            if name.endswith(ONE_CHAR_SUFFIX):
                twin = name[:-len(ONE_CHAR_SUFFIX)] + TWO_CHAR_SUFFIX
                if twin in self._paradigms:
                    pairs.append((self._paradigms[name], self._paradigms[twin]))
        return pairs

    def collapse_pairs(self) -> Dict[str, Paradigm]:
        """Grapheme-mode collapse of every one/two-character pair."""
        collapsed = {}
        for p1, p2 in self.char_pairs():
            merged = collapse_char_pairs(p1, p2)
            if merged is None:
                logger.warning(f"{p1.name}/{p2.name} differ beyond letter width; not collapsed")
                continue
            collapsed[merged.name] = merged
        return collapsed

    def validate(self, schema: FeatureSchema) -> List[str]:
        """Schema violations of every production, prefixed by paradigm name."""
        problems = []
        for paradigm in self:
            for i, production in enumerate(paradigm.productions):
                for violation in validate(production.features, paradigm.category, schema):
                    problems.append(f"{paradigm.name}#{i}: {violation}")
        return problems
