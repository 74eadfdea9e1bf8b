"""Import of printed-dictionary lines into dictionary entries.

Recognized formats::

    aeroplan,-i m. pl. (-ë, -ët) plane     noun: rad[/t1],-t2 g. [pl. (-t3, -t4)]
    laj (lava, larë) to wash               active verb: form1 (form2, participle)
    lahem (u lava, larë) to wash oneself   non-active verb: form1 (u form2, participle)
    mirë (i,e) good / absurd(e) absurd     articulated / plain adjective
    afër adv. and prep. + abl. near        invariants, with prepositional case
    adio! excl. adieu!                     interjection

Lines that match none of them become problems; nothing raises.
"""
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from shqip.alphabet import GraphemeString, segment
from shqip.core.errors import ParadigmApplicationError
from shqip.core.logger import get_logger
from shqip.features import FeatureSet
from shqip.lexicon.entries import LexEntry
from shqip.paradigm import Paradigm, ParadigmLibrary, Production, apply

logger = get_logger(__name__)

# Case abbreviations after "prep. +"
CASE_FEATURES = {
    "abl": "rrjedh",
    "acc": "kallez",
    "gen": "gjin",
    "nom": "emer",
    "dat": "dhan",
}

INVARIANT_CATEGORIES = {"adv": "ADV", "prep": "PREP", "conj": "CONJ"}

AMBIGEN_PLURAL_ENDINGS = ("e",)

_ADJECTIVE = re.compile(
    r"^(?P<lemma>[^\s(),]+)\s*\(\s*(?:(?P<ie>i\s*,\s*e)|(?P<e>e))\s*\)\s*(?P<gloss>.*)$"
)
_VERB = re.compile(
    r"^(?P<form1>[^\s(),]+)\s*\(\s*(?P<u>u\s+)?(?P<form2>[^\s(),]+)\s*,\s*"
    r"(?P<participle>[^\s(),]+)\s*\)\s*(?P<gloss>.*)$"
)
_NOUN = re.compile(
    r"^(?P<radical>[^\s/,]+?)(?:/(?P<t1>[^\s/,]+))?\s*,\s*-(?P<t2>[^\s,;]+)"
    r"(?:\s+(?P<gender>[mf])\.,?)?"
    r"(?:\s*(?:pl\.|nb\.)?\s*\(\s*-(?P<t3>[^\s,;()]+)\s*[,;]\s*-(?P<t4>[^\s,;()]+)\s*\))?"
    r"\s*(?P<gloss>.*)$"
)
_INTERJECTION = re.compile(r"^(?P<lemma>[^!]+?)\s*!\s*excl[.!]\s*(?P<gloss>.*)$")
_INVARIANT = re.compile(
    r"^(?P<lemma>.+?)\s+(?P<pos>(?:adv|prep|conj)\.(?:\s*(?:and|,)\s*(?:adv|prep|conj)\.)*)"
    r"(?:\s*\+\s*(?P<case>abl|acc|gen|nom|dat)\.)?\s*(?P<gloss>.*)$"
)


class PrintedKind(Enum):
    NOUN = "noun"
    ACTIVE_VERB = "active_verb"
    NONACTIVE_VERB = "nonactive_verb"
    ADJECTIVE = "adjective"
    INVARIANT = "invariant"


@dataclass(frozen=True)
class NounRecord:
    radical: str
    t1: str
    t2: str
    gender: str
    t3: Optional[str] = None
    t4: Optional[str] = None

    @property
    def lemma(self) -> str:
        return self.radical + self.t1

    @property
    def definite(self) -> str:
        return self.radical + self.t2

    @property
    def plural(self) -> Tuple[Optional[str], Optional[str]]:
        """Indefinite and definite plural nominatives, when printed."""
        if self.t3 is None:
            return None, None
        return self.radical + self.t3, self.radical + self.t4


@dataclass(frozen=True)
class VerbRecord:
    form1: str
    form2: str
    participle: str
    nonactive: bool = False

    @property
    def aorist(self) -> str:
        """Aorist 1s as printed, with the non-active particle."""
        return f"u {self.form2}" if self.nonactive else self.form2


@dataclass(frozen=True)
class AdjectiveRecord:
    lemma: str
    articulated: bool

    @property
    def feminine(self) -> str:
        return self.lemma if self.articulated else f"{self.lemma}e"


@dataclass(frozen=True)
class InvariantRecord:
    lemma: str
    readings: Tuple[Tuple[str, FeatureSet], ...]


Record = Union[NounRecord, VerbRecord, AdjectiveRecord, InvariantRecord]


@dataclass(frozen=True)
class PrintedEntry:
    """One printed-dictionary line, parsed or rejected."""
    raw: str
    kind: Optional[PrintedKind] = None
    record: Optional[Record] = None
    gloss: str = ""
    problem: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.problem is None

    @property
    def status(self) -> str:
        return "ok" if self.ok else f"problem({self.problem})"


def _infer_gender(t2: str) -> str:
    # Masculine definite endings are -i/-u, feminine ones -a/-ja.
    return "f" if t2.endswith("a") else "m"


def parse_printed(line: str) -> PrintedEntry:
    """Dispatch a printed line on its format cues.

    Args:
        line: Raw dictionary line

    Returns:
        PrintedEntry with status ok, or problem(empty | unrecognized)
    """
    text = line.strip()
    if not text:
        return PrintedEntry(raw=line, problem="empty")

    match = _ADJECTIVE.match(text)
    if match:
        record = AdjectiveRecord(match["lemma"], articulated=match["ie"] is not None)
        return PrintedEntry(line, PrintedKind.ADJECTIVE, record, match["gloss"])

    match = _VERB.match(text)
    if match:
        nonactive = match["u"] is not None
        record = VerbRecord(match["form1"], match["form2"], match["participle"], nonactive)
        kind = PrintedKind.NONACTIVE_VERB if nonactive else PrintedKind.ACTIVE_VERB
        return PrintedEntry(line, kind, record, match["gloss"])

    match = _NOUN.match(text)
    if match:
        t2 = match["t2"]
        record = NounRecord(
            radical=match["radical"],
            t1=match["t1"] or "",
            t2=t2,
            gender=match["gender"] or _infer_gender(t2),
            t3=match["t3"],
            t4=match["t4"],
        )
        return PrintedEntry(line, PrintedKind.NOUN, record, match["gloss"])

    match = _INTERJECTION.match(text)
    if match:
        record = InvariantRecord(match["lemma"], (("INTERJ", FeatureSet()),))
        return PrintedEntry(line, PrintedKind.INVARIANT, record, match["gloss"])

    match = _INVARIANT.match(text)
    if match:
        readings = []
        for pos in re.findall(r"(adv|prep|conj)\.", match["pos"]):
            category = INVARIANT_CATEGORIES[pos]
            features = FeatureSet()
            if category == "PREP" and match["case"]:
                features = FeatureSet([CASE_FEATURES[match["case"]]])
            if (category, features) not in readings:
                readings.append((category, features))
        record = InvariantRecord(match["lemma"], tuple(readings))
        return PrintedEntry(line, PrintedKind.INVARIANT, record, match["gloss"])

    return PrintedEntry(raw=line, problem="unrecognized")


def _produce(production: Production, lemma: Union[str, GraphemeString], paradigm: Paradigm) -> Optional[str]:
    try:
        return production.particle_prefix + apply(production.commands, lemma, paradigm.mode, paradigm.name)
    except ParadigmApplicationError:
        return None


def _first_output(paradigm: Paradigm, lemma: Union[str, GraphemeString], *features: str) -> Tuple[bool, Optional[str]]:
    """(present, surface) of the first bare production carrying ``features``."""
    productions = paradigm.productions_with(*features)
    if not productions:
        return False, None
    return True, _produce(productions[0], lemma, paradigm)


def _matches(paradigm: Paradigm, lemma: Union[str, GraphemeString], expected: Dict[Tuple[str, ...], Optional[str]]) -> bool:
    """True when every checkable expectation holds and at least one was checked."""
    checked = False
    for features, surface in expected.items():
        if surface is None:
            continue
        present, produced = _first_output(paradigm, lemma, *features)
        if not present:
            continue
        if produced != surface:
            return False
        checked = True
    return checked


def _pick(candidates: Sequence[Paradigm], lemma: str, role: str) -> Optional[str]:
    if not candidates:
        return None
    names = sorted(p.name for p in candidates)
    if len(names) > 1:
        logger.warning(f"{lemma}: {role} matches {', '.join(names)}; using {names[0]}")
    return names[0]


def _assign_noun(record: NounRecord, library: ParadigmLibrary,
                 ambigen_endings: Sequence[str]) -> Tuple[List[LexEntry], Optional[str]]:
    lemma = record.lemma
    word = segment(lemma, library.overrides)
    singular = [
        p for p in library.for_category("N")
        if p.productions_with("emer", "shquar")
        and _matches(p, word, {("emer", "shquar"): record.definite, ("emer", "pashquar"): lemma})
    ]
    name = _pick(singular, lemma, "singular")
    if name is None:
        return [], "no_paradigm"
    entries = [LexEntry(lemma, "N", name, FeatureSet([record.gender, "s"]))]

    t3, t4 = record.plural
    if t3 is not None:
        plural = [
            p for p in library.for_category("N")
            if p.name != name
            and _matches(p, word, {("emer", "pashquar"): t3, ("emer", "shquar"): t4})
        ]
        plural_name = _pick(plural, lemma, "plural")
        if plural_name is None:
            return [], "no_paradigm(plural)"
        gender = record.gender
        if gender == "m" and any(record.t3.endswith(e) for e in ambigen_endings):
            gender = "f"
        entries.append(LexEntry(lemma, "N", plural_name, FeatureSet([gender, "p"])))
    return entries, None


def _assign_verb(record: VerbRecord, library: ParadigmLibrary) -> Tuple[List[LexEntry], Optional[str]]:
    word = segment(record.form1, library.overrides)
    candidates = []
    for p in library.for_category("V"):
        aorists = [
            _produce(prod, word, p)
            for prod in p.productions_with("PS", "Ind", "1", "s", particle=None)
        ]
        participles = [_produce(prod, word, p) for prod in p.productions_with("P")]
        if record.aorist in aorists and record.participle in participles:
            candidates.append(p)
    name = _pick(candidates, record.form1, "verb")
    if name is None:
        return [], "no_paradigm"
    inherent = FeatureSet(["joveprore"] if record.nonactive else [])
    return [LexEntry(record.form1, "V", name, inherent)], None


def _assign_adjective(record: AdjectiveRecord, library: ParadigmLibrary) -> Tuple[List[LexEntry], Optional[str]]:
    candidates = [
        p for p in library.for_category("A")
        if _matches(p, segment(record.lemma, library.overrides), {("f", "s"): record.feminine})
    ]
    name = _pick(candidates, record.lemma, "adjective")
    if name is None:
        return [], "no_paradigm"
    inherent = FeatureSet(["ei"] if record.articulated else [])
    return [LexEntry(record.lemma, "A", name, inherent)], None


def assign_paradigm(
    entry: PrintedEntry,
    library: ParadigmLibrary,
    ambigen_endings: Sequence[str] = AMBIGEN_PLURAL_ENDINGS,
) -> Tuple[List[LexEntry], Optional[str]]:
    """Choose paradigms reproducing the printed citation forms.

    Args:
        entry: Parsed printed line
        library: Paradigms to choose from
        ambigen_endings: Plural endings that make a masculine noun feminine in the plural

    Returns:
        Tuple of (entries, problem). Nouns with a printed plural give two
        entries; problem is None on success.
    """
    if not entry.ok:
        return [], entry.problem
    record = entry.record
    if isinstance(record, NounRecord):
        return _assign_noun(record, library, ambigen_endings)
    if isinstance(record, VerbRecord):
        return _assign_verb(record, library)
    if isinstance(record, AdjectiveRecord):
        return _assign_adjective(record, library)
    return [LexEntry(record.lemma, category, None, features) for category, features in record.readings], None


@dataclass
class ImportReport:
    entries: List[LexEntry] = field(default_factory=list)
    problems: List[Tuple[str, str]] = field(default_factory=list)
    lines: int = 0

    def problem_lines(self) -> List[str]:
        return [f"{raw}\t{reason}" for raw, reason in self.problems]


def import_printed(
    lines: Iterable[str],
    library: ParadigmLibrary,
    ambigen_endings: Sequence[str] = AMBIGEN_PLURAL_ENDINGS,
) -> ImportReport:
    """Parse and assign every non-blank line; problems are collected, not raised."""
    report = ImportReport()
    for line in lines:
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        report.lines += 1
        parsed = parse_printed(line)
        entries, problem = assign_paradigm(parsed, library, ambigen_endings)
        if problem is not None:
            report.problems.append((line.strip(), problem))
            continue
        report.entries.extend(entries)
    logger.info(
        f"Imported {report.lines} printed lines: {len(report.entries)} entries, "
        f"{len(report.problems)} problems"
    )
    return report
