"""Lexicon compilation, lookup and the SQMF1 binary container.

Container layout (all integers little-endian)::

    magic            b"SQMF1"
    header           u32 strings, u32 states, u32 transitions, u32 payload sets
    strings          u32 byte length + UTF-8 bytes, each
    states           i32 payload set (-1 if not accepting), u32 first transition, u32 count
    transitions      u32 code point, u32 target state
    payload sets     u32 size, then per payload:
                     u32 lemma, u32 category, i32 paradigm (-1 if none),
                     u32 feature count, u32 feature string ids
"""
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple, Union

from shqip.core.errors import LexiconFormatError
from shqip.core.logger import get_logger
from shqip.features import FeatureSet
from shqip.lexicon.automaton import Automaton, Trie, minimize
from shqip.lexicon.entries import LexEntry, Payload, render_listing_line
from shqip.paradigm import ParadigmLibrary, inflect

logger = get_logger(__name__)

MAGIC = b"SQMF1"
_U32 = struct.Struct("<I")
_HEADER = struct.Struct("<IIII")
_STATE = struct.Struct("<iII")
_TRANSITION = struct.Struct("<II")
_PAYLOAD = struct.Struct("<IIiI")


@dataclass(frozen=True)
class LexiconStats:
    states: int
    transitions: int
    forms: int
    surfaces: int

    def to_dict(self) -> Dict[str, int]:
        return {
            "states": self.states,
            "transitions": self.transitions,
            "forms": self.forms,
            "surfaces": self.surfaces,
        }


class CompiledLexicon:
    """Minimized automaton over flexed surfaces with per-surface payload sets."""

    def __init__(self, automaton: Automaton, payloads: Sequence[Tuple[Payload, ...]]):
        self.automaton = automaton
        self.payloads: Tuple[Tuple[Payload, ...], ...] = tuple(payloads)
        surfaces = len(automaton.finals)
        forms = sum(len(self.payloads[i]) for i in automaton.finals.values())
        self.stats = LexiconStats(automaton.state_count, automaton.transition_count, forms, surfaces)

    def lookup(self, surface: str) -> FrozenSet[Payload]:
        """Exact-match payloads, retrying case-folded when nothing matches."""
        found = self.automaton.lookup(surface)
        if found is None and surface.lower() != surface:
            found = self.automaton.lookup(surface.lower())
        if found is None:
            return frozenset()
        return frozenset(self.payloads[found])

    def items(self) -> List[Tuple[str, Tuple[Payload, ...]]]:
        """Every accepted surface with its payloads, in code point order."""
        return sorted((s, self.payloads[i]) for s, i in self.automaton.items())

    def save(self, path: Union[str, Path]) -> int:
        """Write the SQMF1 container; returns the byte size."""
        data = serialize(self)
        Path(path).write_bytes(data)
        logger.info(f"Wrote compiled lexicon ({len(data)} bytes) to {path}")
        return len(data)

    @classmethod
    def load(cls, path: Union[str, Path]) -> "CompiledLexicon":
        return deserialize(Path(path).read_bytes())


def expand(entries: Iterable[LexEntry], library: ParadigmLibrary) -> List[Tuple[str, Payload]]:
    """Inflect every entry; invariant entries contribute their lemma.

    Raises:
        LexiconFormatError: an entry names a paradigm absent from the library
        ParadigmApplicationError: a paradigm cannot be applied to an entry
    """
    pairs: List[Tuple[str, Payload]] = []
    for entry in entries:
        if entry.paradigm is None:
            pairs.append((entry.lemma, Payload(entry.lemma, entry.category, entry.inherent)))
            continue
        paradigm = library.get(entry.paradigm)
        if paradigm is None:
            raise LexiconFormatError(f"unknown paradigm {entry.paradigm} in entry {entry.render()}")
        if paradigm.category != entry.category:
            raise LexiconFormatError(
                f"paradigm {paradigm.name} is {paradigm.category}, entry {entry.render()} is not"
            )
        for surface, features in inflect(entry, paradigm, library.overrides):
            pairs.append((surface, Payload(entry.lemma, entry.category, features, paradigm.name)))
    return pairs


def listing(pairs: Iterable[Tuple[str, Payload]]) -> List[str]:
    """``.flx`` listing lines in generation order."""
    return [render_listing_line(surface, payload) for surface, payload in pairs]


def build_trie(pairs: Iterable[Tuple[str, Payload]]) -> Tuple[Trie, List[Tuple[Payload, ...]]]:
    """Unminimized trie plus its deduplicated payload table."""
    grouped: Dict[str, List[Payload]] = {}
    for surface, payload in pairs:
        bucket = grouped.setdefault(surface, [])
        if payload not in bucket:
            bucket.append(payload)

    table: List[Tuple[Payload, ...]] = []
    index: Dict[FrozenSet[Payload], int] = {}
    trie = Trie()
    for surface in sorted(grouped):
        bundle = tuple(grouped[surface])
        key = frozenset(bundle)
        if key not in index:
            index[key] = len(table)
            table.append(bundle)
        trie.insert(surface, index[key])
    return trie, table


def build(pairs: Iterable[Tuple[str, Payload]]) -> CompiledLexicon:
    trie, table = build_trie(pairs)
    automaton = minimize(trie)
    lexicon = CompiledLexicon(automaton, table)
    logger.info(
        f"Compiled lexicon: {lexicon.stats.forms} forms, {lexicon.stats.surfaces} surfaces, "
        f"{trie.state_count} trie states -> {automaton.state_count} states, "
        f"{automaton.transition_count} transitions"
    )
    return lexicon


def compile_lexicon(entries: Iterable[LexEntry], library: ParadigmLibrary) -> CompiledLexicon:
    """Expand entries through their paradigms and compile the result."""
    return build(expand(entries, library))


def serialize(lexicon: CompiledLexicon) -> bytes:
    strings: Dict[str, int] = {}

    def sid(text: str) -> int:
        if text not in strings:
            strings[text] = len(strings)
        return strings[text]

    payload_blob = bytearray()
    for bundle in lexicon.payloads:
        payload_blob += _U32.pack(len(bundle))
        for payload in bundle:
            paradigm = sid(payload.paradigm) if payload.paradigm is not None else -1
            payload_blob += _PAYLOAD.pack(
                sid(payload.lemma), sid(payload.category), paradigm, len(payload.features)
            )
            for feature in payload.features:
                payload_blob += _U32.pack(sid(feature))

    automaton = lexicon.automaton
    state_blob = bytearray()
    transition_blob = bytearray()
    first = 0
    for state, edges in enumerate(automaton.transitions):
        state_blob += _STATE.pack(automaton.finals.get(state, -1), first, len(edges))
        for char in sorted(edges):
            transition_blob += _TRANSITION.pack(ord(char), edges[char])
        first += len(edges)

    out = bytearray(MAGIC)
    out += _HEADER.pack(len(strings), automaton.state_count, first, len(lexicon.payloads))
    for text in strings:
        encoded = text.encode("utf-8")
        out += _U32.pack(len(encoded)) + encoded
    out += state_blob + transition_blob + payload_blob
    return bytes(out)


def deserialize(data: bytes) -> CompiledLexicon:
    """Read an SQMF1 container.

    Raises:
        LexiconFormatError: wrong magic or truncated data
    """
    if not data.startswith(MAGIC):
        raise LexiconFormatError("not an SQMF1 compiled lexicon")
    try:
        offset = len(MAGIC)
        n_strings, n_states, n_transitions, n_payloads = _HEADER.unpack_from(data, offset)
        offset += _HEADER.size

        strings: List[str] = []
        for _ in range(n_strings):
            (length,) = _U32.unpack_from(data, offset)
            offset += _U32.size
            strings.append(data[offset:offset + length].decode("utf-8"))
            offset += length

        states = []
        for _ in range(n_states):
            states.append(_STATE.unpack_from(data, offset))
            offset += _STATE.size

        edges = []
        for _ in range(n_transitions):
            edges.append(_TRANSITION.unpack_from(data, offset))
            offset += _TRANSITION.size

        payloads: List[Tuple[Payload, ...]] = []
        for _ in range(n_payloads):
            (size,) = _U32.unpack_from(data, offset)
            offset += _U32.size
            bundle = []
            for _ in range(size):
                lemma, category, paradigm, n_features = _PAYLOAD.unpack_from(data, offset)
                offset += _PAYLOAD.size
                features = []
                for _ in range(n_features):
                    (feature,) = _U32.unpack_from(data, offset)
                    offset += _U32.size
                    features.append(strings[feature])
                bundle.append(Payload(
                    strings[lemma], strings[category], FeatureSet(features),
                    strings[paradigm] if paradigm >= 0 else None,
                ))
            payloads.append(tuple(bundle))
    except (struct.error, IndexError, UnicodeDecodeError) as e:
        raise LexiconFormatError(f"corrupt SQMF1 container: {e}") from e

    transitions = []
    finals = {}
    for state, (payload, first, count) in enumerate(states):
        transitions.append({chr(code): target for code, target in edges[first:first + count]})
        if payload >= 0:
            finals[state] = payload
    return CompiledLexicon(Automaton(tuple(transitions), finals), payloads)
