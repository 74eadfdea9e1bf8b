"""Letter trie and its minimization into an acyclic deterministic automaton.

Accepting states carry an index into a payload table. Two states are merged
when they have the same payload index and the same outgoing transitions to
already-merged states, so suffixes shared by many flexed forms (-it, -eve,
-ën ...) are stored once.
"""
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

Signature = Tuple[int, Tuple[Tuple[str, int], ...]]


class Trie:
    """Mutable prefix tree over characters; one state per distinct prefix."""

    def __init__(self):
        self.transitions: List[Dict[str, int]] = [{}]
        self.finals: Dict[int, int] = {}

    def insert(self, word: str, payload_id: int) -> None:
        state = 0
        for char in word:
            nxt = self.transitions[state].get(char)
            if nxt is None:
                nxt = len(self.transitions)
                self.transitions.append({})
                self.transitions[state][char] = nxt
            state = nxt
        self.finals[state] = payload_id

    def lookup(self, word: str) -> Optional[int]:
        state = 0
        for char in word:
            state = self.transitions[state].get(char)
            if state is None:
                return None
        return self.finals.get(state)

    @property
    def state_count(self) -> int:
        return len(self.transitions)

    def items(self) -> Iterator[Tuple[str, int]]:
        """Every accepted word with its payload index."""
        return _walk(self.transitions, self.finals)


@dataclass(frozen=True)
class Automaton:
    """Minimal acyclic DFA; state 0 is the start state."""
    transitions: Tuple[Dict[str, int], ...]
    finals: Dict[int, int]

    def lookup(self, word: str) -> Optional[int]:
        state = 0
        for char in word:
            state = self.transitions[state].get(char)
            if state is None:
                return None
        return self.finals.get(state)

    @property
    def state_count(self) -> int:
        return len(self.transitions)

    @property
    def transition_count(self) -> int:
        return sum(len(t) for t in self.transitions)

    def items(self) -> Iterator[Tuple[str, int]]:
        return _walk(self.transitions, self.finals)

    def is_acyclic(self) -> bool:
        """Depth-first check that no state reaches itself."""
        visiting, done = set(), set()
        stack: List[Tuple[int, Iterator[int]]] = [(0, iter(self.transitions[0].values()))]
        visiting.add(0)
        while stack:
            state, children = stack[-1]
            child = next(children, None)
            if child is None:
                stack.pop()
                visiting.discard(state)
                done.add(state)
            elif child in visiting:
                return False
            elif child not in done:
                visiting.add(child)
                stack.append((child, iter(self.transitions[child].values())))
        return True


def _walk(transitions, finals) -> Iterator[Tuple[str, int]]:
    stack: List[Tuple[int, str]] = [(0, "")]
    while stack:
        state, prefix = stack.pop()
        if state in finals:
            yield prefix, finals[state]
        for char in sorted(transitions[state], reverse=True):
            stack.append((transitions[state][char], prefix + char))


def minimize(trie: Trie) -> Automaton:
    """Merge equivalent trie states bottom-up and renumber breadth-first."""
    register: Dict[Signature, int] = {}
    canonical: Dict[int, int] = {}
    merged_edges: List[Dict[str, int]] = []
    merged_finals: Dict[int, int] = {}

    # Post-order: children are canonicalized before their parent.
    order: List[int] = []
    stack = [(0, False)]
    while stack:
        state, expanded = stack.pop()
        if expanded:
            order.append(state)
            continue
        stack.append((state, True))
        for child in trie.transitions[state].values():
            stack.append((child, False))

    for state in order:
        edges = tuple(sorted((c, canonical[t]) for c, t in trie.transitions[state].items()))
        signature = (trie.finals.get(state, -1), edges)
        if signature not in register:
            register[signature] = len(merged_edges)
            merged_edges.append(dict(edges))
            if signature[0] >= 0:
                merged_finals[register[signature]] = signature[0]
        canonical[state] = register[signature]

    # Breadth-first renumbering gives a stable layout for serialization.
    root = canonical[0]
    numbering = {root: 0}
    queue = deque([root])
    while queue:
        state = queue.popleft()
        for char in sorted(merged_edges[state]):
            target = merged_edges[state][char]
            if target not in numbering:
                numbering[target] = len(numbering)
                queue.append(target)

    transitions: List[Dict[str, int]] = [{} for _ in numbering]
    finals: Dict[int, int] = {}
    for old, new in numbering.items():
        transitions[new] = {c: numbering[t] for c, t in sorted(merged_edges[old].items())}
        if old in merged_finals:
            finals[new] = merged_finals[old]
    return Automaton(tuple(transitions), finals)
