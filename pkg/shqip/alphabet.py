"""Albanian alphabet: grapheme segmentation, collation and case handling.

Nine consonants are written with two characters (dh gj ll nj rr sh th xh zh)
and count as a single letter everywhere: in segmentation, in alphabetical
order and in the letter-level editing primitives used by the paradigms.
"""
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from shqip.core.errors import LetterUnderflowError, OverrideFormatError

ALPHABET_ORDER = (
    "a b c ç d dh e ë f g gj h i j k l ll m n nj o p "
    "q r rr s sh t th u v x xh y z zh"
).split()
VOWELS = frozenset("a e ë i o u y".split())
DIGRAPHS = frozenset(letter for letter in ALPHABET_ORDER if len(letter) == 2)

# Opaque characters sort after every letter of the alphabet.
OPAQUE_RANK = len(ALPHABET_ORDER)


@dataclass(frozen=True)
class Letter:
    """One of the 36 letters of the alphabet."""
    index: int
    chars: str
    is_digraph: bool
    is_vowel: bool


LETTERS: Tuple[Letter, ...] = tuple(
    Letter(index=i, chars=chars, is_digraph=len(chars) == 2, is_vowel=chars in VOWELS)
    for i, chars in enumerate(ALPHABET_ORDER)
)
LETTER_BY_CHARS: Dict[str, Letter] = {letter.chars: letter for letter in LETTERS}


@dataclass(frozen=True)
class Grapheme:
    """One element of a segmented word.

    ``text`` keeps the original casing; ``letter`` is None for characters
    outside the alphabet (digits, punctuation, foreign letters).
    """
    text: str
    letter: Optional[Letter] = None

    @property
    def is_opaque(self) -> bool:
        return self.letter is None

    def sort_key(self) -> Tuple[int, int]:
        if self.letter is None:
            return (OPAQUE_RANK, ord(self.text))
        return (self.letter.index, 0)


@dataclass(frozen=True)
class GraphemeString:
    """A word as a sequence of graphemes, alongside its raw characters."""
    letters: Tuple[Grapheme, ...]
    raw: str

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return self.raw

    @property
    def units(self) -> List[str]:
        """Surface text of each element, in order."""
        return [g.text for g in self.letters]

    def sort_key(self) -> Tuple[Tuple[Tuple[int, int], ...], str]:
        # Raw text breaks ties between words that differ only in case.
        return (tuple(g.sort_key() for g in self.letters), self.raw)


def _match_at(text: str, pos: int) -> Grapheme:
    pair = text[pos:pos + 2]
    if len(pair) == 2 and pair.lower() in LETTER_BY_CHARS:
        return Grapheme(pair, LETTER_BY_CHARS[pair.lower()])
    char = text[pos]
    return Grapheme(char, LETTER_BY_CHARS.get(char.lower()))


def segment(text: str, overrides: Optional[Mapping[str, Sequence[str]]] = None) -> GraphemeString:
    """Split text into letters by greedy longest match, case-insensitively.

    Args:
        text: Any character sequence
        overrides: Optional word -> explicit letter split table, for the rare
            morpheme boundaries that happen to spell a digraph

    Returns:
        GraphemeString whose elements concatenate back to ``text``
    """
    if overrides and text in overrides:
        split = list(overrides[text])
        if "".join(split) == text:
            return GraphemeString(
                tuple(Grapheme(part, LETTER_BY_CHARS.get(part.lower())) for part in split),
                text,
            )

    letters: List[Grapheme] = []
    pos = 0
    while pos < len(text):
        grapheme = _match_at(text, pos)
        letters.append(grapheme)
        pos += len(grapheme.text)
    return GraphemeString(tuple(letters), text)


def parse_overrides(text: str, source: str = "<overrides>") -> Dict[str, Tuple[str, ...]]:
    """Read ``word<TAB>l e t t e r s`` lines into a segmentation override table.

    Raises:
        OverrideFormatError: a row without a split, or a split that does not spell its word
    """
    table: Dict[str, Tuple[str, ...]] = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        word, _, split = line.partition("\t")
        parts = tuple(split.split())
        if not parts or "".join(parts) != word:
            raise OverrideFormatError(f"{source}:{line_no}: split '{split}' does not spell '{word}'")
        table[word] = parts
    return table


def collate(a: GraphemeString, b: GraphemeString) -> int:
    """Compare two words in Albanian alphabetical order.

    Returns:
        -1, 0 or 1 (less, equal, greater)
    """
    ka, kb = a.sort_key(), b.sort_key()
    return (ka > kb) - (ka < kb)


def sort_key(word: str) -> Tuple[Tuple[Tuple[int, int], ...], str]:
    """Key function for sorting plain strings in Albanian order."""
    return segment(word).sort_key()


def sort_words(words: Iterable[str]) -> List[str]:
    """Sort words in Albanian alphabetical order."""
    segmented = [segment(w) for w in words]
    segmented.sort(key=cmp_to_key(collate))
    return [g.raw for g in segmented]


def drop_last(word: GraphemeString, n: int) -> GraphemeString:
    """Remove the last ``n`` letters of a word (a digraph counts as one).

    Raises:
        LetterUnderflowError: if ``n`` exceeds the letter length of ``word``
    """
    if n < 0 or n > len(word.letters):
        raise LetterUnderflowError(word.raw, n)
    kept = word.letters[:len(word.letters) - n]
    return GraphemeString(kept, "".join(g.text for g in kept))


def drop_last_chars(word: str, n: int) -> str:
    """Character-level counterpart of :func:`drop_last`."""
    if n < 0 or n > len(word):
        raise LetterUnderflowError(word, n)
    return word[:len(word) - n]


def is_vowel(char: str) -> bool:
    return char.lower() in VOWELS
