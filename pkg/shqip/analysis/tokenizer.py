"""Word and sentence tokenization shared by ``analyze`` and ``stats``.

A token is a maximal run of letters of the Albanian alphabet, in either case;
an apostrophe or hyphen stays inside a token only between two letters
(Mit'hat, projekt-ligj, tang-tang). Other characters, w and accented foreign
letters included, separate tokens. Sentences end at ``.``, ``?`` and ``!``.
"""
import re
from dataclasses import dataclass
from typing import Iterator, List

from shqip.alphabet import ALPHABET_ORDER

_LETTERS = "".join(sorted({c for letter in ALPHABET_ORDER for c in letter + letter.upper()}))
TOKEN = re.compile(rf"[{_LETTERS}]+(?:['’-][{_LETTERS}]+)*")
SENTENCE_END = re.compile(r"[.?!]")


@dataclass(frozen=True)
class Token:
    surface: str
    offset: int


def tokenize(text: str) -> List[Token]:
    return [Token(m.group(), m.start()) for m in TOKEN.finditer(text)]


def iter_sentences(text: str) -> Iterator[List[Token]]:
    """Tokens grouped by sentence; empty sentences are skipped."""
    ends = [m.start() for m in SENTENCE_END.finditer(text)]
    current: List[Token] = []
    boundary = 0
    for token in tokenize(text):
        while boundary < len(ends) and ends[boundary] < token.offset:
            if current:
                yield current
                current = []
            boundary += 1
        current.append(token)
    if current:
        yield current


def split_sentences(text: str) -> List[List[Token]]:
    return list(iter_sentences(text))
