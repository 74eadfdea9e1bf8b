"""Exception hierarchy shared by every shqip module."""
from typing import Optional


class ShqipError(ValueError):
    """Base class for domain errors (CLI exit code 1)."""


class LetterUnderflowError(ShqipError):
    """Raised when more letters are removed than a word holds."""

    def __init__(self, word: str, count: int):
        self.word = word
        self.count = count
        super().__init__(f"Cannot drop {count} letter(s) from '{word}'")


class SchemaError(ShqipError):
    """Raised for malformed or contradictory properties definitions."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class ParadigmSyntaxError(ShqipError):
    """Raised when a paradigm definition cannot be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class ParadigmApplicationError(ShqipError):
    """Raised when a command sequence runs the cursor off the buffer."""

    def __init__(self, lemma: str, paradigm: Optional[str], index: int, reason: str):
        self.lemma = lemma
        self.paradigm = paradigm
        self.index = index
        self.reason = reason
        name = paradigm or "<anonymous>"
        super().__init__(f"{name}: command #{index} on '{lemma}': {reason}")


class LexiconFormatError(ShqipError):
    """Raised for unreadable dictionary lines or compiled containers."""


class TableFormatError(ShqipError):
    """Raised for malformed morphogrammar table rows."""


class OverrideFormatError(ShqipError):
    """Raised for segmentation override lines whose split does not spell the word."""
