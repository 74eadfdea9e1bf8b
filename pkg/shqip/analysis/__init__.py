"""Analysis records and the text analyzer pipeline (``shqip.analysis.analyzer``)."""
from shqip.analysis.types import AnnotatedToken, Analysis, Provenance, TokenSpan

__all__ = ["Analysis", "AnnotatedToken", "Provenance", "TokenSpan"]
