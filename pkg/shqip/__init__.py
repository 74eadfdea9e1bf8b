"""Morphological analysis toolkit for Albanian."""

__version__ = "0.1.0"
