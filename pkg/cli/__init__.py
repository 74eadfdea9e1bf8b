"""Command line interface for shqip."""
