"""Shared fixtures: the shipped paradigms, schema, tables and seed lexicon."""
import pytest

from shqip.analysis.analyzer import Analyzer
from shqip.core.config import get_config
from shqip.features import load_schema_file
from shqip.lexicon.compiled import build_trie, compile_lexicon, expand
from shqip.lexicon.entries import load_dic
from shqip.morphogrammar.numerals import grammar_for
from shqip.morphogrammar.tables import Morphotables
from shqip.paradigm import ParadigmLibrary


@pytest.fixture(scope="session")
def config():
    """Configuration of the repository's own data directory."""
    return get_config()


@pytest.fixture(scope="session")
def library(config):
    return ParadigmLibrary.from_config(config)


@pytest.fixture(scope="session")
def schema(config):
    return load_schema_file(config.features_path)


@pytest.fixture(scope="session")
def seed_entries(config):
    return [entry for path in config.dictionary_paths for entry in load_dic(path)]


@pytest.fixture(scope="session")
def seed_pairs(seed_entries, library):
    """(surface, payload) pairs of every flexed form in the seed dictionary."""
    return expand(seed_entries, library)


@pytest.fixture(scope="session")
def seed_trie(seed_pairs):
    return build_trie(seed_pairs)


@pytest.fixture(scope="session")
def lexicon(seed_entries, library):
    """Compiled seed lexicon, built once per test session."""
    return compile_lexicon(seed_entries, library)


@pytest.fixture(scope="session")
def tables(config):
    return Morphotables.from_config(config)


@pytest.fixture(scope="session")
def numerals(tables):
    return grammar_for(tables.numerals)


@pytest.fixture(scope="session")
def analyzer(config, lexicon):
    return Analyzer.from_config(config, lexicon)
