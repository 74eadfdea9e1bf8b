"""Configuration loading and data directory resolution."""
import os
import yaml
from pathlib import Path
from typing import Dict, Any, Optional, List
from dotenv import load_dotenv
from shqip.core.logger import get_logger

load_dotenv()
logger = get_logger(__name__)

PROJECT_ROOT = Path(__file__).resolve().parent.parent.parent

DEFAULTS: Dict[str, Any] = {
    "analyzer": {
        "particles": ["i", "e", "të", "së"],
        "clitics": ["e", "i"],
        "tense_particles": {"future": "do", "subjunctive": "të", "nonactive": "u"},
        "workers": 1,
    },
    "lexicon": {
        "dictionaries": ["lexicon/seed.dic"],
        "paradigms": "paradigms",
        "features": "features.def",
        "ambigen_plural_endings": ["e"],
        "segmentation_overrides": "segmentation.tab",
    },
    "tables": {
        "affixes": "tables/affixes.tab",
        "numerals": "tables/numerals.tab",
        "numeric_suffixes": "tables/numsuffix.tab",
    },
}


class Config:
    """Configuration loader and manager."""

    def __init__(self, base_path: Optional[str] = None, data_dir: Optional[str] = None):
        """Initialize config loader.

        Args:
            base_path: Project directory holding ``config/`` (defaults to project root)
            data_dir: Data directory override (defaults to $SHQIP_DATA, then ``base_path/data``)
        """
        self.base_path = Path(base_path) if base_path else PROJECT_ROOT
        self.config_dir = self.base_path / "config"

        env_data = os.getenv("SHQIP_DATA")
        if data_dir:
            self.data_dir = Path(data_dir)
        elif env_data:
            self.data_dir = Path(env_data)
        else:
            self.data_dir = self.base_path / "data"

        self.settings = self._merge(DEFAULTS, self.load_yaml(str(self.config_dir / "analyzer.yaml")))
        # Set by the CLI --paradigms / --tables flags.
        self.paradigms_override: Optional[Path] = None
        self.tables_override: Optional[Path] = None

    def load_yaml(self, file_path: str) -> Dict[str, Any]:
        """Load a YAML file.

        Args:
            file_path: Path to YAML file

        Returns:
            Parsed YAML as dict
        """
        path = Path(file_path)
        if not path.exists():
            logger.warning(f"YAML file not found: {file_path}")
            return {}

        with open(path, 'r', encoding='utf-8') as f:
            try:
                return yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                logger.error(f"Error parsing YAML {file_path}: {e}")
                return {}

    @staticmethod
    def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
        merged = dict(base)
        for key, value in override.items():
            if isinstance(value, dict) and isinstance(merged.get(key), dict):
                merged[key] = Config._merge(merged[key], value)
            else:
                merged[key] = value
        return merged

    def section(self, name: str) -> Dict[str, Any]:
        """Return one top-level section of the merged settings."""
        return self.settings.get(name, {})

    def data_path(self, relative: str) -> Path:
        """Resolve a path relative to the data directory."""
        path = Path(relative)
        return path if path.is_absolute() else self.data_dir / path

    @property
    def paradigms_dir(self) -> Path:
        if self.paradigms_override:
            return self.paradigms_override
        return self.data_path(self.section("lexicon")["paradigms"])

    @property
    def features_path(self) -> Path:
        return self.data_path(self.section("lexicon")["features"])

    @property
    def segmentation_overrides_path(self) -> Path:
        return self.data_path(self.section("lexicon")["segmentation_overrides"])

    @property
    def dictionary_paths(self) -> List[Path]:
        return [self.data_path(p) for p in self.section("lexicon")["dictionaries"]]

    def table_path(self, name: str) -> Path:
        """Path of a morphogrammar table (affixes, numerals, numeric_suffixes)."""
        if self.tables_override:
            return self.tables_override / Path(self.section("tables")[name]).name
        return self.data_path(self.section("tables")[name])


def get_config(base_path: Optional[str] = None, data_dir: Optional[str] = None) -> Config:
    """Factory function to get a config instance.

    Args:
        base_path: Optional base path override
        data_dir: Optional data directory override

    Returns:
        Config instance
    """
    return Config(base_path, data_dir)
