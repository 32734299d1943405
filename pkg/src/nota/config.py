"""Run configuration: rule toggles, pass cap, overridable tables.

The config file is JSON with four optional sections; unknown keys are
errors::

    {
      "rules": {"R-SEP": false},
      "pipeline": {"max_passes": 4},
      "lexicon": {"verbs": "path/to/verbs.tsv"},
      "tables": {
        "variant_map": {"گ": "ڨ"},
        "fused_prepositions": {"فال": "في ال"},
        "vowel_similarity": {"œ": "U"}
      }
    }
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from .rules import DEFAULT_FUSED_PREPOSITIONS, RULE_IDS


class ConfigError(Exception):
    pass


@dataclass(frozen=True)
class Config:
    rules: Mapping[str, bool] = field(default_factory=dict)
    max_passes: int = 4
    fused_prepositions: Mapping[str, str] = field(
        default_factory=lambda: dict(DEFAULT_FUSED_PREPOSITIONS)
    )
    vowel_similarity: Mapping[str, str] = field(default_factory=dict)
    variant_map: Mapping[str, str] | None = None
    lexicon_paths: Mapping[str, Path] = field(default_factory=dict)

    def rule_enabled(self, rule_id: str) -> bool:
        return self.rules.get(rule_id, True)


DEFAULT_CONFIG = Config()

_SECTIONS = {"rules", "pipeline", "lexicon", "tables"}
_TABLES = {"variant_map", "fused_prepositions", "vowel_similarity"}
_LEXICON_ROLES = {"verbs", "prepositions", "known_words", "variant_map", "gaf_words"}


def _require_str_mapping(obj: object, where: str) -> dict[str, str]:
    if not isinstance(obj, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in obj.items()
    ):
        raise ConfigError(f"{where} must be an object of strings")
    return dict(obj)


def parse_config(doc: object, base_dir: Path | None = None) -> Config:
    if not isinstance(doc, dict):
        raise ConfigError("config root must be an object")
    unknown = set(doc) - _SECTIONS
    if unknown:
        raise ConfigError(f"unknown config sections: {sorted(unknown)}")

    rules: dict[str, bool] = {}
    for key, value in (doc.get("rules") or {}).items():
        if key not in RULE_IDS:
            raise ConfigError(f"unknown rule id in config: {key!r}")
        if not isinstance(value, bool):
            raise ConfigError(f"rules.{key} must be a boolean")
        rules[key] = value

    pipeline = doc.get("pipeline") or {}
    unknown = set(pipeline) - {"max_passes"}
    if unknown:
        raise ConfigError(f"unknown pipeline keys: {sorted(unknown)}")
    max_passes = pipeline.get("max_passes", 4)
    if not isinstance(max_passes, int) or max_passes < 1:
        raise ConfigError("pipeline.max_passes must be a positive integer")

    lexicon = doc.get("lexicon") or {}
    unknown = set(lexicon) - _LEXICON_ROLES
    if unknown:
        raise ConfigError(f"unknown lexicon roles in config: {sorted(unknown)}")
    lexicon_paths = {}
    for role, value in lexicon.items():
        if not isinstance(value, str):
            raise ConfigError(f"lexicon.{role} must be a path string")
        path = Path(value)
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        lexicon_paths[role] = path

    tables = doc.get("tables") or {}
    unknown = set(tables) - _TABLES
    if unknown:
        raise ConfigError(f"unknown tables in config: {sorted(unknown)}")
    fused = dict(DEFAULT_FUSED_PREPOSITIONS)
    if "fused_prepositions" in tables:
        fused = _require_str_mapping(tables["fused_prepositions"], "tables.fused_prepositions")
    vowel_similarity = {}
    if "vowel_similarity" in tables:
        vowel_similarity = _require_str_mapping(tables["vowel_similarity"], "tables.vowel_similarity")
        if not all(v in {"A", "E", "I", "U"} for v in vowel_similarity.values()):
            raise ConfigError("tables.vowel_similarity values must be A, E, I or U")
    variant_map = None
    if "variant_map" in tables:
        variant_map = _require_str_mapping(tables["variant_map"], "tables.variant_map")

    return Config(
        rules=rules,
        max_passes=max_passes,
        fused_prepositions=fused,
        vowel_similarity=vowel_similarity,
        variant_map=variant_map,
        lexicon_paths=lexicon_paths,
    )


def load_config(path: Path | str) -> Config:
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON in {path}: {exc}") from exc
    return parse_config(doc, base_dir=path.parent)
