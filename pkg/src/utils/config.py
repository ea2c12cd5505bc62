import os
import json
from dataclasses import dataclass, field
from src.utils.logger import logger

CONFIG_FILENAME = "patternore_config.json"

DEFAULT_KS = (2, 3, 4)


@dataclass(frozen=True)
class OracleBudget:
    """Hard vertex limits for the exact oracles."""
    hamiltonian: int = 12
    longest_path: int = 12
    min_leaf_tree: int = 10


@dataclass(frozen=True)
class SurveyOptions:
    ks: tuple = DEFAULT_KS
    workers: int = 1
    connected_only: bool = False
    dedupe: bool = False
    progress: bool = False
    budget: OracleBudget = field(default_factory=OracleBudget)


def load_config(config_path: str = None) -> dict:
    """
    Loads the optional JSON config. A missing file yields {}.
    """
    if config_path is None:
        agent_root = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", ".."))
        config_path = os.path.join(agent_root, CONFIG_FILENAME)

    if os.path.exists(config_path):
        try:
            with open(config_path, 'r') as f:
                return json.load(f)
        except Exception as e:
            logger.warning(f"Failed to load {config_path}: {e}")
    return {}


def budget_from_config(config: dict) -> OracleBudget:
    section = config.get("oracle_budget", {})
    defaults = OracleBudget()
    return OracleBudget(
        hamiltonian=int(section.get("hamiltonian", defaults.hamiltonian)),
        longest_path=int(section.get("longest_path", defaults.longest_path)),
        min_leaf_tree=int(section.get("min_leaf_tree", defaults.min_leaf_tree)),
    )


def survey_options_from_config(config: dict, **overrides) -> SurveyOptions:
    """
    Merges CLI overrides (None means "not given") over the config file's
    "survey" section over built-in defaults.
    """
    section = config.get("survey", {})
    merged = {
        "ks": tuple(section.get("ks", DEFAULT_KS)),
        "workers": int(section.get("workers", 1)),
        "connected_only": bool(section.get("connected_only", False)),
        "dedupe": bool(section.get("dedupe", False)),
        "progress": bool(section.get("progress", False)),
    }
    for key, value in overrides.items():
        if value is not None:
            merged[key] = tuple(value) if key == "ks" else value
    return SurveyOptions(budget=budget_from_config(config), **merged)
