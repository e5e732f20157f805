import logging
import os
from typing import Any, Dict, Optional

import yaml

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = os.path.join("configs", "arcspline.yaml")


def load_config(section: Optional[str] = None, path: Optional[str] = None) -> Dict[str, Any]:
    """Load configs/arcspline.yaml (or `path`), optionally one top-level section.

    Missing files and YAML errors give an empty mapping; callers fall back to
    their built-in defaults.
    """
    config_path = path or os.path.join(os.getcwd(), DEFAULT_CONFIG_PATH)
    if not os.path.isfile(config_path):
        if path:
            logger.warning("Config file not found: %s", config_path)
        return {}
    try:
        with open(config_path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except (OSError, yaml.YAMLError) as e:
        logger.warning("Failed to load config %s: %s", config_path, e)
        return {}
    if not isinstance(data, dict):
        logger.warning("Ignoring config %s: top level is not a mapping", config_path)
        return {}
    if section is None:
        return data
    return data.get(section, {}) or {}
