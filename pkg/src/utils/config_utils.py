import os
from typing import Any, Dict, Optional

import toml

GLOBAL_SECTION = "weil_tools"

# Keys in the global section that every command inherits unless its own section overrides them
INHERITED_KEYS = [
    "logging_level",
    "parallelism",
    "output_format",
    "primes",
    "max_rank",
    "max_pn",
    "group_cap",
    "omega_cn_strict",
    "seed",
]

# Environment variables that override caps, loaded through python-dotenv by main()
ENV_OVERRIDES = {
    "WEIL_TOOLS_MAX_PN": "max_pn",
    "WEIL_TOOLS_MAX_RANK": "max_rank",
    "WEIL_TOOLS_GROUP_CAP": "group_cap",
    "WEIL_TOOLS_PARALLELISM": "parallelism",
}


def default_config_path() -> str:
    current_dir = os.path.dirname(os.path.abspath(__file__))
    project_root = os.path.dirname(os.path.dirname(current_dir))
    return os.path.join(project_root, "config.toml")


def get_config(
    tool_name: str, config_path: Optional[str] = None, required: bool = False
) -> Dict[str, Any]:
    """Helper function to process the config.toml file

    A missing default config file yields an empty section; an explicit path that does not exist
    (or required=True) raises FileNotFoundError.
    """
    explicit = config_path is not None
    if config_path is None:
        config_path = default_config_path()

    if not os.path.exists(config_path):
        if explicit or required:
            raise FileNotFoundError(f"Config file not found at {config_path}")
        return {}

    with open(config_path, "r") as f:
        config = toml.load(f)

    if required and tool_name not in config:
        raise KeyError(f"Configuration for '{tool_name}' not found in config file")

    tool_config: Dict[str, Any] = dict(config.get(tool_name, {}))

    if GLOBAL_SECTION in config and tool_name != GLOBAL_SECTION:
        global_config = config[GLOBAL_SECTION]

        # Apply global settings if not set in the command-specific section
        for key in INHERITED_KEYS:
            if key in global_config and key not in tool_config:
                tool_config[key] = global_config[key]

    return tool_config


def apply_env_overrides(tool_config: Dict[str, Any]) -> Dict[str, Any]:
    """Overlay integer caps taken from the environment onto a config section."""
    merged = dict(tool_config)
    for env_var, key in ENV_OVERRIDES.items():
        raw = os.getenv(env_var)
        if raw is None or raw.strip() == "":
            continue
        try:
            merged[key] = int(raw)
        except ValueError as e:
            raise ValueError(
                f"Environment variable '{env_var}' must be an integer, got {raw!r}"
            ) from e
    return merged
