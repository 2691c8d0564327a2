from utils.config_utils import apply_env_overrides, get_config
from utils.pool_utils import run_parallel
from utils.report_utils import SCHEMA_VERSION, emit_document, render_json, to_jsonable

__all__ = [
    "apply_env_overrides",
    "get_config",
    "run_parallel",
    "SCHEMA_VERSION",
    "emit_document",
    "render_json",
    "to_jsonable",
]
