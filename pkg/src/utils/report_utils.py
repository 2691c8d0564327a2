import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional

from utils.rich_utils import console

SCHEMA_VERSION = 1


def to_jsonable(value: Any) -> Any:
    """Convert report payloads into plain JSON types with a stable layout."""
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return [to_jsonable(v) for v in sorted(value)]
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, int):
        return int(value)
    if isinstance(value, float):
        return float(f"{value:.12g}")
    if isinstance(value, complex):
        return [float(f"{value.real:.12g}"), float(f"{value.imag:.12g}")]
    # numpy scalars and anything else that knows how to become a python number
    if hasattr(value, "item"):
        return to_jsonable(value.item())
    return str(value)


def render_json(command: str, result: Any) -> str:
    document: Dict[str, Any] = {
        "schema": SCHEMA_VERSION,
        "command": command,
        "result": to_jsonable(result),
    }
    return json.dumps(document, sort_keys=True, separators=(",", ": "), indent=2)


def emit_document(text: str, output_path: Optional[str] = None) -> None:
    """Print the document to stdout or write it to output_path."""
    if output_path is None:
        console.print(text, markup=False, highlight=False, emoji=False, soft_wrap=True)
        return

    path = Path(output_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
        f.write("\n")
