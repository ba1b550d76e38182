"""
JSON loader for categories and presheaves.

Files are checked against a JSON schema before the structural validation in
model.fincat / model.presheaf runs, so shape errors and axiom errors are
reported separately.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

import jsonschema

from model.errors import MalformedInput
from model.fincat.category import FinCategory, category_to_dict, validate_category
from model.presheaf.presheaf import Presheaf, presheaf_from_dict
from model.sites import GlobalRegistry, example, register_all_sites

logger = logging.getLogger(__name__)

CATEGORY_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["objects", "morphisms", "identities"],
    "properties": {
        "name": {"type": "string"},
        "objects": {"type": "array", "items": {"type": "string"}},
        "morphisms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "dom", "cod"],
                "properties": {
                    "id": {"type": "string"},
                    "dom": {"type": "string"},
                    "cod": {"type": "string"},
                },
            },
        },
        "identities": {"type": "object", "additionalProperties": {"type": "string"}},
        "compose": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "string"}, "minItems": 3, "maxItems": 3},
        },
    },
}

PRESHEAF_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["base", "elements"],
    "properties": {
        "name": {"type": "string"},
        "base": {"oneOf": [{"type": "string"}, CATEGORY_SCHEMA]},
        "elements": {"type": "object", "additionalProperties": {"type": "array", "items": {"type": "string"}}},
        "action": {
            "type": "object",
            "additionalProperties": {"type": "object", "additionalProperties": {"type": "string"}},
        },
    },
}


def _check(raw: Any, schema: Dict[str, Any], what: str) -> None:
    try:
        jsonschema.validate(instance=raw, schema=schema)
    except jsonschema.ValidationError as e:
        location = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise MalformedInput(f"{what} at {location}: {e.message}")


def _read_json(path: Union[str, Path]) -> Any:
    path = Path(path)
    if not path.exists():
        raise MalformedInput(f"file not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"{path} is not valid JSON: {e}")


def category_from_json(raw: Any, name: str = "") -> FinCategory:
    _check(raw, CATEGORY_SCHEMA, "category")
    return validate_category(raw, name=name or raw.get("name", ""))


def load_category(path: Union[str, Path]) -> FinCategory:
    """Read, schema-check and validate a category file."""
    raw = _read_json(path)
    _check(raw, CATEGORY_SCHEMA, "category")
    cat = validate_category(raw, name=raw.get("name") or Path(path).stem)
    logger.debug("loaded %s from %s", cat.describe(), path)
    return cat


def dump_category(cat: FinCategory, path: Optional[Union[str, Path]] = None) -> str:
    """JSON text of a category, also written to ``path`` when given."""
    text = json.dumps(category_to_dict(cat), indent=2, ensure_ascii=False)
    if path is not None:
        Path(path).write_text(text + "\n", encoding="utf-8")
    return text


def _looks_like_file(ref: str) -> bool:
    return ref.endswith(".json") or "/" in ref or Path(ref).is_file()


def resolve_site(ref: str, size_limit: Optional[int] = None) -> FinCategory:
    """
    A site from a JSON file path or a registry reference (``delta:2``,
    ``finset:3``, ``parallel_arrows``).
    """
    if _looks_like_file(ref):
        return load_category(ref)
    register_all_sites()
    return GlobalRegistry.build_ref(ref, size_limit)


def presheaf_from_json(raw: Any, base: Optional[FinCategory] = None, name: str = "") -> Presheaf:
    """
    Validate a presheaf description; ``base`` overrides the description's own
    base reference.
    """
    _check(raw, PRESHEAF_SCHEMA, "presheaf")
    if base is None:
        ref = raw["base"]
        base = category_from_json(ref) if isinstance(ref, dict) else resolve_site(ref)
    return presheaf_from_dict(base, raw, name=name)


def load_presheaf(path: Union[str, Path], base: Optional[FinCategory] = None) -> Presheaf:
    raw = _read_json(path)
    _check(raw, PRESHEAF_SCHEMA, "presheaf")
    return presheaf_from_json(raw, base, name=raw.get("name") or Path(path).stem)


def dump_presheaf(X: Presheaf, path: Optional[Union[str, Path]] = None) -> str:
    text = json.dumps(X.to_dict(), indent=2, ensure_ascii=False)
    if path is not None:
        Path(path).write_text(text + "\n", encoding="utf-8")
    return text


def resolve_presheaf(ref: str, base: Optional[Union[str, FinCategory]] = None) -> Presheaf:
    """
    A presheaf from a JSON file, or an example expression over ``base``.

    Raises:
        MalformedInput: an example expression without a base
    """
    if isinstance(base, str):
        base = resolve_site(base)
    if _looks_like_file(ref):
        return load_presheaf(ref, base)
    if base is None:
        raise MalformedInput(f"example {ref!r} needs --base")
    return example(ref, base)
