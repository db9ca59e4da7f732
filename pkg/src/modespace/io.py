"""
모드 집합 JSON 입출력

{ "dim": int,
  "modes": [{"id": str, "vec": [scalar-literal, ...]}],
  "contexts": [{"id": str, "modes": [str, ...]}] }
"""

import json
from pathlib import Path
from typing import Any, Dict, Union

import jsonschema

from src.common.errors import ModeSetError, ScalarError
from src.scalars import EXACT, ScalarBackend

from .hypergraph import Context, ModeHypergraph, ModeVector

MODESET_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["dim", "modes", "contexts"],
    "properties": {
        "dim": {"type": "integer", "minimum": 1},
        "modes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "vec"],
                "properties": {
                    "id": {"type": "string", "minLength": 1},
                    "vec": {"type": "array", "items": {"type": ["string", "integer"]}},
                },
            },
        },
        "contexts": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "modes"],
                "properties": {
                    "id": {"type": "string", "minLength": 1},
                    "modes": {"type": "array", "items": {"type": "string"}},
                },
            },
        },
    },
}


def modeset_from_dict(raw: Dict[str, Any], backend: ScalarBackend = EXACT) -> ModeHypergraph:
    try:
        jsonschema.validate(raw, MODESET_SCHEMA)
    except jsonschema.ValidationError as e:
        where = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise ModeSetError(f"mode-set field {where}: {e.message}") from None

    modes = []
    for i, entry in enumerate(raw["modes"]):
        try:
            comps = tuple(backend.coerce(str(x)) for x in entry["vec"])
        except ScalarError as e:
            raise ModeSetError(f"mode-set field modes/{i}/vec: {e}") from None
        modes.append(ModeVector(entry["id"], comps))

    ids = {m.id for m in modes}
    contexts = []
    for i, entry in enumerate(raw["contexts"]):
        for mid in entry["modes"]:
            if mid not in ids:
                raise ModeSetError(f"mode-set field contexts/{i}/modes: unknown mode id {mid!r}")
        contexts.append(Context(entry["id"], tuple(entry["modes"])))

    return ModeHypergraph(raw["dim"], tuple(modes), tuple(contexts))


def load_modeset(path: Union[str, Path], backend: ScalarBackend = EXACT) -> ModeHypergraph:
    try:
        with open(path, "r", encoding="utf-8") as f:
            raw = json.load(f)
    except FileNotFoundError:
        raise ModeSetError(f"mode-set file not found: {path}") from None
    except json.JSONDecodeError as e:
        raise ModeSetError(f"mode-set file {path} is not valid JSON: {e.msg}") from None
    return modeset_from_dict(raw, backend)


def modeset_to_dict(h: ModeHypergraph) -> Dict[str, Any]:
    backend = h.backend
    return {
        "dim": h.dim,
        "modes": [
            {"id": m.id, "vec": [backend.to_literal(c) for c in m.components]} for m in h.modes
        ],
        "contexts": [{"id": c.id, "modes": list(c.mode_ids)} for c in h.contexts],
    }
