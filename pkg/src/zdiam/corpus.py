"""The shipped ring corpus and corpus-file loading."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any

from .errors import SpecError
from .finring import FiniteRing
from .ringspec import build_ring


def default_corpus_entries() -> list[dict]:
    text = resources.files("zdiam").joinpath("data/corpus.json").read_text()
    return json.loads(text)


def read_corpus_file(path: str | Path) -> list[dict]:
    """Read a corpus file: a JSON list of specs or ``{"name", "spec"}`` objects."""
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise SpecError(f"cannot read corpus {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise SpecError(f"corpus {path} is not valid JSON: {exc}") from None
    if not isinstance(data, list):
        raise SpecError(f"corpus {path} must be a JSON list")
    return [_normalize(entry) for entry in data]


def _normalize(entry: Any) -> dict:
    if isinstance(entry, dict) and "spec" in entry:
        return {"name": entry.get("name") or _describe(entry["spec"]), "spec": entry["spec"]}
    return {"name": _describe(entry), "spec": entry}


def _describe(spec: Any) -> str:
    return spec if isinstance(spec, str) else json.dumps(spec, sort_keys=True)[:60]


def build_entry(entry: dict) -> FiniteRing:
    return build_ring(entry["spec"])


def load_default_corpus() -> list[tuple[str, FiniteRing]]:
    return [(e["name"], build_entry(e)) for e in default_corpus_entries()]
