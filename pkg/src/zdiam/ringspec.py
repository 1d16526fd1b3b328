"""Ring specs: JSON objects and the inline shorthand used on the command line.

JSON forms::

    {"kind": "zn", "n": 12}
    {"kind": "product", "factors": [spec, ...]}
    {"kind": "quotient", "p": 3, "modulus": [0, 0, 1]}
    {"kind": "bivariate", "p": 3, "ydeg": 3}
    {"kind": "table", "add": [[...]], "mul": [[...]]}

Shorthand: ``zn:12``, ``bool:3``, ``prod:zn:4+zn:3``, ``quot:3:0,0,1``,
``bivar:3`` or ``bivar:3:3``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import SpecError
from .finring import (
    FiniteRing,
    make_bivariate_x2_xy,
    make_from_tables,
    make_product,
    make_quotient_poly,
    make_zn,
)


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        try:
            return int(str(value).strip())
        except ValueError:
            raise SpecError(f"{what} must be an integer, got {value!r}") from None
    return value


def parse_shorthand(text: str) -> dict:
    text = text.strip()
    kind, _, rest = text.partition(":")
    if not rest:
        raise SpecError(f"cannot parse ring shorthand {text!r}")
    if kind == "zn":
        return {"kind": "zn", "n": _int(rest, "n")}
    if kind == "bool":
        k = _int(rest, "k")
        if k < 2:
            raise SpecError("bool:K needs K >= 2")
        return {"kind": "product", "factors": [{"kind": "zn", "n": 2}] * k}
    if kind == "prod":
        return {"kind": "product", "factors": [parse_shorthand(part) for part in rest.split("+")]}
    if kind == "quot":
        p, _, coeffs = rest.partition(":")
        if not coeffs:
            raise SpecError("quot shorthand is quot:P:c0,c1,...")
        return {
            "kind": "quotient",
            "p": _int(p, "p"),
            "modulus": [_int(c, "coefficient") for c in coeffs.split(",")],
        }
    if kind == "bivar":
        p, _, ydeg = rest.partition(":")
        spec = {"kind": "bivariate", "p": _int(p, "p")}
        if ydeg:
            spec["ydeg"] = _int(ydeg, "ydeg")
        return spec
    raise SpecError(f"unknown ring shorthand kind {kind!r}")


def build_ring(spec: Any) -> FiniteRing:
    """Construct a ring from a JSON-style spec (dict) or a shorthand string."""
    if isinstance(spec, str):
        spec = parse_shorthand(spec)
    if not isinstance(spec, dict) or "kind" not in spec:
        raise SpecError(f"ring spec must be an object with a 'kind', got {spec!r}")
    kind = spec["kind"]
    try:
        if kind == "zn":
            return make_zn(_int(spec["n"], "n"))
        if kind == "product":
            factors = spec["factors"]
            if not isinstance(factors, list):
                raise SpecError("product factors must be a list")
            return make_product([build_ring(f) for f in factors])
        if kind == "quotient":
            return make_quotient_poly(
                _int(spec["p"], "p"), [_int(c, "coefficient") for c in spec["modulus"]]
            )
        if kind == "bivariate":
            return make_bivariate_x2_xy(_int(spec["p"], "p"), _int(spec.get("ydeg", 3), "ydeg"))
        if kind == "table":
            return make_from_tables(spec["add"], spec["mul"], label=spec.get("label"))
    except KeyError as exc:
        raise SpecError(f"ring spec of kind {kind!r} is missing {exc}") from None
    raise SpecError(f"unknown ring kind {kind!r}")


def load_spec(text: str) -> Any:
    """Interpret a command-line ring argument: JSON text, ``@file``/path, or shorthand."""
    text = text.strip()
    if text.startswith("{"):
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise SpecError(f"invalid JSON ring spec: {exc}") from None
    path = Path(text[1:] if text.startswith("@") else text)
    if text.startswith("@") or (path.suffix == ".json" and path.exists()):
        try:
            return json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise SpecError(f"cannot read ring spec {path}: {exc}") from None
    return text


def ring_from_arg(text: str) -> FiniteRing:
    return build_ring(load_spec(text))
