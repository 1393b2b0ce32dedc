"""Scenario files: parsing, validation and the JSON encoding of exact values.

Rationals are strings ``"p/q"`` (integers may also be bare JSON integers);
field elements are either a rational or a list of rationals giving the
coefficients of 1, t, t^2, ... .  See ``docs/scenarios.md``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from pathlib import Path
from typing import Any

from .brauer3 import Brauer3Group
from .config import RunOptions, solver_bound
from .errors import Dp6Error, ParseError
from .numfield import FieldElem, GaloisField, field_make
from .projlin import ProjMap, ProjPoint, vandermonde_points

SCHEMA = "dp6-scenario/1"
REPORT_SCHEMA = "dp6-report/1"
SURFACE_SCHEMA = "dp6-surface/1"


@dataclass
class Scenario:
    name: str
    field: GaloisField
    points: tuple[ProjPoint, ProjPoint, ProjPoint]
    aux: ProjPoint | None = None
    subgroup: tuple[int, ...] | None = None
    options: RunOptions = dc_field(default_factory=RunOptions)
    description: str = ""
    descent_matrix: ProjMap | None = None
    brauer3: Brauer3Group | None = None
    expect: dict = dc_field(default_factory=dict)
    source: str = "<memory>"
    block_lines: dict = dc_field(default_factory=dict)

    def context(self, block: str) -> str:
        line = self.block_lines.get(block)
        return f"{self.source}:{line}" if line else self.source


def parse_rational(v: Any, where: str) -> Fraction:
    if isinstance(v, bool):
        raise ParseError(f"{where}: expected a rational, got a boolean")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"{where}: {v!r} is not a rational 'p/q'") from None
    raise ParseError(f"{where}: expected an integer or a 'p/q' string, got {type(v).__name__}")


def parse_elem(F: GaloisField, v: Any, where: str) -> FieldElem:
    if isinstance(v, list):
        if len(v) > F.degree:
            raise ParseError(f"{where}: {len(v)} coefficients for a field of degree {F.degree}")
        return F.elem([parse_rational(c, f"{where}[{i}]") for i, c in enumerate(v)])
    return F.from_rational(parse_rational(v, where))


def parse_point(F: GaloisField, v: Any, where: str) -> ProjPoint:
    if not isinstance(v, list) or len(v) != 3:
        raise ParseError(f"{where}: a point is a list of three coordinates")
    coords = [parse_elem(F, c, f"{where}[{i}]") for i, c in enumerate(v)]
    try:
        return ProjPoint(coords)
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from None


def _int_list(v: Any, where: str) -> list[int]:
    if not isinstance(v, list) or not v:
        raise ParseError(f"{where}: expected a non-empty list of integers")
    out = []
    for i, c in enumerate(v):
        q = parse_rational(c, f"{where}[{i}]")
        if q.denominator != 1:
            raise ParseError(f"{where}[{i}]: expected an integer")
        out.append(int(q))
    return out


def _require(d: dict, key: str, where: str):
    if not isinstance(d, dict):
        raise ParseError(f"{where}: expected an object")
    if key not in d:
        raise ParseError(f"{where}: missing key {key!r}")
    return d[key]


def scenario_from_dict(d: dict, source: str = "<memory>") -> Scenario:
    if not isinstance(d, dict):
        raise ParseError("top level must be a JSON object")
    if d.get("schema") != SCHEMA:
        raise ParseError(f"schema tag must be {SCHEMA!r}, found {d.get('schema')!r}")
    name = d.get("name", Path(source).stem)
    fb = _require(d, "field", "scenario")
    modulus = _int_list(_require(fb, "modulus", "field"), "field.modulus")
    autos_raw = _require(fb, "automorphisms", "field")
    if not isinstance(autos_raw, list):
        raise ParseError("field.automorphisms: expected a list")
    autos = [[parse_rational(c, f"field.automorphisms[{i}][{j}]") for j, c in enumerate(a)]
             if isinstance(a, list) else [parse_rational(a, f"field.automorphisms[{i}]")]
             for i, a in enumerate(autos_raw)]
    try:
        F = field_make(modulus, autos, name=fb.get("name"))
    except Dp6Error as exc:
        raise type(exc)(f"field: {exc}") from None
    except ValueError as exc:
        raise ParseError(f"field: {exc}") from None

    pb = _require(d, "points", "scenario")
    if "P" in pb:
        raw = pb["P"]
        if not isinstance(raw, list) or len(raw) != 3:
            raise ParseError("points.P: expected three points")
        P = tuple(parse_point(F, p, f"points.P[{i}]") for i, p in enumerate(raw))
    elif "vandermonde" in pb:
        raw = pb["vandermonde"]
        if not isinstance(raw, list) or len(raw) != 3:
            raise ParseError("points.vandermonde: expected three field elements")
        P = vandermonde_points(*(parse_elem(F, a, f"points.vandermonde[{i}]") for i, a in enumerate(raw)))
    else:
        raise ParseError("points: give either 'P' or 'vandermonde'")
    aux = parse_point(F, pb["aux"], "points.aux") if pb.get("aux") is not None else None

    sub = d.get("subgroup")
    subgroup = None
    if sub is not None:
        subgroup = tuple(_int_list(sub, "subgroup"))
        if any(g < 0 or g >= F.order for g in subgroup):
            raise ParseError("subgroup: automorphism index out of range")

    ob = d.get("options", {}) or {}
    if not isinstance(ob, dict):
        raise ParseError("options: expected an object")
    try:
        opts = RunOptions(
            solver_bound=solver_bound(int(ob.get("solver_bound", RunOptions.solver_bound))),
            random_checks=int(ob.get("random_checks", RunOptions.random_checks)),
            seed=int(ob.get("seed", RunOptions.seed)),
        )
    except (TypeError, ValueError) as exc:
        raise ParseError(f"options: {exc}") from None

    descent_matrix = None
    neg = d.get("negative")
    if neg is not None:
        mat = _require(neg, "descent_matrix", "negative")
        if not isinstance(mat, list) or len(mat) != 3 or any(not isinstance(r, list) or len(r) != 3 for r in mat):
            raise ParseError("negative.descent_matrix: expected a 3x3 list")
        rows = [[parse_elem(F, x, f"negative.descent_matrix[{i}][{j}]") for j, x in enumerate(r)]
                for i, r in enumerate(mat)]
        try:
            descent_matrix = ProjMap(rows)
        except ValueError as exc:
            raise ParseError(f"negative.descent_matrix: {exc}") from None

    b3 = None
    bb = d.get("brauer3")
    if bb is not None:
        rank = int(_require(bb, "rank", "brauer3"))
        inv = _require(bb, "involution", "brauer3")
        try:
            b3 = Brauer3Group(rank, tuple(tuple(_int_list(r, f"brauer3.involution[{i}]")) for i, r in enumerate(inv)))
        except ValueError as exc:
            raise ParseError(f"brauer3: {exc}") from None

    return Scenario(name, F, P, aux, subgroup, opts, d.get("description", ""),  # type: ignore[arg-type]
                    descent_matrix, b3, d.get("expect", {}) or {}, source)


def load_scenario(path: str | Path) -> Scenario:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}:{exc.colno}: malformed JSON: {exc.msg}") from None
    try:
        sc = scenario_from_dict(d, str(path))
    except Dp6Error as exc:
        raise type(exc)(f"{path}{_line_hint(text, str(exc))}: {exc}") from None
    sc.block_lines = {k: n for k in d if (n := _key_line(text, k))}
    return sc


def _line_hint(text: str, message: str) -> str:
    """``:<line>`` of the top-level block named at the start of ``message``."""
    key = message.split(":", 1)[0].split(".", 1)[0].split("[", 1)[0].strip()
    n = _key_line(text, key)
    return f":{n}" if n else ""


def _key_line(text: str, key: str) -> int | None:
    for lineno, line in enumerate(text.splitlines(), 1):
        if f'"{key}"' in line:
            return lineno
    return None


def dumps(obj: Any) -> str:
    """Canonical JSON text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=True) + "\n"
