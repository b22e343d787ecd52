"""Canonical JSON documents for complexes, colorings and cell complexes.

A document looks like::

    {
      "name": "hopf_sphere",
      "dim": 3,
      "facets": [
        [0, 1, 3, 4],
        ...
      ],
      "coloring": {"0": 0, "1": 1}
    }

``dumps`` always produces this exact layout, so ``dumps(loads(text)) ==
text`` for every canonical file.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .coloring import VertexColoring, is_proper
from .complex import SimplicialComplex, from_facets
from .errors import ParseError, UnfoldkitError
from .prescription import CellComplex


@dataclass(frozen=True)
class Document:
    complex: SimplicialComplex
    coloring: VertexColoring | None = field(default=None, hash=False)
    name: str | None = None


def dumps(K: SimplicialComplex, coloring=None, name: str | None = None) -> str:
    lines = ["{"]
    if name is not None:
        lines.append(f'  "name": {json.dumps(name)},')
    lines.append(f'  "dim": {K.dim},')
    rows = [f"    [{', '.join(map(str, f))}]" for f in K.facets]
    tail = "," if coloring is not None else ""
    lines.append('  "facets": [')
    lines.append(",\n".join(rows))
    lines.append(f"  ]{tail}")
    if coloring is not None:
        col = coloring.colors if isinstance(coloring, VertexColoring) else coloring
        body = ", ".join(f'"{v}": {col[v]}' for v in sorted(col))
        lines.append(f'  "coloring": {{{body}}}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _line_of(text: str, key: str) -> int | None:
    needle = f'"{key}"'
    for n, line in enumerate(text.splitlines(), 1):
        if needle in line:
            return n
    return None


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def loads(text: str) -> Document:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", line=e.lineno) from None
    if not isinstance(data, dict):
        raise ParseError("top level must be an object", line=1)

    def fail(key: str, msg: str):
        raise ParseError(msg, field=key, line=_line_of(text, key))

    unknown = set(data) - {"name", "dim", "facets", "coloring"}
    if unknown:
        fail(sorted(unknown)[0], f"unknown field {sorted(unknown)[0]!r}")
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        fail("name", "name must be a string")
    if "facets" not in data:
        raise ParseError("missing field", field="facets")
    facets = data["facets"]
    if not isinstance(facets, list) or not all(
        isinstance(f, list) and all(_is_int(v) for v in f) for f in facets
    ):
        fail("facets", "facets must be a list of integer lists")
    try:
        K = from_facets(facets)
    except (UnfoldkitError, ValueError) as e:
        fail("facets", f"{type(e).__name__}: {e}")
    if "dim" in data:
        if not _is_int(data["dim"]):
            fail("dim", "dim must be an integer")
        if data["dim"] != K.dim:
            fail("dim", f"dim {data['dim']} does not match facets of dimension {K.dim}")
    coloring = None
    if "coloring" in data:
        raw = data["coloring"]
        if not isinstance(raw, dict):
            fail("coloring", "coloring must be an object")
        try:
            col = {int(k): v for k, v in raw.items()}
        except ValueError:
            fail("coloring", "coloring keys must be vertex ids")
        if not all(_is_int(c) for c in col.values()):
            fail("coloring", "colors must be integers")
        if not is_proper(K, col):
            fail("coloring", "coloring is not proper on this complex")
        coloring = VertexColoring(col)
    return Document(K, coloring, name)


def read(path) -> Document:
    return loads(Path(path).read_text())


def write(path, K: SimplicialComplex, coloring=None, name: str | None = None) -> None:
    Path(path).write_text(dumps(K, coloring, name))


def read_cell_complex(path):
    """Parse ``{"cells": [[{"boundary": [...]}, ...], ...], "triangulations":
    {"l:a": facets}, "coloring": {...}}`` into (CellComplex, cells, coloring)."""
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", line=e.lineno) from None
    if not isinstance(data, dict) or "cells" not in data:
        raise ParseError("missing field", field="cells")
    try:
        X = CellComplex(tuple(tuple(tuple(c.get("boundary", [])) for c in layer) for layer in data["cells"]))
    except (AttributeError, TypeError):
        raise ParseError("cells must be lists of {\"boundary\": [...]}", field="cells", line=_line_of(text, "cells")) from None
    tri = {}
    for key, facets in (data.get("triangulations") or {}).items():
        try:
            l, a = (int(x) for x in key.split(":"))
            tri[(l, a)] = from_facets(facets)
        except (ValueError, UnfoldkitError) as e:
            raise ParseError(f"bad triangulation {key!r}: {e}", field="triangulations", line=_line_of(text, key)) from None
    try:
        col = {int(k): int(v) for k, v in (data.get("coloring") or {}).items()}
    except (ValueError, TypeError):
        raise ParseError("coloring must map vertex ids to integers", field="coloring") from None
    return X, tri, col
