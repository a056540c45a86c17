"""File formats: representations as JSON, clique covers and build sequences.

A representation file maps each vertex label to its list of ``[x, y]``
corners. Non-integer coordinates are written as ``"p/q"`` strings. Files
are always written in canonical form: normalised paths, each oriented so
its corner list is the smaller of the two directions, keys in label order.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .graph import BuildSequence, CliqueCover, Graph, format_graph, parse_graph, sort_labels
from .grid import GridPath, Representation, normalize_path


class FormatError(ValueError):
    pass


def _num_out(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _num_in(x):
    if isinstance(x, bool):
        raise FormatError(f"bad coordinate {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            f = Fraction(x)
        except ValueError as exc:
            raise FormatError(f"bad coordinate {x!r}") from exc
        return int(f) if f.denominator == 1 else f
    raise FormatError(f"bad coordinate {x!r}")


def canonical_path(p: GridPath) -> GridPath:
    p = normalize_path(p.corners)
    back = tuple(reversed(p.corners))
    return GridPath(min(p.corners, back))


def canonical(rep: Representation) -> Representation:
    return Representation({v: canonical_path(rep[v]) for v in sort_labels(rep.vertices)})


def representation_to_json(rep: Representation) -> str:
    rep = canonical(rep)
    body = {v: [[_num_out(x), _num_out(y)] for x, y in p.corners] for v, p in rep.items()}
    lines = ["{"]
    items = list(body.items())
    for i, (v, pts) in enumerate(items):
        sep = "," if i + 1 < len(items) else ""
        lines.append(f"  {json.dumps(v)}: {json.dumps(pts)}{sep}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def representation_from_json(text: str) -> Representation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise FormatError("expected an object mapping labels to corner lists")
    out = {}
    for v, pts in data.items():
        if not isinstance(pts, list) or not pts:
            raise FormatError(f"{v}: expected a non-empty list of points")
        corners = []
        for pt in pts:
            if not isinstance(pt, list) or len(pt) != 2:
                raise FormatError(f"{v}: bad point {pt!r}")
            corners.append((_num_in(pt[0]), _num_in(pt[1])))
        out[v] = normalize_path(corners)
    return canonical(Representation(out))


def write_representation(rep: Representation, path) -> None:
    Path(path).write_text(representation_to_json(rep))


def read_representation(path) -> Representation:
    return representation_from_json(Path(path).read_text())


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path) -> None:
    Path(path).write_text(format_graph(g))


def cover_from_json(text: str) -> CliqueCover:
    """A list of families, each a list of cliques, each a list of labels."""
    data = json.loads(text)
    if not isinstance(data, list) or not all(isinstance(f, list) for f in data):
        raise FormatError("expected a list of families")
    return CliqueCover.of(data)


def cover_to_json(cover: CliqueCover) -> str:
    fams = [[sort_labels(c) for c in fam] for fam in cover.families]
    return json.dumps(fams) + "\n"


def sequence_from_json(text: str) -> BuildSequence:
    """``{"k": 2, "base": [...], "steps": [[v, [u, w]], ...]}``."""
    data = json.loads(text)
    try:
        return BuildSequence(
            int(data["k"]),
            tuple(data["base"]),
            tuple((v, tuple(att)) for v, att in data["steps"]),
            tuple(data.get("padding", ())),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad build sequence: {exc}") from exc


def sequence_to_json(seq: BuildSequence) -> str:
    body = {"k": seq.k, "base": list(seq.base), "steps": [[v, list(a)] for v, a in seq.steps]}
    if seq.padding:
        body["padding"] = list(seq.padding)
    return json.dumps(body) + "\n"


def assignment_from_text(text: str) -> dict[str, bool]:
    """Lines ``name value`` with value one of true/false/1/0."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or parts[1].lower() not in ("true", "false", "1", "0"):
            raise FormatError(f"line {lineno}: expected 'name true|false'")
        out[parts[0]] = parts[1].lower() in ("true", "1")
    return out
