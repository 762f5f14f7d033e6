"""Built-in seed triangulations and the JSON gluing-table format."""

import json
import os
from pathlib import Path

from .core import TriangulationError, edge_classes, from_gluing_table
from .quadext import QuadExt, regular_shape
from .shapes import ShapeAssignment

FACES = ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))

# two regular ideal tetrahedra; figure eight knot complement
FIG8_TABLE = {
    "A": ["B013", "B321", "B021", "B230"],
    "B": ["A032", "A012", "A312", "A310"],
}

# two regular ideal tetrahedra; the figure eight sister (m003)
FIG8_SISTER_TABLE = {
    "A": ["B301", "B230", "B021", "B132"],
    "B": ["A032", "A120", "A301", "A132"],
}

SEED_DIR_ENV = "PACHNER_SEED_DIR"


class SeedError(ValueError):
    pass


def table_rows(table):
    """Rows for ``from_gluing_table`` from a compact {name: [target, ...]} table.

    Each entry lists, for the faces 012, 013, 023, 123 in turn, the target
    tetrahedron name followed by the image triple, e.g. ``"B013"``.
    """
    names = list(table)
    index = {name: i for i, name in enumerate(names)}
    rows = []
    for name, targets in table.items():
        for face, entry in zip(FACES, targets):
            target, triple = entry[:-3], tuple(int(c) for c in entry[-3:])
            rows.append((index[name], face, index[target], triple))
    return rows


def fig8():
    return from_gluing_table(table_rows(FIG8_TABLE))


def fig8_sister():
    return from_gluing_table(table_rows(FIG8_SISTER_TABLE))


BUILTIN = {"fig8": fig8, "fig8-sister": fig8_sister}


def regular_shapes(tri):
    """All-regular shapes; consistent exactly when every edge has degree 6."""
    if any(ec.degree != 6 for ec in edge_classes(tri)):
        raise SeedError("regular shapes need every edge class to have degree 6")
    return (regular_shape(),) * tri.size


def parse_json_table(data):
    """Triangulation (and optional exact shapes) from the JSON gluing format.

    ``{"tets": n or [names], "gluings": [{"tet", "face", "to", "toFace"}],
    "shapes": [str, ...]}``.  Names are numbered in order of declaration:
    the ``tets`` list if given, otherwise first appearance in ``gluings``.
    """
    try:
        tets = data["tets"]
        entries = data["gluings"]
    except (KeyError, TypeError) as exc:
        raise SeedError(f"missing key {exc}") from None
    index = {}
    if isinstance(tets, list):
        for name in tets:
            index[str(name)] = len(index)
        n = len(tets)
    elif isinstance(tets, int):
        n = tets
    else:
        raise SeedError(f"'tets' must be a count or a list of names, got {tets!r}")

    def lookup(name):
        name = str(name)
        if name not in index:
            if isinstance(tets, list):
                raise SeedError(f"undeclared tetrahedron {name!r}")
            index[name] = len(index)
        return index[name]

    rows = []
    for entry in entries:
        try:
            rows.append((lookup(entry["tet"]), tuple(entry["face"]),
                         lookup(entry["to"]), tuple(entry["toFace"])))
        except (KeyError, TypeError) as exc:
            raise SeedError(f"bad gluing entry {entry!r}") from exc
    if len(index) != n:
        raise SeedError(f"declared {n} tetrahedra but found {len(index)}")
    try:
        tri = from_gluing_table(rows, n)
    except TriangulationError as exc:
        raise SeedError(str(exc)) from exc
    shapes = None
    if "shapes" in data:
        try:
            shapes = tuple(QuadExt.parse(s) for s in data["shapes"])
        except (ValueError, AttributeError) as exc:
            raise SeedError(f"bad shape: {exc}") from exc
        if len(shapes) != n:
            raise SeedError("one shape per tetrahedron is required")
    return tri, shapes


def to_json_table(tri, names=None, shapes=None):
    names = names or [_default_name(i) for i in range(tri.size)]
    out = {
        "tets": list(names),
        "gluings": [
            {"tet": names[t], "face": list(src), "to": names[u], "toFace": list(dst)}
            for t, src, u, dst in tri.gluing_rows()
        ],
    }
    if shapes is not None:
        out["shapes"] = [str(z) for z in shapes]
    return out


def _default_name(i):
    return chr(ord("A") + i) if i < 26 else f"T{i}"


def load_seed(name):
    """Resolve a built-in name, a JSON path, or a file in $PACHNER_SEED_DIR.

    Returns ``(triangulation, shapes)``.  Without explicit shapes the regular
    assignment is used when it is consistent.
    """
    if name in BUILTIN:
        tri = BUILTIN[name]()
        return tri, ShapeAssignment(regular_shapes(tri))
    candidates = [Path(name)]
    seed_dir = os.environ.get(SEED_DIR_ENV)
    if seed_dir:
        candidates += [Path(seed_dir) / name, Path(seed_dir) / f"{name}.json"]
    for path in candidates:
        if path.is_file():
            try:
                data = json.loads(path.read_text())
            except (OSError, json.JSONDecodeError) as exc:
                raise SeedError(f"cannot read {path}: {exc}") from exc
            tri, shapes = parse_json_table(data)
            if shapes is None:
                shapes = regular_shapes(tri)
            return tri, ShapeAssignment(shapes)
    raise SeedError(f"unknown seed {name!r}")
