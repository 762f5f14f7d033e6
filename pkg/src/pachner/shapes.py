"""Exact shape parameters: consistency, propagation through moves, classification.

Every tetrahedron carries one parameter ``z`` on its edges 01 and 23; edges
02/13 carry ``1/(1-z)`` and edges 03/12 carry ``(z-1)/z``.  These formulas
assume the tetrahedra are labelled coherently (all gluing permutations odd),
which holds for both built-in seeds and is preserved by the moves in
:mod:`pachner.core`.
"""

import cmath
import enum
import math
from fractions import Fraction
from typing import NamedTuple

from . import core
from .core import _split_23, _split_32, inverse
from .quadext import QuadExt

WINDING_TOL = 1e-9


class DegenerateShape(ValueError):
    pass


class NonIntegerWinding(ValueError):
    pass


class Classification(enum.Enum):
    GEOMETRIC = "G"
    FLAT = "F"
    NEGATIVELY_ORIENTED = "N"

    def __str__(self):
        return self.name.lower().replace("_", "-")


def _is_degenerate(z):
    return z == 0 or z == 1


def shape_triple(z):
    """``(z, 1/(1-z), (z-1)/z)`` for a non-degenerate shape."""
    if _is_degenerate(z):
        raise DegenerateShape(f"shape {z} is 0 or 1")
    return z, 1 / (1 - z), (z - 1) / z


class ShapeAssignment(tuple):
    """One exact shape per tetrahedron, none of them 0 or 1."""

    def __new__(cls, shapes):
        shapes = tuple(shapes)
        for i, z in enumerate(shapes):
            if not isinstance(z, QuadExt):
                raise TypeError(f"shape {i} is not a QuadExt: {z!r}")
            if _is_degenerate(z):
                raise DegenerateShape(f"shape of tetrahedron {i} is {z}")
        return super().__new__(cls, shapes)

    def __repr__(self):
        return f"ShapeAssignment([{', '.join(str(z) for z in self)}])"


_EDGE_SLOT = {
    frozenset((0, 1)): 0, frozenset((2, 3)): 0,
    frozenset((0, 2)): 1, frozenset((1, 3)): 1,
    frozenset((0, 3)): 2, frozenset((1, 2)): 2,
}


def edge_parameter(shapes, tet, edge):
    """The parameter of ``tet`` on the edge joining the two given vertices."""
    return _param(shapes[tet], edge)


def _param(z, edge):
    return shape_triple(z)[_EDGE_SLOT[frozenset(edge)]]


class EdgeReport(NamedTuple):
    edge: core.EdgeClass
    product: QuadExt
    winding: object  # int, or None when the product is not 1


class EdgeConsistencyReport(NamedTuple):
    edges: tuple

    @property
    def consistent(self):
        return all(e.product == 1 for e in self.edges)

    @property
    def windings(self):
        return [e.winding for e in self.edges]


def check_edge_consistency(tri, shapes):
    """Exact edge products and their argument windings, one per edge class.

    An edge whose product is exactly 1 must have an argument sum within
    ``WINDING_TOL`` of a multiple of 2*pi, otherwise NonIntegerWinding is
    raised.  Edges with any other product get ``winding=None``.
    """
    if len(shapes) != tri.size:
        raise ValueError(f"{len(shapes)} shapes for {tri.size} tetrahedra")
    reports = []
    for ec in core.edge_classes(tri):
        product = QuadExt(1, 0, shapes[0].d)
        angle = 0.0
        for t, v in ec.members:
            w = _param(shapes[t], v[:2])
            product = product * w
            angle += cmath.phase(complex(w))
        turns = angle / (2 * math.pi)
        winding = round(turns)
        if product != 1:
            winding = None
        elif abs(turns - winding) > WINDING_TOL:
            raise NonIntegerWinding(f"argument sum {angle} is not a multiple of 2*pi")
        reports.append(EdgeReport(ec, product, winding))
    return EdgeConsistencyReport(tuple(reports))


def propagate_23(shapes, site):
    """Shapes after ``core.pachner_23(tri, site)``.

    Each new tetrahedron surrounds one equatorial edge of the bipyramid and
    its parameter there is the product of the two old parameters on that
    edge.
    """
    tA, f, tB, g, perm = site
    new_tets, to_a, to_b = _split_23(site)
    zs = []
    for ids in new_tets:
        edge = ids[2:]
        z = _param(shapes[tA], [to_a[x] for x in edge]) * _param(shapes[tB], [to_b[x] for x in edge])
        if _is_degenerate(z):
            raise DegenerateShape(f"new shape {z} at site {site}")
        zs.append(z)
    kept = [z for t, z in enumerate(shapes) if t not in (tA, tB)]
    return ShapeAssignment(kept + zs)


def propagate_32(shapes, edge):
    """Shapes after ``core.pachner_32(tri, edge)``.

    Each recovered tetrahedron's parameter on an edge through its apex is
    the product of the two old parameters on that edge.
    """
    maps, new_tets = _split_32(edge)
    zs = []
    for ids in new_tets:
        end = ids[:2]
        z = QuadExt(1, 0, shapes[0].d)
        hits = 0
        for t, old_ids in maps:
            if set(end) <= set(old_ids):
                z = z * _param(shapes[t], [old_ids.index(x) for x in end])
                hits += 1
        if hits != 2:
            raise core.InvalidSite("degenerate bipyramid")
        if _is_degenerate(z):
            raise DegenerateShape(f"recovered shape {z}")
        zs.append(z)
    gone = set(edge.tets())
    kept = [z for t, z in enumerate(shapes) if t not in gone]
    return ShapeAssignment(kept + zs)


def classify(shapes):
    """Exact classification; a flat tetrahedron outranks a negative one."""
    signs = {z.imag_sign() for z in shapes}
    if 0 in signs:
        return Classification.FLAT
    if -1 in signs:
        return Classification.NEGATIVELY_ORIENTED
    return Classification.GEOMETRIC


def relabel_shapes(shapes, tet_map, vertex_maps):
    """Shapes carried along ``core.relabel`` with orientation-preserving maps."""
    out = [None] * len(shapes)
    for t, z in enumerate(shapes):
        sigma = vertex_maps[t]
        if core.sign(sigma) != 1:
            raise ValueError("shapes only transport along even vertex maps")
        back = inverse(sigma)
        out[tet_map[t]] = _param(z, (back[0], back[1]))
    return ShapeAssignment(out)


def shape_multiset(shapes):
    """Labelling-independent summary: one sorted parameter triple per tetrahedron."""
    triples = [tuple(sorted(shape_triple(z), key=QuadExt.sort_key)) for z in shapes]
    triples.sort(key=lambda tr: [x.sort_key() for x in tr])
    return tuple(triples)


def tn_closed_form(k):
    """Closed-form shapes after k moves: ``(pair_shape, [extra shapes m=1..k])``."""
    pair = QuadExt(Fraction(1 - 2 * k, 2), Fraction(1, 2))
    extra = [series_shape(m) for m in range(1, k + 1)]
    return pair, extra


def series_shape(m):
    """``(2 / (1 - 2m + sqrt(-3)))**2``."""
    return (2 / QuadExt(1 - 2 * m, 1)) ** 2
