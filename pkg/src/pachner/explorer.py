"""The T_n family of the figure eight knot complement and Pachner-graph search."""

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import NamedTuple

from . import core, seeds
from .canon import canonical_signature
from .shapes import (
    Classification,
    DegenerateShape,
    ShapeAssignment,
    classify,
    propagate_23,
    propagate_32,
    shape_multiset,
)
from .volume import volume_total

# the pairings A123 = B230 and A012 = B013 that the T_n step relies on
_STEP_GLUINGS = ((0, core.perm_from_triples((1, 2, 3), (2, 3, 0))),
                  (3, core.perm_from_triples((0, 1, 2), (0, 1, 3))))


class LemmaReport(NamedTuple):
    face_pairings: bool
    equal_shapes: bool
    real_part_below_one: bool

    @property
    def holds(self):
        return self.face_pairings and self.equal_shapes and self.real_part_below_one


def verify_lemma_conditions(tri, shapes, tet_a=0, tet_b=1):
    """Check the three hypotheses under which one T_n step stays geometric.

    The two tetrahedra must be glued by the two fixed face pairings, carry
    equal shapes, and that shape must have real part below 1.
    """
    if tet_a == tet_b:
        raise ValueError("the two tetrahedra must differ")
    pairings = all(tri.adjacent(tet_a, f) == (tet_b, p) for f, p in _STEP_GLUINGS)
    za, zb = shapes[tet_a], shapes[tet_b]
    return LemmaReport(pairings, za == zb, za.real < 1)


def tn_step(tri, shapes):
    """One step T_n -> T_{n+1}: the move at A123 = B230, then E -> A, D -> B.

    Tetrahedron 0 is A and 1 is B; the tetrahedron created by the m-th step
    ends up at index m + 1.
    """
    site = core.site_23_at(tri, 0, 0)
    moved = core.pachner_23(tri, site)
    new_shapes = propagate_23(shapes, site)
    n = moved.size
    # after the move: survivors 0..n-4, then C, D, E
    tet_map = [i + 2 for i in range(n - 3)] + [n - 1, 1, 0]
    vmaps = [core.IDENTITY] * n
    out = core.relabel(moved, tet_map, vmaps)
    reordered = [None] * n
    for old, new in enumerate(tet_map):
        reordered[new] = new_shapes[old]
    return out, ShapeAssignment(reordered)


def iter_tn(n_max):
    """Yield ``(n, T_n, shapes)`` for n = 2 .. n_max."""
    tri = seeds.fig8()
    shapes = ShapeAssignment(seeds.regular_shapes(tri))
    n = 2
    while n <= n_max:
        yield n, tri, shapes
        if n == n_max:
            break
        tri, shapes = tn_step(tri, shapes)
        n += 1


def generate_tn(n):
    if n < 2:
        raise ValueError("T_n is defined for n >= 2")
    for _, tri, shapes in iter_tn(n):
        pass
    return tri, shapes


def tn_signatures(n_max, orientation_preserving=False):
    return {canonical_signature(tri, orientation_preserving): f"T_{n}"
            for n, tri, _ in iter_tn(n_max)}


# -- Pachner graph ----------------------------------------------------------

@dataclass
class ExplorePolicy:
    max_depth: int = None
    max_tets: int = None
    geometric_only: bool = True
    include_32: bool = False
    orientation_preserving: bool = False

    def __post_init__(self):
        if self.max_depth is not None and self.max_depth < 0:
            raise ValueError("max_depth must be >= 0")
        if self.max_tets is not None and self.max_tets < 2:
            raise ValueError("max_tets must be >= 2")


@dataclass
class ClassifiedNode:
    signature: str
    tri: core.Triangulation
    shapes: ShapeAssignment
    classification: Classification
    depth: int
    order: int
    name: str = ""

    @property
    def tets(self):
        return self.tri.size

    @property
    def degenerate(self):
        return self.shapes is None

    @property
    def letter(self):
        return self.classification.value if self.classification else "X"


@dataclass
class PachnerGraph:
    nodes: dict = field(default_factory=dict)
    edges: Counter = field(default_factory=Counter)
    seed: str = None
    path_conflicts: list = field(default_factory=list)

    def children(self, sig, kind="2-3"):
        return Counter({dst: m for (src, dst, k), m in self.edges.items()
                        if src == sig and k == kind})

    def by_name(self, name):
        for node in self.nodes.values():
            if node.name == name:
                return node
        raise KeyError(name)

    def counts(self):
        """Number of classes per (tetrahedra, class letter)."""
        return Counter((node.tets, node.letter) for node in self.nodes.values())


def explore(tri, shapes, policy=None):
    """Breadth-first search of the Pachner graph around a seed.

    Nodes are isomorphism classes keyed by canonical signature; edges count
    the move sites joining two classes.  Shapes are propagated exactly.
    """
    policy = policy or ExplorePolicy()
    graph = PachnerGraph()
    shapes = ShapeAssignment(shapes)

    def add(t, s, depth):
        sig = canonical_signature(t, policy.orientation_preserving)
        node = graph.nodes.get(sig)
        if node is None:
            node = ClassifiedNode(sig, t, s, classify(s) if s is not None else None,
                                  depth, len(graph.nodes))
            graph.nodes[sig] = node
            queue.append(sig)
        elif (s is None) != (node.shapes is None) or (
                s is not None and shape_multiset(node.shapes) != shape_multiset(s)):
            graph.path_conflicts.append(sig)
        return sig

    queue = deque()
    graph.seed = add(tri, shapes, 0)
    while queue:
        node = graph.nodes[queue.popleft()]
        if node.degenerate:
            continue
        if policy.max_depth is not None and node.depth >= policy.max_depth:
            continue
        if policy.geometric_only and node.classification is not Classification.GEOMETRIC:
            continue
        if policy.max_tets is None or node.tets < policy.max_tets:
            for site in core.enumerate_23_sites(node.tri):
                t2 = core.pachner_23(node.tri, site)
                try:
                    s2 = propagate_23(node.shapes, site)
                except DegenerateShape:
                    s2 = None
                dst = add(t2, s2, node.depth + 1)
                graph.edges[(node.signature, dst, "2-3")] += 1
        if policy.include_32:
            for edge in core.enumerate_32_sites(node.tri):
                t2 = core.pachner_32(node.tri, edge)
                try:
                    s2 = propagate_32(node.shapes, edge)
                except DegenerateShape:
                    s2 = None
                dst = add(t2, s2, node.depth + 1)
                graph.edges[(node.signature, dst, "3-2")] += 1
    return graph


def name_nodes(graph, special=None, prime=False):
    """Assign T/G/N/F names in discovery order; ``special`` maps signature -> name."""
    special = special or {}
    mark = "'" if prime else ""
    counters = Counter()
    for node in sorted(graph.nodes.values(), key=lambda nd: (nd.depth, nd.order)):
        if node.signature in special:
            node.name = special[node.signature]
            continue
        counters[(node.letter, node.tets)] += 1
        node.name = f"{node.letter}{mark}_{node.tets},{counters[(node.letter, node.tets)]}"
    return graph


# -- reporting ----------------------------------------------------------------

_STYLE = {"G": "solid", "N": "dashed", "F": "dotted", "X": "bold"}


def summary(graph):
    """Rows ``(tets, letter, count)`` sorted by size then letter."""
    return [(n, letter, c) for (n, letter), c in sorted(graph.counts().items())]


def _label(node):
    return node.name or node.signature


def to_dot(graph):
    lines = ["graph pachner {"]
    nodes = sorted(graph.nodes.values(), key=lambda nd: nd.order)
    for node in nodes:
        cls = str(node.classification) if node.classification else "degenerate"
        label = f"{_label(node)}\\n{cls}\\nn={node.tets}"
        lines.append(f'  "{node.signature}" [label="{label}", style={_STYLE[node.letter]}];')
    for (src, dst, kind), mult in sorted(graph.edges.items(), key=lambda kv: (
            graph.nodes[kv[0][0]].order, graph.nodes[kv[0][1]].order, kv[0][2])):
        attrs = "" if kind == "2-3" else " [color=gray]"
        for _ in range(mult):
            lines.append(f'  "{src}" -- "{dst}"{attrs};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(graph):
    nodes = sorted(graph.nodes.values(), key=lambda nd: nd.order)
    seed_volume = None
    if graph.seed is not None and not graph.nodes[graph.seed].degenerate:
        seed_volume = _fmt_volume(volume_total(graph.nodes[graph.seed].shapes))
    out = {
        "nodes": [
            {
                "name": node.name,
                "signature": node.signature,
                "tets": node.tets,
                "class": str(node.classification) if node.classification else "degenerate",
                "depth": node.depth,
                "shapes": None if node.degenerate else [str(z) for z in node.shapes],
                "volume": None if node.degenerate else _fmt_volume(volume_total(node.shapes)),
            }
            for node in nodes
        ],
        "edges": [
            {"source": src, "target": dst, "move": kind, "multiplicity": mult}
            for (src, dst, kind), mult in sorted(graph.edges.items(), key=lambda kv: (
                graph.nodes[kv[0][0]].order, graph.nodes[kv[0][1]].order, kv[0][2]))
        ],
        "seedVolume": seed_volume,
    }
    return out


def _fmt_volume(v):
    return f"{v:.12f}"


def report(graph):
    """``(summary rows, DOT text, JSON text)``."""
    return summary(graph), to_dot(graph), json.dumps(to_json(graph), indent=2) + "\n"
