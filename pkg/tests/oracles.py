"""Independent reference computations used to derive and check expected values.

Nothing here calls the code paths it is used to check.
"""

import itertools
import random

import mpmath

from pachner.core import Triangulation, compose, inverse


class UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        self.parent[self.find(x)] = self.find(y)

    def groups(self):
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())


def edge_degrees(tri):
    """Edge-class sizes by merging tetrahedron edges across every face gluing."""
    uf = UnionFind()
    for t in range(tri.size):
        for e in itertools.combinations(range(4), 2):
            uf.find((t, frozenset(e)))
        for f in range(4):
            u, p = tri.gluings[t][f]
            for e in itertools.combinations([v for v in range(4) if v != f], 2):
                uf.union((t, frozenset(e)), (u, frozenset(p[v] for v in e)))
    return sorted(len(g) for g in uf.groups())


def link_counts(tri):
    """(triangles, edges, vertices) of each vertex link, by direct merging."""
    verts = UnionFind()
    for t in range(tri.size):
        for v in range(4):
            verts.find((t, v))
        for f in range(4):
            u, p = tri.gluings[t][f]
            for v in range(4):
                if v != f:
                    verts.union((t, v), (u, p[v]))
    # link vertices are ends of edges: (tet, vertex, other end) merged by gluings
    ends = UnionFind()
    for t in range(tri.size):
        for v in range(4):
            for w in range(4):
                if w != v:
                    ends.find((t, v, w))
        for f in range(4):
            u, p = tri.gluings[t][f]
            for v in range(4):
                for w in range(4):
                    if v != f and w != f and v != w:
                        ends.union((t, v, w), (u, p[v], p[w]))
    result = []
    for group in verts.groups():
        members = set(group)
        triangles = len(members)
        # each link edge is a (tet, vertex, face) corner, glued in pairs
        edges = 3 * triangles // 2
        vertices = len({ends.find((t, v, w)) for t, v in members for w in range(4) if w != v})
        result.append((triangles, edges, vertices))
    return sorted(result)


def brute_force_isomorphic(t1, t2):
    """Exhaustive backtracking over (target tet, vertex map) for each tetrahedron.

    Tetrahedra are assigned in index order; a partial assignment is dropped
    as soon as a gluing between two assigned tetrahedra fails to match.
    """
    if t1.size != t2.size:
        return False
    n = t1.size
    perms = list(itertools.permutations(range(4)))
    tet_map = [None] * n
    vmaps = [None] * n

    def fits(t):
        for f in range(4):
            u, p = t1.gluings[t][f]
            if tet_map[u] is None:
                continue
            want = (tet_map[u], compose(vmaps[u], compose(p, inverse(vmaps[t]))))
            if t2.gluings[tet_map[t]][vmaps[t][f]] != want:
                return False
        return True

    def search(t, used):
        if t == n:
            return True
        for target in range(n):
            if target in used:
                continue
            tet_map[t] = target
            for sigma in perms:
                vmaps[t] = sigma
                if fits(t) and search(t + 1, used | {target}):
                    return True
            tet_map[t] = vmaps[t] = None
        return False

    return search(0, frozenset())


def random_triangulation(n, rng):
    """Random closed gluing of n tetrahedra (not necessarily a manifold)."""
    slots = [(t, f) for t in range(n) for f in range(4)]
    rng.shuffle(slots)
    glu = [[None] * 4 for _ in range(n)]
    for (t, f), (u, g) in zip(slots[::2], slots[1::2]):
        others_t = [v for v in range(4) if v != f]
        others_u = [v for v in range(4) if v != g]
        rng.shuffle(others_u)
        p = [None] * 4
        p[f] = g
        for x, y in zip(others_t, others_u):
            p[x] = y
        p = tuple(p)
        glu[t][f] = (u, p)
        glu[u][g] = (t, inverse(p))
    return Triangulation(glu)


def random_relabelling(n, rng):
    tet_map = list(range(n))
    rng.shuffle(tet_map)
    perms = list(itertools.permutations(range(4)))
    return tet_map, [rng.choice(perms) for _ in range(n)]


def lobachevsky(theta):
    return -mpmath.quad(lambda t: mpmath.log(abs(2 * mpmath.sin(t))), [0, theta])


def volume_by_angles(z):
    """Ideal tetrahedron volume as the sum of Lobachevsky functions of its angles."""
    mpmath.mp.dps = 30
    z = mpmath.mpc(z)
    if z.imag == 0:
        return 0.0
    flip = z.imag < 0
    if flip:
        z = mpmath.conj(z)
    angles = [mpmath.arg(z), mpmath.arg(1 / (1 - z)), mpmath.arg((z - 1) / z)]
    value = sum(lobachevsky(a) for a in angles)
    return float(-value if flip else value)


RNG = random.Random(20261017)
