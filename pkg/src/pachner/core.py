"""Ideal triangulations, their edge and vertex classes, and 2-3 / 3-2 moves.

A triangulation on ``n`` tetrahedra stores, for every tetrahedron ``t`` and
face ``f`` (a face is named by the vertex it omits), the pair
``(u, perm)`` where ``u`` is the adjacent tetrahedron and ``perm`` sends the
vertices of ``t`` to the vertices of ``u``; ``perm[f]`` is the face of ``u``.

Labelling convention for the 2-3 move.  For a site where face ``f`` of
tetrahedron A meets tetrahedron B, let ``a`` be the apex of A (vertex ``f``),
``b`` the apex of B, and ``p, q, r`` the vertices of the shared face listed
so that ``(a, p, q, r)`` is an even rearrangement of A's labels.  The three
new tetrahedra are appended in the order

    C = (a, b, r, p)    D = (a, b, p, q)    E = (a, b, q, r)

(vertex ``i`` of each new tetrahedron is the i-th entry).  For the face
pairing A123 = B230 this gives the internal pairings C013 = D012,
D013 = E012 and E013 = C012, and turns an existing pairing A012 = B013 into
E123 = D230.  The new central edge is edge 01 of each of C, D and E.
"""

from collections import deque
from itertools import permutations
from typing import NamedTuple

IDENTITY = (0, 1, 2, 3)
ALL_PERMS = tuple(permutations(range(4)))
EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


class TriangulationError(ValueError):
    pass


class NonInvolutive(TriangulationError):
    pass


class UnpairedFace(TriangulationError):
    pass


class DuplicatePairing(TriangulationError):
    pass


class NotOrientable(TriangulationError):
    pass


class SameTetrahedron(TriangulationError):
    pass


class InvalidSite(TriangulationError):
    pass


# -- permutations of {0,1,2,3} -------------------------------------------

def compose(p, q):
    """The permutation ``p after q``."""
    return (p[q[0]], p[q[1]], p[q[2]], p[q[3]])


def inverse(p):
    inv = [0] * 4
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def sign(p):
    """+1 for even permutations, -1 for odd ones."""
    s = 1
    for i in range(4):
        for j in range(i + 1, 4):
            if p[i] > p[j]:
                s = -s
    return s


def is_perm(p):
    return len(p) == 4 and sorted(p) == [0, 1, 2, 3]


def perm_from_triples(src, dst):
    """Permutation sending the ordered face ``src`` onto ``dst`` elementwise.

    The vertex missing from ``src`` is sent to the vertex missing from
    ``dst``.
    """
    if len(src) != 3 or len(dst) != 3 or len(set(src)) != 3 or len(set(dst)) != 3:
        raise TriangulationError(f"faces must be ordered 3-subsets: {src} -> {dst}")
    if not set(src) <= {0, 1, 2, 3} or not set(dst) <= {0, 1, 2, 3}:
        raise TriangulationError(f"vertex labels must lie in 0..3: {src} -> {dst}")
    perm = [0] * 4
    for x, y in zip(src, dst):
        perm[x] = y
    perm[_missing(src)] = _missing(dst)
    return tuple(perm)


def _missing(triple):
    return 6 - sum(triple)


# -- the triangulation itself ---------------------------------------------

class FaceSlot(NamedTuple):
    tet: int
    face: int


class Site23(NamedTuple):
    """A face of ``tet`` glued to face ``other_face`` of a different tetrahedron."""

    tet: int
    face: int
    other_tet: int
    other_face: int
    perm: tuple


class EdgeClass(NamedTuple):
    """An edge of the triangulation as a cycle of tetrahedron embeddings.

    Each member is ``(tet, verts)``: ``verts[0], verts[1]`` are the ends of
    the edge inside ``tet``, and the next member is reached through the face
    of ``tet`` opposite ``verts[2]``.  ``reversed_`` marks an edge that the
    gluings identify with itself back to front.
    """

    members: tuple
    reversed_: bool = False

    @property
    def degree(self):
        return len(self.members)

    def tets(self):
        return [t for t, _ in self.members]

    def pairs(self):
        return [(t, frozenset(v[:2])) for t, v in self.members]


class CuspClass(NamedTuple):
    members: frozenset
    euler_characteristic: int


class Triangulation:
    """An immutable, validated, closed ideal triangulation."""

    __slots__ = ("_gluings", "_hash")

    def __init__(self, gluings):
        glu = tuple(tuple((int(u), tuple(p)) for u, p in row) for row in gluings)
        n = len(glu)
        for t, row in enumerate(glu):
            if len(row) != 4:
                raise UnpairedFace(f"tetrahedron {t} has {len(row)} faces")
            for f, (u, p) in enumerate(row):
                if not 0 <= u < n or not is_perm(p):
                    raise TriangulationError(f"bad gluing at {t}:{f}: {(u, p)}")
                back_u, back_p = glu[u][p[f]]
                if back_u != t or back_p != inverse(p):
                    raise NonInvolutive(f"face {t}:{f} -> {u}:{p[f]} is not matched from the other side")
                if u == t and p[f] == f:
                    raise NonInvolutive(f"face {t}:{f} is glued to itself")
        object.__setattr__(self, "_gluings", glu)
        object.__setattr__(self, "_hash", hash(glu))

    def __setattr__(self, name, value):
        raise AttributeError("Triangulation is immutable")

    @property
    def size(self):
        return len(self._gluings)

    def __len__(self):
        return len(self._gluings)

    @property
    def gluings(self):
        return self._gluings

    def adjacent(self, tet, face):
        return self._gluings[tet][face]

    def __eq__(self, other):
        if not isinstance(other, Triangulation):
            return NotImplemented
        return self._gluings == other._gluings

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Triangulation(n={self.size})"

    def gluing_rows(self):
        """One ``(tet, face_triple, target_tet, target_triple)`` row per face."""
        rows = []
        for t, row in enumerate(self._gluings):
            for f in range(4):
                u, p = row[f]
                triple = tuple(v for v in range(4) if v != f)
                rows.append((t, triple, u, tuple(p[v] for v in triple)))
        return rows

    def is_connected(self):
        seen = {0}
        stack = [0]
        while stack:
            t = stack.pop()
            for u, _ in self._gluings[t]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.size


def from_gluing_table(rows, n=None):
    """Build a triangulation from rows ``(tet, face_triple, target, target_triple)``.

    Rows may list each pairing once or from both sides.  A missing mirror row
    is filled in; a mirror row that disagrees raises NonInvolutive.
    """
    table = {}
    targets = {}
    for tet, src, target, dst in rows:
        perm = perm_from_triples(tuple(src), tuple(dst))
        slot = (tet, _missing(src))
        dest = (target, perm[slot[1]])
        if slot in table:
            raise DuplicatePairing(f"face {slot} listed twice")
        if dest in targets:
            raise DuplicatePairing(f"face {dest} is the target of both {targets[dest]} and {slot}")
        table[slot] = (target, perm)
        targets[dest] = slot
    if n is None:
        n = 1 + max([t for t, _ in table] + [u for u, _ in table.values()], default=-1)
    for (t, f), (u, p) in list(table.items()):
        mirror = (u, p[f])
        if mirror in table:
            if table[mirror] != (t, inverse(p)):
                raise NonInvolutive(f"face {(t, f)} -> {mirror} disagrees with the row for {mirror}")
        else:
            table[mirror] = (t, inverse(p))
    for t in range(n):
        for f in range(4):
            if (t, f) not in table:
                raise UnpairedFace(f"face {f} of tetrahedron {t} is not glued")
    return Triangulation([[table[(t, f)] for f in range(4)] for t in range(n)])


def edge_classes(tri):
    """All edge classes, each walked starting from its lowest tetrahedron edge.

    Starting embeddings are even rearrangements of 0123, so in a coherently
    oriented triangulation every member's ``verts`` is even.
    """
    seen = set()
    classes = []
    for t in range(tri.size):
        for i, j in EDGES:
            if (t, i, j) in seen:
                continue
            k, l = (v for v in range(4) if v not in (i, j))
            verts = (i, j, k, l) if sign((i, j, k, l)) == 1 else (i, j, l, k)
            members = []
            cur, v = t, verts
            while True:
                key = (cur, min(v[0], v[1]), max(v[0], v[1]))
                if key in seen:
                    break
                seen.add(key)
                members.append((cur, v))
                u, p = tri.adjacent(cur, v[2])
                cur, v = u, (p[v[0]], p[v[1]], p[v[3]], p[v[2]])
            classes.append(EdgeClass(tuple(members), v[0] != verts[0]))
    return classes


def vertex_links(tri):
    """Cusp classes with the Euler characteristic of each vertex link."""
    owner = {}
    cusps = []
    for t in range(tri.size):
        for v in range(4):
            if (t, v) in owner:
                continue
            idx = len(cusps)
            members = set()
            stack = [(t, v)]
            owner[(t, v)] = idx
            while stack:
                s, w = stack.pop()
                members.add((s, w))
                for f in range(4):
                    if f == w:
                        continue
                    u, p = tri.adjacent(s, f)
                    nxt = (u, p[w])
                    if nxt not in owner:
                        owner[nxt] = idx
                        stack.append(nxt)
            cusps.append(members)
    ends = [0] * len(cusps)
    for ec in edge_classes(tri):
        t, v = ec.members[0]
        ends[owner[(t, v[0])]] += 1
        if not ec.reversed_:
            ends[owner[(t, v[1])]] += 1
    result = []
    for idx, members in enumerate(cusps):
        triangles = len(members)
        result.append(CuspClass(frozenset(members), triangles - 3 * triangles // 2 + ends[idx]))
    return result


def orient(tri):
    """Per-tetrahedron signs making every gluing orientation reversing.

    Tetrahedron 0 gets +1.  Raises NotOrientable if no such choice exists.
    """
    signs = [0] * tri.size
    for start in range(tri.size):
        if signs[start]:
            continue
        signs[start] = 1
        queue = deque([start])
        while queue:
            t = queue.popleft()
            for u, p in tri.gluings[t]:
                want = -signs[t] * sign(p)
                if signs[u] == 0:
                    signs[u] = want
                    queue.append(u)
                elif signs[u] != want:
                    raise NotOrientable("gluing parities are inconsistent")
    return signs


def is_coherently_oriented(tri):
    """True when every gluing permutation is odd (all tetrahedra labelled alike)."""
    return all(sign(p) == -1 for row in tri.gluings for _, p in row)


def enumerate_23_sites(tri):
    sites = []
    for t in range(tri.size):
        for f in range(4):
            u, p = tri.adjacent(t, f)
            if u != t and (t, f) < (u, p[f]):
                sites.append(Site23(t, f, u, p[f], p))
    return sites


def enumerate_32_sites(tri):
    sites = []
    for ec in edge_classes(tri):
        try:
            _check_32(tri, ec)
        except InvalidSite:
            continue
        sites.append(ec)
    return sites


def site_23_at(tri, tet, face):
    u, p = tri.adjacent(tet, face)
    if u == tet:
        raise SameTetrahedron(f"face {face} of tetrahedron {tet} is glued to the same tetrahedron")
    return Site23(tet, face, u, p[face], p)


def _survivor_index(n, removed):
    index = {}
    for t in range(n):
        if t not in removed:
            index[t] = len(index)
    return index


def _rebuild(tri, removed, new_tets, external):
    """Assemble a triangulation after replacing ``removed`` with ``new_tets``.

    ``new_tets`` lists vertex-id tuples; tetrahedra sharing three ids are
    glued along the corresponding face.  ``external`` maps
    ``(new_index, face)`` to ``(old_tet, old_face, psi)`` where ``psi`` sends
    the new tetrahedron's vertices to the old tetrahedron's vertices.
    """
    n = tri.size
    index = _survivor_index(n, removed)
    base = len(index)
    slot_of_old = {}
    for (k, f), (old, h, psi) in external.items():
        slot_of_old[(old, h)] = (k, psi)

    gluings = [[(index.get(u), p) for u, p in tri.gluings[t]]
               for t in range(n) if t not in removed]
    gluings += [[None] * 4 for _ in new_tets]

    for k, ids in enumerate(new_tets):
        for f in range(4):
            if (k, f) in external:
                old, h, psi = external[(k, f)]
                x, phi = tri.adjacent(old, h)
                full = compose(phi, psi)
                if x in removed:
                    k2, psi2 = slot_of_old[(x, phi[h])]
                    gluings[base + k][f] = (base + k2, compose(inverse(psi2), full))
                else:
                    gluings[base + k][f] = (index[x], full)
                    gluings[index[x]][phi[h]] = (base + k, inverse(full))
                continue
            face_ids = set(ids) - {ids[f]}
            for k2, ids2 in enumerate(new_tets):
                if k2 != k and face_ids <= set(ids2):
                    (far,) = set(ids2) - face_ids
                    perm = tuple(ids2.index(x) if j != f else ids2.index(far)
                                 for j, x in enumerate(ids))
                    gluings[base + k][f] = (base + k2, perm)
                    break
            else:
                raise InvalidSite("internal face without partner")
    return Triangulation(gluings)


APEX_A, APEX_B = 4, 5


def _split_23(site):
    """Vertex-id bookkeeping shared by the combinatorial and shape moves."""
    tA, f, tB, g, perm = site
    eq = [v for v in range(4) if v != f]
    if sign((f, *eq)) == -1:
        eq[1], eq[2] = eq[2], eq[1]
    p, q, r = eq
    new_tets = [(APEX_A, APEX_B, r, p), (APEX_A, APEX_B, p, q), (APEX_A, APEX_B, q, r)]
    to_a = {APEX_A: f}
    to_b = {APEX_B: g}
    for x in eq:
        to_a[x] = x
        to_b[x] = perm[x]
    return new_tets, to_a, to_b


def pachner_23(tri, site):
    """Replace the two tetrahedra of ``site`` by three (appended as C, D, E)."""
    tA, f, tB, g, perm = site
    if tA == tB:
        raise SameTetrahedron("a 2-3 move needs two distinct tetrahedra")
    if tri.adjacent(tA, f) != (tB, perm):
        raise InvalidSite(f"{site} is not a face pairing of this triangulation")
    new_tets, to_a, to_b = _split_23(site)
    external = {}
    for k, ids in enumerate(new_tets):
        missing_eq = ({0, 1, 2, 3} - {f} - set(ids)).pop()
        # face opposite the A apex lies in B, and vice versa
        psi_b = tuple(to_b[x] if x != APEX_A else perm[missing_eq] for x in ids)
        external[(k, 0)] = (tB, perm[missing_eq], psi_b)
        psi_a = tuple(to_a[x] if x != APEX_B else missing_eq for x in ids)
        external[(k, 1)] = (tA, missing_eq, psi_a)
    return _rebuild(tri, {tA, tB}, new_tets, external)


def _check_32(tri, edge):
    members = edge.members
    if len(members) != 3:
        raise InvalidSite(f"edge of degree {len(members)} is not a 3-2 site")
    tets = [t for t, _ in members]
    if len(set(tets)) != 3:
        raise InvalidSite("a 3-2 move needs three distinct tetrahedra")
    for i, (t, v) in enumerate(members):
        u, p = tri.adjacent(t, v[2])
        t2, v2 = members[(i + 1) % 3]
        if u != t2 or (p[v[0]], p[v[1]], p[v[3]], p[v[2]]) != v2:
            raise InvalidSite("edge members do not form a cycle in this triangulation")


def _split_32(edge):
    """Vertex ids (apexes 4, 5; equator 6, 7, 8) for the three tetrahedra."""
    maps = []
    for i, (t, v) in enumerate(edge.members):
        ids = [None] * 4
        ids[v[0]] = APEX_A
        ids[v[1]] = APEX_B
        ids[v[2]] = 6 + i
        ids[v[3]] = 6 + (i + 1) % 3
        maps.append((t, tuple(ids)))
    new_tets = [(APEX_A, 7, 8, 6), (APEX_B, 7, 6, 8)]
    return maps, new_tets


def pachner_32(tri, edge):
    """Replace the three tetrahedra around a degree-3 edge by two (appended)."""
    _check_32(tri, edge)
    maps, new_tets = _split_32(edge)
    external = {}
    for k, ids in enumerate(new_tets):
        apex = ids[0]
        other_apex = APEX_B if apex == APEX_A else APEX_A
        for f in range(1, 4):
            face_ids = set(ids) - {ids[f]}
            for t, old_ids in maps:
                if face_ids <= set(old_ids):
                    h = old_ids.index(other_apex)
                    psi = tuple(old_ids.index(x) if x != ids[f] else h for x in ids)
                    external[(k, f)] = (t, h, psi)
                    break
            else:
                raise InvalidSite("degenerate bipyramid")
    return _rebuild(tri, set(edge.tets()), new_tets, external)


def central_edge(tri):
    """The edge class through edge 01 of the last tetrahedron (a fresh 2-3 edge)."""
    last = tri.size - 1
    for ec in edge_classes(tri):
        for t, v in ec.members:
            if t == last and {v[0], v[1]} == {0, 1}:
                return ec
    raise InvalidSite("no such edge")


def relabel(tri, tet_map, vertex_maps):
    """Apply ``old tet t -> tet_map[t]`` with vertices sent by ``vertex_maps[t]``."""
    n = tri.size
    if sorted(tet_map) != list(range(n)):
        raise TriangulationError("tet_map must be a permutation")
    new = [[None] * 4 for _ in range(n)]
    for t in range(n):
        sigma = vertex_maps[t]
        sigma_inv = inverse(sigma)
        for f in range(4):
            u, p = tri.adjacent(t, f)
            new[tet_map[t]][sigma[f]] = (tet_map[u], compose(vertex_maps[u], compose(p, sigma_inv)))
    return Triangulation(new)
