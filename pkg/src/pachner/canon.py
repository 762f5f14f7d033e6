"""Canonical signatures for isomorphism classes of triangulations."""

from .core import ALL_PERMS, TriangulationError, compose, inverse, sign

_PERM_INDEX = {p: i for i, p in enumerate(ALL_PERMS)}
_EVEN_PERMS = tuple(p for p in ALL_PERMS if sign(p) == 1)
_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


class Disconnected(TriangulationError):
    pass


def _starts(orientation_preserving):
    return _EVEN_PERMS if orientation_preserving else ALL_PERMS


def _encode_from(tri, start, pi):
    """Breadth-first relabelling from ``start`` with vertex map ``pi``.

    Returns the code sequence, or None when the walk misses a tetrahedron.
    """
    n = tri.size
    new_index = {start: 0}
    vmap = {start: pi}
    order = [start]
    code = []
    i = 0
    while i < len(order):
        t = order[i]
        sigma = vmap[t]
        sigma_inv = inverse(sigma)
        for f in range(4):
            old_f = sigma_inv[f]
            u, p = tri.adjacent(t, old_f)
            if u not in new_index:
                # label u so that this gluing reads as the identity
                new_index[u] = len(order)
                order.append(u)
                vmap[u] = compose(sigma, inverse(p))
            glued = compose(vmap[u], compose(p, sigma_inv))
            code.append(new_index[u])
            code.append(_PERM_INDEX[glued])
        i += 1
    if len(order) != n:
        return None
    return tuple(code)


def canonical_code(tri, orientation_preserving=False):
    """Lexicographically least relabelled gluing code over all starting points."""
    if not tri.is_connected():
        raise Disconnected("canonical signatures need a connected triangulation")
    best = None
    for start in range(tri.size):
        for pi in _starts(orientation_preserving):
            code = _encode_from(tri, start, pi)
            if best is None or code < best:
                best = code
    return (tri.size,) + best


def canonical_signature(tri, orientation_preserving=False):
    """Relabelling-invariant key, rendered as lowercase base-36 text."""
    return _to_base36(canonical_code(tri, orientation_preserving))


def _to_base36(code):
    # fixed-width digits keep the encoding injective
    width = 1
    while 36 ** width <= max(max(code), 23):
        width += 1
    digits = []
    for x in code:
        chunk = []
        for _ in range(width):
            x, r = divmod(x, 36)
            chunk.append(_DIGITS[r])
        digits.append("".join(reversed(chunk)))
    return f"{width}{''.join(digits)}"


def find_isomorphisms(t1, t2, orientation_preserving=False):
    """Yield every ``(tet_map, vertex_maps)`` carrying t1 onto t2.

    Plain forced-extension search: fix where tetrahedron 0 goes and how its
    vertices map, then follow gluings and check each one.
    """
    if t1.size != t2.size:
        return
    n = t1.size
    perms = _starts(orientation_preserving)
    for target in range(n):
        for pi in perms:
            tet_map = [None] * n
            vmaps = [None] * n
            tet_map[0], vmaps[0] = target, pi
            used = {target}
            stack = [0]
            ok = True
            while stack and ok:
                t = stack.pop()
                for f in range(4):
                    u, p = t1.adjacent(t, f)
                    u2, p2 = t2.adjacent(tet_map[t], vmaps[t][f])
                    # vmaps[u] must satisfy vmaps[u] p = p2 vmaps[t]
                    want = compose(p2, compose(vmaps[t], inverse(p)))
                    if tet_map[u] is None:
                        if u2 in used:
                            ok = False
                            break
                        tet_map[u], vmaps[u] = u2, want
                        used.add(u2)
                        stack.append(u)
                    elif tet_map[u] != u2 or vmaps[u] != want:
                        ok = False
                        break
            if ok and None not in tet_map:
                yield tet_map, vmaps


def isomorphic(t1, t2, orientation_preserving=False):
    return next(find_isomorphisms(t1, t2, orientation_preserving), None) is not None
