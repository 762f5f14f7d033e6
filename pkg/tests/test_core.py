import pytest

from oracles import RNG, edge_degrees, link_counts, random_relabelling, random_triangulation
from pachner import core, seeds
from pachner.canon import canonical_signature, isomorphic
from pachner.core import (
    DuplicatePairing,
    InvalidSite,
    NonInvolutive,
    NotOrientable,
    SameTetrahedron,
    UnpairedFace,
    edge_classes,
    enumerate_23_sites,
    enumerate_32_sites,
    from_gluing_table,
    orient,
    pachner_23,
    pachner_32,
    perm_from_triples,
    relabel,
    vertex_links,
)
from pachner.explorer import generate_tn


def fig8_rows():
    return seeds.table_rows(seeds.FIG8_TABLE)


def test_perm_from_triples_maps_omitted_to_omitted():
    # A123 -> B230 from the figure eight table
    assert perm_from_triples((1, 2, 3), (2, 3, 0)) == (1, 2, 3, 0)
    assert perm_from_triples((0, 1, 2), (0, 1, 3)) == (0, 1, 3, 2)


def test_fig8_table_builds(t2):
    assert t2.size == 2
    assert t2.adjacent(0, 0) == (1, (1, 2, 3, 0))
    assert t2.adjacent(1, 1) == (0, (3, 0, 1, 2))


def test_sister_table_builds(sister):
    assert sister.size == 2
    assert sister != seeds.fig8()


def test_one_sided_rows_are_completed():
    rows = [r for r in fig8_rows() if r[0] == 0]
    assert from_gluing_table(rows) == seeds.fig8()


def test_duplicate_pairing():
    rows = [r for r in fig8_rows() if not (r[0] == 0 and r[1] == (1, 2, 3))]
    rows.append((0, (1, 2, 3), 0, (0, 2, 3)))
    with pytest.raises(DuplicatePairing):
        from_gluing_table(rows)


def test_non_involutive():
    rows = fig8_rows()
    # B's row for face 123 points back to A with the wrong permutation
    rows = [r if (r[0], r[1]) != (1, (1, 2, 3)) else (1, (1, 2, 3), 0, (3, 0, 1)) for r in rows]
    with pytest.raises((NonInvolutive, DuplicatePairing)):
        from_gluing_table(rows)


def test_unpaired_face():
    # drop A123 -> B230 and its mirror B023 -> A312
    rows = [r for r in fig8_rows() if (r[0], r[1]) not in {(0, (1, 2, 3)), (1, (0, 2, 3))}]
    with pytest.raises(UnpairedFace):
        from_gluing_table(rows)


def test_edge_classes_of_seeds(t2, sister):
    for tri in (t2, sister):
        classes = edge_classes(tri)
        assert sorted(ec.degree for ec in classes) == edge_degrees(tri) == [6, 6]


def test_edge_classes_partition_tet_edges():
    for n in range(1, 7):
        tri = random_triangulation(n, RNG)
        classes = edge_classes(tri)
        pairs = [p for ec in classes for p in ec.pairs()]
        assert len(pairs) == len(set(pairs)) == 6 * n
        assert sorted(ec.degree for ec in classes) == edge_degrees(tri)


def test_vertex_links_of_seeds(t2, sister):
    for tri in (t2, sister):
        cusps = vertex_links(tri)
        assert len(cusps) == 1
        assert cusps[0].euler_characteristic == 0
        assert link_counts(tri) == [(8, 12, 4)]


def test_vertex_links_against_oracle():
    for n in range(1, 7):
        tri = random_triangulation(n, RNG)
        cusps = vertex_links(tri)
        assert sum(len(c.members) for c in cusps) == 4 * n
        expected = sorted(t - e + v for t, e, v in link_counts(tri))
        assert sorted(c.euler_characteristic for c in cusps) == expected


def test_seeds_orientable(t2, sister):
    assert orient(t2) == [1, 1]
    assert orient(sister) == [1, 1]


def test_non_orientable_single_tet():
    # faces 0<->1 and 2<->3 both glued by the even permutation (01)(23)
    p = (1, 0, 3, 2)
    tri = core.Triangulation([[(0, p)] * 4])
    with pytest.raises(NotOrientable):
        orient(tri)


def test_orient_matches_parity_check():
    for _ in range(30):
        tri = random_triangulation(RNG.randint(1, 5), RNG)
        try:
            signs = orient(tri)
        except NotOrientable:
            continue
        for t in range(tri.size):
            for u, p in tri.gluings[t]:
                assert signs[t] * signs[u] * core.sign(p) == -1


def test_23_site_counts(t2, sister, t3):
    assert len(enumerate_23_sites(t2)) == 4
    assert len(enumerate_23_sites(sister)) == 4
    assert len(enumerate_23_sites(t3[0])) == 6


def test_pachner_23_on_t2_gives_t3(t2):
    hand_t3, _ = generate_tn(3)
    for site in enumerate_23_sites(t2):
        out = pachner_23(t2, site)
        assert out.size == 3
        assert canonical_signature(out) == canonical_signature(hand_t3)


def test_identifications_after_move(t2):
    out = pachner_23(t2, core.site_23_at(t2, 0, 0))
    C, D, E = 0, 1, 2
    assert out.adjacent(E, 0) == (D, perm_from_triples((1, 2, 3), (2, 3, 0)))  # E123 = D230
    assert out.adjacent(E, 3) == (D, perm_from_triples((0, 1, 2), (0, 1, 3)))  # E012 = D013
    assert out.adjacent(C, 2) == (D, perm_from_triples((0, 1, 3), (0, 1, 2)))  # C013 = D012
    assert out.adjacent(E, 2) == (C, perm_from_triples((0, 1, 3), (0, 1, 2)))  # E013 = C012


def test_self_glued_face_is_not_a_site(sister3):
    tri, _ = sister3
    sites = enumerate_23_sites(tri)
    assert len(sites) == 5
    self_glued = [(t, f) for t in range(tri.size) for f in range(4) if tri.adjacent(t, f)[0] == t]
    assert self_glued
    t, f = self_glued[0]
    with pytest.raises(SameTetrahedron):
        core.site_23_at(tri, t, f)


def test_32_sites(t2, t3):
    assert enumerate_32_sites(t2) == []
    assert len(enumerate_32_sites(t3[0])) >= 1


def test_32_rejects_degree_six(t2):
    with pytest.raises(InvalidSite):
        pachner_32(t2, edge_classes(t2)[0])


def test_32_on_t3_gives_t2(t2, t3):
    tri, _ = t3
    for edge in enumerate_32_sites(tri):
        assert isomorphic(pachner_32(tri, edge), t2)


@pytest.mark.parametrize("name", ["fig8", "fig8-sister"])
def test_round_trip_every_site(name):
    tri = seeds.BUILTIN[name]()
    for _ in range(2):
        for site in enumerate_23_sites(tri):
            up = pachner_23(tri, site)
            central = core.central_edge(up)
            assert central in enumerate_32_sites(up)
            down = pachner_32(up, central)
            assert down.size == tri.size
            assert isomorphic(down, tri)
        tri = pachner_23(tri, enumerate_23_sites(tri)[0])


def test_moves_preserve_coherent_orientation(t2, sister):
    for tri in (t2, sister):
        frontier = [tri]
        for _ in range(2):
            nxt = []
            for t in frontier:
                for site in enumerate_23_sites(t):
                    out = pachner_23(t, site)
                    assert core.is_coherently_oriented(out)
                    assert all(c.euler_characteristic == 0 for c in vertex_links(out))
                    assert sum(ec.degree for ec in edge_classes(out)) == 6 * out.size
                    nxt.append(out)
            frontier = nxt[:4]


def test_relabel_identity(t2):
    assert relabel(t2, [0, 1], [core.IDENTITY] * 2) == t2


def test_relabel_invariance_of_signature(t2):
    sig = canonical_signature(t2)
    for _ in range(50):
        tet_map, vmaps = random_relabelling(2, RNG)
        assert canonical_signature(relabel(t2, tet_map, vmaps)) == sig


def test_moves_on_random_triangulations():
    for _ in range(40):
        tri = random_triangulation(RNG.randint(2, 5), RNG)
        for site in enumerate_23_sites(tri):
            out = pachner_23(tri, site)
            assert out.size == tri.size + 1
            assert sum(ec.degree for ec in edge_classes(out)) == 6 * out.size
            back = pachner_32(out, core.central_edge(out))
            assert back.size == tri.size
            if tri.is_connected():
                assert isomorphic(back, tri)
