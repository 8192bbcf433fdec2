import json

import pytest

from maghom.chains import boundary_matrix, enumerate_paths
from maghom.corpus import corpus, pendant_triangle, whitney_h, whitney_k
from maghom.graphs import complete, cycle, magnitude_series, path, star
from maghom.homology import (BiGradedTable, HomologyGroup, MalformedComplex, direct_sum, euler_check, grading_cell,
                             homology, length_slice, table, torsion_witness)
from maghom.posets import adjoin_bounds, hasse_graph, order_complex, rank_of
from maghom.sparse import SparseIntMatrix
from maghom.verify import WHITNEY_H, WHITNEY_K, connected_graphs, hatted_graph


def test_group_invariants():
    h = HomologyGroup(2, (6, 2))
    assert h.torsion == (2, 6)
    assert str(h) == "Z^2 + Z_2 + Z_6"
    assert str(HomologyGroup()) == "0"
    assert h.contains_cyclic(3) and not h.contains_cyclic(4)
    with pytest.raises(ValueError):
        HomologyGroup(0, (2, 3))
    with pytest.raises(ValueError):
        HomologyGroup(0, (1,))


def test_direct_sum_normalizes():
    assert direct_sum([HomologyGroup(1, (2,)), HomologyGroup(0, (3,))]) == HomologyGroup(1, (6,))
    assert HomologyGroup(0, (2,)) + HomologyGroup(0, (2,)) == HomologyGroup(0, (2, 2))


def test_homology_of_zero_maps():
    assert homology(SparseIntMatrix(0, 4), SparseIntMatrix(4, 0)) == HomologyGroup(4)


def test_homology_sees_torsion():
    d1 = SparseIntMatrix(0, 1)
    d2 = SparseIntMatrix.from_dense([[2]])
    assert homology(d1, d2) == HomologyGroup(0, (2,))


def test_non_complex_is_rejected():
    d = SparseIntMatrix.from_dense([[1]])
    with pytest.raises(MalformedComplex):
        homology(d, d)
    with pytest.raises(ValueError):
        homology(SparseIntMatrix(1, 2), SparseIntMatrix(3, 1))


def test_star_eulerian_cell():
    assert grading_cell(star(4), "EMH", 2, 3) == HomologyGroup(24)
    assert grading_cell(star(2), "EMH", 2, 3) == HomologyGroup(4)


def test_projective_plane_top_summand():
    g = hatted_graph("rp2")
    assert g.n == 33
    assert grading_cell(g, "MH", 3, 4, endpoints=(0, g.n - 1)) == HomologyGroup(0, (2,))


@pytest.mark.parametrize("g,want", [(whitney_h(), WHITNEY_H), (whitney_k(), WHITNEY_K)], ids=["H", "K"])
def test_whitney_pair_tables(g, want):
    t = table(g, "EMH", range(0, 5), range(0, 10))
    assert {kl: h.free_rank for kl, h in t.support().items()} == want
    assert not t.has_torsion()


def test_whitney_pair_share_plain_homology():
    a = table(whitney_h(), "MH", range(0, 5), range(0, 5)).support()
    b = table(whitney_k(), "MH", range(0, 5), range(0, 5)).support()
    assert a == b


@pytest.mark.parametrize("g", [path(4), star(3), star(4)], ids=repr)
def test_trees_have_diagonal_plain_homology(g):
    t = table(g, "MH", range(0, 6), range(0, 6))
    assert all(k == l for k, l in t.support())


def test_boundary_has_order_one():
    g = cycle(5)
    up = enumerate_paths(g, 3, 3)
    mid = enumerate_paths(g, 2, 3)
    low = enumerate_paths(g, 1, 3)
    d3 = boundary_matrix(g, up, mid)
    d2 = boundary_matrix(g, mid, low)
    col = {r: v for (r, c), v in d3.entries.items() if c == 0}
    assert torsion_witness(col, d2, d3) == 1


def test_free_class_has_order_zero():
    # S_3 at (3,3): homology is free, so any cycle that is not a boundary has infinite order
    g = star(3)
    b = {j: enumerate_paths(g, j, 3) for j in (2, 3, 4)}
    d3 = boundary_matrix(g, b[3], b[2])
    d4 = SparseIntMatrix(len(b[3]), 0)
    assert grading_cell(g, "MH", 3, 3).free_rank > 0
    cycles = [j for j in range(len(b[3])) if not d3.apply({j: 1})]
    assert cycles
    assert torsion_witness({cycles[0]: 1}, d3, d4) == 0


def test_witness_order_on_a_small_complex():
    d1 = SparseIntMatrix(0, 1)
    d2 = SparseIntMatrix.from_dense([[6]])
    assert torsion_witness([1], d1, d2) == 6
    assert torsion_witness([2], d1, d2) == 3
    assert torsion_witness([6], d1, d2) == 1


def test_witness_rejects_non_cycles():
    d1 = SparseIntMatrix.from_dense([[1, 0]])
    with pytest.raises(ValueError):
        torsion_witness([1, 0], d1, SparseIntMatrix(2, 0))


def test_euler_checks():
    assert euler_check(complete(1)).passed
    assert euler_check(star(3), trunc=6).passed
    assert euler_check(pendant_triangle(), trunc=5).passed
    r = euler_check(star(3), trunc=6)
    assert r.series_side == tuple(magnitude_series(star(3), 6))
    assert all(x == 0 for x in r.residuals)


def test_table_json_round_trip():
    t = table(cycle(5), "MH", range(0, 4), range(0, 4), graph_id="c5")
    data = json.loads(t.to_json())
    assert data["kind"] == "MH" and data["graph"] == "c5"
    assert data["cells"]["(0,0)"] == {"rank": 5, "torsion": []}
    assert BiGradedTable.from_dict(data).cells == t.cells
    assert "l\\k" in t.format()


def test_table_fills_rectangle_with_zeros():
    t = table(complete(3), "EMH", range(0, 5), range(0, 3))
    assert len(t.cells) == 15
    assert t[(4, 2)].is_zero and t[(3, 2)].is_zero


def test_length_slice_matches_cells():
    g = cycle(5)
    sl = length_slice(g, "DMH", [2, 3, 4], 4)
    assert all(sl[k] == grading_cell(g, "DMH", k, 4) for k in (2, 3, 4))


def test_unknown_kind():
    with pytest.raises(ValueError):
        grading_cell(cycle(3), "XMH", 0, 0)


@pytest.mark.parametrize("g", connected_graphs(4), ids=lambda g: str(sorted(g.edges)))
def test_summands_add_up(g):
    for kind in ("MH", "EMH", "DMH"):
        for ell in range(0, 4):
            for k in range(0, ell + 1):
                parts = [grading_cell(g, kind, k, ell, (a, b)) for a in range(g.n) for b in range(g.n)]
                assert direct_sum(parts) == grading_cell(g, kind, k, ell)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_star_split_sequence_identity(n):
    g = star(n)
    for k in (3, 4):
        dmh = grading_cell(g, "DMH", k, k).free_rank
        assert dmh == grading_cell(g, "MH", k, k).free_rank + grading_cell(g, "EMH", k - 1, k).free_rank


@pytest.mark.parametrize("name", ["rp2", "moore_z3", "moore_z5", "pk_sigma_4", "lens_3_1"])
def test_ranked_poset_bridge(name):
    p = corpus(name)
    hat = adjoin_bounds(p)
    g = hasse_graph(hat)
    r = rank_of(hat)
    oc = order_complex(p)
    for kind in ("MH", "EMH"):
        for j in range(0, oc.dimension + 1):
            h = oc.homology(j)
            reduced = HomologyGroup(h.free_rank - (j == 0), h.torsion)
            assert grading_cell(g, kind, j + 2, r, (0, g.n - 1)) == reduced, (kind, j)


@pytest.mark.parametrize("name", ["rp2", "moore_z3", "pk_sigma_4"])
def test_top_length_bases_are_eulerian(name):
    hat = adjoin_bounds(corpus(name))
    g = hasse_graph(hat)
    r = rank_of(hat)
    for k in range(1, r + 1):
        plain = enumerate_paths(g, k, r, "plain", (0, g.n - 1))
        assert plain.paths == enumerate_paths(g, k, r, "eulerian", (0, g.n - 1)).paths

