import pytest

from maghom.corpus import whitney_h
from maghom.formulas import (complete_formulas, emh_max_check, falling_factorial, max_eulerian_length,
                             path_recurrence_check, star_formulas, support_bounds, tree_diagonality_check)
from maghom.graphs import Graph, complete, cycle, path, star
from maghom.homology import HomologyGroup, grading_cell, table
from maghom.verify import connected_graphs


def test_falling_factorial():
    assert falling_factorial(5, 3) == 60
    assert falling_factorial(3, 4) == 0
    assert falling_factorial(7, 0) == 1


@pytest.mark.parametrize("n", range(2, 7))
def test_star_support_bound(n):
    assert support_bounds(star(n)).l_max == 2 * n - 1


@pytest.mark.parametrize("n", range(2, 7))
def test_complete_support_bound(n):
    sb = support_bounds(complete(n))
    assert sb.l_max == sb.k_max == n - 1


def test_path_support_bound_by_brute_force():
    sb = support_bounds(path(3))
    assert sb.k_max == 3
    assert sb.l_max == max_eulerian_length(path(3)) == 7


def test_support_bound_needs_connected_graph():
    with pytest.raises(ValueError):
        support_bounds(Graph(range(2)))


@pytest.mark.parametrize("g", connected_graphs(5), ids=lambda g: str(sorted(g.edges)))
def test_complete_iff_diagonal_eulerian_homology(g):
    if g.n == 1:
        return
    sb = support_bounds(g)
    t = table(g, "EMH", range(0, sb.k_max + 1), range(0, sb.l_max + 1))
    diagonal = all(k == l for k, l in t.support())
    assert diagonal == (len(g.edges) == g.n * (g.n - 1) // 2)


def test_top_corner_checks():
    assert emh_max_check(star(3)).ok
    r = emh_max_check(complete(4))
    assert r.ok and r.details["emh"] == str(HomologyGroup(24))
    r = emh_max_check(whitney_h())
    assert r.ok and (r.details["k_max"], r.details["l_max"], r.details["emh"]) == (4, 7, "Z^24")


def test_star_formula_values():
    assert star_formulas(4, 2, 3, "EMH") == 24
    assert star_formulas(5, 3, 4, "EMH") == 60
    assert star_formulas(3, 7, 7, "DMH") == 6
    assert star_formulas(2, 3, 3, "DMH") == 2 * (2 + 2)
    with pytest.raises(ValueError):
        star_formulas(3, 1, 1, "MH")


@pytest.mark.parametrize("n", range(2, 7))
def test_star_eulerian_formulas_hold(n):
    t = table(star(n), "EMH", range(0, n + 1), range(0, 2 * n))
    for (k, l), h in t.cells.items():
        assert h == HomologyGroup(star_formulas(n, k, l, "EMH")), (k, l)


@pytest.mark.parametrize("n", [2, 3])
def test_star_discriminant_formulas_hold_for_small_stars(n):
    t = table(star(n), "DMH", range(0, n + 1), range(0, 2 * n))
    for (k, l), h in t.cells.items():
        assert h == HomologyGroup(star_formulas(n, k, l, "DMH")), (k, l)


def test_star_discriminant_has_off_diagonal_classes():
    # 0 -> EMC -> MC -> DMC -> 0 and diagonal MH give DMH_{k,l} = EMH_{k-1,l} for l not in {k-1, k}
    g = star(4)
    assert grading_cell(g, "DMH", 4, 5) == HomologyGroup(48)
    assert grading_cell(g, "EMH", 3, 5) == HomologyGroup(48)
    assert star_formulas(4, 4, 5, "DMH") == 0


@pytest.mark.xfail(strict=True, reason="DMH_{4,5}(S_4) is Z^48, not 0")
def test_star_discriminant_formulas_hold_for_s4():
    t = table(star(4), "DMH", range(0, 5), range(0, 8))
    for (k, l), h in t.cells.items():
        assert h == HomologyGroup(star_formulas(4, k, l, "DMH")), (k, l)


def test_complete_formula_report():
    r = complete_formulas(5, 2, "EMH")
    assert r["oracle"] == 60 and r["published"] == 20 and not r["agree"]
    assert complete_formulas(2, 1, "EMH")["agree"]
    assert complete_formulas(3, 0, "EMH")["oracle"] == 3
    assert grading_cell(complete(3), "EMH", 0, 0) == HomologyGroup(3)
    with pytest.raises(ValueError):
        complete_formulas(3, 3, "EMH")


@pytest.mark.parametrize("n", range(2, 7))
def test_complete_graph_diagonals_match_count(n):
    for kind in ("EMH", "DMH"):
        for k in range(n):
            assert grading_cell(complete(n), kind, k, k).free_rank == complete_formulas(n, k, kind)["oracle"]


def test_tree_check_on_small_path():
    assert tree_diagonality_check(path(3)).ok


def test_tree_check_reports_discriminant_cells():
    r = tree_diagonality_check(path(4))
    assert r.details["clauses"] == {"emh_diagonal_vanishes": True, "mh_diagonal": True,
                                    "dmh_off_diagonal_vanishes": False, "dmh_rank_identity": True}
    assert r.details["dmh_off_diagonal"]["(4,5)"] == "Z^16"


@pytest.mark.xfail(strict=True, reason="DMH of S_4 is nonzero at (4,5)")
def test_tree_check_passes_on_s4():
    assert tree_diagonality_check(star(4)).ok


@pytest.mark.xfail(strict=True, reason="DMH of P_4 is nonzero at (4,5), (4,6), (4,7)")
def test_tree_check_passes_on_p4():
    assert tree_diagonality_check(path(4)).ok


def test_tree_check_needs_a_tree():
    with pytest.raises(ValueError):
        tree_diagonality_check(complete(3))


def test_path_recurrence_report():
    r = path_recurrence_check(2)
    assert r.status == "report"
    assert r.details["cells"]["(1,1)"] == {"lhs": 4, "rhs": 4, "holds": True}
    assert r.details["cells"]["(2,3)"]["holds"]
    r4 = path_recurrence_check(4, l_range=range(0, 5))
    assert all(r4.details["cells"][f"(2,{l})"]["lhs"] == grading_cell(path(4), "EMH", 2, l).free_rank
               for l in range(0, 5))


def test_cycle_top_corner():
    assert emh_max_check(cycle(5)).ok
