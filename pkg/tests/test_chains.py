import pytest

from maghom.chains import (GradedPath, asao_izumihara, boundary_matrix, enumerate_paths, paths_by_endpoints,
                           simplicial_boundaries, SimplicialComplex)
from maghom.corpus import pendant_triangle
from maghom.formulas import falling_factorial, support_bounds
from maghom.graphs import complete, cycle, path, star
from maghom.posets import adjoin_bounds, hasse_graph, order_complex, rank_of
from maghom.corpus import corpus
from maghom.verify import connected_graphs, relative_homology
from maghom.homology import grading_cell

MODES = ("plain", "eulerian", "discriminant")


def labelled(g, p):
    return tuple(g.vertices[i] for i in p)


def short_paths_1_to_5(max_k=None):
    g = pendant_triangle()
    a, b = g.index(1), g.index(5)
    out = set()
    for ell in range(0, 5):
        for k in range(0, ell + 1):
            if max_k is not None and k > max_k:
                continue
            out |= {labelled(g, p) for p in enumerate_paths(g, k, ell, endpoints=(a, b))}
    return out


LISTED = {(1, 2, 1, 5), (1, 3, 1, 5), (1, 3, 2, 5), (1, 3, 4, 5), (1, 4, 3, 5), (1, 5, 3, 5), (1, 2, 3, 5),
          (1, 2, 5), (1, 3, 5), (1, 4, 5), (1, 5)}


def test_short_paths_up_to_three_steps_are_the_listed_eleven():
    assert short_paths_1_to_5(max_k=3) == LISTED


def test_short_paths_include_five_four_step_paths():
    # the complete enumeration also has 4-paths such as 1,2,1,3,5 of length 4
    extra = short_paths_1_to_5() - LISTED
    assert len(extra) == 5
    assert (1, 2, 1, 3, 5) in extra
    assert all(len(p) == 5 for p in extra)


@pytest.mark.xfail(strict=True, reason="the listed set omits the 4-step paths of length 4")
def test_short_paths_all_k_are_exactly_the_listed_eleven():
    assert short_paths_1_to_5() == LISTED


def test_graded_path():
    g = path(3)
    p = GradedPath.of(g, (0, 2, 1))
    assert (p.k, p.length, p.is_eulerian) == (2, 3, True)
    assert not GradedPath.of(g, (0, 1, 0)).is_eulerian
    with pytest.raises(ValueError):
        GradedPath.of(g, (0, 0))


@pytest.mark.parametrize("n", range(2, 6))
def test_star_eulerian_top_counts(n):
    for k in range(2, n + 1):
        assert len(enumerate_paths(star(n), k, 2 * k - 1, "eulerian")) == 2 * falling_factorial(n, k)


def test_eulerian_paths_vanish_past_vertex_count():
    g = cycle(4)
    assert all(len(enumerate_paths(g, 4, ell, "eulerian")) == 0 for ell in range(0, 9))


def test_star_face_sign():
    # in S_n at (k, 2(k-1)) removing the centre in position i gives (-1)^i
    g = star(3)
    up = enumerate_paths(g, 3, 4, "plain")
    down = enumerate_paths(g, 2, 4, "plain")
    d = boundary_matrix(g, up, down).to_dense()
    for i in (1, 2):
        v = [1, 2, 3]
        src = tuple(v[:i] + [0] + v[i:])
        col = up.index[src]
        assert d[down.index[(1, 2, 3)]][col] == (-1) ** i


def test_eulerian_boundary_on_path_graph():
    g = path(2)
    up = enumerate_paths(g, 2, 2, "eulerian")
    down = enumerate_paths(g, 1, 2, "eulerian")
    d = boundary_matrix(g, up, down)
    col = up.index[(0, 1, 2)]
    assert {down[r]: v for (r, c), v in d.entries.items() if c == col} == {(0, 2): -1}


@pytest.mark.parametrize("g", connected_graphs(5), ids=lambda g: str(sorted(g.edges)))
def test_boundary_squares_to_zero(g):
    for mode in MODES:
        for ell in range(2, 5):
            for k in range(2, ell + 1):
                b = [enumerate_paths(g, j, ell, mode) for j in (k - 2, k - 1, k)]
                if all(len(x) for x in b):
                    assert (boundary_matrix(g, b[1], b[0]) @ boundary_matrix(g, b[2], b[1])).is_zero()


@pytest.mark.parametrize("g", connected_graphs(6), ids=lambda g: str(sorted(g.edges)))
def test_pruning_is_lossless_and_bases_split(g):
    for ell in range(0, 5):
        for k in range(0, ell + 1):
            plain = enumerate_paths(g, k, ell, "plain")
            assert plain.paths == enumerate_paths(g, k, ell, "plain", prune=False).paths
            eul = enumerate_paths(g, k, ell, "eulerian")
            disc = enumerate_paths(g, k, ell, "discriminant")
            assert set(eul.paths).isdisjoint(disc.paths)
            assert set(plain.paths) == set(eul.paths) | set(disc.paths)
            assert list(plain.paths) == sorted(plain.paths)
            for mode in MODES:
                whole = enumerate_paths(g, k, ell, mode).paths
                pieces = [p for a in range(g.n) for b in range(g.n)
                          for p in enumerate_paths(g, k, ell, mode, endpoints=(a, b))]
                assert sorted(pieces) == list(whole)
                split = paths_by_endpoints(g, k, ell, mode)
                assert all(p[0] == a and p[-1] == b for (a, b), ps in split.items() for p in ps)


def test_eulerian_basis_respects_support_bound():
    g = cycle(5)
    sb = support_bounds(g)
    assert all(len(enumerate_paths(g, k, sb.l_max + 1, "eulerian")) == 0 for k in range(0, 6))
    assert len(enumerate_paths(g, sb.k_max, sb.l_max, "eulerian")) > 0


def test_basis_dump_format():
    b = enumerate_paths(path(1), 1, 1)
    assert b.dump().splitlines() == ["1 1 0 1", "1 1 1 0"]


# --- Asao-Izumihara pair ---------------------------------------------------------

def fig_pair():
    g = pendant_triangle()
    return g, asao_izumihara(g, g.index(1), g.index(5), 4)


def tagged(g, s):
    return frozenset((g.vertices[x], t) for x, t in s)


LISTED_KP = {frozenset({(2, 1), (3, 2)}), frozenset({(2, 1)}), frozenset({(3, 1)}), frozenset({(3, 2)})}


def test_pair_contains_listed_subcomplex():
    g, (K, Kp) = fig_pair()
    ours = {tagged(g, s) for s in Kp.nonempty()}
    assert LISTED_KP <= ours
    assert Kp.is_subcomplex_of(K)


def test_pair_sizes_with_distance_tags():
    g, (K, Kp) = fig_pair()
    assert (len(K.nonempty()), len(Kp.nonempty())) == (25, 13)


@pytest.mark.xfail(strict=True, reason="distance tags give a larger K' than the listed one")
def test_pair_subcomplex_is_exactly_the_listed_one():
    g, (K, Kp) = fig_pair()
    assert {tagged(g, s) for s in Kp.nonempty()} == LISTED_KP


@pytest.mark.xfail(strict=True, reason="the listed K uses position tags; distance tags give 25 simplices")
def test_pair_complex_has_fifteen_simplices():
    g, (K, Kp) = fig_pair()
    assert len(K.nonempty()) == 15


def test_pair_relative_homology_matches_summand():
    g, (K, Kp) = fig_pair()
    rel = relative_homology(K, Kp)
    ab = (g.index(1), g.index(5))
    for k in range(1, 5):
        assert rel[k - 2] == grading_cell(g, "MH", k, 4, ab)


def test_pair_is_empty_below_the_distance():
    g = path(3)
    K, Kp = asao_izumihara(g, 0, 3, 2)
    assert len(K) == 0 and len(Kp) == 0


@pytest.mark.parametrize("name", ["rp2", "moore_z3", "pk_sigma_4"])
def test_pair_of_a_ranked_poset_is_its_order_complex(name):
    p = corpus(name)
    hat = adjoin_bounds(p)
    g = hasse_graph(hat)
    r = rank_of(hat)
    K, Kp = asao_izumihara(g, 0, g.n - 1, r)
    assert len(Kp) == 0
    chains = {frozenset(g.vertices[x] for x, _ in s) for s in K.nonempty()}
    oc = order_complex(p)
    assert chains == {frozenset(c) for d in range(oc.dimension + 1) for c in oc.labelled(d)}


def test_simplicial_boundary_of_an_edge():
    c = SimplicialComplex.from_facets([((0, 1), (1, 2))], include_empty=False)
    bases, maps = simplicial_boundaries(c)
    edge = bases[2].index(((0, 1), (1, 2)))
    col = {bases[1][r]: v for (r, j), v in maps[2].entries.items() if j == edge}
    assert col == {((1, 2),): 1, ((0, 1),): -1}


@pytest.mark.parametrize("g", [pendant_triangle(), cycle(5), complete(4)], ids=repr)
def test_simplicial_boundaries_square_to_zero(g):
    for a in range(g.n):
        for b in range(g.n):
            K, Kp = asao_izumihara(g, a, b, 4)
            for rel in (None, Kp):
                _, maps = simplicial_boundaries(K, rel)
                for lo, hi in zip(maps, maps[1:]):
                    assert (lo @ hi).is_zero()


def test_closed_eulerian_summand_is_only_the_vertex():
    g = cycle(4)
    assert list(enumerate_paths(g, 0, 0, "eulerian", endpoints=(2, 2))) == [(2,)]
    assert len(enumerate_paths(g, 2, 2, "eulerian", endpoints=(2, 2))) == 0
    assert grading_cell(g, "EMH", 0, 0, (2, 2)).free_rank == 1
