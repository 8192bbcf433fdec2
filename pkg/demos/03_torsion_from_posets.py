"""
Torsion from ranked posets
==========================

The Hasse diagram of a ranked poset with a bottom and a top adjoined is a
graph.  The summand of its magnitude homology between the two ends, at the
rank, is the reduced homology of the order complex shifted by two.  Face
posets of cell complexes with torsion therefore give graphs with torsion.
"""

from maghom import adjoin_bounds, alpha_gamma_chains, corpus, grading_cell, hasse_graph, order_complex, rank_of
from maghom.corpus import PK_SIGMA_4
from maghom.homology import torsion_witness

for name in ("rp2", "moore_z3", "moore_z5", "lens_3_1"):
    p = corpus(name)
    hat = adjoin_bounds(p)
    g = hasse_graph(hat)
    r = rank_of(hat)
    oc = order_complex(p)
    print(f"{name}: {p.n} cells, graph on {g.n} vertices, rank {r}")
    print("   order complex:", [str(oc.homology(j)) for j in range(oc.dimension + 1)])
    for k in range(2, r + 1):
        print(f"   MH_({k},{r})(bottom, top) = {grading_cell(g, 'MH', k, r, (0, g.n - 1))}")

# a rank-2 poset from a 1-factorization of K_4 and a 3-cycle
p = corpus("pk_sigma_4")
oc = order_complex(p)
alpha, gamma = alpha_gamma_chains(**PK_SIGMA_4)
print("H_1 =", oc.homology(1))
print("boundary(gamma) == 2 alpha:", gamma.boundary() == 2 * alpha)
print("order of alpha:", torsion_witness(alpha.to_vector(oc), oc.boundaries[1], oc.boundary_into(1)))

g = hasse_graph(adjoin_bounds(p))
print("MH_(3,4)  =", grading_cell(g, "MH", 3, 4))
print("EMH_(3,4) =", grading_cell(g, "EMH", 3, 4))
print("MH_(4,5)  =", grading_cell(g, "MH", 4, 5))
print("EMH_(4,5) =", grading_cell(g, "EMH", 4, 5))
