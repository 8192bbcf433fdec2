"""
A simplicial model for one summand
==================================

Interior vertices of short a -> b paths, tagged by how far along the path they
sit, form a simplicial complex K.  The paths that are strictly shorter than l
form a subcomplex K'.  The relative homology of (K, K') in degree k - 2 is the
(a, b) summand of MH_{k,l}.
"""

from maghom import HomologyGroup, asao_izumihara, grading_cell
from maghom.corpus import pendant_triangle
from maghom.verify import relative_homology

g = pendant_triangle()
a, b = g.index(1), g.index(5)
K, Kp = asao_izumihara(g, a, b, 4)


def show(s):
    return "{" + ", ".join(f"({g.vertices[x]},{t})" for x, t in s) + "}"


print(len(K.nonempty()), "simplices in K;", len(Kp.nonempty()), "in K'")
print("K' facets:", ", ".join(show(s) for s in Kp.facets))
rel = relative_homology(K, Kp)
for k in range(1, 5):
    print(f"k={k}: H_{k - 2}(K, K') = {rel[k - 2]},  MH_({k},4)(1,5) = {grading_cell(g, 'MH', k, 4, (a, b))}")

# the Eulerian version keeps only simplices whose path repeats no vertex
E, Ep = asao_izumihara(g, a, b, 4, mode="eulerian")
rel = relative_homology(E, Ep)
for k in range(1, 5):
    print(f"k={k}: eulerian {rel.get(k - 2, HomologyGroup())},  EMH_({k},4)(1,5) = {grading_cell(g, 'EMH', k, 4, (a, b))}")
