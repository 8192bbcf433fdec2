"""
Eulerian and discriminant tables
================================

Eulerian magnitude homology (EMH) only uses paths that never revisit a
vertex.  The discriminant theory (DMH) is the quotient by those paths.
"""

from maghom import support_bounds, table
from maghom.corpus import whitney_h, whitney_k
from maghom.graphs import complete, star

# stars: two bands of free groups, ending at (n, 2n - 1)
s4 = star(4)
sb = support_bounds(s4)
print(f"S_4: k_max={sb.k_max} l_max={sb.l_max}, witness path {sb.witness}")
print(table(s4, "EMH", range(0, 5), range(0, 8)).format())

# complete graphs are diagonal
print(table(complete(4), "EMH", range(0, 4), range(0, 5)).format())

# two graphs related by a Whitney twist: same MH, different EMH
for name, g in (("H", whitney_h()), ("K", whitney_k())):
    print(f"EMH of {name}")
    print(table(g, "EMH", range(0, 5), range(0, 9)).format())

same = table(whitney_h(), "MH", range(0, 5), range(0, 5)).support() == \
    table(whitney_k(), "MH", range(0, 5), range(0, 5)).support()
print("MH agrees up to l=4:", same)

# DMH of the star S_4, including the cells off the diagonal
print(table(s4, "DMH", range(0, 5), range(0, 8)).format())
