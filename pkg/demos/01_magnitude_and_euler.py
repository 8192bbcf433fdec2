"""
Magnitude of a graph and its categorification
=============================================

The magnitude of a graph is a power series in q.  Its coefficients are the
Euler characteristics of the rows of the magnitude homology table.
"""

from maghom import euler_check, magnitude_series, table
from maghom.graphs import complete, cycle

# the single edge: 2 - 2q + 2q^2 - ...
print("K_2:", magnitude_series(complete(2), 6))

# two methods, one answer
c5 = cycle(5)
print("C_5, inverse:  ", magnitude_series(c5, 6))
print("C_5, path sum: ", magnitude_series(c5, 6, method="path-sum"))

# ranks of MH_{k,l}(C_5); alternating row sums reproduce the series
t = table(c5, "MH", range(0, 6), range(0, 6))
print(t.format())
for ell in range(6):
    chi = sum((-1) ** k * t[(k, ell)].free_rank for k in range(ell + 1))
    print(f"l={ell}: sum (-1)^k rank = {chi}")

r = euler_check(c5, trunc=5)
print("Euler check passed:", r.passed, "residuals", r.residuals)
