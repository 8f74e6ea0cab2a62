"""
Graphs over Z_k and the uniformity of circuit variables
=======================================================

Label the vertices of a graph with independent uniform elements of Z_k and
put X_head - X_tail on each edge. Every edge set then has entropy
rank * log2(k). Going the other way, a distribution with the entropy profile
of a constant-weight circuit must have uniform marginals on k symbols with
w0 = log2(k).
"""

import math
from fractions import Fraction

from wrank import (JointDistribution, PreconditionError, brute_force_distribution_zk, build_graphic_zk,
                   cyclic_sum_distribution, verify_circuit_uniformity, verify_theorem4)
from wrank.matroid import complete_graph, triangle

for g, k in [(triangle(), 3), (complete_graph(4), 2), (complete_graph(4), 4)]:
    r = verify_theorem4(g, k)
    print(f"{g.vertices} vertices, {g.n} edges, k={k}: passed={r.passed}, full set {r.checks[-1].expected} bits")

d = brute_force_distribution_zk(build_graphic_zk(triangle(), 3))
print("triangle over Z_3:", verify_circuit_uniformity(d, math.log2(3)))
print("XOR triple:", verify_circuit_uniformity(cyclic_sum_distribution(3, 2), 1.0))

# tilt one bit of the XOR triple; its entropy drops below 1 and the profile no longer fits
tilted = JointDistribution.from_pmf(
    [("X1", 2), ("X2", 2), ("X3", 2)],
    {(0, 0, 0): Fraction(3, 10), (1, 1, 0): Fraction(3, 10), (0, 1, 1): Fraction(1, 5), (1, 0, 1): Fraction(1, 5)})
try:
    verify_circuit_uniformity(tilted, 1.0)
except PreconditionError as exc:
    print("tilted triple rejected:", exc)
