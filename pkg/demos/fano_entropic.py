"""
Integer weights on the Fano plane are entropic
==============================================

Each element e with weight w_e becomes the tuple of bits
(X_1 v_e, ..., X_{w_e} v_e), where the X_j are independent uniform bit
vectors and v_e is the element's column. Joint entropies can be read off as
GF(2) ranks or measured by enumerating every bit assignment. Both should
equal the weighted rank.
"""

from wrank import verify_theorem2
from wrank.matroid import fano

m = fano()
for weights in [(1,) * 7, (1, 2, 1, 3, 1, 2, 1)]:
    report = verify_theorem2(m, weights)
    worst = max(abs(ch.bruteforce - float(ch.expected)) for ch in report.checks)
    print(f"weights {weights}: {len(report.checks)} subsets, passed={report.passed}, "
          f"largest brute-force deviation {worst:.2e}")

# a heaviest basis here picks weights 3, 2 and 1
print("full set entropy with weights (1,2,1,3,1,2,1):", report.checks[-1].algebraic, "bits")
