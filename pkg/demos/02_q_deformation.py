"""
Keeping track of weights
========================

Recording the sum of the labels turns every count into a polynomial in q.
The first column of the product matrix then gives r^q_{i,m}(x) as a ratio of
generating functions, and a recursion in q -> 1/q gives the same answer.
"""

from fractions import Fraction

from qhcf import build_strip, hcf_q1, hcf_q_matrix, hcf_q_recursive, mgo_qrational, omega_gf

g = build_strip([2, 2])
print("Omega^11 =", omega_gf(g, 2, 1, 1).pretty())
print("Omega^21 =", omega_gf(g, 2, 2, 1).pretty())

for x in (Fraction(5, 2), Fraction(7, 3), Fraction(17, 3)):
    f = hcf_q_matrix(x, 2, 2)
    print(f"r_22({x}) = ({f.numerator.pretty()}) / ({f.denominator.pretty()})")
    # the recursion agrees as a rational function
    assert f == hcf_q_recursive(x, 2, 2)
    # and q = 1 recovers the rational number
    print("   at q=1:", f.eval_q1(), "=", hcf_q1(x, 2, 2))

# for m = 1 this is the nested q-continued fraction
f = mgo_qrational([2, 2])
print("[5/2]_q =", f"({f.numerator.pretty()}) / ({f.denominator.pretty()})")
