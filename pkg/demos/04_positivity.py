"""
Why r^q_{i,m} is monotone in x
==============================

For r/s > a/b the polynomial B R - A S has nonnegative coefficients.  A
label swap on the shared start of the two ribbons matches almost every term
of A S with a term of B R; the leftovers are listed below.
"""

from fractions import Fraction

from qhcf import PositivityProblem, complement_pairs, phi_injection, positivity_difference

rs, ab = Fraction(5, 2), Fraction(7, 3)
diff = positivity_difference(rs, ab, 2, 2)
print("B R - A S =", diff.pretty())

prob = PositivityProblem(rs, ab, 2, 2)
print("shared cells:", prob.d)
print("|S x A| =", len(prob.S) * len(prob.A), " |R x B| =", len(prob.R) * len(prob.B))

# one swap, drawn
pair = next(prob.iter_SA())
out = phi_injection(pair)
print(pair.left, pair.right, "->", out.left, out.right)

for p in complement_pairs(rs, ab, 2, 2):
    print(f"weight {p.weight}:")
    print(prob.left_strip.render(p.left))
    print(prob.right_strip.render(p.right), end="\n\n")
