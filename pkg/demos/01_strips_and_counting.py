"""
Border strips and the matrices that count their fillings
=========================================================

A rational number x >= 1 has a continued fraction [a_1, ..., a_n], and the
continued fraction draws a ribbon-shaped skew diagram.  Fillings of the
ribbon with numbers 0..m that increase along rows and down columns are
counted by a product of small Hankel matrices.
"""

from qhcf import build_strip, cf_expand, enum_ppartitions, product_X

# 5/2 = [2, 2]: two cells stacked, one to the right of the top one
cf = cf_expand(5, 2)
strip = build_strip(cf)
print(cf, "->", len(strip), "cells")
print(strip.render())

# all fillings with parts at most 2
fillings = enum_ppartitions(strip, 2)
print(len(fillings), "fillings")
for p in fillings[:5]:
    print(strip.render(p.labels), end="\n\n")

# the top-left entry of X counts the same thing
X = product_X(cf, 2)
for row in X.eval_q1():
    print(row)

# a bigger ribbon
print(build_strip([5, 3, 2, 4]).render())
