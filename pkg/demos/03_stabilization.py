"""
Series at irrational numbers
============================

Expanding r^q_{i,m} at the convergents of an irrational number gives power
series that settle down coefficient by coefficient.  The difference between
consecutive convergents starts at q^(a_1 + ... + a_n - 1), whatever m is.
"""

from qhcf import IrrationalCF, agreement_degree, stable_series, difference_bound
from qhcf.stabilize import golden_ratio, sqrt2

phi = golden_ratio()
print("r_22(phi):", stable_series(phi, 2, 2, 16).coeffs)
print("r_12(phi):", stable_series(phi, 1, 2, 16).coeffs)

sec7 = IrrationalCF.parse("1,3,15:periodic=1,3,3")
print("[sec 7]_q:", stable_series(sec7, 1, 1, 19).coeffs)

# how far consecutive convergents of sqrt(2) agree
x = sqrt2()
for n in range(2, 8):
    terms = x.terms(n)
    N = difference_bound(terms)
    ds = [agreement_degree(terms, terms[:-1], i, m) for m in (1, 2, 3) for i in range(1, m + 1)]
    assert len(set(ds)) == 1
    print(f"n={n}: first difference at q^{ds[0] + 1}, bound q^{N}, same for all m and i")
