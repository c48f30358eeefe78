#!/usr/bin/env python3
# Graded spaces, Koszul signs, 2-tensors, and the canonical pairings.

from fractions import Fraction

from supermalcev import SuperSpace, Tensor2, koszul_sign, pair, pair_tensor, sigma

# A 2|1-dimensional super vector space: two even basis vectors, one odd.
V = SuperSpace(2, 1, ("a", "b", "c"))
print("space:", V.labels, "parities:", V.parities())

# The Koszul sign (-1)^{pq} appears whenever homogeneous symbols swap.
for p in range(2):
    for q in range(2):
        print(f"  koszul_sign({p},{q}) = {koszul_sign(p, q):+d}")

# 2-tensors are coefficient matrices; sigma is the graded flip.
t = Tensor2(V, ((0, 2, 0), (1, 0, 0), (0, 0, 5)), 0)
print("\ntensor coefficients:")
for row in t.coeffs:
    print("  ", [str(x) for x in row])
print("sigma(t) flips with signs (odd-odd entries pick up -1):")
for row in sigma(t).coeffs:
    print("  ", [str(x) for x in row])

# Any even tensor splits into a supersymmetric and a skew part.
sym = t + sigma(t)
skew = t - sigma(t)
print("t + sigma(t) supersymmetric:", sym.is_supersymmetric())
print("t - sigma(t) skew-supersymmetric:", skew.is_skew_supersymmetric())

# The canonical pairing against the dual space.
Vd = V.dual()
print("\ndual labels:", Vd.labels)
x_star = Vd.vector([1, 0, 2])         # a* + 2 c*
y = V.vector([3, 1, Fraction(1, 2)])  # 3a + b + c/2
print("<a* + 2c*, 3a + b + c/2> =", pair(x_star, y))

# The tensor pairing carries one Koszul sign; on an odd-odd pair it is -1.
s = Tensor2(Vd, ((0, 0, 0), (0, 0, 0), (0, 0, 1)), 0)   # c* (x) c*
u = Tensor2(V, ((0, 0, 0), (0, 0, 0), (0, 0, 1)), 0)    # c (x) c
print("<c* (x) c*, c (x) c> =", pair_tensor(s, u))
