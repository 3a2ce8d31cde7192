"""
Which operators of order two live on the cusp?
===============================================

Away from y = 0 the cusp x^3 = y^2 has the local coordinate x, with partial
derivative d = d/dx. An operator sum c_k d^k with coefficients in A maps
A to itself exactly when it does so on the monomials of degree at most its
order. We test three candidates and compare with the parametrization
x = t^2, y = t^3, where d/dx = (1 / 2t) d/dt.
"""

from natdiff import CoordinateRing, PolyRing, order_i_membership

P = PolyRing(["x", "y"])
x, y = P.gens
A = CoordinateRing(["x", "y"], [x**3 - y**2], name="cusp")
pivot = ((1,), (2,))  # the minor -2y

# d itself: d(y) = 3x^2 / 2y = (3/2) t, which is not in Q[t^2, t^3].
print("d            :", order_i_membership(A, pivot, [(A.one, 1)], 1))

# 2y d is the natural derivation, so it certainly preserves A.
print("2y d         :", order_i_membership(A, pivot, [(A.project(2 * y), 1)], 1))

# 4x d^2 - 2d becomes d^2/dt^2 - (2/t) d/dt, sending t^k to k(k-3) t^(k-2).
# The t^1 term never appears, so this order-two operator preserves A.
print("4x d^2 - 2 d :", order_i_membership(A, pivot, [(A.project(4 * x), 2), (A.project(-2), 1)], 2))

for k in (0, 2, 3, 4, 5):  # the exponents of elements of A
    print(f"  t^{k} -> {k * (k - 3)} t^{k - 2}")
