"""
The cusp, step by step
======================

A = Q[x, y] / (x^3 - y^2). We compute its Jacobi matrix, the one natural
derivation, the Jacobian ideal, and meet the Euler derivation, which is a
derivation of A that the natural derivations do not generate.
"""

from natdiff import (
    CoordinateRing,
    Derivation,
    PolyRing,
    in_natural_submodule,
    is_derivation,
    is_smooth,
    jacobi_data,
    natural_generators,
    point_report,
    reconstruct,
)

P = PolyRing(["x", "y"])
x, y = P.gens
A = CoordinateRing(["x", "y"], [x**3 - y**2], name="cusp")
print(A)

# The Jacobi matrix has a single row (3x^2, -2y). Both entries are nonzero
# in A, so the rank is 1 and both columns are non-singular.

d = jacobi_data(A)
print("Jacobi matrix:", [[str(e) for e in row] for row in d.matrix])
print("r =", d.r, " I_r =", d.I_r, " J_r =", d.J_r, " J_r+1 =", d.J_r1)

# The natural derivation is the determinant with the row of partials
# underneath: det(3x^2, -2y; d/dx, d/dy) = 2y d/dx + 3x^2 d/dy.

for i, j, delta in natural_generators(A):
    print(f"d[{i} ; {j}] =", delta)

# The Jacobian ideal a_1 = (3x^2, -2y) + I has Groebner basis {x^2, y}. It is
# not the whole ring, so A is singular: the origin is the singular point.

print("a_1 Groebner basis:", [str(g) for g in d.jacobian_ideal(1).gb.generators])
print("smooth?", is_smooth(A))
print("origin:", point_report(A, [0, 0]))
print("(1, 1):", point_report(A, [1, 1]))

# The Euler derivation 2x d/dx + 3y d/dy preserves the ideal, so it is a
# derivation of A ...

euler = Derivation(A, (A.project(2 * x), A.project(3 * y)))
print("Euler is a derivation:", is_derivation(A, euler.coefficients))

# ... but it is not an A-combination of the natural derivation. Multiplying
# it by a minor fixes that.

print("Euler in der(A):", in_natural_submodule(euler))
print("3x^2 * Euler in der(A):", in_natural_submodule(A.project(3 * x**2) * euler))

# A derivation is determined by its values off a non-singular column set.
# With pivot i=(1), j=(1) the free variable is y; asking for delta(y) = 3y
# gives back the Euler derivation.

print("rebuilt from delta(y) = 3y:", reconstruct(A, (1,), (1,), {2: A.project(3 * y)}))
