import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from natdiff.cli.catalog import CATALOG
from natdiff.dermod import (
    Derivation,
    InclusionError,
    NotADerivationError,
    apply,
    higher_natural_derivation,
    image_ideal,
    in_natural_submodule,
    is_derivation,
    natural_derivation,
    natural_generators,
    reconstruct,
)
from natdiff.groebner import buchberger, ideal_equal, normal_form
from natdiff.jacobi import jacobi_data
from natdiff.polyring import PolyRing

from conftest import ring
from strategies import XY, XYZ, polynomials

x, y = XY.gens
X, Y, Z = XYZ.gens


def D(A, *coeffs):
    return Derivation(A, tuple(A.project(c) for c in coeffs))


def test_cusp_generator(cusp):
    delta = natural_derivation(cusp, (1,), (1, 2))
    assert delta == D(cusp, 2 * y, 3 * x**2)
    assert [g for _, _, g in natural_generators(cusp)] == [delta]


def test_coordinate_generators():
    A = ring("coordinate_2_4")
    gens = natural_generators(A)
    assert [(i, j) for i, j, _ in gens] == [((1, 2), (1, 2, 3)), ((1, 2), (1, 2, 4))]
    assert [g for _, _, g in gens] == [D(A, 0, 0, 1, 0), D(A, 0, 0, 0, 1)]


def test_twisted_generator(twisted):
    delta = natural_derivation(twisted, (1, 2), (1, 2, 3))
    assert [delta(twisted.x(k)) for k in (1, 2, 3)] == [twisted.one, twisted.project(2 * X), twisted.project(3 * X**2)]
    assert len(natural_generators(twisted)) == 1


def test_generator_counts(catalog_variety):
    name, A = catalog_variety
    assert len(natural_generators(A)) == CATALOG[name].expected["generator_count"]


def test_apply_examples(cusp):
    delta = natural_derivation(cusp, (1,), (1, 2))
    assert apply(delta, cusp.x(1)) == cusp.project(2 * y)
    assert apply(delta, cusp.one).is_zero()
    assert apply(delta, cusp.project(x**3 - y**2)).is_zero()
    assert apply(delta, x**3 - y**2).is_zero()
    with pytest.raises(ValueError):
        apply(delta, ring("circle").x(1))


def test_is_derivation_examples(cusp):
    assert is_derivation(cusp, [cusp.project(2 * x), cusp.project(3 * y)])
    assert not is_derivation(cusp, [cusp.one, cusp.zero])
    assert is_derivation(cusp, [cusp.zero, cusp.zero])
    with pytest.raises(ValueError):
        is_derivation(cusp, [cusp.one])


def test_membership_examples(cusp):
    euler = D(cusp, 2 * x, 3 * y)
    assert not in_natural_submodule(euler)
    assert in_natural_submodule(natural_derivation(cusp, (1,), (1, 2)))
    assert in_natural_submodule(cusp.project(3 * x**2) * euler)
    assert in_natural_submodule(cusp.project(-2 * y) * euler)
    with pytest.raises(NotADerivationError):
        in_natural_submodule(D(cusp, 1, 0))


def test_delta_times_derivation_is_natural(catalog_variety):
    _, A = catalog_variety
    d = jacobi_data(A)
    i, j = d.pivot
    rng = random.Random(7)
    comp = [k for k in range(1, A.n + 1) if k not in j]
    delta = d.minor(i, j)
    for _ in range(3):
        dd = reconstruct(A, i, j, {k: delta * A.random_residue(rng, 2, 3) for k in comp})
        assert in_natural_submodule(delta * dd)


def test_reconstruct_examples(cusp):
    euler = reconstruct(cusp, (1,), (1,), {2: cusp.project(3 * y)})
    assert euler == D(cusp, 2 * x, 3 * y)
    with pytest.raises(InclusionError) as info:
        reconstruct(cusp, (1,), (1,), {2: cusp.one})
    assert info.value.column == 1 and info.value.nu == 1
    assert reconstruct(cusp, (1,), (1,), {2: cusp.zero}).is_zero()
    with pytest.raises(ValueError):
        reconstruct(cusp, (1,), (1,), {1: cusp.one})


def test_image_ideals(cusp, circle):
    assert set(image_ideal(cusp).generators) == {x**2, y}
    assert image_ideal(circle).is_unit()
    assert image_ideal(ring("coordinate_1_2")).is_unit()


def test_image_ideal_is_a_r(catalog_variety):
    _, A = catalog_variety
    d = jacobi_data(A)
    assert ideal_equal(image_ideal(A), d.ideal_gb(d.r))


def test_higher_derivations(twisted, double_cusp):
    h = higher_natural_derivation(twisted, 1, (1,), (1, 2))
    assert h.is_zero()
    h = higher_natural_derivation(double_cusp, 1, (1,), (1, 2))
    P = double_cusp.ring
    xx, yy, _, _ = P.gens
    gb = jacobi_data(double_cusp).ideal_gb(2)
    assert list(h.coefficients) == [normal_form(2 * yy, gb), normal_form(3 * xx**2, gb), P.zero, P.zero]
    assert not h.is_zero()
    top = higher_natural_derivation(twisted, 2, (1, 2), (1, 2, 3))
    assert list(top.coefficients) == natural_derivation(twisted, (1, 2), (1, 2, 3)).lift()
    with pytest.raises(ValueError):
        higher_natural_derivation(twisted, 3, (1, 2), (1, 2, 3))


def test_double_cusp_higher_mod_a2(double_cusp):
    # the oracle: a_2 + I computed directly from the four 2x2 block minors
    P = double_cusp.ring
    xx, yy, uu, vv = P.gens
    minors = [9 * xx**2 * uu**2, -6 * xx**2 * vv, -6 * yy * uu**2, 4 * yy * vv]
    gb = buchberger(minors + [xx**3 - yy**2, uu**3 - vv**2])
    assert ideal_equal(gb, jacobi_data(double_cusp).ideal_gb(2))


@given(polynomials(), polynomials())
def test_leibniz_on_cusp(p, q):
    A = ring("cusp")
    delta = natural_derivation(A, (1,), (1, 2))
    a, b = A.project(p), A.project(q)
    assert delta(a * b) == delta(a) * b + a * delta(b)


@given(st.permutations((1, 2, 3)))
def test_antisymmetry(perm):
    A = ring("twisted_cubic")
    base = natural_derivation(A, (1, 2), (1, 2, 3))
    from natdiff.jacobi import sort_with_sign

    _, eps = sort_with_sign(perm)
    assert natural_derivation(A, (1, 2), perm) == eps * base


def test_support(catalog_variety):
    from natdiff.jacobi import tuples

    _, A = catalog_variety
    d = jacobi_data(A)
    for i in tuples(A.m, d.r):
        for j in tuples(A.n, d.r + 1):
            delta = natural_derivation(A, i, j)
            assert delta.is_zero() == (i not in d.I_r or j not in d.J_r1)
            for f in A.generators:
                assert apply(delta, f).is_zero()


def test_wrong_sizes(cusp):
    with pytest.raises(ValueError):
        natural_derivation(cusp, (1,), (1,))
    with pytest.raises(ValueError):
        Derivation(cusp, (cusp.one,))


def test_smooth_der_equals_natural(circle, twisted):
    for A in (circle, twisted):
        d = jacobi_data(A)
        rng = random.Random(11)
        for j in d.J_r:
            comp = [k for k in range(1, A.n + 1) if k not in j]
            delta = d.minor(d.I_r[0], j)
            for _ in range(3):
                dd = reconstruct(A, d.I_r[0], j, {k: delta * A.random_residue(rng, 2, 3) for k in comp})
                assert in_natural_submodule(dd)


def test_generator_change_transform(cusp):
    from natdiff.dermod import generator_transform_check

    P = cusp.ring
    u = P.gen(1) + Fraction(1, 2)
    B = cusp.with_generators([cusp.generators[0], u * cusp.generators[0]])
    assert generator_transform_check(cusp, B, [[P.one], [u]])
    # a wrong transformation matrix is caught
    assert not generator_transform_check(cusp, B, [[P.one], [u + 1]])


def test_derivation_printing(cusp):
    assert str(natural_derivation(cusp, (1,), (1, 2))) == "(2*y)*d/dx + (3*x^2)*d/dy"
    assert str(D(cusp, 0, 0)) == "0"


def test_other_order():
    P = PolyRing(["x", "y"], "lex")
    from natdiff.quotient import CoordinateRing

    A = CoordinateRing(["x", "y"], [P.gen(1) ** 3 - P.gen(2) ** 2], order="lex")
    assert natural_derivation(A, (1,), (1, 2)) == Derivation(A, (A.project(2 * P.gen(2)), A.project(3 * P.gen(1) ** 2)))
