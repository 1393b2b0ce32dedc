"""Independent re-derivation of frozen constants with a computer algebra system."""
from __future__ import annotations

import random
from fractions import Fraction as Fr

import pytest

sp = pytest.importorskip("sympy")

from corpus import CUBIC_IMAGES, CUBIC_MODULUS, S3_IMAGES, biquadratic, cubic, rand_elem, s3  # noqa: E402
from dp6.dp6core import dp6_construct  # noqa: E402
from dp6.dp6core.surface import forms_span, standard_forms  # noqa: E402
from dp6.numfield import rationals  # noqa: E402
from dp6.projlin import ProjPoint  # noqa: E402

t, x = sp.symbols("t x")


def poly(coeffs):
    """Low-degree-first coefficient list to a sympy expression in t."""
    return sum(sp.Rational(str(c)) * t ** k for k, c in enumerate(coeffs))


def reduce(expr, modulus):
    return sp.Poly(sp.rem(sp.expand(expr), poly(modulus), t), t)


def coeffs_of(expr, modulus, n):
    p = reduce(expr, modulus)
    return [Fr(str(p.coeff_monomial(t ** k))) for k in range(n)]


def test_cubic_automorphism_image_of_t_squared():
    s = poly(CUBIC_IMAGES[1])
    assert coeffs_of(s ** 2, CUBIC_MODULUS, 3) == [4, 1, -1]


def test_cubic_images_are_roots():
    f = poly(CUBIC_MODULUS).subs(t, x)
    for img in CUBIC_IMAGES:
        assert reduce(f.subs(x, poly(img)), CUBIC_MODULUS).is_zero


def test_listed_images_fit_the_other_cubic():
    listed = [poly([0, 1]), poly([-2, 0, 1]), poly([2, -1, -1])]
    minus = x ** 3 - 3 * x - 1
    plus = x ** 3 - 3 * x + 1
    assert not all(reduce(minus.subs(x, g), CUBIC_MODULUS).is_zero for g in listed)
    assert all(reduce(plus.subs(x, g), [1, -3, 0, 1]).is_zero for g in listed)


def test_s3_images_are_roots():
    modulus = [108, 0, 0, 0, 0, 0, 1]
    for img in S3_IMAGES:
        assert reduce(poly(img) ** 6 + 108, modulus).is_zero


def test_s3_subfield_generators():
    theta = sp.CRootOf(x ** 6 + 108, 0)
    assert sp.minimal_polynomial(theta ** 3, x) == x ** 2 + 108
    assert sp.minimal_polynomial(theta ** 4 / 18, x) == x ** 3 - 2


def test_biquadratic_square_classes():
    z = sp.exp(sp.I * sp.pi / 4)
    assert sp.minimal_polynomial(z + z ** 3, x) == x ** 2 + 2
    assert sp.minimal_polynomial(z - z ** 3, x) == x ** 2 - 2
    assert sp.minimal_polynomial(z ** 2, x) == x ** 2 + 1


def test_vandermonde_determinant():
    V = sp.Matrix([[1, a, a ** 2] for a in (0, 1, 2)])
    assert V.det() == 2


@pytest.mark.parametrize("make", [cubic, s3, biquadratic])
def test_field_multiplication_matches_polynomial_remainder(make):
    F = make()
    rng = random.Random(17)
    for _ in range(10):
        a, b = rand_elem(F, rng), rand_elem(F, rng)
        assert list((a * b).c) == coeffs_of(poly(a.c) * poly(b.c), F.modulus, F.degree)


def test_standard_ideal_from_symbolic_graph():
    # (1,1)-forms vanishing identically on (x:y:z) x (yz:xz:xy)
    X, Y, Z = sp.symbols("X Y Z")
    p = (X, Y, Z)
    q = (Y * Z, X * Z, X * Y)
    c = sp.symbols("c0:9")
    form = sp.expand(sum(c[3 * i + j] * p[i] * q[j] for i in range(3) for j in range(3)))
    eqs = sp.Poly(form, X, Y, Z).coeffs()
    A = sp.Matrix([[sp.diff(e, ci) for ci in c] for e in eqs])
    null = A.nullspace()
    assert len(null) == 2
    F = rationals()
    ours = forms_span(standard_forms(F))
    theirs = sp.Matrix.hstack(*null).T.rref()[0]
    assert [[Fr(str(v)) for v in row] for row in theirs.tolist()] == [[c.rational() for c in r] for r in ours]


def test_rational_surface_ideal_from_symbolic_graph():
    # a non-standard rational triangle: recompute the ideal from its birational map
    F = rationals()
    P = [ProjPoint.of(F, 1, 2, 0), ProjPoint.of(F, 0, 1, 3), ProjPoint.of(F, 1, 0, 1)]
    S = dp6_construct(F, P)
    phi = sp.Matrix([[c.rational() for c in r] for r in S.phi.rows])
    psi_inv = sp.Matrix([[c.rational() for c in r] for r in S.psi.inverse().rows])
    X, Y, Z = sp.symbols("X Y Z")
    a, b, cc = phi * sp.Matrix([X, Y, Z])
    q = psi_inv * sp.Matrix([b * cc, a * cc, a * b])
    c = sp.symbols("c0:9")
    p = (X, Y, Z)
    form = sp.expand(sum(c[3 * i + j] * p[i] * q[j] for i in range(3) for j in range(3)))
    eqs = sp.Poly(form, X, Y, Z).coeffs()
    A = sp.Matrix([[sp.diff(e, ci) for ci in c] for e in eqs])
    theirs = sp.Matrix.hstack(*A.nullspace()).T.rref()[0]
    ours = S.ideal_basis()
    assert [[Fr(str(v)) for v in row] for row in theirs.tolist()] == [[c.rational() for c in r] for r in ours]
