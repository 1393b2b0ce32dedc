from __future__ import annotations

import random
from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings, strategies as st

from corpus import CUBIC_MODULUS, biquadratic, cube_roots_of_two, cubic, q, q_i, q_sqrt_m3, rand_elem, s3
from dp6.errors import HomomorphismFailure, NotAGroup, NotInvertible, ZeroDivisor
from dp6.numfield import (EtaleAction, EtaleModuleElem, apply_auto, etale_galois, etale_inv, field_inv,
                          field_make, fixed_subfield, galois_set_alphas, minimal_polynomial, small_int_vectors)

FIELDS = [q, q_sqrt_m3, q_i, cubic, s3, biquadratic]

coeff = st.fractions(min_value=-20, max_value=20, max_denominator=7)


def elems(F):
    return st.lists(coeff, min_size=F.degree, max_size=F.degree).map(F.elem)


# --- construction ---

def test_quadratic_field_group():
    F = q_sqrt_m3()
    assert F.order == 2 and F.element_order(1) == 2


def test_cyclic_cubic_is_valid():
    F = cubic()
    assert [F.element_order(g) for g in F.group] == [1, 3, 3]


def test_bad_image_is_not_a_homomorphism():
    with pytest.raises(HomomorphismFailure):
        field_make([3, 0, 1], [[0, 1], [1, 1]])


def test_listed_cubic_images_belong_to_the_other_cubic():
    # t^2 - 2 and -t^2 - t + 2 permute the roots of t^3 - 3t + 1, not of t^3 - 3t - 1
    images = [[0, 1], [-2, 0, 1], [2, -1, -1]]
    with pytest.raises(HomomorphismFailure):
        field_make(CUBIC_MODULUS, images)
    assert field_make([1, -3, 0, 1], images).order == 3


def test_incomplete_group_rejected():
    with pytest.raises(NotAGroup):
        field_make([-1, -3, 0, 1], [[0, 1], [2, 0, -1], [0, 1]])


def test_s3_element_orders():
    F = s3()
    assert [F.element_order(g) for g in F.group] == [1, 2, 3, 2, 3, 2]


# --- inversion ---

def test_inverse_of_one():
    F = q_sqrt_m3()
    assert field_inv(F.one) == F.one


def test_inverse_of_generator():
    F = q_sqrt_m3()
    assert field_inv(F.gen) == F.elem([0, Fr(-1, 3)])


def test_reducible_modulus_detected_lazily():
    F = field_make([-1, 0, 1], [[0, 1], [0, -1]])
    with pytest.raises(ZeroDivisor):
        field_inv(F.gen - 1)


@pytest.mark.parametrize("make", FIELDS)
def test_inverse_is_two_sided(make):
    F = make()
    rng = random.Random(7)
    for _ in range(30):
        x = rand_elem(F, rng, nonzero=True)
        y = field_inv(x)
        assert x * y == F.one and y * x == F.one


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_inverse_property(data):
    F = data.draw(st.sampled_from([q_sqrt_m3(), cubic()]))
    x = data.draw(elems(F))
    if x:
        assert x * field_inv(x) == F.one


# --- automorphisms ---

def test_apply_identity():
    F = cubic()
    x = F.elem([1, 2, 3])
    assert apply_auto(0, x) == x


def test_conjugation_on_q_sqrt_m3():
    F = q_sqrt_m3()
    assert apply_auto(1, 2 + F.gen) == 2 - F.gen


def test_cubic_auto_on_t_squared():
    # (2 - t^2)^2 reduced mod t^3 - 3t - 1; frozen from an independent reduction
    F = cubic()
    assert apply_auto(1, F.gen ** 2) == F.elem([4, 1, -1])


@pytest.mark.parametrize("make", FIELDS)
def test_action_is_compatible_with_composition(make):
    F = make()
    rng = random.Random(11)
    for _ in range(100 if F.degree <= 3 else 20):
        x = rand_elem(F, rng)
        for g in F.group:
            for h in F.group:
                assert apply_auto(F.compose(g, h), x) == apply_auto(g, apply_auto(h, x))


@given(st.data())
@settings(max_examples=50, deadline=None)
def test_automorphisms_are_ring_maps(data):
    F = data.draw(st.sampled_from([q_sqrt_m3(), cubic(), biquadratic()]))
    x, y = data.draw(elems(F)), data.draw(elems(F))
    r = data.draw(coeff)
    for g in F.group:
        assert apply_auto(g, x + y) == apply_auto(g, x) + apply_auto(g, y)
        assert apply_auto(g, x * y) == apply_auto(g, x) * apply_auto(g, y)
        assert apply_auto(g, F.from_rational(r)) == r


# --- subfields ---

def test_fixed_subfield_whole_group_is_split():
    assert fixed_subfield(cubic(), cubic().group).is_split


def test_fixed_subfield_trivial_in_quadratic():
    L = fixed_subfield(q_sqrt_m3(), [0])
    assert L.kind == "quadratic" and L.minpoly == (3, 0, 1)


def test_fixed_subfield_s3_three_cycles():
    L = fixed_subfield(s3(), [0, 2, 4])
    assert L.minpoly == (3, 0, 1)


def test_fixed_subfield_biquadratic():
    F = biquadratic()
    assert fixed_subfield(F, [0, 2]).minpoly == (1, 0, 1)
    # t + t^3 squares to -2, t - t^3 to 2
    assert fixed_subfield(F, [0, 1]).minpoly == (2, 0, 1)
    assert fixed_subfield(F, [0, 3]).minpoly == (-2, 0, 1)


@pytest.mark.parametrize("make,H", [(q_sqrt_m3, [0]), (q_i, [0]), (s3, [0, 2, 4]),
                                    (biquadratic, [0, 1]), (biquadratic, [0, 2]), (biquadratic, [0, 3])])
def test_primitive_element_fixed_by_exactly_h(make, H):
    F = make()
    L = fixed_subfield(F, H)
    w = L.generator
    assert all((apply_auto(g, w) == w) == (g in H) for g in F.group)
    assert w * w == -L.minpoly[0]


def test_minimal_polynomial_of_cube_root():
    F = s3()
    beta = F.gen ** 4 / 18
    assert minimal_polynomial(beta) == tuple(F.from_rational(c) for c in (-2, 0, 0, 1))


def test_small_int_vectors_are_ordered_by_norm():
    vs = list(small_int_vectors(2, 2))
    norms = [sum(map(abs, v)) for v in vs]
    assert norms == sorted(norms) and len(set(vs)) == len(vs) and (0, 0) not in vs


def test_galois_set_alphas_follow_the_permutations():
    F = s3()
    roots = list(cube_roots_of_two(F))
    perms = {g: tuple(roots.index(apply_auto(g, r)) for r in roots) for g in F.group}
    alphas = galois_set_alphas(F, F.group, perms)
    assert len(set(alphas)) == 3
    assert all(apply_auto(g, alphas[i]) == alphas[perms[g][i]] for g in F.group for i in range(3))


# --- etale triples ---

def _swap_action():
    F = q_sqrt_m3()
    return F, EtaleAction(F, {0: (0, 1, 2), 1: (0, 2, 1)})


def test_etale_inverse_of_one():
    F, act = _swap_action()
    assert etale_inv(act.one()) == act.one()


def test_etale_zero_component_not_invertible():
    F, act = _swap_action()
    with pytest.raises(NotInvertible):
        etale_inv(EtaleModuleElem((F.one, F.zero, F.one)))


def test_etale_identity_acts_trivially():
    F, act = _swap_action()
    e = EtaleModuleElem((F.gen, F.one + F.gen, F.from_rational(3)))
    assert etale_galois(act, 0, e) == e


def test_etale_swap_action():
    F, act = _swap_action()
    a, b, c = F.gen, 1 + F.gen, 2 - F.gen
    e = EtaleModuleElem((a, b, c))
    assert etale_galois(act, 1, e) == EtaleModuleElem((apply_auto(1, a), apply_auto(1, c), apply_auto(1, b)))


@pytest.mark.parametrize("case", ["swap", "cubic"])
def test_etale_action_law(case):
    if case == "swap":
        F, act = _swap_action()
    else:
        F = cubic()
        act = EtaleAction(F, {0: (0, 1, 2), 1: (1, 2, 0), 2: (2, 0, 1)})
    rng = random.Random(3)
    for _ in range(20):
        e = EtaleModuleElem(tuple(rand_elem(F, rng, nonzero=True) for _ in range(3)))
        f = EtaleModuleElem(tuple(rand_elem(F, rng, nonzero=True) for _ in range(3)))
        for g in F.group:
            assert etale_galois(act, g, e * f) == etale_galois(act, g, e) * etale_galois(act, g, f)
            for h in F.group:
                assert etale_galois(act, F.compose(g, h), e) == etale_galois(act, g, etale_galois(act, h, e))


def test_action_must_be_a_homomorphism():
    F = cubic()
    with pytest.raises(ValueError):
        EtaleAction(F, {0: (0, 1, 2), 1: (1, 0, 2), 2: (2, 0, 1)})
