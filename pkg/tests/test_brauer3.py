from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dp6.brauer3 import (Brauer3Group, CyclicAlgebraDatum, decompose3, direct_sum_report, documented_involutions,
                         fixed_subgroup, identity3, kernel3, mat_mul3, mat_vec3, op_pair, opposite, rank3,
                         split_pair, swap_pair, w_subgroup)

CUBIC = (-1, -3, 0, 1)


def span3(basis, n):
    """All Z/3-combinations of ``basis``, by brute force."""
    out = set()
    for coeffs in itertools.product(range(3), repeat=len(basis)):
        v = [0] * n
        for c, b in zip(coeffs, basis):
            v = [(x + c * y) % 3 for x, y in zip(v, b)]
        out.add(tuple(v))
    return out


def eigenspace(G, sign):
    return {x for x in G.elements() if G.sigma(x) == G.scale(sign, x)}


# --- worked values ---

def test_identity_on_z3():
    G = Brauer3Group(1, ((1,),))
    assert decompose3((1,), G) == ((1,), (0,))
    assert w_subgroup(G) == []


def test_negation_on_z3():
    G = Brauer3Group(1, ((2,),))
    assert decompose3((1,), G) == ((0,), (1,))
    assert span3(w_subgroup(G), 1) == {(0,), (1,), (2,)}


def test_swap_on_z3_squared():
    G = Brauer3Group(2, ((0, 1), (1, 0)))
    plus, minus = decompose3((1, 0), G)
    assert (plus, minus) == ((2, 2), (2, 1))
    assert span3(w_subgroup(G), 2) == span3([(1, 2)], 2)
    assert span3(fixed_subgroup(G), 2) == span3([(1, 1)], 2)
    assert direct_sum_report(G) == {"fixed_rank": 1, "w_rank": 1, "sum_rank": 2, "ok": True}


def test_non_involution_rejected():
    with pytest.raises(ValueError):
        Brauer3Group(2, ((1, 1), (0, 1)))


def test_shape_mismatch_rejected():
    with pytest.raises(ValueError):
        Brauer3Group(2, ((1,),))


# --- exhaustive sweeps ---

def _cases():
    for n in range(1, 5):
        for name, sig in documented_involutions(n).items():
            yield n, name, sig


CASES = list(_cases())


@pytest.mark.parametrize("n,name,sig", CASES, ids=[f"{n}-{name}" for n, name, _ in CASES])
def test_decomposition_exhaustive(n, name, sig):
    G = Brauer3Group(n, sig)
    plus_space, minus_space = eigenspace(G, 1), eigenspace(G, -1)
    for x in G.elements():
        p, m = decompose3(x, G)
        assert G.add(p, m) == x
        assert p in plus_space and m in minus_space
    # bases from the kernel computation span exactly the brute-force eigenspaces
    assert span3(fixed_subgroup(G), n) == plus_space
    assert span3(w_subgroup(G), n) == minus_space
    assert plus_space & minus_space == {G.zero()}
    assert len(plus_space) * len(minus_space) == 3 ** n
    assert direct_sum_report(G)["ok"]


def test_documented_set_contains_the_named_involutions():
    assert {"identity", "negation"} <= set(documented_involutions(1))
    assert {"identity", "negation", "swap01", "signed_swap01", "conjugated"} <= set(documented_involutions(3))
    assert "double_swap" in documented_involutions(4)


def test_every_involution_of_rank_two():
    # all 81 matrices; the involutions among them must all decompose
    count = 0
    for entries in itertools.product(range(3), repeat=4):
        M = (entries[0:2], entries[2:4])
        if mat_mul3(M, M) != identity3(2):
            with pytest.raises(ValueError):
                Brauer3Group(2, M)
            continue
        count += 1
        G = Brauer3Group(2, M)
        assert direct_sum_report(G)["ok"]
        assert all(G.add(*decompose3(x, G)) == x for x in G.elements())
    # identity, negation and the 48/4 = 12 conjugates of diag(1, -1)
    assert count == 14


@st.composite
def conjugated_involutions(draw):
    n = draw(st.integers(1, 4))
    # a product of elementary matrices is invertible by construction
    P = identity3(n)
    for i, j, c in draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(1, 2)),
                                 max_size=6)):
        if i != j:
            E = tuple(tuple(int(r == k) + (c if (r, k) == (i, j) else 0) for k in range(n)) for r in range(n))
            P = mat_mul3(P, E)
    signs = [draw(st.sampled_from([1, 2])) for _ in range(n)]
    D = tuple(tuple(signs[i] if i == j else 0 for j in range(n)) for i in range(n))
    # columns of P^-1 by brute force
    inv_cols = []
    for j in range(n):
        e = tuple(int(i == j) for i in range(n))
        inv_cols.append(next(v for v in itertools.product(range(3), repeat=n) if mat_vec3(P, v) == e))
    Pinv = tuple(tuple(inv_cols[j][i] for j in range(n)) for i in range(n))
    return n, mat_mul3(mat_mul3(P, D), Pinv), signs.count(1)


@given(conjugated_involutions())
@settings(max_examples=60, deadline=None)
def test_rank_additivity_for_random_involutions(case):
    n, sig, plus = case
    G = Brauer3Group(n, sig)
    rep = direct_sum_report(G)
    assert rep["ok"] and rep["fixed_rank"] == plus and rep["w_rank"] == n - plus


def test_kernel3_of_zero_matrix_is_everything():
    assert rank3(kernel3(((0, 0, 0),) * 3)) == 3


# --- cyclic algebra data ---

def test_opposite_values():
    assert opposite(CyclicAlgebraDatum(CUBIC, 1, 1)).a == 1
    assert opposite(CyclicAlgebraDatum(CUBIC, 1, 2)).a == Fraction(1, 2)


@given(st.fractions(min_value=-50, max_value=50, max_denominator=20).filter(bool))
def test_opposite_is_an_involution(a):
    c = CyclicAlgebraDatum(CUBIC, 1, a)
    assert opposite(opposite(c)) == c


def test_split_pair_values():
    assert split_pair(CyclicAlgebraDatum(CUBIC, 1, 1)) == (CyclicAlgebraDatum(CUBIC, 1, 1),) * 2
    two = CyclicAlgebraDatum(CUBIC, 1, 2)
    assert split_pair(two) == (two, CyclicAlgebraDatum(CUBIC, 1, Fraction(1, 2)))


@given(st.fractions(min_value=-50, max_value=50, max_denominator=20).filter(bool))
def test_swapped_pair_is_the_opposite_pair(a):
    pair = split_pair(CyclicAlgebraDatum(CUBIC, 1, a))
    assert op_pair(swap_pair(pair)) == pair
    assert swap_pair(pair) == op_pair(pair)


def test_datum_validation():
    with pytest.raises(ValueError):
        CyclicAlgebraDatum(CUBIC, 1, 0)
    with pytest.raises(ValueError):
        CyclicAlgebraDatum((1, 0, 1), 1, 2)
