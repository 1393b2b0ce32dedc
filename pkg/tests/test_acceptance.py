"""The ten acceptance criteria; a summary line per criterion is printed by conftest."""
from __future__ import annotations

import itertools
import random
import time

import pytest

from corpus import (DATA, cube_roots_of_two, cubic, cubic_vandermonde, q, q_sqrt_m3, rand_elem, rand_monomial,
                    rand_point, s3, standard_triangle)
from dp6.brauer3 import (Brauer3Group, decompose3, direct_sum_report, documented_involutions, fixed_subgroup,
                         w_subgroup)
from dp6.cli import EXIT_FAIL, EXIT_OK, main
from dp6.cocohom import (TorusSubgroup, coboundary_apply, cocycle_check, hilbert90_solve,
                         t_coboundary_solve, trivial_cocycle)
from dp6.dp6core import (blow_down_cocycles, corrupted_descent_map, descent_report, dp6_construct,
                         extract_data_triple, galois_hexagon_action, hexagon_incidence, input_data_triple,
                         picard_check, roundtrip_compare, switch_descent_map, verify_opposite)
from dp6.dp6core.surface import form_value, forms_span, standard_forms
from dp6.errors import SolverExhausted
from dp6.numfield import EtaleAction, EtaleModuleElem
from dp6.projlin import (ProjMap, ProjPoint, cremona, cremona_conjugate, frame_map, general_position_point,
                         monomial_decompose, transpose_inverse, vandermonde_points)
from dp6.scenario import load_scenario

PERMS = list(itertools.permutations(range(3)))
WORKED = ["split_rational", "cyclic_cubic", "quadratic_swap_qi"]


def scenario_surface(name):
    sc = load_scenario(DATA / f"{name}.json")
    return sc, dp6_construct(sc.field, sc.points, sc.aux, sc.subgroup)


@pytest.mark.criterion(1, "Cremona involution on 100 points over Q and Q(sqrt-3), under 1 s")
@pytest.mark.parametrize("make", [q, q_sqrt_m3])
def test_c1_cremona_involution(make):
    F = make()
    rng = random.Random(2024)
    pts = [rand_point(F, rng, nonzero_coords=True) for _ in range(100)]
    t0 = time.perf_counter()
    assert all(cremona(cremona(p)) == p for p in pts)
    assert time.perf_counter() - t0 < 1.0


@pytest.mark.criterion(2, "conjugation by b equals transpose-inverse on H; transpose-inverse multiplicative")
def test_c2_conjugation_identity():
    F = q_sqrt_m3()
    rng = random.Random(7)
    samples = {perm: [rand_monomial(F, rng, perm) for _ in range(50)] for perm in PERMS}
    for perm, mats in samples.items():
        for A in mats:
            assert cremona_conjugate(A) == transpose_inverse(A)
            _, P = monomial_decompose(A)
            assert P == ProjMap.permutation(F, perm)
    for p1, p2 in itertools.product(PERMS, repeat=2):
        for A, B in zip(samples[p1][:5], samples[p2][:5]):
            assert transpose_inverse(A @ B) == transpose_inverse(A) @ transpose_inverse(B)


@pytest.mark.criterion(3, "standard triangle gives <xu-yv, yv-zw>; 50 graph points; hexagon incidence")
def test_c3_graph_closure():
    F = q()
    S = dp6_construct(F, standard_triangle(F))
    assert S.ideal_basis() == forms_span(standard_forms(F))
    assert S.generators_text() == ["x*u - y*v", "y*v - z*w"]
    rng = random.Random(3)
    for _ in range(50):
        p = rand_point(F, rng, nonzero_coords=True)
        assert all(not form_value(G, p, cremona(p)) for G in S.forms)
    inc = galois_hexagon_action(S).incidence
    assert inc == hexagon_incidence()
    assert all(sum(row) == 2 for row in inc)
    # a single 6-cycle rather than two triangles
    reach, frontier = {0}, {0}
    while frontier:
        frontier = {j for i in frontier for j in range(6) if inc[i][j]} - reach
        reach |= frontier
    assert reach == set(range(6))


@pytest.mark.criterion(4, "Picard lattice: (K,K) = 6 and exactly six (-1)-classes of degree 1")
def test_c4_picard():
    rep = picard_check()
    assert rep["KK"] == 6
    assert rep["count"] == 6 and rep["classes_match"] and rep["ok"]


@pytest.mark.criterion(5, "worked scenarios (a)-(c): cocycles, opposite datum, decisive round trip")
@pytest.mark.parametrize("name", WORKED)
def test_c5_worked_scenarios(name):
    sc, S = scenario_surface(name)
    eta, xi = blow_down_cocycles(S)
    assert cocycle_check(eta) and cocycle_check(xi)
    assert verify_opposite(eta, xi)
    rep = roundtrip_compare(input_data_triple(sc.field, sc.points, S.subgroup), extract_data_triple(S),
                            sc.options.solver_bound)
    assert rep.status == "pass", rep.detail
    if name == "cyclic_cubic":
        _, perm = monomial_decompose(eta[1])
        assert perm in {ProjMap.permutation(sc.field, (1, 2, 0)), ProjMap.permutation(sc.field, (2, 0, 1))}
    if name == "quadratic_swap_qi":
        assert S.is_quadratic


@pytest.mark.criterion(6, "descent: f o f = id on scenario (c); corrupted fixture fails")
def test_c6_descent(capsys):
    _, S = scenario_surface("quadratic_swap_qi")
    f = switch_descent_map(S)
    for p, qq in S.sample_points(50, seed=11):
        image = f(p, qq)
        assert S.contains(*image)
        assert f(*image) == (p, qq)
    assert descent_report(S, f)["ok"]
    sc, Sbad = scenario_surface("corrupted_descent")
    assert not descent_report(Sbad, corrupted_descent_map(Sbad, sc.descent_matrix))["ok"]
    assert main(["verify", str(DATA / "corrupted_descent.json"), "--checks=descent"]) == EXIT_FAIL
    capsys.readouterr()


def _h90_case(F, perms, seed):
    action = EtaleAction(F, perms)
    rng = random.Random(seed)
    for _ in range(20):
        beta = EtaleModuleElem(tuple(rand_elem(F, rng, nonzero=True) for _ in range(3)))
        c = {g: beta * action.act(g, beta).inverse() for g in action.group}
        sol = hilbert90_solve(c, action)
        assert all(c[g] == sol * action.act(g, sol).inverse() for g in action.group)
    return action


@pytest.mark.criterion(7, "Hilbert 90: 20 coboundaries each for Z/2 over Q(sqrt-3) and Z/3 over the cubic")
def test_c7_hilbert90():
    act2 = _h90_case(q_sqrt_m3(), {0: (0, 1, 2), 1: (0, 2, 1)}, 1)
    _h90_case(cubic(), {0: (0, 1, 2), 1: (1, 2, 0), 2: (2, 0, 1)}, 2)
    # a non-coboundary is refused, never answered
    F = q_sqrt_m3()
    bad = {0: act2.one(), 1: EtaleModuleElem((F.from_rational(2), F.one, F.one))}
    with pytest.raises(SolverExhausted):
        hilbert90_solve(bad, act2, bound=30)


def _torus_witness(F, P, P2, w):
    triv = trivial_cocycle(F, F.group)
    T = TorusSubgroup(P, F.group)
    # an irrational fourth point w makes the frame non-invariant; the torus of P absorbs the defect
    frame2 = frame_map(*P, general_position_point(P)).inverse() @ frame_map(*P2, w)
    assert any(frame2.galois(g) != frame2 for g in F.group)
    B = t_coboundary_solve(coboundary_apply(frame2, triv), triv, T)
    return T, B, B @ frame2


@pytest.mark.criterion(8, "torus witness B in T carries one Galois-stable triple to another, pointwise")
@pytest.mark.parametrize("case", ["cubic", "s3"])
def test_c8_torus_witness(case):
    if case == "cubic":
        F = cubic()
        P = list(cubic_vandermonde(F))
        t = F.gen
        base = ProjPoint((F.one, t, 2 + t * t))
        w = ProjPoint((F.one, 1 + t, F.from_rational(3)))
    else:
        F = s3()
        P = list(vandermonde_points(*cube_roots_of_two(F)))
        b = cube_roots_of_two(F)[0]
        base = ProjPoint((F.one, b + 1, b * b - 3))
        w = ProjPoint((F.one, b, F.from_rational(5)))
    P2 = [base.galois(g) for g in F.group]
    P2 = [p for i, p in enumerate(P2) if p not in P2[:i]]
    # order P2 so its Galois-set structure matches P
    perms = {g: tuple(P.index(p.galois(g)) for p in P) for g in F.group}
    P2 = next(list(o) for o in itertools.permutations(P2)
              if all(tuple(o.index(p.galois(g)) for p in o) == perms[g] for g in F.group))
    T, B, alpha = _torus_witness(F, P, P2, w)
    assert not B.is_scalar()
    assert T.contains(B)
    assert all(alpha(p) == r for p, r in zip(P2, P))
    assert all(alpha.galois(g) == alpha for g in F.group)
    rng = random.Random(5)
    for _ in range(10):
        z = rand_point(F, rng)
        assert all(alpha(z.galois(g)) == alpha(z).galois(g) for g in F.group)


@pytest.mark.criterion(9, "decomposition over (Z/3)^n, n <= 4, for the documented involutions")
def test_c9_brauer3_exhaustive():
    for n in range(1, 5):
        invs = documented_involutions(n)
        assert {"identity", "negation"} <= set(invs)
        if n >= 2:
            assert "swap01" in invs
        for sig in invs.values():
            G = Brauer3Group(n, sig)
            for x in G.elements():
                plus, minus = decompose3(x, G)
                assert G.add(plus, minus) == x
                assert G.sigma(plus) == plus and G.sigma(minus) == G.scale(-1, minus)
            rep = direct_sum_report(G)
            assert rep["ok"] and rep["fixed_rank"] + rep["w_rank"] == n
            assert rep["fixed_rank"] == len(fixed_subgroup(G)) and rep["w_rank"] == len(w_subgroup(G))


@pytest.mark.criterion(10, "selftest twice gives byte-identical JSON")
def test_c10_selftest_deterministic(capsys):
    assert main(["selftest", "--json"]) == EXIT_OK
    first = capsys.readouterr().out
    assert main(["selftest", "--json"]) == EXIT_OK
    second = capsys.readouterr().out
    assert first == second and first.encode() == second.encode()
