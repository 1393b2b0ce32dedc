"""Nonabelian 1-cocycles of a finite Galois group with values in PGL_3(M).

Cocycles are complete tables ``g -> ProjMap`` over a subgroup of the
automorphism group of the ambient field, where ``g`` acts on matrices entry by
entry.  The solvers here never hand back an unverified witness: every
returned coboundary is re-checked exactly before it leaves the function.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from . import linalg
from .config import solver_bound
from .errors import (Dp6Error, NotGaloisStable, NotInvertible, NotTorusValued,
                     Obstruction, SolverExhausted, DegenerateFrame)
from .numfield import (EtaleAction, EtaleModuleElem, FieldElem, GaloisField,
                       fixed_subfield, galois_set_alphas, small_int_vectors)
from .projlin import (ProjMap, ProjPoint, collinear, frame_map,
                      general_position_point, transpose_inverse, vandermonde_points)


class Cocycle:
    """A table ``g -> c_g`` over a subgroup of the field's automorphisms.

    The cocycle law ``c_{gh} = c_g . g(c_h)`` is the contract; it is checked
    by :func:`cocycle_check`, not on construction, so that broken inputs can
    be represented and reported.
    """

    def __init__(self, field: GaloisField, values: Mapping[int, ProjMap]):
        self.field = field
        self.values = dict(sorted(values.items()))

    @property
    def group(self) -> tuple[int, ...]:
        return tuple(self.values)

    def __getitem__(self, g: int) -> ProjMap:
        return self.values[g]

    def __eq__(self, other):
        return (isinstance(other, Cocycle) and self.group == other.group
                and all(self[g] == other[g] for g in self.group))

    def __hash__(self):
        return hash(tuple(self.values.items()))

    def is_monomial(self) -> bool:
        return all(A.is_monomial() for A in self.values.values())

    def is_trivial(self) -> bool:
        return all(A.is_scalar() for A in self.values.values())

    def to_json(self) -> dict:
        return {str(g): A.to_json() for g, A in self.values.items()}

    def __repr__(self):
        return "Cocycle{" + ", ".join(f"{g}: {A!r}" for g, A in self.values.items()) + "}"


def trivial_cocycle(F: GaloisField, group: Sequence[int]) -> Cocycle:
    I = ProjMap.identity(F)
    return Cocycle(F, {g: I for g in group})


def frame_cocycle(phi: ProjMap, group: Sequence[int]) -> Cocycle:
    """``g -> phi . g(phi)^-1``, the cocycle of a trivialisation ``phi``."""
    return Cocycle(phi.field, {g: phi @ phi.galois(g).inverse() for g in group})


def cocycle_check(c: Cocycle) -> bool:
    F = c.field
    group = c.group
    if not F.is_subgroup(group):
        return False
    if not c[F.identity].is_scalar():
        return False
    for g, h in itertools.product(group, repeat=2):
        if c[F.compose(g, h)] != c[g] @ c[h].galois(g):
            return False
    return True


def coboundary_apply(B: ProjMap, c: Cocycle) -> Cocycle:
    """The cohomologous cocycle ``g -> B c_g g(B)^-1``."""
    return Cocycle(c.field, {g: B @ A @ B.galois(g).inverse() for g, A in c.values.items()})


def cocycle_op(c: Cocycle) -> Cocycle:
    """Compose with transpose-inverse; represents the opposite algebra."""
    return Cocycle(c.field, {g: transpose_inverse(A) for g, A in c.values.items()})


# --- the torus T fixing three points ---

@dataclass(frozen=True)
class LiftedTorusElem:
    eigen: EtaleModuleElem
    torus: "TorusSubgroup"

    def matrix(self) -> ProjMap:
        return self.torus.element(self.eigen)


class TorusSubgroup:
    """Stabiliser in PGL_3 of three non-collinear, Galois-stable points R_i.

    ``C`` is the change of basis with the representatives of the R_i as
    columns, so ``C^-1 A C`` is diagonal for every lift of ``A`` in T.
    """

    def __init__(self, points: Sequence[ProjPoint], group: Sequence[int]):
        if len(points) != 3 or collinear(*points):
            raise ValueError("the torus needs three non-collinear points")
        self.points = tuple(points)
        self.field = points[0].field
        self.C = ProjMap(linalg.transpose([p.coords for p in points]))
        self.C_inv = self.C.inverse()
        perms = {}
        for g in group:
            imgs = [p.galois(g) for p in self.points]
            try:
                perms[g] = tuple(self.points.index(q) for q in imgs)
            except ValueError:
                raise NotGaloisStable(f"automorphism {g} does not preserve the point set") from None
        self.action = EtaleAction(self.field, perms)

    @property
    def group(self) -> tuple[int, ...]:
        return self.action.group

    def contains(self, A: ProjMap) -> bool:
        return all(A(p) == p for p in self.points)

    def lift(self, A: ProjMap) -> LiftedTorusElem:
        D = self.C_inv @ A @ self.C
        if not D.is_diagonal():
            raise NotTorusValued(f"{A} does not fix the three torus points")
        return LiftedTorusElem(EtaleModuleElem(tuple(D.rows[i][i] for i in range(3))), self)

    def element(self, e: EtaleModuleElem) -> ProjMap:
        return self.C @ ProjMap.diag(self.field, *e.comps) @ self.C_inv


# --- Hilbert 90 on (M (x) E)* = M* x M* x M* ---

def _etale_candidates(action: EtaleAction) -> Iterator[EtaleModuleElem]:
    F = action.field
    n = F.degree
    yield action.one()
    for vec in small_int_vectors(3 * n):
        yield EtaleModuleElem(tuple(F.elem(vec[k * n:(k + 1) * n]) for k in range(3)))


def hilbert90_solve(c: Mapping[int, EtaleModuleElem], action: EtaleAction,
                    bound: int | None = None) -> EtaleModuleElem:
    """Find ``beta`` with ``c_g = beta . g(beta)^-1`` for all ``g``.

    Uses the averaging ``beta = sum_h c_h . h(a)`` over candidates ``a`` taken
    in the order (1, 1, 1), then small-integer coefficient vectors by
    increasing L1 norm.  The first candidate giving an invertible, verified
    ``beta`` is returned.
    """
    cap = solver_bound() if bound is None else bound
    group = tuple(c)
    for count, a in enumerate(_etale_candidates(action)):
        if count >= cap:
            break
        beta = None
        for h in group:
            term = c[h] * action.act(h, a)
            beta = term if beta is None else EtaleModuleElem(tuple(x + y for x, y in zip(beta, term)))
        if beta is None or not beta.is_unit():
            continue
        if all(c[g] == beta * action.act(g, beta).inverse() for g in group):
            return beta
    raise SolverExhausted(f"no invertible averaged witness among {cap} candidates")


# --- coboundaries inside T ---

def _defect(D: Mapping[int, EtaleModuleElem], action: EtaleAction) -> dict[tuple[int, int], FieldElem]:
    F = action.field
    out = {}
    for g, h in itertools.product(D, repeat=2):
        lhs = D[g] * action.act(g, D[h])
        rhs = D[F.compose(g, h)]
        ratios = [x / y for x, y in zip(lhs, rhs)]
        if not (ratios[0] == ratios[1] == ratios[2]):
            raise NotTorusValued("lifted table is not a cocycle in T modulo scalars")
        out[(g, h)] = ratios[0]
    return out


def _scale(e: EtaleModuleElem, s: FieldElem) -> EtaleModuleElem:
    return EtaleModuleElem(tuple(x * s for x in e))


def _iroot(n: int, k: int) -> int | None:
    if n < 0:
        return None
    lo, hi = 0, 1
    while hi ** k <= n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid ** k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo if lo ** k == n else None


def _rational_root(q: Fraction, k: int) -> Fraction | None:
    sign = 1
    if q < 0:
        if k % 2 == 0:
            return None
        sign, q = -1, -q
    a, b = _iroot(q.numerator, k), _iroot(q.denominator, k)
    if a is None or b is None:
        return None
    return sign * Fraction(a, b)


def _normalize_lifts(D: dict[int, EtaleModuleElem], action: EtaleAction,
                     bound: int) -> dict[int, EtaleModuleElem]:
    defect = _defect(D, action)
    if all(v == 1 for v in defect.values()):
        return D
    F = action.field
    group = tuple(D)
    fixed = [i for i in range(3) if all(action.perms[g][i] == i for g in group)]
    if fixed:
        i0 = fixed[0]
        D2 = {g: _scale(e, e[i0].inverse()) for g, e in D.items()}
        if all(v == 1 for v in _defect(D2, action).values()):
            return D2
    n = len(group)
    gens = [g for g in group if F.element_order(g) == n]
    if gens:
        gen = gens[0]
        powers = [F.identity]
        for _ in range(n - 1):
            powers.append(F.compose(gen, powers[-1]))

        def along_generator(base: EtaleModuleElem) -> dict[int, EtaleModuleElem]:
            out = {F.identity: action.one()}
            cur = action.one()
            for k in range(1, n):
                cur = cur * action.act(powers[k - 1], base)
                out[powers[k]] = cur
            return out

        base = D[gen]
        total = along_generator(base)[powers[-1]] * action.act(powers[-1], base)
        if not (total[0] == total[1] == total[2]):
            raise NotTorusValued("norm of the generator value is not scalar")
        c = total[0]
        for count, vec in enumerate(small_int_vectors(F.degree)):
            if count >= bound:
                break
            m = F.elem(vec)
            if not m:
                continue
            norm = F.one
            for g in group:
                norm = norm * F.apply(g, m)
            target = norm * c
            if not target.is_rational():
                continue
            lam = _rational_root(target.rational(), n)
            if lam is None or lam == 0:
                continue
            D2 = {g: e for g, e in along_generator(_scale(base, m / lam)).items()}
            if all(v == 1 for v in _defect(D2, action).values()):
                return D2
        provable = False
        if n == 2 and F.degree == 2 and c.is_rational() and c.rational() < 0:
            d = -fixed_subfield(F, [F.identity]).minpoly[0]
            provable = d < 0
        reason = ("defect provably nontrivial: negative rational is not a norm from an imaginary quadratic field"
                  if provable else "defect not normalized within bounds")
        raise Obstruction(reason, defect=defect, provable=provable)
    raise Obstruction("indeterminate: defect normalisation is only attempted for cyclic groups", defect=defect)


def t_coboundary_solve(eta: Cocycle, xi: Cocycle, T: TorusSubgroup, bound: int | None = None) -> ProjMap:
    """Find B in T with ``xi_g = B eta_g g(B)^-1`` for every g.

    ``d_g = xi_g eta_g^-1`` is lifted to eigenvalue triples.  The stored GL_3
    representatives are used as lifts; when they leave a scalar defect the
    lifts are renormalised (fixed point of the index action, or a bounded
    norm search for cyclic groups) before Hilbert 90 is applied.
    """
    cap = solver_bound() if bound is None else bound
    if eta.group != xi.group or set(eta.group) != set(T.group):
        raise ValueError("cocycles and torus must live on the same group")
    for c in (eta, xi):
        for g in c.group:
            if not T.contains(c[g]):
                raise NotTorusValued(f"value at {g} does not fix the torus points")
    d = {g: xi[g] @ eta[g].inverse() for g in eta.group}
    D = {g: T.lift(A).eigen for g, A in d.items()}
    D = _normalize_lifts(D, T.action, cap)
    beta = hilbert90_solve(D, T.action, cap)
    B = T.element(beta)
    if not (T.contains(B) and coboundary_apply(B, eta) == xi):
        raise Dp6Error("internal error: torus witness failed verification")
    return B


# --- isomorphisms of (cocycle, point triple) data ---

def twisted_perms(c: Cocycle, points: Sequence[ProjPoint]) -> dict[int, tuple[int, ...]]:
    """Permutation of the points under the twisted action ``z -> c_g g(z)``."""
    out = {}
    for g in c.group:
        try:
            out[g] = tuple(points.index(c[g](p.galois(g))) for p in points)
        except ValueError:
            raise NotGaloisStable(f"automorphism {g} does not preserve the point triple") from None
    return out


def datum_isomorphism(c1: Cocycle, Z1: Sequence[ProjPoint], c2: Cocycle, Z2: Sequence[ProjPoint],
                      bound: int | None = None) -> ProjMap:
    """An ``alpha`` with ``c2 = alpha c1 g(alpha)^-1`` and ``alpha(Z1_i) = Z2_i``.

    Both data are moved into the frame of Vandermonde points carrying the
    same Galois-set structure, where they become torus-valued, and compared
    with :func:`t_coboundary_solve`.
    """
    Z1, Z2 = list(Z1), list(Z2)
    if c1.group != c2.group:
        raise ValueError("cocycles are defined on different groups")
    F = c1.field
    group = c1.group
    p1, p2 = twisted_perms(c1, Z1), twisted_perms(c2, Z2)
    if p1 != p2:
        raise NotGaloisStable("the two point triples carry different Galois-set structures")
    R = vandermonde_points(*galois_set_alphas(F, group, p1))
    T = TorusSubgroup(R, group)

    def to_torus_frame(Z):
        w = general_position_point(Z)
        return T.C @ frame_map(*Z, w)

    F1, F2 = to_torus_frame(Z1), to_torus_frame(Z2)
    B = t_coboundary_solve(coboundary_apply(F1, c1), coboundary_apply(F2, c2), T, bound)
    alpha = F2.inverse() @ B @ F1
    if not (all(alpha(a) == b for a, b in zip(Z1, Z2)) and coboundary_apply(alpha, c1) == c2):
        raise Dp6Error("internal error: datum isomorphism failed verification")
    return alpha


def extend_point_isomorphism(F: GaloisField, group: Sequence[int], P: Sequence[ProjPoint],
                             P2: Sequence[ProjPoint], bound: int | None = None) -> ProjMap:
    """Automorphism of P^2 over the fixed field of ``group`` carrying the
    Galois-stable triple ``P`` onto ``P2`` point by point."""
    triv = trivial_cocycle(F, group)
    alpha = datum_isomorphism(triv, P, triv, P2, bound)
    if any(alpha.galois(g) != alpha for g in group):
        raise Dp6Error("internal error: extended automorphism is not Galois invariant")
    return alpha
