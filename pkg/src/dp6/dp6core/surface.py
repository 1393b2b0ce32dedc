"""The degree-6 Del Pezzo surface as the closure of the graph of a Cremona map.

In frame coordinates the surface is cut out of P^2 x P^2 by ``xu - yv`` and
``yv - zw``; a surface in original coordinates is stored as the two frames
together with the pulled-back bilinear forms.  A bilinear form is a 3x3
matrix ``G`` with value ``p^T G q`` at ``(p, q)``.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .. import linalg
from ..errors import DegenerateFrame, DegenerateInput, NotGaloisStable
from ..numfield import FieldElem, GaloisField, format_fraction
from ..projlin import (ProjMap, ProjPoint, collinear, cremona, frame_map,
                       general_position_point, in_general_position)

Form = tuple[tuple[FieldElem, ...], ...]


def standard_forms(F: GaloisField) -> tuple[Form, Form]:
    z, o = F.zero, F.one
    j1 = ((o, z, z), (z, -o, z), (z, z, z))
    j2 = ((z, z, z), (z, o, z), (z, z, -o))
    return j1, j2


def form_value(G: Form, p: ProjPoint, q: ProjPoint) -> FieldElem:
    return linalg.mat_mul([list(p.coords)], linalg.mat_mul(G, [[c] for c in q.coords]))[0][0]


def forms_span(forms: Sequence[Form]) -> tuple[tuple[FieldElem, ...], ...]:
    """Reduced echelon basis of the span of bilinear forms (flattened)."""
    red, _ = linalg.rref([[x for row in G for x in row] for G in forms])
    return tuple(tuple(r) for r in red)


def form_text(G: Form) -> str:
    xs, ys = "xyz", "uvw"
    terms = []
    for i in range(3):
        for j in range(3):
            c = G[i][j]
            if not c:
                continue
            mono = f"{xs[i]}*{ys[j]}"
            if c.is_rational():
                q = c.rational()
                mag = format_fraction(abs(q))
                body = mono if abs(q) == 1 else f"{mag}*{mono}"
                terms.append(("-" if q < 0 else "+", body))
            else:
                terms.append(("+", f"({c})*{mono}"))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for s, b in terms[1:]:
        out += f" {s} {b}"
    return out


def _conj_form(G: Form, g: int) -> Form:
    return tuple(tuple(x.galois(g) for x in row) for row in G)


def _transpose_form(G: Form) -> Form:
    return tuple(tuple(G[j][i] for j in range(3)) for i in range(3))


@dataclass(eq=False)
class Dp6Surface:
    """Frame data for a degree-6 Del Pezzo surface inside X x Y = P^2 x P^2.

    ``subgroup`` is Gal(M/L).  When it has index 2, ``sigma0`` is the least
    automorphism outside it, Y is the conjugate plane, Q is ``sigma0(P)``
    relabelled so that Q_i is opposite P_i, and automorphisms outside the
    subgroup act on points by swapping factors.
    """

    field: GaloisField
    subgroup: tuple[int, ...]
    sigma0: int | None
    P: tuple[ProjPoint, ProjPoint, ProjPoint]
    Q: tuple[ProjPoint, ProjPoint, ProjPoint]
    aux: ProjPoint
    aux_y: ProjPoint
    phi: ProjMap
    psi: ProjMap
    forms: tuple[Form, Form]
    point_perms: dict[int, tuple[int, ...]] = dc_field(default_factory=dict)

    @property
    def is_quadratic(self) -> bool:
        return self.sigma0 is not None

    @property
    def group(self) -> tuple[int, ...]:
        return self.field.group

    def swaps(self, g: int) -> bool:
        return g not in self.subgroup

    def birational(self, p: ProjPoint) -> ProjPoint:
        """The map X --> Y whose graph closure is the surface."""
        return self.psi.inverse()(cremona(self.phi(p)))

    def graph_point(self, p: ProjPoint) -> tuple[ProjPoint, ProjPoint]:
        return p, self.birational(p)

    def contains(self, p: ProjPoint, q: ProjPoint) -> bool:
        return all(not form_value(G, p, q) for G in self.forms)

    def act(self, g: int, p: ProjPoint, q: ProjPoint) -> tuple[ProjPoint, ProjPoint]:
        if self.swaps(g):
            return q.galois(g), p.galois(g)
        return p.galois(g), q.galois(g)

    def ideal_basis(self):
        return forms_span(self.forms)

    def generators_text(self) -> list[str]:
        return [form_text(G) for G in self.forms]

    def reduced_text(self) -> list[str]:
        """The reduced echelon basis of the ideal's (1,1) part, as text."""
        return [form_text((r[0:3], r[3:6], r[6:9])) for r in self.ideal_basis()]

    def off_exceptional(self, p: ProjPoint) -> bool:
        return all(self.phi(p).coords)

    def sample_points(self, count: int, seed: int = 0, spread: int = 3) -> list[tuple[ProjPoint, ProjPoint]]:
        """Graph points ``(p, b(p))`` for ``count`` pseudo-random M-points p
        off the exceptional locus; deterministic for a fixed seed."""
        rng = random.Random(seed)
        F = self.field
        out = []
        while len(out) < count:
            coords = [F.elem([rng.randint(-spread, spread) for _ in range(F.degree)]) for _ in range(3)]
            if not any(coords):
                continue
            p = ProjPoint(coords)
            if self.off_exceptional(p):
                out.append(self.graph_point(p))
        return out


def _point_perms(points: Sequence[ProjPoint], group: Sequence[int]) -> dict[int, tuple[int, ...]]:
    pts = list(points)
    out = {}
    for g in group:
        try:
            out[g] = tuple(pts.index(p.galois(g)) for p in pts)
        except ValueError:
            raise NotGaloisStable(f"automorphism {g} does not preserve the point triple") from None
    return out


def dp6_construct(F: GaloisField, P: Sequence[ProjPoint], aux: ProjPoint | None = None,
                  subgroup: Sequence[int] | None = None) -> Dp6Surface:
    """Blow up X = P^2 over L at the Galois-stable triple ``P``.

    ``subgroup`` is Gal(M/L) (the whole group when L is split).  The map
    X --> Y is fixed once from a rational reference point; ``aux`` then only
    chooses the frames, so any M-point in general position may be used.
    """
    H = tuple(sorted(set(F.group if subgroup is None else subgroup)))
    if not F.is_subgroup(H):
        raise DegenerateInput(f"{H} is not a subgroup of the automorphism group")
    index = F.order // len(H)
    if index not in (1, 2):
        raise DegenerateInput(f"Gal(M/L) must have index 1 or 2, found {index}")
    P = tuple(P)
    if len(P) != 3 or len(set(P)) != 3 or collinear(*P):
        raise DegenerateInput("the three points must be distinct and non-collinear")
    perms = _point_perms(P, H)
    sigma0 = None if index == 1 else min(g for g in F.group if g not in H)
    try:
        ref = general_position_point(P)
    except DegenerateFrame as exc:
        raise DegenerateInput(str(exc)) from None
    if aux is not None and not in_general_position(list(P) + [aux]):
        raise DegenerateInput(f"auxiliary point {aux} is not in general position with P")

    # Q_{tau(i)} = sigma0(P_i); tau must intertwine the two index actions,
    # and the first labelling giving a Galois-stable surface is used
    last: NotGaloisStable | None = None
    for tau in (itertools.permutations(range(3)) if sigma0 is not None else [(0, 1, 2)]):
        S = _build(F, H, sigma0, P, perms, tau, ref, aux)
        try:
            _check_stable(S)
        except NotGaloisStable as exc:
            last = exc
            continue
        return S
    raise last  # type: ignore[misc]


def _build(F, H, sigma0, P, perms, tau, ref, aux) -> Dp6Surface:
    if sigma0 is None:
        Q = P
    else:
        inv = [tau.index(i) for i in range(3)]
        Q = tuple(P[inv[i]].galois(sigma0) for i in range(3))
    phi0 = frame_map(*P, ref)
    psi0 = frame_map(*Q, ref.galois(sigma0)) if sigma0 is not None else phi0
    if aux is None:
        aux = ref
    aux_y = psi0.inverse()(cremona(phi0(aux)))
    phi = frame_map(*P, aux)
    psi = frame_map(*Q, aux_y)
    forms = _pullback(standard_forms(F), phi, psi)
    if forms_span(forms) != forms_span(_pullback(standard_forms(F), phi0, psi0)):
        raise DegenerateInput("frames disagree with the reference map; inconsistent input")
    return Dp6Surface(F, H, sigma0, P, Q, aux, aux_y, phi, psi, forms, perms)


def _pullback(forms, phi: ProjMap, psi: ProjMap):
    pt = linalg.transpose(phi.rows)
    return tuple(tuple(tuple(r) for r in linalg.mat_mul(pt, linalg.mat_mul(J, psi.rows))) for J in forms)


def _check_stable(S: Dp6Surface) -> None:
    basis = S.ideal_basis()
    for g in S.group:
        imgs = [_conj_form(G, g) for G in S.forms]
        if S.swaps(g):
            imgs = [_transpose_form(G) for G in imgs]
        if len(linalg.rref(list(basis) + [[x for r in G for x in r] for G in imgs])[0]) != 2:
            raise NotGaloisStable(f"automorphism {g} does not preserve the surface")
