"""The six exceptional curves, their incidence hexagon and the Galois action."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .. import linalg
from ..cocohom import Cocycle, frame_cocycle
from ..errors import Dp6Error, NotAnAction
from ..numfield import Etale2, fixed_subfield
from ..projlin import ProjPoint, cremona_conjugate, transpose_inverse
from .surface import Dp6Surface

LABELS = ("E1", "E2", "E3", "F12", "F13", "F23")
# F_jk sits over the complementary index i
_F_INDEX = {"F12": 2, "F13": 1, "F23": 0}
HEXAGON_CYCLE = ("E1", "F12", "E2", "F23", "E3", "F13")


def hexagon_incidence() -> tuple[tuple[int, ...], ...]:
    """Expected 0/1 incidence of the 6-cycle, in :data:`LABELS` order."""
    m = [[0] * 6 for _ in range(6)]
    for a, b in zip(HEXAGON_CYCLE, HEXAGON_CYCLE[1:] + HEXAGON_CYCLE[:1]):
        i, j = LABELS.index(a), LABELS.index(b)
        m[i][j] = m[j][i] = 1
    return tuple(tuple(r) for r in m)


@dataclass(frozen=True)
class Curve:
    """A curve ``A x B`` on X x Y where each factor is a point or a line.

    Lines are stored by their covector.  ``E_i`` is a point times a line and
    ``F_jk`` a line times a point.
    """

    label: str
    x_kind: str
    x: ProjPoint
    y_kind: str
    y: ProjPoint

    def key(self) -> tuple:
        return (self.x_kind, self.x, self.y_kind, self.y)

    def image_key(self, S: Dp6Surface, g: int) -> tuple:
        if S.swaps(g):
            return (self.y_kind, self.y.galois(g), self.x_kind, self.x.galois(g))
        return (self.x_kind, self.x.galois(g), self.y_kind, self.y.galois(g))

    def to_json(self) -> dict:
        return {"label": self.label, "x": {self.x_kind: self.x.to_json()},
                "y": {self.y_kind: self.y.to_json()}}


def _factor_meets(ka: str, a: ProjPoint, kb: str, b: ProjPoint) -> bool:
    if ka == kb == "point":
        return a == b
    if ka == kb == "line":
        return True
    return not a.dot(b)


def meets(c1: Curve, c2: Curve) -> bool:
    return (_factor_meets(c1.x_kind, c1.x, c2.x_kind, c2.x)
            and _factor_meets(c1.y_kind, c1.y, c2.y_kind, c2.y))


@dataclass
class HexagonAction:
    curves: tuple[Curve, ...]
    incidence: tuple[tuple[int, ...], ...]
    perms: dict[int, tuple[int, ...]] = dc_field(default_factory=dict)

    def label_perm(self, g: int) -> dict[str, str]:
        return {LABELS[i]: LABELS[j] for i, j in enumerate(self.perms[g])}

    def swaps_triangles(self, g: int) -> bool:
        return self.perms[g][0] >= 3

    def to_json(self) -> dict:
        return {
            "labels": list(LABELS),
            "curves": [c.to_json() for c in self.curves],
            "incidence": [list(r) for r in self.incidence],
            "action": {str(g): [LABELS[j] for j in p] for g, p in self.perms.items()},
        }


def exceptional_curves(S: Dp6Surface) -> HexagonAction:
    """The curves E_i = {P_i} x {(psi q)_i = 0} and F_jk = {(phi p)_i = 0} x {Q_i}."""
    F = S.field
    phi_inv, psi_inv = S.phi.inverse(), S.psi.inverse()
    curves = []
    for label in LABELS:
        i = int(label[1]) - 1 if label[0] == "E" else _F_INDEX[label]
        e = ProjPoint([F.one if k == i else F.zero for k in range(3)])
        if label[0] == "E":
            curves.append(Curve(label, "point", phi_inv(e), "line", S.psi.pull_line(e)))
        else:
            curves.append(Curve(label, "line", S.phi.pull_line(e), "point", psi_inv(e)))
    for c in curves:
        _check_on_surface(S, c)
    inc = tuple(tuple(int(a is not b and meets(a, b)) for b in curves) for a in curves)
    return HexagonAction(tuple(curves), inc)


def _check_on_surface(S: Dp6Surface, c: Curve) -> None:
    # both forms vanish on a point x line (or line x point) iff its two
    # spanning points do
    F = S.field
    pt = c.x if c.x_kind == "point" else c.y
    ln = c.y if c.x_kind == "point" else c.x
    basis = [ProjPoint(v) for v in linalg.kernel([list(ln.coords)], 3, F.one)]
    for q in basis:
        ok = S.contains(pt, q) if c.x_kind == "point" else S.contains(q, pt)
        if not ok:
            raise Dp6Error(f"curve {c.label} does not lie on the surface")


def galois_hexagon_action(S: Dp6Surface) -> HexagonAction:
    hx = exceptional_curves(S)
    if hx.incidence != hexagon_incidence():
        raise Dp6Error("exceptional curves do not form the expected hexagon")
    keys = [c.key() for c in hx.curves]
    perms = {}
    for g in S.group:
        try:
            perms[g] = tuple(keys.index(c.image_key(S, g)) for c in hx.curves)
        except ValueError:
            raise NotAnAction(f"automorphism {g} does not permute the exceptional curves") from None
    F = S.field
    for g in S.group:
        p = perms[g]
        if any(hx.incidence[i][j] != hx.incidence[p[i]][p[j]] for i in range(6) for j in range(6)):
            raise NotAnAction(f"automorphism {g} is not a hexagon automorphism")
        for h in S.group:
            if perms[F.compose(g, h)] != tuple(p[perms[h][i]] for i in range(6)):
                raise NotAnAction("curve permutations are not a homomorphism")
    hx.perms = perms
    return hx


def triangle_kernel(S: Dp6Surface, hx: HexagonAction | None = None) -> tuple[int, ...]:
    hx = hx or galois_hexagon_action(S)
    return tuple(g for g in S.group if not hx.swaps_triangles(g))


def triangle_field(S: Dp6Surface) -> Etale2:
    return fixed_subfield(S.field, triangle_kernel(S))


def blow_down_cocycles(S: Dp6Surface) -> tuple[Cocycle, Cocycle]:
    """Cocycles of the two frames over the triangle kernel Gal(M/L)."""
    group = triangle_kernel(S)
    eta, xi = frame_cocycle(S.phi, group), frame_cocycle(S.psi, group)
    if not (eta.is_monomial() and xi.is_monomial()):
        raise Dp6Error("blow-down cocycles left the monomial subgroup")
    return eta, xi


def verify_opposite(eta: Cocycle, xi: Cocycle) -> bool:
    """True iff ``xi_g = b eta_g b^-1 = eta_g^-T`` for every g."""
    if eta.group != xi.group or not (eta.is_monomial() and xi.is_monomial()):
        return False
    return all(xi[g] == cremona_conjugate(eta[g]) == transpose_inverse(eta[g]) for g in eta.group)
