"""Data triples (L, Severi-Brauer datum, point triple) and the round trip."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from ..cocohom import Cocycle, datum_isomorphism, trivial_cocycle, twisted_perms
from ..errors import NotGaloisStable, Obstruction, SolverExhausted
from ..numfield import Etale2, FieldElem, GaloisField, fixed_subfield, minimal_polynomial
from ..projlin import ProjMap, ProjPoint
from .hexagon import blow_down_cocycles, galois_hexagon_action, triangle_kernel
from .surface import Dp6Surface, _point_perms


@dataclass(eq=False)
class DataTriple:
    """``L``, a cocycle for X over Gal(M/L) with the triple in cocycle
    coordinates, and the same triple in the coordinates of X itself."""

    field: GaloisField
    etale: Etale2
    cocycle: Cocycle
    cocycle_points: tuple[ProjPoint, ProjPoint, ProjPoint]
    points: tuple[ProjPoint, ProjPoint, ProjPoint]

    @property
    def group(self) -> tuple[int, ...]:
        return self.cocycle.group

    def point_perms(self) -> dict[int, tuple[int, ...]]:
        return _point_perms(self.points, self.group)

    def scheme_signature(self) -> tuple:
        return point_scheme_signature(self.points, self.group)

    def to_json(self) -> dict:
        return {
            "L": self.etale.to_json(),
            "group": list(self.group),
            "cocycle": self.cocycle.to_json(),
            "cocycle_points": [p.to_json() for p in self.cocycle_points],
            "points": [p.to_json() for p in self.points],
            "galois_set": {str(g): list(p) for g, p in self.point_perms().items()},
        }


def _coef_key(c: FieldElem):
    if c.is_rational():
        return ("Q", str(c.rational()))
    return ("M", tuple(str(q) for q in c.field.modulus), tuple(str(q) for q in c.c))


def point_scheme_signature(points: Sequence[ProjPoint], group: Sequence[int]) -> tuple:
    """Sorted multiset of (pivot, minimal polynomials over L of the two
    remaining normalized coordinates), one entry per point."""
    sig = []
    for p in points:
        can = p.canonical
        pivot = next(i for i, x in enumerate(can) if x)
        mins = tuple(tuple(_coef_key(c) for c in minimal_polynomial(can[i], group))
                     for i in range(3) if i != pivot)
        sig.append((pivot, mins))
    return tuple(sorted(sig))


def input_data_triple(F: GaloisField, P: Sequence[ProjPoint], subgroup: Sequence[int] | None = None) -> DataTriple:
    """The datum of X = P^2 over L (trivial cocycle) with the triple P."""
    H = tuple(sorted(set(F.group if subgroup is None else subgroup)))
    P = tuple(P)
    _point_perms(P, H)
    return DataTriple(F, fixed_subfield(F, H), trivial_cocycle(F, H), P, P)  # type: ignore[arg-type]


def extract_data_triple(S: Dp6Surface) -> DataTriple:
    """Blow down the E-triangle: L from the hexagon, eta from the frame, the
    triple from the E-curves (and the standard triangle in frame coordinates)."""
    hx = galois_hexagon_action(S)
    L = fixed_subfield(S.field, triangle_kernel(S, hx))
    eta, _ = blow_down_cocycles(S)
    P = tuple(c.x for c in hx.curves[:3])
    F = S.field
    std = tuple(ProjPoint([F.one if k == i else F.zero for k in range(3)]) for i in range(3))
    return DataTriple(F, L, eta, std, P)  # type: ignore[arg-type]


@dataclass
class RoundtripReport:
    etale_match: bool
    scheme_match: bool
    gset_match: bool
    cocycle_status: str
    witness: ProjMap | None = None
    relabel: tuple[int, ...] | None = None
    detail: list[str] = dc_field(default_factory=list)

    @property
    def status(self) -> str:
        if not (self.etale_match and self.scheme_match and self.gset_match) or self.cocycle_status == "fail":
            return "fail"
        return self.cocycle_status

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "etale_match": self.etale_match,
            "scheme_match": self.scheme_match,
            "gset_match": self.gset_match,
            "cocycle": self.cocycle_status,
            "relabel": list(self.relabel) if self.relabel is not None else None,
            "witness": self.witness.to_json() if self.witness is not None else None,
            "detail": list(self.detail),
        }


def roundtrip_compare(a: DataTriple, b: DataTriple, bound: int | None = None) -> RoundtripReport:
    """Compare two data triples; the cocycle part needs an explicit witness
    ``alpha`` with ``b = alpha a g(alpha)^-1`` matching the triples."""
    rep = RoundtripReport(a.etale.same_as(b.etale), a.scheme_signature() == b.scheme_signature(),
                          False, "fail")
    if not rep.etale_match:
        rep.detail.append(f"L differs: {a.etale.describe()} vs {b.etale.describe()}")
    if not rep.scheme_match:
        rep.detail.append("point schemes differ (minimal polynomials of coordinates)")
    if a.field != b.field or a.group != b.group:
        rep.detail.append("data live over different fields or groups; cocycles not compared")
        return rep
    Z1 = list(a.cocycle_points)
    try:
        target = twisted_perms(a.cocycle, Z1)
    except NotGaloisStable as exc:
        rep.detail.append(str(exc))
        return rep
    undecided = []
    for pi in itertools.permutations(range(3)):
        Z2 = [b.cocycle_points[i] for i in pi]
        try:
            if twisted_perms(b.cocycle, Z2) != target:
                continue
        except NotGaloisStable as exc:
            rep.detail.append(str(exc))
            return rep
        rep.gset_match = True
        try:
            rep.witness = datum_isomorphism(a.cocycle, Z1, b.cocycle, Z2, bound)
        except Obstruction as exc:
            if exc.provable:
                rep.detail.append(f"relabel {pi}: {exc}")
                continue
            undecided.append(f"relabel {pi}: {exc}")
            continue
        except SolverExhausted as exc:
            undecided.append(f"relabel {pi}: {exc}")
            continue
        rep.relabel = pi
        rep.cocycle_status = "pass"
        return rep
    if not rep.gset_match:
        rep.detail.append("no relabelling matches the Galois-set structures")
    elif undecided:
        rep.cocycle_status = "indeterminate"
        rep.detail.append("indeterminate (no witness found within bounds)")
        rep.detail.extend(undecided)
    return rep
