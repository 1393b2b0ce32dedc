"""Per-scenario verification checks and report assembly."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field as dc_field
from typing import Callable

from . import linalg
from .brauer3 import Brauer3Group, decompose3, direct_sum_report
from .cocohom import cocycle_check
from .dp6core import (blow_down_cocycles, corrupted_descent_map, descent_report, dp6_construct,
                      extract_data_triple, galois_hexagon_action, hexagon_incidence, input_data_triple,
                      picard_check, roundtrip_compare, switch_descent_map, triangle_field, verify_opposite)
from .dp6core.hexagon import LABELS
from .dp6core.surface import Dp6Surface, forms_span, standard_forms
from .errors import Dp6Error
from .projlin import ProjPoint, cremona, cremona_conjugate, transpose_inverse
from .scenario import Scenario

CHECK_ORDER = ("cremona", "embedding", "hexagon", "picard", "cocycle", "conjugation", "opposite",
               "descent", "roundtrip", "brauer3")

# descriptive tag of the statement each check exercises
CHECK_REFS = {
    "cremona": "Cremona map is an involution",
    "embedding": "graph-closure equations xu-yv, yv-zw",
    "hexagon": "six exceptional curves form a Galois-stable hexagon",
    "picard": "Picard lattice: (K,K)=6, six (-1)-classes",
    "cocycle": "blow-down frames give 1-cocycles in the monomial group",
    "conjugation": "conjugation by b equals transpose-inverse on monomials",
    "opposite": "second blow-down is the opposite datum",
    "descent": "swap descent datum squares to the identity",
    "roundtrip": "surface -> data -> surface round trip",
    "brauer3": "3-torsion splits as fixed part plus W",
}


class InapplicableCheck(Dp6Error):
    pass


@dataclass
class CheckResult:
    check: str
    status: str
    witness: dict = dc_field(default_factory=dict)
    seconds: float = 0.0

    def to_json(self, timing: bool = False) -> dict:
        d = {"check": self.check, "ref": CHECK_REFS[self.check], "status": self.status, "witness": self.witness}
        if timing:
            d["seconds"] = round(self.seconds, 4)
        return d


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def _random_points(F, count: int, rng: random.Random, nonzero: bool = True) -> list[ProjPoint]:
    out = []
    while len(out) < count:
        coords = [F.elem([rng.randint(-4, 4) for _ in range(F.degree)]) for _ in range(3)]
        if (nonzero and not all(coords)) or not any(coords):
            continue
        out.append(ProjPoint(coords))
    return out


class ScenarioRun:
    """Lazily builds the surface and its derived data for one scenario."""

    def __init__(self, sc: Scenario):
        self.sc = sc
        self._S: Dp6Surface | None = None

    @property
    def S(self) -> Dp6Surface:
        if self._S is None:
            try:
                self._S = dp6_construct(self.sc.field, self.sc.points, self.sc.aux, self.sc.subgroup)
            except Dp6Error as exc:
                raise type(exc)(f"{self.sc.context('points')}: while constructing the surface: {exc}") from None
        return self._S

    def applicable(self) -> list[str]:
        out = list(CHECK_ORDER)
        if not self.S.is_quadratic and self.sc.descent_matrix is None:
            out.remove("descent")
        if self.sc.brauer3 is None:
            out.remove("brauer3")
        return out

    # each check returns (ok, witness)

    def check_cremona(self):
        rng = random.Random(self.sc.options.seed)
        pts = _random_points(self.sc.field, self.sc.options.random_checks, rng)
        bad = sum(cremona(cremona(p)) != p for p in pts)
        return bad == 0, {"points_checked": len(pts), "points_failed": bad}

    def check_embedding(self):
        S = self.S
        n = self.sc.options.random_checks
        bad = sum(not S.contains(p, q) for p, q in S.sample_points(n, self.sc.options.seed))
        # push the forms back to frame coordinates
        pi, qi = S.phi.inverse().rows, S.psi.inverse().rows
        frame = [linalg.mat_mul(linalg.transpose(pi), linalg.mat_mul(G, qi)) for G in S.forms]
        standard = forms_span(frame) == forms_span(standard_forms(S.field))
        return bad == 0 and standard, {"generators": S.generators_text(), "frame_ideal_standard": standard,
                                       "graph_points_checked": n, "graph_points_failed": bad}

    def check_hexagon(self):
        hx = galois_hexagon_action(self.S)
        ok = hx.incidence == hexagon_incidence()
        return ok, {"incidence": [list(r) for r in hx.incidence],
                    "action": {str(g): [LABELS[j] for j in p] for g, p in hx.perms.items()},
                    "L": triangle_field(self.S).to_json()}

    def check_picard(self):
        hx = galois_hexagon_action(self.S)
        rep = picard_check(incidence=hx.incidence)
        return rep["ok"], {"KK": rep["KK"], "count": rep["count"], "classes": rep["classes"],
                           "incidence_match": rep["incidence_match"]}

    def check_cocycle(self):
        eta, xi = blow_down_cocycles(self.S)
        ok = cocycle_check(eta) and cocycle_check(xi) and eta.is_monomial() and xi.is_monomial()
        return ok, {"group": list(eta.group), "eta": eta.to_json(), "xi": xi.to_json()}

    def check_conjugation(self):
        eta, xi = blow_down_cocycles(self.S)
        F = self.sc.field
        rng = random.Random(self.sc.options.seed + 1)
        pts = _random_points(F, 10, rng)
        bad = 0
        for g in eta.group:
            A = eta[g]
            C = cremona_conjugate(A)
            if C != transpose_inverse(A) or any(cremona(A(cremona(p))) != C(p) for p in pts):
                bad += 1
        return bad == 0, {"values_checked": len(eta.group), "values_failed": bad}

    def check_opposite(self):
        eta, xi = blow_down_cocycles(self.S)
        return verify_opposite(eta, xi), {"group": list(eta.group)}

    def check_descent(self):
        S = self.S
        if not S.is_quadratic:
            raise InapplicableCheck("descent applies only when L is a quadratic field")
        if self.sc.descent_matrix is not None:
            f = corrupted_descent_map(S, self.sc.descent_matrix)
        else:
            f = switch_descent_map(S)
        rep = descent_report(S, f, self.sc.options.random_checks, self.sc.options.seed)
        ok = rep.pop("ok")
        rep["map"] = f.to_json()
        rep["corrupted"] = self.sc.descent_matrix is not None
        return ok, rep

    def check_roundtrip(self):
        S = self.S
        a = input_data_triple(self.sc.field, self.sc.points, S.subgroup)
        b = extract_data_triple(S)
        rep = roundtrip_compare(a, b, self.sc.options.solver_bound)
        return rep.status, {"report": rep.to_json(), "recovered": b.to_json()}

    def check_brauer3(self):
        G: Brauer3Group = self.sc.brauer3  # type: ignore[assignment]
        bad = 0
        for x in G.elements():
            p, m = decompose3(x, G)
            if G.add(p, m) != tuple(x) or G.sigma(p) != p or G.sigma(m) != G.scale(-1, m):
                bad += 1
        ds = direct_sum_report(G)
        return bad == 0 and ds["ok"], {"elements": 3 ** G.rank, "failed": bad, **ds}

    def run(self, checks: list[str] | None = None, timing: bool = False) -> list[CheckResult]:
        self.S  # construction errors propagate as input errors
        names = self.applicable() if checks is None else checks
        results = []
        for name in CHECK_ORDER:
            if name not in names:
                continue
            if name == "brauer3" and self.sc.brauer3 is None:
                raise InapplicableCheck("scenario has no brauer3 block")
            fn: Callable = getattr(self, f"check_{name}")
            t0 = time.perf_counter()
            try:
                ok, witness = fn()
            except InapplicableCheck:
                raise
            except Dp6Error as exc:
                ok, witness = False, {"error": f"{type(exc).__name__}: {exc}"}
            status = ok if isinstance(ok, str) else _status(ok)
            results.append(CheckResult(name, status, witness, time.perf_counter() - t0))
        return results


def overall(results: list[CheckResult]) -> str:
    statuses = [r.status for r in results]
    if "fail" in statuses:
        return "fail"
    if "indeterminate" in statuses:
        return "indeterminate"
    return "pass"
