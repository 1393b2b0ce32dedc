"""The Picard lattice of the blow-up of P^2 in three points."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .hexagon import LABELS

Vector = tuple[int, int, int, int]


@dataclass(frozen=True)
class PicardLattice:
    """Basis (l, e1, e2, e3) with form diag(1, -1, -1, -1)."""

    form: tuple[int, int, int, int] = (1, -1, -1, -1)
    canonical: Vector = (-3, 1, 1, 1)

    def pair(self, a: Vector, b: Vector) -> int:
        return sum(w * x * y for w, x, y in zip(self.form, a, b))

    def anticanonical_degree(self, c: Vector) -> int:
        return -self.pair(self.canonical, c)

    def exceptional_classes(self, bound: int = 3) -> list[Vector]:
        """Classes with C^2 = -1 and -K.C = 1 inside the box |entries| <= bound."""
        r = range(-bound, bound + 1)
        return [c for c in itertools.product(r, repeat=4)
                if self.pair(c, c) == -1 and self.anticanonical_degree(c) == 1]


# lattice class of each labelled curve
CURVE_CLASSES: dict[str, Vector] = {
    "E1": (0, 1, 0, 0), "E2": (0, 0, 1, 0), "E3": (0, 0, 0, 1),
    "F12": (1, -1, -1, 0), "F13": (1, -1, 0, -1), "F23": (1, 0, -1, -1),
}


def picard_check(bound: int = 3, incidence=None) -> dict:
    """Verify (K, K) = 6 and that the bounded search finds exactly the six
    curve classes, with intersection numbers matching ``incidence`` (the
    geometric hexagon, if given)."""
    lat = PicardLattice()
    kk = lat.pair(lat.canonical, lat.canonical)
    found = lat.exceptional_classes(bound)
    expected = sorted(CURVE_CLASSES.values())
    classes = [CURVE_CLASSES[lab] for lab in LABELS]
    gram = [[lat.pair(a, b) for b in classes] for a in classes]
    off_diag = [[gram[i][j] if i != j else 0 for j in range(6)] for i in range(6)]
    match = incidence is None or [list(r) for r in incidence] == off_diag
    return {
        "KK": kk,
        "classes": [list(c) for c in sorted(found)],
        "count": len(found),
        "classes_match": sorted(found) == expected,
        "intersections": gram,
        "incidence_match": match,
        "ok": kk == 6 and sorted(found) == expected and len(found) == 6 and match,
    }
