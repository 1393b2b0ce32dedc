"""The factor-swapping descent datum for a quadratic triangle field."""
from __future__ import annotations

from dataclasses import dataclass

from .. import linalg
from ..errors import NotQuadratic
from ..projlin import ProjMap, ProjPoint
from .hexagon import triangle_kernel
from .surface import Dp6Surface, forms_span


@dataclass(frozen=True)
class SemilinearSwap:
    """``(p, q) -> (sigma(left q), sigma(right p))``; the honest datum has
    ``left = right = 1``."""

    sigma: int
    left: ProjMap
    right: ProjMap

    def __call__(self, p: ProjPoint, q: ProjPoint) -> tuple[ProjPoint, ProjPoint]:
        return self.left(q).galois(self.sigma), self.right(p).galois(self.sigma)

    def pulled_forms(self, S: Dp6Surface):
        """Forms whose zero set is the preimage of S under this map."""
        s_inv = S.field.inverse(self.sigma)
        out = []
        for G in S.forms:
            Gs = [[x.galois(s_inv) for x in r] for r in G]
            out.append(linalg.mat_mul(linalg.transpose(self.right.rows),
                                      linalg.mat_mul(linalg.transpose(Gs), self.left.rows)))
        return out

    def to_json(self) -> dict:
        return {"sigma": self.sigma, "left": self.left.to_json(), "right": self.right.to_json()}


def switch_descent_map(S: Dp6Surface, sigma: int | None = None) -> SemilinearSwap:
    kernel = triangle_kernel(S)
    if len(kernel) == S.field.order:
        raise NotQuadratic("the triangle field is split; there is no swap to descend along")
    sigma = S.sigma0 if sigma is None else sigma
    if sigma in kernel:
        raise NotQuadratic(f"automorphism {sigma} does not generate Gal(L/k)")
    I = ProjMap.identity(S.field)
    return SemilinearSwap(sigma, I, I)


def corrupted_descent_map(S: Dp6Surface, matrix: ProjMap, sigma: int | None = None) -> SemilinearSwap:
    """Negative control: the swap with ``matrix`` inserted on one side."""
    f = switch_descent_map(S, sigma)
    return SemilinearSwap(f.sigma, matrix, f.right)


def descent_report(S: Dp6Surface, f: SemilinearSwap, samples: int = 50, seed: int = 0) -> dict:
    F = S.field
    s, s2 = f.sigma, F.compose(f.sigma, f.sigma)
    ideal_ok = forms_span([tuple(map(tuple, G)) for G in f.pulled_forms(S)]) == S.ideal_basis()
    # f(f(p, q)) = (sigma(left) sigma^2(right) sigma^2 p, ...), so both
    # composite matrices must be scalar
    comp_left = f.left.galois(s) @ f.right.galois(s2)
    comp_right = f.right.galois(s) @ f.left.galois(s2)
    composite_ok = comp_left.is_scalar() and comp_right.is_scalar()
    bad = 0
    for p, q in S.sample_points(samples, seed):
        p1, q1 = f(p, q)
        if not S.contains(p1, q1) or f(p1, q1) != (p.galois(s2), q.galois(s2)):
            bad += 1
    return {"ideal": ideal_ok, "composite": composite_ok, "points_checked": samples,
            "points_failed": bad, "ok": ideal_ok and composite_ok and bad == 0}


def descent_verify(S: Dp6Surface, f: SemilinearSwap, samples: int = 50, seed: int = 0) -> bool:
    return descent_report(S, f, samples, seed)["ok"]
