"""Exponent-3 groups with an involution, as a model of (Br L)[3].

Elements are vectors over Z/3; the involution models the action of the
generator of Gal(L/k).  Nothing here computes an actual Brauer group: the
model is supplied by the caller.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

Vec = tuple[int, ...]
Mat = tuple[tuple[int, ...], ...]


def _mod3(v: Sequence[int]) -> Vec:
    return tuple(x % 3 for x in v)


def mat_vec3(A: Mat, v: Sequence[int]) -> Vec:
    return tuple(sum(a * x for a, x in zip(row, v)) % 3 for row in A)


def mat_mul3(A: Mat, B: Mat) -> Mat:
    cols = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(r, c)) % 3 for c in cols) for r in A)


def identity3(n: int) -> Mat:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def rref3(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    m = [list(_mod3(r)) for r in rows]
    pivots: list[int] = []
    ncols = len(m[0]) if m else 0
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = m[r][c]  # 1 and 2 are their own inverses mod 3
        m[r] = [(x * inv) % 3 for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % 3 for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank3(rows: Sequence[Sequence[int]]) -> int:
    return len(rref3(rows)[0]) if rows else 0


def kernel3(A: Mat) -> list[Vec]:
    n = len(A[0]) if A else 0
    red, piv = rref3(A)
    basis = []
    for f in (c for c in range(n) if c not in piv):
        v = [0] * n
        v[f] = 1
        for r, pc in enumerate(piv):
            v[pc] = (-red[r][f]) % 3
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class Brauer3Group:
    """(Z/3)^n with an involution ``sigma``."""

    rank: int
    involution: Mat

    def __post_init__(self):
        sig = tuple(tuple(x % 3 for x in r) for r in self.involution)
        if len(sig) != self.rank or any(len(r) != self.rank for r in sig):
            raise ValueError(f"involution must be {self.rank}x{self.rank}")
        if mat_mul3(sig, sig) != identity3(self.rank):
            raise ValueError("sigma^2 is not the identity")
        object.__setattr__(self, "involution", sig)

    def sigma(self, x: Sequence[int]) -> Vec:
        return mat_vec3(self.involution, x)

    def add(self, x: Sequence[int], y: Sequence[int]) -> Vec:
        return tuple((a + b) % 3 for a, b in zip(x, y))

    def scale(self, k: int, x: Sequence[int]) -> Vec:
        return tuple((k * a) % 3 for a in x)

    def elements(self) -> Iterator[Vec]:
        return itertools.product(range(3), repeat=self.rank)

    def zero(self) -> Vec:
        return (0,) * self.rank


def decompose3(x: Sequence[int], G: Brauer3Group) -> tuple[Vec, Vec]:
    """``x = 2(x + sigma x) + 2(x - sigma x)``, split into the +1 and -1 parts."""
    x = _mod3(x)
    sx = G.sigma(x)
    plus = G.scale(2, G.add(x, sx))
    minus = G.scale(2, G.add(x, G.scale(-1, sx)))
    return plus, minus


def fixed_subgroup(G: Brauer3Group) -> list[Vec]:
    n = G.rank
    return kernel3(tuple(tuple((G.involution[i][j] - (i == j)) % 3 for j in range(n)) for i in range(n)))


def w_subgroup(G: Brauer3Group) -> list[Vec]:
    """Basis of W = {y : sigma y = -y}."""
    n = G.rank
    return kernel3(tuple(tuple((G.involution[i][j] + (i == j)) % 3 for j in range(n)) for i in range(n)))


def direct_sum_report(G: Brauer3Group) -> dict:
    fix, w = fixed_subgroup(G), w_subgroup(G)
    rf, rw = len(fix), len(w)
    total = rank3(fix + w) if fix or w else 0
    return {"fixed_rank": rf, "w_rank": rw, "sum_rank": total,
            "ok": total == rf + rw == G.rank}


# --- cyclic algebra data ---

@dataclass(frozen=True)
class CyclicAlgebraDatum:
    """The cyclic algebra (E/k, s, a): E a cyclic cubic field given by its
    minimal polynomial, ``s`` the chosen generator of Gal(E/k), a in k^*."""

    minpoly: tuple[int, ...]
    generator: int
    a: Fraction

    def __post_init__(self):
        if len(self.minpoly) != 4 or self.minpoly[-1] != 1:
            raise ValueError("the extension must be given by a monic cubic")
        object.__setattr__(self, "minpoly", tuple(int(c) for c in self.minpoly))
        object.__setattr__(self, "a", Fraction(self.a))
        if self.a == 0:
            raise ValueError("a must be nonzero")

    def to_json(self) -> dict:
        return {"minpoly": list(self.minpoly), "generator": self.generator, "a": str(self.a)}


def opposite(c: CyclicAlgebraDatum) -> CyclicAlgebraDatum:
    """Class inverse, realised as a -> 1/a."""
    return CyclicAlgebraDatum(c.minpoly, c.generator, 1 / c.a)


def split_pair(c: CyclicAlgebraDatum) -> tuple[CyclicAlgebraDatum, CyclicAlgebraDatum]:
    """The object over k x k: X on one factor and X^op on the other."""
    return c, opposite(c)


def swap_pair(pair: tuple[CyclicAlgebraDatum, CyclicAlgebraDatum]) -> tuple[CyclicAlgebraDatum, CyclicAlgebraDatum]:
    """The conjugation of k x k, exchanging the factors."""
    return pair[1], pair[0]


def op_pair(pair: tuple[CyclicAlgebraDatum, CyclicAlgebraDatum]) -> tuple[CyclicAlgebraDatum, CyclicAlgebraDatum]:
    return opposite(pair[0]), opposite(pair[1])


def documented_involutions(n: int) -> dict[str, Mat]:
    """The involutions exercised by the self-test on (Z/3)^n."""
    I = identity3(n)
    out: dict[str, Mat] = {"identity": I, "negation": tuple(tuple((-x) % 3 for x in r) for r in I)}
    if n >= 2:
        sw = [list(r) for r in I]
        sw[0], sw[1] = sw[1], sw[0]
        out["swap01"] = tuple(map(tuple, sw))
        ss = [list(r) for r in I]
        ss[0], ss[1] = [0, 2] + [0] * (n - 2), [2, 0] + [0] * (n - 2)
        out["signed_swap01"] = tuple(map(tuple, ss))
        # P diag(1, -1, 1, ...) P^-1 with P = I + E_01
        P = [list(r) for r in I]
        P[0][1] = 1
        Pinv = [list(r) for r in I]
        Pinv[0][1] = 2
        D = [list(r) for r in I]
        D[1][1] = 2
        out["conjugated"] = mat_mul3(mat_mul3(tuple(map(tuple, P)), tuple(map(tuple, D))), tuple(map(tuple, Pinv)))
    if n >= 4:
        dbl = [[0] * n for _ in range(n)]
        dbl[0][1] = dbl[1][0] = dbl[2][3] = dbl[3][2] = 1
        for k in range(4, n):
            dbl[k][k] = 1
        out["double_swap"] = tuple(map(tuple, dbl))
    return out
