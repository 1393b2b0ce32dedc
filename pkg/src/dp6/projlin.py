"""Points of P^2 and elements of PGL_3 over a :class:`~dp6.numfield.GaloisField`.

Both types keep the representative they were built from, so that products of
matrices carry honest GL_3 lifts around; equality and hashing go through the
canonical form (first nonzero entry scaled to 1).
"""
from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from . import linalg
from .errors import DegenerateFrame, DuplicateAlpha, Indeterminate, NotMonomial
from .numfield import FieldElem, GaloisField


def _normalize(vals: Sequence[FieldElem]) -> tuple[FieldElem, ...]:
    for v in vals:
        if v:
            inv = v.inverse()
            return tuple(x * inv for x in vals)
    raise ValueError("all entries are zero")


class ProjPoint:
    """A point of P^2(M); also used for lines, via their coefficient covector."""

    __slots__ = ("coords", "_canon")

    def __init__(self, coords: Sequence[FieldElem]):
        if len(coords) != 3:
            raise ValueError("a point of P^2 has three coordinates")
        self.coords = tuple(coords)
        if not any(self.coords):
            raise ValueError("(0:0:0) is not a projective point")
        self._canon = None

    @classmethod
    def of(cls, F: GaloisField, *coords) -> ProjPoint:
        return cls([F.elem(c) if isinstance(c, (list, tuple)) else F.coerce(c) for c in coords])

    @property
    def field(self) -> GaloisField:
        return self.coords[0].field

    @property
    def canonical(self) -> tuple[FieldElem, ...]:
        if self._canon is None:
            self._canon = _normalize(self.coords)
        return self._canon

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def galois(self, sigma: int) -> ProjPoint:
        return ProjPoint([c.galois(sigma) for c in self.coords])

    def dot(self, other: ProjPoint) -> FieldElem:
        a, b = self.coords, other.coords
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]

    def to_json(self) -> list[list[str]]:
        return [c.to_json() for c in self.canonical]

    def __repr__(self):
        return "(" + " : ".join(str(c) for c in self.canonical) + ")"


class ProjMap:
    """An element of PGL_3(M) with a stored GL_3 representative."""

    __slots__ = ("rows", "_canon")

    def __init__(self, rows: Sequence[Sequence[FieldElem]], check: bool = True):
        self.rows = tuple(tuple(r) for r in rows)
        if len(self.rows) != 3 or any(len(r) != 3 for r in self.rows):
            raise ValueError("expected a 3x3 matrix")
        if check and not linalg.det3(self.rows):
            raise ValueError("matrix is singular")
        self._canon = None

    @classmethod
    def identity(cls, F: GaloisField) -> ProjMap:
        return cls.diag(F, 1, 1, 1)

    @classmethod
    def diag(cls, F: GaloisField, a, b, c) -> ProjMap:
        z = F.zero
        a, b, c = (F.coerce(x) for x in (a, b, c))
        return cls([[a, z, z], [z, b, z], [z, z, c]])

    @classmethod
    def permutation(cls, F: GaloisField, perm: Sequence[int]) -> ProjMap:
        """Matrix sending the basis vector e_i to e_{perm[i]}."""
        rows = [[F.zero] * 3 for _ in range(3)]
        for i, j in enumerate(perm):
            rows[j][i] = F.one
        return cls(rows)

    @classmethod
    def from_entries(cls, F: GaloisField, entries) -> ProjMap:
        return cls([[F.elem(x) if isinstance(x, (list, tuple)) else F.coerce(x) for x in row]
                    for row in entries])

    @property
    def field(self) -> GaloisField:
        return self.rows[0][0].field

    @property
    def canonical(self) -> tuple[FieldElem, ...]:
        if self._canon is None:
            self._canon = _normalize([x for r in self.rows for x in r])
        return self._canon

    def canonical_rows(self) -> tuple[tuple[FieldElem, ...], ...]:
        c = self.canonical
        return (c[0:3], c[3:6], c[6:9])

    def __eq__(self, other):
        return isinstance(other, ProjMap) and self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __matmul__(self, other):
        if isinstance(other, ProjMap):
            return ProjMap(linalg.mat_mul(self.rows, other.rows), check=False)
        return NotImplemented

    def __call__(self, p: ProjPoint) -> ProjPoint:
        return ProjPoint(linalg.mat_vec(self.rows, p.coords))

    def inverse(self) -> ProjMap:
        inv = linalg.mat_inv(self.rows)
        return ProjMap(inv, check=False)

    def transpose(self) -> ProjMap:
        return ProjMap(linalg.transpose(self.rows), check=False)

    def galois(self, sigma: int) -> ProjMap:
        return ProjMap([[x.galois(sigma) for x in r] for r in self.rows], check=False)

    def det(self) -> FieldElem:
        return linalg.det3(self.rows)

    def pull_line(self, line: ProjPoint) -> ProjPoint:
        """Covector of the preimage of ``line`` under this map."""
        return ProjPoint(linalg.mat_vec(linalg.transpose(self.rows), line.coords))

    def is_monomial(self) -> bool:
        nz = [[bool(x) for x in r] for r in self.rows]
        return all(sum(r) == 1 for r in nz) and all(sum(c) == 1 for c in zip(*nz))

    def is_diagonal(self) -> bool:
        return all(not self.rows[i][j] for i in range(3) for j in range(3) if i != j)

    def is_scalar(self) -> bool:
        return self == ProjMap.identity(self.field)

    def to_json(self) -> list[list[list[str]]]:
        return [[x.to_json() for x in r] for r in self.canonical_rows()]

    def __repr__(self):
        rows = self.canonical_rows()
        return "[" + "; ".join(", ".join(str(x) for x in r) for r in rows) + "]"


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    return not linalg.det3([p.coords, q.coords, r.coords])


def in_general_position(points: Sequence[ProjPoint]) -> bool:
    return all(not collinear(*triple) for triple in itertools.combinations(points, 3))


def frame_map(p1: ProjPoint, p2: ProjPoint, p3: ProjPoint, p4: ProjPoint) -> ProjMap:
    """The unique projectivity taking p1, p2, p3, p4 to (1:0:0), (0:1:0),
    (0:0:1), (1:1:1)."""
    cols = linalg.transpose([p1.coords, p2.coords, p3.coords])
    lam = linalg.solve(cols, list(p4.coords))
    if lam is None or not all(lam):
        raise DegenerateFrame("three of the four points are collinear")
    scaled = [[cols[i][j] * lam[j] for j in range(3)] for i in range(3)]
    return ProjMap(scaled).inverse()


def map_from_points(src: Sequence[ProjPoint], dst: Sequence[ProjPoint]) -> ProjMap:
    """Projectivity sending four points in general position to four others."""
    return frame_map(*dst).inverse() @ frame_map(*src)


def cremona(p: ProjPoint) -> ProjPoint:
    x, y, z = p.coords
    out = (y * z, x * z, x * y)
    if not any(out):
        raise Indeterminate(f"{p} is a base point of the Cremona map")
    return ProjPoint(out)


def monomial_decompose(A: ProjMap) -> tuple[ProjMap, ProjMap]:
    """Split a monomial matrix as ``A = A_D @ A_P``; returns (A_D, A_P)."""
    if not A.is_monomial():
        raise NotMonomial(f"{A} is not monomial")
    F = A.field
    perm = [None] * 3
    diag = [None] * 3
    for i, row in enumerate(A.rows):
        j = next(k for k in range(3) if row[k])
        diag[i] = row[j]
        perm[j] = i  # column j carries e_j to e_i
    return ProjMap.diag(F, *diag), ProjMap.permutation(F, perm)


def transpose_inverse(A: ProjMap) -> ProjMap:
    return A.inverse().transpose()


def cremona_conjugate(A: ProjMap) -> ProjMap:
    """``b A b^-1`` for A in the monomial group, computed as ``A_D^-1 A_P``."""
    d, p = monomial_decompose(A)
    F = A.field
    inv_d = ProjMap.diag(F, *(d.rows[i][i].inverse() for i in range(3)))
    return inv_d @ p


def vandermonde_points(a1: FieldElem, a2: FieldElem, a3: FieldElem) -> tuple[ProjPoint, ProjPoint, ProjPoint]:
    if a1 == a2 or a1 == a3 or a2 == a3:
        raise DuplicateAlpha("the three parameters must be distinct")
    one = a1.field.one
    return tuple(ProjPoint((one, a, a * a)) for a in (a1, a2, a3))  # type: ignore[return-value]


def rational_points(F: GaloisField, bound: int = 12) -> Iterator[ProjPoint]:
    """Deterministic sweep of rational points: (1:1:1), (1:2:3), (1:3:2), then
    (1:a:b) by increasing max(|a|, |b|)."""
    seen = set()
    firsts = [(1, 1, 1), (1, 2, 3), (1, 3, 2)]
    rest = sorted(((1, a, b) for a in range(-bound, bound + 1) for b in range(-bound, bound + 1)),
                  key=lambda v: (max(abs(v[1]), abs(v[2])), abs(v[1]) + abs(v[2]), v[1] < 0, abs(v[1]), v[2] < 0, abs(v[2])))
    for v in itertools.chain(firsts, rest):
        if v in seen:
            continue
        seen.add(v)
        yield ProjPoint.of(F, *v)


def general_position_point(points: Sequence[ProjPoint], candidates: Iterable[ProjPoint] | None = None) -> ProjPoint:
    """First point of the sweep such that ``points`` plus it has no three collinear."""
    if not points:
        raise ValueError("need reference points")
    F = points[0].field
    for cand in (candidates if candidates is not None else rational_points(F)):
        if in_general_position(list(points) + [cand]):
            return cand
    raise DegenerateFrame("no point in general position found by the sweep")
