"""Dense exact linear algebra over any field whose elements support ``+ - * /``
and truthiness (nonzero is truthy).  Used with both ``Fraction`` and
:class:`dp6.numfield.FieldElem`.
"""
from __future__ import annotations

from typing import Sequence

Matrix = list  # list of rows


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    n, m, p = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = a[i][0] * b[0][j]
            for k in range(1, m):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def mat_vec(a: Sequence[Sequence], v: Sequence) -> list:
    out = []
    for row in a:
        acc = row[0] * v[0]
        for k in range(1, len(v)):
            acc = acc + row[k] * v[k]
        out.append(acc)
    return out


def transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*a)]


def det3(a: Sequence[Sequence]):
    return (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))


def rref(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[0])


def mat_inv(a: Sequence[Sequence]) -> list[list] | None:
    """Inverse by Gauss-Jordan, or None when singular."""
    n = len(a)
    one = _one_like(a)
    zero = one - one
    aug = [list(a[i]) + [one if i == j else zero for j in range(n)] for i in range(n)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)) or len(red) < n:
        return None
    return [row[n:] for row in red]


def solve(a: Sequence[Sequence], b: Sequence) -> list | None:
    """Unique solution of a x = b for square invertible a, else None."""
    inv = mat_inv(a)
    if inv is None:
        return None
    return mat_vec(inv, b)


def kernel(rows: Sequence[Sequence], ncols: int, one) -> list[list]:
    """Basis of the right null space, one vector per free column."""
    red, piv = rref(rows)
    zero = one - one
    basis = []
    for f in (c for c in range(ncols) if c not in piv):
        v = [zero] * ncols
        v[f] = one
        for r, pc in enumerate(piv):
            v[pc] = -red[r][f]
        basis.append(v)
    return basis


def _one_like(a):
    for row in a:
        for x in row:
            if x:
                return x / x
    raise ValueError("cannot infer the unit element of an all-zero matrix")
