"""Exact arithmetic in number fields ``Q[t]/(f)`` given with their full
automorphism group.

A :class:`GaloisField` is the ambient field of a scenario.  Its automorphisms
are referred to by their index in the list supplied at construction; the
composition table is computed once and checked.  Subfields are never built
as separate objects, only described through subgroups of automorphisms.

Irreducibility of the modulus is trusted: inversion runs an extended gcd and
raises :class:`~dp6.errors.ZeroDivisor` when the modulus turns out to split.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (HomomorphismFailure, NoPrimitiveElement, NotAGroup,
                     NotInvertible, ZeroDivisor)

MAX_DEGREE = 12


def to_fraction(v) -> Fraction:
    """Read an exact rational from an int, a Fraction or a ``"p/q"`` string."""
    if isinstance(v, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v.strip())
    raise TypeError(f"cannot read {v!r} as an exact rational")


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# --- univariate polynomials over Q, coefficient lists with constant first ---

def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b):
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for i, bc in enumerate(b):
            a[i + shift] -= c * bc
        _trim(a)
    return _trim(q), a


def _psub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pxgcd(a, b):
    """Return (g, s) with s*a = g mod b."""
    r0, r1 = _trim(list(a)), _trim(list(b))
    s0, s1 = [Fraction(1)], []
    while r1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1))
    return r0, s0


class GaloisField:
    """The field ``Q[t]/(modulus)`` with an explicit list of automorphisms.

    Parameters
    ----------
    modulus : sequence
        Integer coefficients, constant term first; must be monic.
    automorphisms : sequence of sequences
        Coefficient arrays of the image of ``t`` under each automorphism.
        The list must contain the identity and be closed under composition.
    """

    def __init__(self, modulus: Sequence, automorphisms: Sequence[Sequence], name: str | None = None):
        mod = _trim([to_fraction(c) for c in modulus])
        if len(mod) < 2:
            raise ValueError("modulus must have degree at least 1")
        if mod[-1] != 1:
            raise ValueError("modulus must be monic")
        if any(c.denominator != 1 for c in mod):
            raise ValueError("modulus must have integer coefficients")
        n = len(mod) - 1
        if n > MAX_DEGREE:
            raise ValueError(f"degree {n} exceeds the supported maximum {MAX_DEGREE}")
        self.modulus: tuple[int, ...] = tuple(int(c) for c in mod)
        self.degree = n
        self.name = name
        self._mod = mod
        # t^k reduced, for n <= k <= 2n-2
        self._high: list[list[Fraction]] = []
        cur = [Fraction(0)] * (n - 1) + [Fraction(1)]  # t^(n-1)
        for _ in range(n - 1):
            carry = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            if carry:
                cur = [c - carry * m for c, m in zip(cur, mod[:-1])]
            self._high.append(cur)
        self.zero = FieldElem(self, (Fraction(0),) * n)
        self.one = self.from_rational(1)

        if len(automorphisms) != n:
            raise NotAGroup(f"expected {n} automorphisms, got {len(automorphisms)}")
        self.images: tuple[FieldElem, ...] = tuple(self.elem(img) for img in automorphisms)
        for k, g in enumerate(self.images):
            if self.eval_poly(self._mod, g):
                raise HomomorphismFailure(f"automorphism {k}: modulus does not vanish at image {g}")
        if len(set(self.images)) != n:
            raise NotAGroup("automorphism list contains repeated images")
        self._powers = [self._power_table(g) for g in self.images]
        t = self.gen
        ids = [k for k, g in enumerate(self.images) if g == t]
        if not ids:
            raise NotAGroup("the identity is missing from the automorphism list")
        self.identity: int = ids[0]
        index = {g: k for k, g in enumerate(self.images)}
        table = []
        for i in range(n):
            row = []
            for j in range(n):
                img = self.apply(i, self.images[j])  # image of t under s_i o s_j
                if img not in index:
                    raise NotAGroup(f"composition of automorphisms {i} and {j} is not in the list")
                row.append(index[img])
            table.append(row)
        self._mul = tuple(tuple(r) for r in table)
        inv = []
        for i in range(n):
            js = [j for j in range(n) if table[i][j] == self.identity]
            if len(js) != 1 or table[js[0]][i] != self.identity:
                raise NotAGroup(f"automorphism {i} has no two-sided inverse")
            inv.append(js[0])
        self._inv = tuple(inv)
        for a, b, c in itertools.product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise NotAGroup("composition is not associative")

    # --- construction helpers ---

    def elem(self, coeffs: Iterable) -> FieldElem:
        """Element from a coefficient array of any length, reduced mod the modulus."""
        c = _trim([to_fraction(x) for x in coeffs])
        if len(c) > self.degree:
            _, c = _pdivmod(c, self._mod)
        c = c + [Fraction(0)] * (self.degree - len(c))
        return FieldElem(self, tuple(c))

    def from_rational(self, q) -> FieldElem:
        return FieldElem(self, (to_fraction(q),) + (Fraction(0),) * (self.degree - 1))

    def coerce(self, x) -> FieldElem:
        if isinstance(x, FieldElem):
            if x.field is not self and x.field != self:
                raise ValueError("elements belong to different fields")
            return x
        return self.from_rational(x)

    @property
    def gen(self) -> FieldElem:
        return self.elem([0, 1])

    def eval_poly(self, coeffs: Sequence, x: FieldElem) -> FieldElem:
        acc = self.zero
        for c in reversed(coeffs):
            acc = acc * x + self.coerce(c)
        return acc

    # --- group structure ---

    @property
    def order(self) -> int:
        return self.degree

    @property
    def group(self) -> tuple[int, ...]:
        return tuple(range(self.degree))

    def compose(self, i: int, j: int) -> int:
        """Index of the automorphism ``s_i o s_j``."""
        return self._mul[i][j]

    def inverse(self, i: int) -> int:
        return self._inv[i]

    def is_subgroup(self, h: Iterable[int]) -> bool:
        hs = set(h)
        return (self.identity in hs and all(self._mul[a][b] in hs for a in hs for b in hs))

    def element_order(self, i: int) -> int:
        k, cur = 1, i
        while cur != self.identity:
            cur = self._mul[i][cur]
            k += 1
        return k

    def _power_table(self, g: FieldElem) -> list[tuple[Fraction, ...]]:
        out, cur = [], self.one
        for _ in range(self.degree):
            out.append(cur.c)
            cur = cur * g
        return out

    def apply(self, sigma: int, x: FieldElem) -> FieldElem:
        table = self._powers[sigma]
        acc = [Fraction(0)] * self.degree
        for k, ck in enumerate(x.c):
            if ck:
                for i, v in enumerate(table[k]):
                    if v:
                        acc[i] += ck * v
        return FieldElem(self, tuple(acc))

    # --- identity of fields ---

    def _key(self):
        return (self.modulus, tuple(g.c for g in self.images))

    def __eq__(self, other):
        return isinstance(other, GaloisField) and (other is self or other._key() == self._key())

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        label = self.name or "t"
        return f"GaloisField({label}: {poly_str(self.modulus)}, |G|={self.degree})"


class FieldElem:
    """Element of a :class:`GaloisField`, stored as a reduced coefficient tuple."""

    __slots__ = ("field", "c")

    def __init__(self, field: GaloisField, coeffs: tuple[Fraction, ...]):
        self.field = field
        self.c = coeffs

    def _other(self, o) -> FieldElem | None:
        if isinstance(o, FieldElem):
            return self.field.coerce(o)
        if isinstance(o, (int, Fraction)) and not isinstance(o, bool):
            return self.field.from_rational(o)
        return None

    def __add__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return FieldElem(self.field, tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.field, tuple(-a for a in self.c))

    def __sub__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return FieldElem(self.field, tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)) and not isinstance(o, bool):
            return FieldElem(self.field, tuple(a * o for a in self.c))
        o = self._other(o)
        if o is None:
            return NotImplemented
        n = self.field.degree
        prod = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        prod[i + j] += a * b
        low = prod[:n]
        for k in range(n, 2 * n - 1):
            if prod[k]:
                low = [x + prod[k] * y for x, y in zip(low, self.field._high[k - n])]
        return FieldElem(self.field, tuple(low))

    __rmul__ = __mul__

    def inverse(self) -> FieldElem:
        if not self:
            raise ZeroDivisionError("inverse of zero")
        g, s = _pxgcd(list(self.c), list(self.field._mod))
        if len(g) != 1:
            raise ZeroDivisor(f"{self} shares the factor {poly_str(g)} with the modulus")
        return self.field.elem([x / g[0] for x in s])

    def __truediv__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = self.field.one, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return any(self.c)

    def __eq__(self, o):
        if isinstance(o, FieldElem):
            return self.c == o.c and (o.field is self.field or o.field == self.field)
        if isinstance(o, (int, Fraction)) and not isinstance(o, bool):
            return self.is_rational() and self.c[0] == o
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.c[0]

    def galois(self, sigma: int) -> FieldElem:
        return self.field.apply(sigma, self)

    def to_json(self) -> list[str]:
        return [format_fraction(q) for q in self.c]

    def __str__(self):
        return poly_str(self.c)

    def __repr__(self):
        return f"FieldElem({self})"


def poly_str(coeffs: Sequence, var: str = "t") -> str:
    terms = []
    for k, c in enumerate(coeffs):
        c = Fraction(c)
        if not c:
            continue
        mag = abs(c)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            body = format_fraction(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_fraction(mag)}*{mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# --- public operations ---

def field_make(modulus: Sequence, automorphism_images: Sequence[Sequence], name: str | None = None) -> GaloisField:
    return GaloisField(modulus, automorphism_images, name=name)


def field_inv(x: FieldElem, F: GaloisField | None = None) -> FieldElem:
    if F is not None:
        x = F.coerce(x)
    return x.inverse()


def apply_auto(sigma: int, x: FieldElem) -> FieldElem:
    return x.field.apply(sigma, x)


def rationals() -> GaloisField:
    """Q presented as ``Q[t]/(t)``."""
    return GaloisField([0, 1], [[0, 1]], name="Q")


def small_int_vectors(length: int, max_norm: int | None = None) -> Iterator[tuple[int, ...]]:
    """Nonzero integer vectors ordered by L1 norm, then by a fixed recursive
    order (0, 1, -1, 2, -2, ... in each slot).  Deterministic and infinite
    unless ``max_norm`` is given."""
    norms = itertools.count(1) if max_norm is None else range(1, max_norm + 1)
    for k in norms:
        yield from _vectors_of_norm(length, k)


def _vectors_of_norm(length: int, k: int):
    if length == 1:
        if k == 0:
            yield (0,)
        else:
            yield (k,)
            yield (-k,)
        return
    for m in range(0, k + 1):
        for v in ((m,) if m == 0 else (m, -m)):
            for rest in _vectors_of_norm(length - 1, k - m):
                yield (v,) + rest


def minimal_polynomial(x: FieldElem, subgroup: Iterable[int] | None = None) -> tuple[FieldElem, ...]:
    """Monic minimal polynomial of ``x`` over the fixed field of ``subgroup``
    (the whole group by default), coefficients constant first."""
    F = x.field
    hs = F.group if subgroup is None else tuple(subgroup)
    conj: list[FieldElem] = []
    for h in hs:
        y = F.apply(h, x)
        if y not in conj:
            conj.append(y)
    poly = [F.one]
    for r in conj:
        # multiply by (X - r)
        shifted = [F.zero] + poly
        scaled = [-r * c for c in poly] + [F.zero]
        poly = [a + b for a, b in zip(shifted, scaled)]
    return tuple(poly)


def rational_coefficients(poly: Sequence[FieldElem]) -> tuple[Fraction, ...] | None:
    if all(c.is_rational() for c in poly):
        return tuple(c.rational() for c in poly)
    return None


def _squarefree_part(n: int) -> tuple[int, int]:
    """Write ``n = d * r^2`` with d squarefree; returns (d, r)."""
    sign = -1 if n < 0 else 1
    n = abs(n)
    d, r = 1, 1
    p = 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            r *= p
        if n % p == 0:
            n //= p
            d *= p
        p += 1
    return sign * d * n, r


@dataclass(frozen=True)
class Etale2:
    """A degree-2 etale algebra over the base field.

    ``kind`` is ``"split"`` (k x k, kept symbolic) or ``"quadratic"``; in the
    quadratic case ``generator`` is an element of the ambient field with
    ``generator**2 == d`` for the squarefree integer ``d``, and ``minpoly`` is
    ``(-d, 0, 1)``.
    """

    kind: str
    subgroup: tuple[int, ...]
    generator: FieldElem | None = None
    minpoly: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("split", "quadratic"):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == "quadratic" and (self.minpoly is None or len(self.minpoly) != 3):
            raise ValueError("a quadratic algebra needs a degree-2 minimal polynomial")

    @property
    def is_split(self) -> bool:
        return self.kind == "split"

    def same_as(self, other: Etale2) -> bool:
        return self.kind == other.kind and self.minpoly == other.minpoly

    def describe(self) -> str:
        if self.is_split:
            return "k x k"
        return f"k[t]/({poly_str(self.minpoly)})"

    def to_json(self) -> dict:
        if self.is_split:
            return {"kind": "split"}
        return {"kind": "quadratic", "minpoly": list(self.minpoly), "generator": self.generator.to_json()}


def fixed_subfield(F: GaloisField, H: Iterable[int], max_candidates: int = 500) -> Etale2:
    """Fixed algebra of a subgroup of index 1 or 2.

    For index 2 an element fixed by ``H`` but not by the whole group is found
    among orbit sums of a deterministic sweep of small-integer elements; it is
    then shifted and rescaled to a square root of a squarefree integer.
    """
    hs = tuple(sorted(set(H)))
    if not F.is_subgroup(hs):
        raise ValueError(f"{hs} is not a subgroup")
    index = F.order // len(hs)
    if index == 1:
        return Etale2("split", hs)
    if index != 2:
        raise ValueError(f"subgroup has index {index}; only 1 or 2 is allowed")
    others = [g for g in F.group if g not in hs]
    for count, vec in enumerate(small_int_vectors(F.degree)):
        if count >= max_candidates:
            break
        c = F.elem(vec)
        y = F.zero
        for h in hs:
            y = y + F.apply(h, c)
        y2 = F.apply(others[0], y)
        if y2 == y:
            continue
        s, p = y + y2, y * y2
        if not (s.is_rational() and p.is_rational()):
            raise NoPrimitiveElement("orbit sum has non-rational symmetric functions; subgroup data inconsistent")
        disc = s.rational() ** 2 - 4 * p.rational()
        num = disc.numerator * disc.denominator
        d, r = _squarefree_part(num)
        w = (2 * y - s) * Fraction(disc.denominator, r)
        if w * w != d:
            raise NoPrimitiveElement("normalisation of the quadratic generator failed")
        if any((F.apply(g, w) == w) != (g in hs) for g in F.group):
            raise NoPrimitiveElement("generator is not fixed by exactly the subgroup")
        return Etale2("quadratic", hs, generator=w, minpoly=(-d, 0, 1))
    raise NoPrimitiveElement(f"no element of degree 2 found among {max_candidates} orbit sums")


def galois_set_alphas(F: GaloisField, group: Sequence[int], perms: Mapping[int, Sequence[int]],
                      max_candidates: int = 500) -> tuple[FieldElem, FieldElem, FieldElem]:
    """Three distinct elements permuted by ``group`` exactly as ``perms``
    prescribes: ``g(alpha_i) == alpha_{perms[g][i]}``.

    Each orbit gets ``alpha_i = sum of h(c)`` over the ``h`` carrying the orbit
    representative to ``i``, plus a rational offset per orbit.
    """
    orbits: list[list[int]] = []
    seen: set[int] = set()
    for i in range(3):
        if i in seen:
            continue
        orb = sorted({perms[g][i] for g in group})
        orbits.append(orb)
        seen.update(orb)
    for count, vec in enumerate(small_int_vectors(F.degree)):
        if count >= max_candidates:
            break
        c = F.elem(vec)
        alphas: list[FieldElem | None] = [None] * 3
        for k, orb in enumerate(orbits):
            rep = orb[0]
            for i in orb:
                acc = F.from_rational(k)
                for h in group:
                    if perms[h][rep] == i:
                        acc = acc + F.apply(h, c)
                alphas[i] = acc
        if len(set(alphas)) == 3:
            ok = all(F.apply(g, alphas[i]) == alphas[perms[g][i]] for g in group for i in range(3))
            if not ok:
                raise ValueError("permutation data is not a group action")
            return tuple(alphas)  # type: ignore[return-value]
    raise NoPrimitiveElement("no separating elements found for the Galois set")


# --- the split etale algebra M x M x M ---

@dataclass(frozen=True)
class EtaleModuleElem:
    comps: tuple[FieldElem, FieldElem, FieldElem]

    def __mul__(self, other: EtaleModuleElem) -> EtaleModuleElem:
        return EtaleModuleElem(tuple(a * b for a, b in zip(self.comps, other.comps)))

    def is_unit(self) -> bool:
        return all(self.comps)

    def inverse(self) -> EtaleModuleElem:
        if not self.is_unit():
            raise NotInvertible(f"{self} has a zero component")
        return EtaleModuleElem(tuple(c.inverse() for c in self.comps))

    def __getitem__(self, i):
        return self.comps[i]

    def __iter__(self):
        return iter(self.comps)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.comps) + ")"


class EtaleAction:
    """Galois action on ``M x M x M`` induced by a permutation of three points.

    ``perms[g][i] = j`` records ``g(R_i) = R_j``; then
    ``(g . e)_j = g(e_{perm^-1(j)})``.
    """

    def __init__(self, field: GaloisField, perms: Mapping[int, Sequence[int]]):
        self.field = field
        self.perms = {g: tuple(p) for g, p in perms.items()}
        group = tuple(self.perms)
        if not field.is_subgroup(group):
            raise ValueError("action must be given on a subgroup")
        for g, p in self.perms.items():
            if sorted(p) != [0, 1, 2]:
                raise ValueError(f"{p} is not a permutation of three points")
        for g in group:
            for h in group:
                gh = field.compose(g, h)
                if tuple(self.perms[g][self.perms[h][i]] for i in range(3)) != self.perms[gh]:
                    raise ValueError("index permutations are not a homomorphism")

    @property
    def group(self) -> tuple[int, ...]:
        return tuple(self.perms)

    def one(self) -> EtaleModuleElem:
        o = self.field.one
        return EtaleModuleElem((o, o, o))

    def elem(self, *comps) -> EtaleModuleElem:
        return EtaleModuleElem(tuple(self.field.coerce(c) for c in comps))

    def act(self, g: int, e: EtaleModuleElem) -> EtaleModuleElem:
        p = self.perms[g]
        out: list[FieldElem | None] = [None] * 3
        for i in range(3):
            out[p[i]] = self.field.apply(g, e.comps[i])
        return EtaleModuleElem(tuple(out))  # type: ignore[arg-type]


def etale_mult(a: EtaleModuleElem, b: EtaleModuleElem) -> EtaleModuleElem:
    return a * b


def etale_inv(a: EtaleModuleElem) -> EtaleModuleElem:
    return a.inverse()


def etale_galois(action: EtaleAction, g: int, e: EtaleModuleElem) -> EtaleModuleElem:
    return action.act(g, e)
