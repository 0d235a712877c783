"""Univariate polynomials over an exact field, minimal polynomials and factoring.

Factoring follows the field menu: squarefree decomposition everywhere, then
Berlekamp over GF(p); over Q rational roots are split off and a leftover of
degree <= 3 is irreducible.  A rootless leftover of degree >= 4 over Q raises
:class:`UndecidedError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as igcd
from typing import Sequence

from ..errors import InputError, UndecidedError
from .field import Field
from .matrix import Matrix, kernel_rows


def _trim(coeffs: Sequence) -> tuple:
    c = list(coeffs)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Poly:
    field: Field
    coeffs: tuple  # low degree first, no trailing zeros

    @classmethod
    def make(cls, field: Field, coeffs: Sequence) -> "Poly":
        return cls(field, _trim(field(c) for c in coeffs))

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls(field, (field.zero, field.one))

    @classmethod
    def const(cls, field: Field, c) -> "Poly":
        return cls.make(field, [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self):
        return self.coeffs[-1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        f = self.field
        inv = f.inv(self.lead)
        return Poly(f, tuple(f.mul(c, inv) for c in self.coeffs))

    def _coerce(self, other) -> "Poly":
        return other if isinstance(other, Poly) else Poly.const(self.field, other)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (f.zero,) * (n - len(self.coeffs))
        b = other.coeffs + (f.zero,) * (n - len(other.coeffs))
        return Poly(f, _trim(f.add(x, y) for x, y in zip(a, b)))

    def __neg__(self) -> "Poly":
        f = self.field
        return Poly(f, tuple(f.neg(c) for c in self.coeffs))

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        f = self.field
        if self.is_zero() or other.is_zero():
            return Poly(f, ())
        out = [f.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Poly(f, _trim(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        result = Poly.const(self.field, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        f = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        q = [f.zero] * max(len(r) - len(other.coeffs) + 1, 0)
        inv = f.inv(other.lead)
        d = other.degree
        while len(r) - 1 >= d and r:
            c = f.mul(r[-1], inv)
            k = len(r) - 1 - d
            q[k] = c
            for i, b in enumerate(other.coeffs):
                r[k + i] = f.sub(r[k + i], f.mul(c, b))
            r = list(_trim(r))
        return Poly(f, _trim(q)), Poly(f, _trim(r))

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def derivative(self) -> "Poly":
        f = self.field
        return Poly(f, _trim(f.mul(f(i), c) for i, c in enumerate(self.coeffs) if i > 0))

    def __call__(self, x):
        f = self.field
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def eval_matrix(self, m: Matrix) -> Matrix:
        n = m.nrows
        acc = Matrix.zeros(m.field, n, n)
        ident = Matrix.identity(m.field, n)
        for c in reversed(self.coeffs):
            acc = acc @ m + ident.scale(c)
        return acc

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        fmt = self.field.format
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = fmt(c)
            if i == 0:
                terms.append(cs)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if cs == "1" else f"{cs}*{mono}")
        return " + ".join(terms)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def minimal_polynomial(m: Matrix) -> Poly:
    """Monic minimal polynomial via the Krylov sequence ``I, m, m^2, ...``."""
    if m.nrows != m.ncols:
        raise InputError("minimal polynomial of a non-square matrix")
    f = m.field
    n = m.nrows
    basis = []  # (vector, pivot, combination over powers)
    power = Matrix.identity(f, n)
    for k in range(n + 1):
        v = power.flatten()
        combo = [f.zero] * (n + 1)
        combo[k] = f.one
        for b, piv, comb in basis:
            c = v[piv]
            if c:
                v = [f.sub(x, f.mul(c, y)) for x, y in zip(v, b)]
                combo = [f.sub(x, f.mul(c, y)) for x, y in zip(combo, comb)]
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return Poly(f, _trim(combo))
        inv = f.inv(v[piv])
        basis.append(([f.mul(x, inv) for x in v], piv, [f.mul(x, inv) for x in combo]))
        power = power @ m
    raise AssertionError("Cayley-Hamilton violated")  # pragma: no cover


def squarefree_decomposition(poly: Poly) -> list[tuple[Poly, int]]:
    """Monic squarefree, pairwise coprime ``(g, k)`` with ``poly = lead * prod g^k``."""
    f = poly.field
    p = f.characteristic
    poly = poly.monic()
    if poly.degree <= 0:
        return []
    out: dict[int, Poly] = {}

    def add(g: Poly, k: int):
        if g.degree > 0:
            out[k] = out[k] * g if k in out else g

    def rec(h: Poly, mult: int):
        d = h.derivative()
        if d.is_zero():
            # h is a p-th power (char p only)
            root = Poly(f, tuple(h.coeffs[i] for i in range(0, len(h.coeffs), p)))
            rec(root, mult * p)
            return
        c = poly_gcd(h, d)
        w = h // c
        i = 1
        while w.degree > 0:
            y = poly_gcd(w, c)
            add((w // y).monic(), i * mult)
            i += 1
            w = y
            c = c // y
        if c.degree > 0:
            if p == 0:  # pragma: no cover - impossible in characteristic 0
                raise AssertionError("Yun loop left a cofactor over Q")
            root = Poly(f, tuple(c.coeffs[i] for i in range(0, len(c.coeffs), p)))
            rec(root.monic(), mult * p)

    rec(poly, 1)
    return sorted(((g, k) for k, g in out.items()), key=lambda t: t[1])


def _berlekamp(g: Poly) -> list[Poly]:
    """Irreducible factors of a monic squarefree polynomial over GF(p)."""
    f = g.field
    p = f.characteristic
    n = g.degree
    if n <= 1:
        return [g]
    xp = Poly.x(f) ** p % g
    rows = []
    cur = Poly.const(f, 1)
    for i in range(n):
        rows.append(list(cur.coeffs) + [f.zero] * (n - len(cur.coeffs)))
        cur = cur * xp % g
    # v with v (Q - I) = 0  <=>  (Q - I)^T v = 0
    qmi = [[f.sub(rows[j][i], f.one if i == j else f.zero) for j in range(n)] for i in range(n)]
    null = kernel_rows(qmi, n, p)
    k = len(null)
    factors = [g]
    if k == 1:
        return factors
    for v in null:
        vp = Poly(f, _trim(v))
        if vp.degree <= 0:
            continue
        new = []
        for u in factors:
            if u.degree <= 1:
                new.append(u)
                continue
            rest = u
            for s in range(p):
                if rest.degree <= 1:
                    break
                h = poly_gcd(rest, vp - Poly.const(f, s))
                if 0 < h.degree < rest.degree:
                    new.append(h)
                    rest = rest // h
            new.append(rest.monic())
        factors = new
        if len(factors) == k:
            break
    return factors


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rational_factors(g: Poly) -> list[Poly]:
    """Irreducible factors over Q of a monic squarefree polynomial."""
    f = g.field
    factors = []
    rest = g
    if rest.coeffs and rest.coeffs[0] == 0:
        factors.append(Poly.x(f))
        rest = rest // Poly.x(f)
    while rest.degree >= 2:
        den = 1
        for c in rest.coeffs:
            den = den * Fraction(c).denominator // igcd(den, Fraction(c).denominator)
        ints = [int(Fraction(c) * den) for c in rest.coeffs]
        found = None
        for a in _divisors(ints[0]):
            for b in _divisors(ints[-1]):
                for r in (Fraction(a, b), Fraction(-a, b)):
                    if rest(r) == 0:
                        found = r
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        lin = Poly.make(f, [-found, 1])
        factors.append(lin)
        rest = rest // lin
    if rest.degree >= 4:
        raise UndecidedError(f"cannot certify irreducibility of {rest} over Q")
    if rest.degree >= 1:
        factors.append(rest.monic())
    return factors


def factor(poly: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factors with multiplicities, sorted canonically."""
    f = poly.field
    out = []
    for g, k in squarefree_decomposition(poly):
        parts = _berlekamp(g) if f.characteristic else _rational_factors(g)
        out.extend((h.monic(), k) for h in parts)
    return sorted(out, key=lambda t: (t[0].degree, [f.format(c) for c in t[0].coeffs], t[1]))


def minpoly_factors(m: Matrix) -> list[tuple[Poly, int]]:
    """Minimal polynomial of ``m`` factored into monic irreducibles."""
    return factor(minimal_polynomial(m))
