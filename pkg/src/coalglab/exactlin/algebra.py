"""Finite-dimensional associative algebras given by structure constants.

The Jacobson radical uses the trace-form kernel of a faithful matrix
representation in characteristic 0, and the Cohen-Ivanyos-Wales refinement
(integer lifts, traces of ``p^i``-th powers modulo ``p^(i+1)``) over GF(p).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from ..errors import CoalgLabError
from .field import Field
from .matrix import Matrix, kernel_rows, matmul_rows, reduce_against, rref_rows


def _trace_rows(A) -> object:
    return sum(A[i][i] for i in range(len(A)))


def _lifted_power_trace(A: Sequence[Sequence[int]], p: int, i: int) -> int:
    """``(Tr(A~^(p^i)) mod p^(i+1)) / p^i`` for the integer lift ``A~`` of ``A``."""
    mod = p ** (i + 1)
    n = len(A)
    R = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    B = [[x % mod for x in row] for row in A]
    e = p ** i
    while e:
        if e & 1:
            R = [[sum(a * b for a, b in zip(row, col)) % mod for col in zip(*B)] for row in R]
        B = [[sum(a * b for a, b in zip(row, col)) % mod for col in zip(*B)] for row in B]
        e >>= 1
    t = sum(R[k][k] for k in range(n)) % mod
    if t % (p ** i):
        raise CoalgLabError("radical computation: trace not divisible as expected")
    return (t // p ** i) % p


def radical_of_matrix_algebra(mats: Sequence[Matrix], fld: Field) -> list[list]:
    """Coefficient rows (RREF) spanning the Jacobson radical of ``span(mats)``.

    ``mats`` must be a basis of a subalgebra of a full matrix algebra (the
    representation is faithful by construction).
    """
    r = len(mats)
    if r == 0:
        return []
    p = fld.characteristic
    raw = [m.rows for m in mats]
    gram = [[_trace_rows(matmul_rows(raw[a], raw[b], p)) for b in range(r)] for a in range(r)]
    if p:
        gram = [[x % p for x in row] for row in gram]
    # a in I_0 iff sum_a c_a Tr(E_a E_b) = 0 for every b
    cur = kernel_rows([list(col) for col in zip(*gram)], r, p)
    if not p or not cur:
        return cur
    n = mats[0].nrows
    level = 0
    while p ** (level + 1) <= n:
        level += 1
        elems = []
        for c in cur:
            X = [[0] * n for _ in range(n)]
            for coef, E in zip(c, raw):
                if coef:
                    X = [[(x + coef * e) % p for x, e in zip(xr, er)] for xr, er in zip(X, E)]
            elems.append(X)
        vals = [[_lifted_power_trace(matmul_rows(X, raw[b], p), p, level) for b in range(r)]
                for X in elems]
        # combinations d of the current basis with sum_r d_r g(X_r E_b) = 0
        dsol = kernel_rows([list(col) for col in zip(*vals)], len(cur), p)
        if not dsol:
            return []
        new = []
        for d in dsol:
            v = [0] * r
            for coef, c in zip(d, cur):
                if coef:
                    v = [(x + coef * y) % p for x, y in zip(v, c)]
            new.append(v)
        cur, _ = rref_rows(new, r, p)
    return cur


def span_is_nilpotent(mats: Sequence[Matrix], fld: Field) -> bool:
    """True when the algebra generated (without 1) by ``mats`` is nilpotent."""
    if not mats:
        return True
    p = fld.characteristic
    n = mats[0].nrows
    gens = [m.rows for m in mats]
    level = [m.flatten() for m in mats]
    level, _ = rref_rows(level, n * n, p)
    for _ in range(n):
        if not level:
            return True
        prods = []
        for v in level:
            X = [v[i * n:(i + 1) * n] for i in range(n)]
            for g in gens:
                prods.append([x for row in matmul_rows(X, g, p) for x in row])
        level, _ = rref_rows(prods, n * n, p)
    return not level


@dataclass
class StructureAlgebra:
    """Associative unital algebra with basis ``e_0..e_{d-1}``.

    ``table[a][b]`` is the coordinate vector of ``e_a e_b``.
    """

    field: Field
    dim: int
    table: list
    unit: list
    _regular: list = dc_field(default=None, repr=False)

    @classmethod
    def from_matrices(cls, fld: Field, basis: Sequence[Matrix]) -> "StructureAlgebra":
        """Structure constants of the matrix algebra spanned by ``basis`` (closed under product)."""
        p = fld.characteristic
        d = len(basis)
        if d == 0:
            return cls(fld, 0, [], [])
        n = basis[0].nrows
        flat = [b.flatten() for b in basis]
        width = n * n
        aug = [f + [fld.one if i == j else fld.zero for j in range(d)] for i, f in enumerate(flat)]
        R, piv = rref_rows(aug, width + d, p)
        if len([c for c in piv if c < width]) != d:
            raise CoalgLabError("matrix basis is linearly dependent")

        def coords(vec):
            out = [fld.zero] * d
            for row, c in zip(R, piv):
                x = vec[c]
                if x:
                    tail = row[width:]
                    out = [fld.add(o, fld.mul(x, t)) for o, t in zip(out, tail)]
            return out

        table = [[coords((basis[a] @ basis[b]).flatten()) for b in range(d)] for a in range(d)]
        unit = coords(Matrix.identity(fld, n).flatten())
        return cls(fld, d, table, unit)

    def mul(self, u: Sequence, v: Sequence) -> list:
        f = self.field
        p = f.characteristic
        out = [f.zero] * self.dim
        for a, x in enumerate(u):
            if not x:
                continue
            row = self.table[a]
            for b, y in enumerate(v):
                if not y:
                    continue
                xy = x * y
                vec = row[b]
                if p:
                    out = [(o + xy * t) % p for o, t in zip(out, vec)]
                else:
                    out = [o + xy * t for o, t in zip(out, vec)]
        return out

    def power(self, u: Sequence, k: int) -> list:
        result = list(self.unit)
        base = list(u)
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def basis_vector(self, a: int) -> list:
        f = self.field
        return [f.one if i == a else f.zero for i in range(self.dim)]

    def left_regular(self) -> list[Matrix]:
        """Matrices of left multiplication by each basis element (rows = images, row-vector form)."""
        if self._regular is None:
            f = self.field
            mats = []
            for a in range(self.dim):
                # x |-> e_a x ; row b of the matrix = coordinates of e_a e_b
                mats.append(Matrix.raw(f, [self.table[a][b] for b in range(self.dim)], self.dim).T)
            self._regular = mats
        return self._regular

    def radical(self) -> list[list]:
        """Jacobson radical as RREF coefficient rows."""
        if self.dim == 0:
            return []
        return radical_of_matrix_algebra(self.left_regular(), self.field)

    def is_commutative(self) -> bool:
        return all(self.table[a][b] == self.table[b][a]
                   for a in range(self.dim) for b in range(a + 1, self.dim))

    def quotient(self, ideal_rows: Sequence[Sequence]) -> tuple["StructureAlgebra", list[int]]:
        """Quotient by a two-sided ideal given as RREF rows.

        Returns the quotient and the kept coordinates: a class is represented
        by the residual of a vector modulo the ideal, read off at those coordinates.
        """
        f = self.field
        p = f.characteristic
        piv = [next(i for i, x in enumerate(r) if x) for r in ideal_rows]
        keep = [k for k in range(self.dim) if k not in set(piv)]

        def proj(vec):
            res = reduce_against(vec, ideal_rows, piv, p)
            return [res[k] for k in keep]

        table = [[proj(self.table[a][b]) for b in keep] for a in keep]
        return StructureAlgebra(f, len(keep), table, proj(self.unit)), keep

    def center(self) -> list[list]:
        """RREF coordinate rows spanning the center."""
        f = self.field
        p = f.characteristic
        eqs = []
        for b in range(self.dim):
            # z e_b - e_b z, linear in z
            cols = [[f.sub(self.table[a][b][k], self.table[b][a][k]) for k in range(self.dim)]
                    for a in range(self.dim)]
            eqs.extend([list(r) for r in zip(*cols)])
        return kernel_rows(eqs, self.dim, p)

    def frobenius_fixed(self, sub_rows: Sequence[Sequence]) -> list[list]:
        """Fixed points of ``z -> z^p`` inside a commutative subalgebra (GF(p) only)."""
        f = self.field
        p = f.characteristic
        if not p:
            raise CoalgLabError("Frobenius needs positive characteristic")
        sub, piv = rref_rows(sub_rows, self.dim, p)
        k = len(sub)
        images = [self.power(z, p) for z in sub]
        coords = []
        for img in images:
            c = [img[c] for c in piv]
            coords.append(c)
        # d with sum_r d_r (F(z_r) - z_r) = 0; F(z_r) in coordinates of sub is coords[r]
        mat = [[f.sub(coords[r][s], f.one if r == s else f.zero) for r in range(k)] for s in range(k)]
        sol = kernel_rows(mat, k, p)
        out = []
        for d in sol:
            v = [f.zero] * self.dim
            for coef, z in zip(d, sub):
                if coef:
                    v = [(x + coef * y) % p for x, y in zip(v, z)]
            out.append(v)
        return rref_rows(out, self.dim, p)[0] if out else []
