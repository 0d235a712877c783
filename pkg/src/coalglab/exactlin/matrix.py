"""Dense exact matrices and the row-reduction kernels everything else uses.

The module has two layers.  The ``*_rows`` helpers work on plain lists of
rows and a characteristic ``p`` (``0`` for Q); they are what the inner loops
of the rest of the package call.  :class:`Matrix` is the immutable value type
on top of them.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import InputError
from .field import Field

_ONE = Fraction(1)


def rref_rows(rows: Iterable[Sequence], ncols: int, p: int):
    """Reduced row echelon form of ``rows``.

    Returns ``(nonzero_rows, pivots)``; zero rows are dropped.
    """
    A = [list(r) for r in rows]
    nr = len(A)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nr:
            break
        piv = -1
        for i in range(r, nr):
            if A[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
        row = A[r]
        lead = row[c]
        if p:
            if lead != 1:
                inv = pow(lead, -1, p)
                row = [(x * inv) % p for x in row]
            for i in range(nr):
                if i != r:
                    Ai = A[i]
                    f = Ai[c]
                    if f:
                        A[i] = [(x - f * y) % p for x, y in zip(Ai, row)]
        else:
            if lead != 1:
                inv = _ONE / lead
                row = [x * inv for x in row]
            for i in range(nr):
                if i != r:
                    Ai = A[i]
                    f = Ai[c]
                    if f:
                        A[i] = [x - f * y for x, y in zip(Ai, row)]
        A[r] = row
        pivots.append(c)
        r += 1
    return A[:r], pivots


def kernel_rows(rows: Sequence[Sequence], ncols: int, p: int):
    """Basis (as rows, RREF) of the right null space ``{v : rows . v = 0}``."""
    R, pivots = rref_rows(rows, ncols, p)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    zero = 0 if p else Fraction(0)
    one = 1 if p else _ONE
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for i, c in enumerate(pivots):
            x = R[i][f]
            if x:
                v[c] = (-x) % p if p else -x
        basis.append(v)
    if not basis:
        return []
    out, _ = rref_rows(basis, ncols, p)
    return out


def reduce_against(vec: Sequence, basis: Sequence[Sequence], pivots: Sequence[int], p: int):
    """Residual of ``vec`` modulo the span of an RREF ``basis``."""
    v = list(vec)
    for row, c in zip(basis, pivots):
        f = v[c]
        if f:
            if p:
                v = [(x - f * y) % p for x, y in zip(v, row)]
            else:
                v = [x - f * y for x, y in zip(v, row)]
    return v


def matmul_rows(A: Sequence[Sequence], B: Sequence[Sequence], p: int):
    if not A:
        return []
    if not B:
        return [[] for _ in A]
    cols = list(zip(*B))
    if p:
        return [[sum(a * b for a, b in zip(row, col)) % p for col in cols] for row in A]
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in A]


def vecmat(v: Sequence, B: Sequence[Sequence], p: int):
    """Row vector times matrix."""
    if not B:
        return []
    n = len(B[0])
    out = [0] * n if p else [Fraction(0)] * n
    for x, row in zip(v, B):
        if x:
            if p:
                out = [(o + x * b) % p for o, b in zip(out, row)]
            else:
                out = [o + x * b for o, b in zip(out, row)]
    return out


def is_zero_rows(A) -> bool:
    return not any(any(r) for r in A)


def kron_rows(A: Sequence[Sequence], B: Sequence[Sequence], p: int):
    """Kronecker product; index (i, k) of A (x) B is ``i * len(B) + k``."""
    out = []
    for arow in A:
        for brow in B:
            if p:
                out.append([(a * b) % p for a in arow for b in brow])
            else:
                out.append([a * b for a in arow for b in brow])
    return out


class Matrix:
    """Immutable dense matrix over an exact :class:`Field`."""

    __slots__ = ("field", "nrows", "ncols", "rows", "_hash")

    def __init__(self, field: Field, rows: Iterable[Iterable], ncols: int | None = None):
        conv = [tuple(field(x) for x in r) for r in rows]
        if ncols is None:
            if not conv:
                raise InputError("cannot infer the column count of an empty matrix")
            ncols = len(conv[0])
        if any(len(r) != ncols for r in conv):
            raise InputError("ragged matrix rows")
        self._set(field, tuple(conv), ncols)

    def _set(self, field, rows, ncols):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def raw(cls, field: Field, rows, ncols: int) -> "Matrix":
        """Wrap already-reduced scalars without coercion."""
        m = cls.__new__(cls)
        m._set(field, tuple(tuple(r) for r in rows), ncols)
        return m

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero
        return cls.raw(field, [[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls.raw(field, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    @classmethod
    def diag(cls, field: Field, entries: Sequence) -> "Matrix":
        n = len(entries)
        z = field.zero
        return cls.raw(field, [[field(entries[i]) if i == j else z for j in range(n)] for i in range(n)], n)

    @classmethod
    def block_diag(cls, field: Field, blocks: Sequence["Matrix"]) -> "Matrix":
        n = sum(b.nrows for b in blocks)
        m = sum(b.ncols for b in blocks)
        out = [[field.zero] * m for _ in range(n)]
        r = c = 0
        for b in blocks:
            for i, row in enumerate(b.rows):
                out[r + i][c:c + b.ncols] = row
            r += b.nrows
            c += b.ncols
        return cls.raw(field, out, m)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def p(self) -> int:
        return self.field.characteristic

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.field == other.field and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.field.name, self.ncols, self.rows)))
        return self._hash

    def __repr__(self) -> str:
        fmt = self.field.format
        body = "; ".join(" ".join(fmt(x) for x in r) for r in self.rows)
        return f"Matrix<{self.field.name} {self.nrows}x{self.ncols}>[{body}]"

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    def _check_same(self, other: "Matrix"):
        if self.field != other.field:
            raise InputError("matrices over different fields")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        if self.shape != other.shape:
            raise InputError("shape mismatch in addition")
        p = self.p
        if p:
            rows = [[(a + b) % p for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        else:
            rows = [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        return Matrix.raw(self.field, rows, self.ncols)

    def __neg__(self) -> "Matrix":
        return self.scale(self.field(-1))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        p = self.p
        c = self.field(c)
        if p:
            rows = [[(c * a) % p for a in r] for r in self.rows]
        else:
            rows = [[c * a for a in r] for r in self.rows]
        return Matrix.raw(self.field, rows, self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        if self.ncols != other.nrows:
            raise InputError(f"shape mismatch {self.shape} @ {other.shape}")
        if other.ncols == 0 or self.nrows == 0:
            return Matrix.zeros(self.field, self.nrows, other.ncols)
        return Matrix.raw(self.field, matmul_rows(self.rows, other.rows, self.p), other.ncols)

    def __pow__(self, k: int) -> "Matrix":
        if self.nrows != self.ncols:
            raise InputError("power of a non-square matrix")
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    @property
    def T(self) -> "Matrix":
        if self.nrows == 0:
            return Matrix.zeros(self.field, self.ncols, 0)
        return Matrix.raw(self.field, [list(c) for c in zip(*self.rows)], self.nrows)

    def is_zero(self) -> bool:
        return is_zero_rows(self.rows)

    def rref(self):
        """Return ``(R, pivots, rank)`` with ``R`` of the original shape."""
        R, piv = rref_rows(self.rows, self.ncols, self.p)
        z = self.field.zero
        full = R + [[z] * self.ncols for _ in range(self.nrows - len(R))]
        return Matrix.raw(self.field, full, self.ncols), piv, len(piv)

    def rank(self) -> int:
        return len(rref_rows(self.rows, self.ncols, self.p)[1])

    def kernel(self) -> "Matrix":
        """Rows spanning the right null space, in RREF."""
        return Matrix.raw(self.field, kernel_rows(self.rows, self.ncols, self.p), self.ncols)

    def row_space(self) -> "Matrix":
        R, _ = rref_rows(self.rows, self.ncols, self.p)
        return Matrix.raw(self.field, R, self.ncols)

    def inverse(self) -> "Matrix":
        n = self.nrows
        if n != self.ncols:
            raise InputError("inverse of a non-square matrix")
        ident = Matrix.identity(self.field, n).rows
        aug = [list(r) + list(e) for r, e in zip(self.rows, ident)]
        R, piv = rref_rows(aug, 2 * n, self.p)
        if piv[:n] != list(range(n)) or len(R) < n:
            raise ZeroDivisionError("matrix is singular")
        return Matrix.raw(self.field, [r[n:] for r in R], n)

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def det(self):
        n = self.nrows
        if n != self.ncols:
            raise InputError("determinant of a non-square matrix")
        f = self.field
        A = [list(r) for r in self.rows]
        d = f.one
        for c in range(n):
            piv = next((i for i in range(c, n) if A[i][c]), None)
            if piv is None:
                return f.zero
            if piv != c:
                A[c], A[piv] = A[piv], A[c]
                d = f.neg(d)
            d = f.mul(d, A[c][c])
            inv = f.inv(A[c][c])
            for i in range(c + 1, n):
                x = A[i][c]
                if x:
                    fac = f.mul(x, inv)
                    A[i] = [f.sub(a, f.mul(fac, b)) for a, b in zip(A[i], A[c])]
        return d

    def solve(self, rhs: "Matrix") -> "Matrix | None":
        """One ``X`` with ``self @ X = rhs`` (free variables set to zero), or None."""
        self._check_same(rhs)
        n = self.ncols
        k = rhs.ncols
        aug = [list(r) + list(s) for r, s in zip(self.rows, rhs.rows)]
        R, piv = rref_rows(aug, n + k, self.p)
        if any(c >= n for c in piv):
            return None
        z = self.field.zero
        X = [[z] * k for _ in range(n)]
        for row, c in zip(R, piv):
            X[c] = row[n:]
        return Matrix.raw(self.field, X, k)

    def kron(self, other: "Matrix") -> "Matrix":
        return kronecker(self, other)

    def hstack(self, other: "Matrix") -> "Matrix":
        return Matrix.raw(self.field, [list(a) + list(b) for a, b in zip(self.rows, other.rows)],
                          self.ncols + other.ncols)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise InputError("column mismatch in vstack")
        return Matrix.raw(self.field, list(self.rows) + list(other.rows), self.ncols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix.raw(self.field, [[self.rows[i][j] for j in cols] for i in rows], len(cols))

    def trace(self):
        f = self.field
        t = f.zero
        for i in range(min(self.nrows, self.ncols)):
            t = f.add(t, self.rows[i][i])
        return t

    def flatten(self) -> list:
        return [x for r in self.rows for x in r]


def rref(m: Matrix):
    """``(RREF, pivot columns, rank)`` of ``m``."""
    return m.rref()


def kernel_basis(m: Matrix) -> Matrix:
    """Rows spanning ``{v : m v = 0}``, in RREF; ``cols - rank`` rows."""
    return m.kernel()


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product with left-major pairing: entry ``(i*rb + k, j*cb + l) = a[i,j] b[k,l]``."""
    a._check_same(b)
    rows = kron_rows(a.rows, b.rows, a.p)
    return Matrix.raw(a.field, rows, a.ncols * b.ncols)
