"""Finite-dimensional coalgebras by structure constants.

Conventions used throughout the package:

* ``delta[i]`` lists triples ``(j, k, c)`` with ``Delta(b_i) = sum c b_j (x) b_k``.
* Tensor coordinates are left-major: ``b_j (x) b_k`` sits at index ``j * n + k``.
* Paths compose left to right.  An arrow ``alpha: a -> b`` has
  ``Delta(alpha) = a (x) alpha + alpha (x) b``.
* The dual ``C*`` is identified with ``K^n`` through the dual basis, with
  convolution ``(f * g)(c) = sum f(c_1) g(c_2)`` and unit ``counit``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .budget import Budget, default_budget
from .errors import InputError, NotPointedError, UndecidedError
from .exactlin.algebra import StructureAlgebra
from .exactlin.field import Field, QQ
from .exactlin.matrix import Matrix, kernel_rows, reduce_against, rref_rows
from .exactlin.poly import factor, minimal_polynomial


# ---------------------------------------------------------------- subspaces


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``K^n`` held as RREF rows, so equality is syntactic."""

    field: Field
    n: int
    rows: tuple
    pivots: tuple

    @classmethod
    def span(cls, field: Field, n: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [[field(x) for x in v] for v in vectors]
        for v in vecs:
            if len(v) != n:
                raise InputError(f"vector of length {len(v)} in a space of dimension {n}")
        R, piv = rref_rows(vecs, n, field.characteristic) if vecs else ([], [])
        return cls(field, n, tuple(tuple(r) for r in R), tuple(piv))

    @classmethod
    def _from_rref(cls, field, n, R, piv) -> "Subspace":
        return cls(field, n, tuple(tuple(r) for r in R), tuple(piv))

    @classmethod
    def zero(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, (), ())

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        return cls.span(field, n, _identity_rows(field, n))

    @classmethod
    def coordinate(cls, field: Field, n: int, indices: Iterable[int]) -> "Subspace":
        ident = _identity_rows(field, n)
        return cls.span(field, n, [ident[i] for i in indices])

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def p(self) -> int:
        return self.field.characteristic

    def matrix(self) -> Matrix:
        return Matrix.raw(self.field, [list(r) for r in self.rows], self.n)

    def residual(self, vec: Sequence) -> list:
        return reduce_against(vec, self.rows, self.pivots, self.p)

    def contains_vector(self, vec: Sequence) -> bool:
        return not any(self.residual(vec))

    def coords(self, vec: Sequence) -> list:
        """Coordinates of ``vec`` in the RREF basis (``vec`` must lie in the subspace)."""
        if not self.contains_vector(vec):
            raise InputError("vector is not in the subspace")
        return [vec[c] for c in self.pivots]

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains_vector(r) for r in self.rows)

    def __add__(self, other: "Subspace") -> "Subspace":
        R, piv = rref_rows(list(self.rows) + list(other.rows), self.n, self.p)
        return Subspace._from_rref(self.field, self.n, R, piv)

    def __and__(self, other: "Subspace") -> "Subspace":
        eqs = kernel_rows(list(self.rows), self.n, self.p) if self.rows else _identity_rows(self.field, self.n)
        eqs2 = kernel_rows(list(other.rows), self.n, self.p) if other.rows else _identity_rows(self.field, self.n)
        K = kernel_rows(list(eqs) + list(eqs2), self.n, self.p)
        return Subspace._from_rref(self.field, self.n, K, _pivots(K))

    def complement_indices(self) -> list[int]:
        piv = set(self.pivots)
        return [c for c in range(self.n) if c not in piv]

    def __repr__(self) -> str:
        fmt = self.field.format
        body = ", ".join("(" + " ".join(fmt(x) for x in r) + ")" for r in self.rows)
        return f"Subspace(dim={self.dim} in {self.n}: {body})"


def _identity_rows(field: Field, n: int) -> list[list]:
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def _pivots(R) -> list[int]:
    return [next(i for i, x in enumerate(r) if x) for r in R]


def _axpy(acc: list, c, vec: Sequence, p: int) -> None:
    if p:
        for i, x in enumerate(vec):
            if x:
                acc[i] = (acc[i] + c * x) % p
    else:
        for i, x in enumerate(vec):
            if x:
                acc[i] += c * x


# ---------------------------------------------------------------- coalgebras


class Coalgebra:
    """Coalgebra ``(C, Delta, counit)`` over a labelled basis."""

    def __init__(self, field: Field, labels: Sequence[str], delta: Sequence[Iterable], counit: Sequence):
        labels = tuple(str(x) for x in labels)
        n = len(labels)
        if len(set(labels)) != n:
            raise InputError("basis labels must be distinct")
        if len(delta) != n or len(counit) != n:
            raise InputError("delta and counit must have one entry per basis element")
        cleaned = []
        for i, terms in enumerate(delta):
            acc: dict[tuple[int, int], object] = {}
            for j, k, c in terms:
                if not (0 <= j < n and 0 <= k < n):
                    raise InputError(f"delta of basis {i} refers to index outside 0..{n - 1}")
                c = field(c)
                acc[(j, k)] = field.add(acc.get((j, k), field.zero), c)
            cleaned.append(tuple(sorted((j, k, c) for (j, k), c in acc.items() if c)))
        self.field = field
        self.labels = labels
        self.delta = tuple(cleaned)
        self.counit = tuple(field(c) for c in counit)
        self._index = {lab: i for i, lab in enumerate(labels)}
        self._cache: dict = {}

    # -- basics
    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def p(self) -> int:
        return self.field.characteristic

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InputError(f"unknown basis label {label!r}") from None

    def basis_vector(self, label_or_index) -> list:
        i = label_or_index if isinstance(label_or_index, int) else self.index(label_or_index)
        f = self.field
        return [f.one if k == i else f.zero for k in range(self.dim)]

    def span(self, vectors: Iterable[Sequence]) -> Subspace:
        return Subspace.span(self.field, self.dim, vectors)

    def span_labels(self, *labels: str) -> Subspace:
        return Subspace.coordinate(self.field, self.dim, [self.index(x) for x in labels])

    def full(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Coalgebra) and self.field == other.field and self.labels == other.labels
                and self.delta == other.delta and self.counit == other.counit)

    def __hash__(self) -> int:
        return hash((self.field, self.labels, self.delta, self.counit))

    def __repr__(self) -> str:
        return f"Coalgebra(dim={self.dim}, field={self.field.name}, basis={list(self.labels)})"

    # -- Delta as linear map
    def apply_delta(self, vec: Sequence) -> list:
        """``Delta(vec)`` in left-major tensor coordinates."""
        f = self.field
        p = self.p
        n = self.dim
        out = [f.zero] * (n * n)
        for i, x in enumerate(vec):
            if not x:
                continue
            for j, k, c in self.delta[i]:
                idx = j * n + k
                out[idx] = (out[idx] + x * c) % p if p else out[idx] + x * c
        return out

    def counit_of(self, vec: Sequence):
        f = self.field
        acc = f.zero
        for x, e in zip(vec, self.counit):
            if x and e:
                acc = f.add(acc, f.mul(x, e))
        return acc

    def mu(self) -> list[list[list]]:
        """``mu[j][k]`` = coordinate vector over ``i`` of the coefficient of ``b_j (x) b_k`` in ``Delta(b_i)``.

        This is the multiplication table of the dual algebra.
        """
        if "mu" not in self._cache:
            f = self.field
            n = self.dim
            tab = [[[f.zero] * n for _ in range(n)] for _ in range(n)]
            for i, terms in enumerate(self.delta):
                for j, k, c in terms:
                    tab[j][k][i] = c
            self._cache["mu"] = tab
        return self._cache["mu"]

    # -- dual algebra
    def convolve(self, a: Sequence, b: Sequence) -> list:
        """Convolution ``a * b`` of two functionals in dual-basis coordinates."""
        f = self.field
        p = self.p
        out = []
        for terms in self.delta:
            acc = f.zero
            for j, k, c in terms:
                x = a[j]
                if x:
                    y = b[k]
                    if y:
                        acc = (acc + c * x * y) % p if p else acc + c * x * y
            out.append(acc)
        return out

    def dual_algebra(self) -> StructureAlgebra:
        if "dual" not in self._cache:
            n = self.dim
            self._cache["dual"] = StructureAlgebra(self.field, n, self.mu(), list(self.counit))
        return self._cache["dual"]

    def left_action(self, functional: Sequence, vec: Sequence) -> list:
        """``f -> c = sum c_1 f(c_2)`` (the left C*-action on C)."""
        f = self.field
        p = self.p
        out = [f.zero] * self.dim
        for i, x in enumerate(vec):
            if not x:
                continue
            for j, k, c in self.delta[i]:
                y = functional[k]
                if y:
                    out[j] = (out[j] + x * c * y) % p if p else out[j] + x * c * y
        return out

    def right_action(self, functional: Sequence, vec: Sequence) -> list:
        """``c <- f = sum f(c_1) c_2``."""
        f = self.field
        p = self.p
        out = [f.zero] * self.dim
        for i, x in enumerate(vec):
            if not x:
                continue
            for j, k, c in self.delta[i]:
                y = functional[j]
                if y:
                    out[k] = (out[k] + x * c * y) % p if p else out[k] + x * c * y
        return out

    # -- sub- and restricted coalgebras
    def is_subcoalgebra(self, v: Subspace) -> bool:
        if v.dim == 0:
            return True
        # V (x) V is the intersection of V (x) C and C (x) V
        ds = [self.apply_delta(r) for r in v.rows]
        none = Subspace.zero(self.field, self.dim)
        return _tensor_residual_zero(self, v, none, ds) and _tensor_residual_zero(self, none, v, ds)

    def restrict(self, v: Subspace, labels: Sequence[str] | None = None) -> "Coalgebra":
        """The subcoalgebra ``v`` as a coalgebra in the RREF basis of ``v``."""
        if not self.is_subcoalgebra(v):
            raise InputError("subspace is not a subcoalgebra")
        n = self.dim
        if labels is None:
            labels = [self._label_for_row(r, idx) for idx, r in enumerate(v.rows)]
        piv = v.pivots
        delta = []
        for r in v.rows:
            D = self.apply_delta(r)
            # coordinates in v (x) v: rows of D viewed as n x n, read at pivots on both sides
            terms = []
            for a, ja in enumerate(piv):
                # row ja of D contains the v-combination in the second leg
                for b, kb in enumerate(piv):
                    c = D[ja * n + kb]
                    if c:
                        terms.append((a, b, c))
            delta.append(terms)
        counit = [self.counit_of(r) for r in v.rows]
        return Coalgebra(self.field, labels, delta, counit)

    def _label_for_row(self, row, idx) -> str:
        nz = [i for i, x in enumerate(row) if x]
        if len(nz) == 1 and row[nz[0]] == self.field.one:
            return self.labels[nz[0]]
        return f"v{idx}"


def _tensor_residual_zero(c: Coalgebra, v: Subspace, w: Subspace, tensors: list[list]) -> bool:
    """Do all ``tensors`` lie in ``V (x) C + C (x) W``?"""
    basis, piv = _tensor_sum_basis(c, v, w)
    p = c.p
    return all(not any(reduce_against(t, basis, piv, p)) for t in tensors)


def _tensor_sum_basis(c: Coalgebra, v: Subspace, w: Subspace):
    """RREF basis of ``V (x) C + C (x) W`` in left-major coordinates."""
    key = ("tsum", v, w)
    if key in c._cache:
        return c._cache[key]
    f = c.field
    n = c.dim
    p = c.p
    rows = []
    for r in v.rows:
        for k in range(n):
            vec = [f.zero] * (n * n)
            for j, x in enumerate(r):
                if x:
                    vec[j * n + k] = x
            rows.append(vec)
    for r in w.rows:
        for j in range(n):
            vec = [f.zero] * (n * n)
            for k, x in enumerate(r):
                if x:
                    vec[j * n + k] = x
            rows.append(vec)
    out = rref_rows(rows, n * n, p) if rows else ([], [])
    if len(c._cache) < 4096:
        c._cache[key] = out
    return out


# ---------------------------------------------------------------- axioms


@dataclass
class CheckReport:
    valid: bool
    violations: list

    def __bool__(self) -> bool:
        return self.valid

    def summary(self) -> str:
        if self.valid:
            return "valid"
        head = "; ".join(self.violations[:5])
        more = f" (+{len(self.violations) - 5} more)" if len(self.violations) > 5 else ""
        return f"{len(self.violations)} violation(s): {head}{more}"


def check_coalgebra(c: Coalgebra) -> CheckReport:
    """Coassociativity and both counit laws, coordinate by coordinate."""
    f = c.field
    n = c.dim
    lab = c.labels
    bad = []
    for i in range(n):
        left = {}   # (Delta (x) id) Delta
        right = {}  # (id (x) Delta) Delta
        for j, k, x in c.delta[i]:
            for a, b, y in c.delta[j]:
                key = (a, b, k)
                left[key] = f.add(left.get(key, f.zero), f.mul(x, y))
            for a, b, y in c.delta[k]:
                key = (j, a, b)
                right[key] = f.add(right.get(key, f.zero), f.mul(x, y))
        for key in sorted(set(left) | set(right)):
            u, w = left.get(key, f.zero), right.get(key, f.zero)
            if u != w:
                names = " (x) ".join(lab[t] for t in key)
                bad.append(f"coassociativity at Delta^2({lab[i]})[{names}]: {f.format(u)} != {f.format(w)}")
        lcount = [f.zero] * n
        rcount = [f.zero] * n
        for j, k, x in c.delta[i]:
            if c.counit[j]:
                lcount[k] = f.add(lcount[k], f.mul(c.counit[j], x))
            if c.counit[k]:
                rcount[j] = f.add(rcount[j], f.mul(c.counit[k], x))
        for side, vec in (("left", lcount), ("right", rcount)):
            for t in range(n):
                want = f.one if t == i else f.zero
                if vec[t] != want:
                    bad.append(f"{side} counit law at {lab[i]}, coordinate {lab[t]}: "
                               f"{f.format(vec[t])} != {f.format(want)}")
    return CheckReport(not bad, bad)


# ---------------------------------------------------------------- quivers


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple  # (label, source, target)

    def __post_init__(self):
        vs = tuple(str(v) for v in self.vertices)
        arrows = tuple((str(a), str(s), str(t)) for a, s, t in self.arrows)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "arrows", arrows)
        if len(set(vs)) != len(vs):
            raise InputError("vertex labels must be distinct")
        labels = [a for a, _, _ in arrows]
        if len(set(labels)) != len(labels):
            raise InputError("arrow labels must be distinct")
        if set(labels) & set(vs):
            raise InputError("arrow and vertex labels must not collide")
        for a, s, t in arrows:
            if s not in vs or t not in vs:
                raise InputError(f"arrow {a} has an undeclared endpoint")
            if "*" in a:
                raise InputError("arrow labels may not contain '*' (used to join path labels)")

    def arrows_between(self, s: str, t: str) -> list[str]:
        return [a for a, x, y in self.arrows if x == s and y == t]

    def multiplicity(self, s: str, t: str) -> int:
        return len(self.arrows_between(s, t))

    def paths(self, max_len: int) -> list[tuple[str, str, tuple[int, ...]]]:
        """Paths as ``(source, target, arrow indices)``, vertices first, then by length."""
        out = [(v, v, ()) for v in self.vertices]
        layer = [(v, v, ()) for v in self.vertices]
        for _ in range(max_len):
            nxt = []
            for s, t, arr in layer:
                for idx, (_, x, y) in enumerate(self.arrows):
                    if x == t:
                        nxt.append((s, y, arr + (idx,)))
            out.extend(nxt)
            layer = nxt
            if not layer:
                break
        return out

    def count_paths(self, max_len: int) -> int:
        total = len(self.vertices)
        layer = {v: 1 for v in self.vertices}
        for _ in range(max_len):
            nxt: dict[str, int] = {}
            for a, x, y in self.arrows:
                if layer.get(x):
                    nxt[y] = nxt.get(y, 0) + layer[x]
            total += sum(nxt.values())
            layer = nxt
            if not layer:
                break
        return total

    def same_as(self, other: "Quiver") -> bool:
        """Equal vertex sets and equal arrow multiplicities for every ordered pair."""
        if set(self.vertices) != set(other.vertices):
            return False
        return all(self.multiplicity(s, t) == other.multiplicity(s, t)
                   for s in self.vertices for t in self.vertices)


def path_label(q: Quiver, path: tuple[str, str, tuple[int, ...]]) -> str:
    s, _, arr = path
    if not arr:
        return s
    return "*".join(q.arrows[i][0] for i in arr)


def path_coalgebra(q: Quiver, max_len: int, field: Field = QQ, budget: Budget | None = None) -> Coalgebra:
    """Truncated path coalgebra: paths of length <= ``max_len``, Delta by splitting."""
    if max_len < 0:
        raise InputError("max_len must be nonnegative")
    budget = budget or default_budget()
    budget.check("path coalgebra basis", q.count_paths(max_len), "max_basis")
    paths = q.paths(max_len)
    index = {(s, t, arr): i for i, (s, t, arr) in enumerate(paths)}
    vid = {v: index[(v, v, ())] for v in q.vertices}
    labels = [path_label(q, pth) for pth in paths]
    delta = []
    counit = []
    for s, t, arr in paths:
        terms = []
        L = len(arr)
        for cut in range(L + 1):
            left = arr[:cut]
            right = arr[cut:]
            mid = q.arrows[arr[cut - 1]][2] if cut > 0 else s
            li = index[(s, mid, left)] if left else vid[s]
            ri = index[(mid, t, right)] if right else vid[t]
            terms.append((li, ri, 1))
        delta.append(terms)
        counit.append(1 if L == 0 else 0)
    return Coalgebra(field, labels, delta, counit)


# built-in quivers

def single_arrow() -> Quiver:
    return Quiver(("a", "b"), (("alpha", "a", "b"),))


def two_cycle() -> Quiver:
    return Quiver(("a", "b"), (("alpha", "a", "b"), ("beta", "b", "a")))


def loop_quiver(k: int = 1, vertex: str = "g") -> Quiver:
    """One vertex with ``k`` loops; ``loop_quiver(k)`` is the truncation of I_inf."""
    names = ["l"] if k == 1 else [f"l{i}" for i in range(k)]
    return Quiver((vertex,), tuple((nm, vertex, vertex) for nm in names))


def kronecker_quiver(k: int = 2) -> Quiver:
    """Two vertices ``a -> b`` with ``k`` parallel arrows (Gamma_3 for k = 3)."""
    return Quiver(("a", "b"), tuple((f"x{i}", "a", "b") for i in range(k)))


def gamma3() -> Quiver:
    return kronecker_quiver(3)


def gamma_infinity(n: int) -> Quiver:
    """Truncation of the infinite Kronecker quiver to ``n`` arrows."""
    return kronecker_quiver(n)


def loops_infinity(n: int) -> Quiver:
    """Truncation of I_inf to ``n`` loops."""
    return loop_quiver(n)


def line_quiver(n: int) -> Quiver:
    """``v1 -> v2 -> ... -> vn``."""
    vs = tuple(f"v{i}" for i in range(1, n + 1))
    return Quiver(vs, tuple((f"a{i}", vs[i - 1], vs[i]) for i in range(1, n)))


# ---------------------------------------------------------------- duality and wedge


def orthogonal(x: Subspace) -> Subspace:
    """Annihilator in the dual (or, symmetrically, in C of a subspace of C*)."""
    if x.dim == 0:
        return Subspace.full(x.field, x.n)
    K = kernel_rows([list(r) for r in x.rows], x.n, x.p)
    return Subspace._from_rref(x.field, x.n, K, _pivots(K))


def orthogonal_ideal_product(c: Coalgebra, a: Subspace, b: Subspace) -> Subspace:
    """Span of all convolutions ``x * y`` with ``x`` in ``a`` and ``y`` in ``b``."""
    prods = [c.convolve(x, y) for x in a.rows for y in b.rows]
    return c.span(prods)


def wedge(c: Coalgebra, v: Subspace, w: Subspace) -> Subspace:
    """``V ^ W = {x : Delta(x) in V (x) C + C (x) W}`` by one kernel computation."""
    n = c.dim
    p = c.p
    basis, piv = _tensor_sum_basis(c, v, w)
    pivset = set(piv)
    free = [t for t in range(n * n) if t not in pivset]
    # residual of Delta(b_i) modulo the tensor sum, read at the complement coordinates
    cols = []
    for i in range(n):
        res = reduce_against(c.apply_delta(c.basis_vector(i)), basis, piv, p)
        cols.append([res[t] for t in free])
    # x with sum_i x_i cols[i] = 0
    eqs = [list(r) for r in zip(*cols)] if free else []
    eqs = [r for r in eqs if any(r)]
    if not eqs:
        return c.full()
    K = kernel_rows(eqs, n, p)
    return Subspace._from_rref(c.field, n, K, _pivots(K))


def coradical(c: Coalgebra) -> Subspace:
    """``C_0 = J(C*)^perp``."""
    if "coradical" not in c._cache:
        J = c.dual_algebra().radical()
        c._cache["coradical"] = orthogonal(Subspace.span(c.field, c.dim, J))
    return c._cache["coradical"]


def coradical_filtration(c: Coalgebra) -> list[Subspace]:
    c0 = coradical(c)
    terms = [c0]
    while terms[-1].dim < c.dim:
        nxt = wedge(c, terms[-1], c0)
        if nxt == terms[-1]:  # pragma: no cover - cannot happen for finite-dimensional C
            raise UndecidedError("coradical filtration stalled below C")
        terms.append(nxt)
    return terms


# ---------------------------------------------------------------- grouplikes


def is_grouplike(c: Coalgebra, vec: Sequence) -> bool:
    f = c.field
    p = c.p
    if c.counit_of(vec) != f.one:
        return False
    D = c.apply_delta(vec)
    n = c.dim
    for j in range(n):
        for k in range(n):
            want = (vec[j] * vec[k]) % p if p else vec[j] * vec[k]
            if D[j * n + k] != want:
                return False
    return True


def grouplikes(c: Coalgebra) -> list[list]:
    """All grouplike elements, as coordinate vectors in a canonical order.

    Basis vectors that are grouplike are tried first; when they already span
    the coradical nothing else can exist.  Otherwise the grouplikes are the
    characters of the dual of the coradical, found by splitting its
    commutative quotient into simple factors.
    """
    if "grouplikes" in c._cache:
        return c._cache["grouplikes"]
    c0 = coradical(c)
    found = [c.basis_vector(i) for i in range(c.dim) if is_grouplike(c, c.basis_vector(i))]
    if len(found) != c0.dim:
        found = _grouplikes_via_characters(c, c0)
        found.sort(key=lambda v: [c.field.format(x) for x in v])
        for g in found:
            if not is_grouplike(c, g):  # pragma: no cover - guards the solver
                raise AssertionError("character solver produced a non-grouplike")
    c._cache["grouplikes"] = found
    return found


def grouplike_labels(c: Coalgebra) -> list[str]:
    out = []
    for idx, g in enumerate(grouplikes(c)):
        nz = [i for i, x in enumerate(g) if x]
        out.append(c.labels[nz[0]] if len(nz) == 1 else f"g{idx}")
    return out


def is_pointed(c: Coalgebra) -> bool:
    return len(grouplikes(c)) == coradical(c).dim


def require_pointed(c: Coalgebra) -> list[list]:
    gs = grouplikes(c)
    if len(gs) != coradical(c).dim:
        raise NotPointedError("coalgebra is not pointed")
    return gs


def _commutator_ideal(alg: StructureAlgebra) -> list[list]:
    f = alg.field
    p = f.characteristic
    d = alg.dim
    gens = []
    for a in range(d):
        for b in range(a + 1, d):
            diff = [f.sub(x, y) for x, y in zip(alg.table[a][b], alg.table[b][a])]
            if any(diff):
                gens.append(diff)
    R = rref_rows(gens, d, p)[0] if gens else []
    while True:
        grow = list(R)
        for r in R:
            for a in range(d):
                e = alg.basis_vector(a)
                grow.append(alg.mul(e, r))
                grow.append(alg.mul(r, e))
        R2 = rref_rows(grow, d, p)[0] if grow else []
        if len(R2) == len(R):
            return R2
        R = R2


def _split_commutative(alg: StructureAlgebra, elements: list[list]) -> list[list[list]]:
    """Refine ``alg`` into ideals cut out by the minimal polynomials of ``elements``.

    Returns a list of ideals, each as RREF coordinate rows.  ``alg`` must be
    commutative and semisimple.
    """
    f = alg.field
    p = f.characteristic
    d = alg.dim
    pieces = [[alg.basis_vector(a) for a in range(d)]]
    for z in elements:
        new = []
        for piece in pieces:
            if len(piece) == 1:
                new.append(piece)
                continue
            # restrict multiplication by z to the piece
            R, piv = rref_rows(piece, d, p)
            img = [alg.mul(z, r) for r in R]
            local = Matrix.raw(f, [[v[c] for c in piv] for v in img], len(R))
            facs = factor(minimal_polynomial(local))
            if len(facs) == 1:
                new.append(R)
                continue
            for g, k in facs:
                M = (g ** k).eval_matrix(local)
                # row vectors x with x M = 0
                ker = kernel_rows(M.T.tolist(), len(R), p)
                sub = []
                for coeffs in ker:
                    v = [f.zero] * d
                    for cf, r in zip(coeffs, R):
                        _axpy(v, cf, r, p)
                    sub.append(v)
                new.append(rref_rows(sub, d, p)[0])
        pieces = new
    return pieces


def _grouplikes_via_characters(c: Coalgebra, c0: Subspace) -> list[list]:
    f = c.field
    p = c.p
    D = c.restrict(c0)
    A = D.dual_algebra()
    I = _commutator_ideal(A)
    if len(I) == A.dim:
        return []
    Aq, keep = A.quotient(I) if I else (A, list(range(A.dim)))
    Ipiv = _pivots(I)

    def proj(vec):
        res = reduce_against(vec, I, Ipiv, p) if I else list(vec)
        return [res[k] for k in keep]

    d = Aq.dim
    if p:
        fixed = Aq.frobenius_fixed([Aq.basis_vector(a) for a in range(d)])
        pieces = _split_commutative(Aq, fixed)
    else:
        cands = [Aq.basis_vector(a) for a in range(d)]
        cands += [[f.add(x, y) for x, y in zip(Aq.basis_vector(a), Aq.basis_vector(b))]
                  for a in range(d) for b in range(a + 1, d)]
        cands.append([f(s + 1) for s in range(d)])
        pieces = _split_commutative(Aq, cands)
        for piece in pieces:
            if len(piece) > 1 and not _is_field_piece(Aq, piece):
                raise UndecidedError("cannot split the dual of the coradical over Q")
    chars = []
    for piece in pieces:
        if len(piece) != 1:
            continue
        e = piece[0]
        # make the generator idempotent: e^2 = lam e
        sq = Aq.mul(e, e)
        lam = next(sq[i] for i, x in enumerate(e) if x) if any(sq) else f.zero
        lam = f.div(lam, next(x for x in e if x))
        if not lam:  # pragma: no cover - semisimple quotient has no nilpotents
            raise UndecidedError("nilpotent piece in a semisimple quotient")
        e = [f.div(x, lam) for x in e]
        piv = next(i for i, x in enumerate(e) if x)

        def chi(vec, e=e, piv=piv):
            prod_ = Aq.mul(proj(vec), e)
            return f.div(prod_[piv], e[piv])

        # grouplike g in D with phi(g) = chi(phi); in C coordinates g = sum chi(beta_k) row_k
        g = [f.zero] * c.dim
        for k, row in enumerate(c0.rows):
            val = chi(A.basis_vector(k))
            if val:
                _axpy(g, val, row, p)
        chars.append(g)
    return chars


def _is_field_piece(alg: StructureAlgebra, piece: list[list]) -> bool:
    """True when some element of ``piece`` has irreducible minpoly of full degree."""
    f = alg.field
    p = f.characteristic
    d = alg.dim
    R, piv = rref_rows(piece, d, p)
    k = len(R)
    trial = [R[0]] + [[f.add(x, f.mul(f(s), y)) for x, y in zip(R[0], r)] for s, r in enumerate(R[1:], 2)]
    combo = [f.zero] * d
    for s, r in enumerate(R):
        _axpy(combo, f(s + 1), r, p)
    trial.append(combo)
    for z in trial:
        img = [alg.mul(z, r) for r in R]
        local = Matrix.raw(f, [[v[c] for c in piv] for v in img], k)
        mp = minimal_polynomial(local)
        facs = factor(mp)
        if len(facs) == 1 and facs[0][1] == 1 and facs[0][0].degree == k:
            return True
    return False


__all__ = [
    "Subspace", "Coalgebra", "CheckReport", "check_coalgebra", "Quiver", "path_coalgebra", "path_label",
    "single_arrow", "two_cycle", "loop_quiver", "kronecker_quiver", "gamma3", "gamma_infinity",
    "loops_infinity", "line_quiver", "orthogonal", "orthogonal_ideal_product", "wedge", "coradical",
    "coradical_filtration", "grouplikes", "grouplike_labels", "is_grouplike", "is_pointed",
    "require_pointed",
]
