"""Finite-dimensional modules given by right-action matrices.

Comodules, quiver representations and modules over free algebras all end up
here: a module is a space ``K^m`` (row vectors) with a finite list of ``m x m``
matrices acting on the right.  A morphism ``M -> N`` is an ``m x n`` matrix
``F`` with ``A_i^M F = F A_i^N`` for every generator ``i``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

from .budget import Budget, default_budget
from .errors import InputError, UndecidedError
from .exactlin.algebra import StructureAlgebra, span_is_nilpotent
from .exactlin.field import Field
from .exactlin.matrix import (Matrix, kernel_rows, matmul_rows, reduce_against, rref_rows,
                              vecmat)
from .exactlin.poly import factor, minimal_polynomial


def _zero_mat(f: Field, r: int, c: int) -> list[list]:
    return [[f.zero] * c for _ in range(r)]


def _ident(f: Field, n: int) -> list[list]:
    return [[f.one if i == j else f.zero for j in range(n)] for i in range(n)]


def _pivots(R) -> list[int]:
    return [next(i for i, x in enumerate(r) if x) for r in R]


class ActionModule:
    """``K^dim`` with right-acting generator matrices (raw row lists)."""

    __slots__ = ("field", "dim", "actions", "_cache")

    def __init__(self, field: Field, dim: int, actions: Sequence[Sequence[Sequence]]):
        self.field = field
        self.dim = dim
        acts = []
        for a in actions:
            rows = [[field(x) for x in r] for r in a]
            if len(rows) != dim or any(len(r) != dim for r in rows):
                raise InputError(f"action matrix is not {dim} x {dim}")
            acts.append(rows)
        self.actions = acts
        self._cache = {}

    @property
    def p(self) -> int:
        return self.field.characteristic

    def generators(self) -> list[list[list]]:
        """A linearly independent subset of the actions (same constraints, fewer equations)."""
        if "gens" not in self._cache:
            m = self.dim
            p = self.p
            keep = []
            basis, piv = [], []
            for a in self.actions:
                flat = [x for r in a for x in r]
                res = reduce_against(flat, basis, piv, p)
                if any(res):
                    keep.append(a)
                    basis, piv = rref_rows(basis + [res], m * m, p)
            self._cache["gens"] = keep
        return self._cache["gens"]

    def act(self, coeffs: Sequence) -> list[list]:
        """``sum coeffs[i] * actions[i]``."""
        f = self.field
        p = self.p
        m = self.dim
        out = _zero_mat(f, m, m)
        for c, a in zip(coeffs, self.actions):
            if not c:
                continue
            for s in range(m):
                row = out[s]
                for t, x in enumerate(a[s]):
                    if x:
                        row[t] = (row[t] + c * x) % p if p else row[t] + c * x
        return out

    # -- sub and quotient
    def is_invariant(self, rows: Sequence[Sequence]) -> bool:
        if not rows:
            return True
        R, piv = rref_rows(rows, self.dim, self.p)
        for a in self.generators():
            for r in R:
                if any(reduce_against(vecmat(r, a, self.p), R, piv, self.p)):
                    return False
        return True

    def submodule(self, rows: Sequence[Sequence]) -> tuple["ActionModule", list[list]]:
        """Restriction to an invariant subspace; returns the module and its RREF basis."""
        p = self.p
        R, piv = rref_rows(rows, self.dim, p) if rows else ([], [])
        acts = []
        for a in self.actions:
            mat = []
            for r in R:
                img = vecmat(r, a, p)
                if any(reduce_against(img, R, piv, p)):
                    raise InputError("subspace is not invariant")
                mat.append([img[c] for c in piv])
            acts.append(mat)
        return ActionModule(self.field, len(R), acts), R

    def quotient(self, rows: Sequence[Sequence]) -> tuple["ActionModule", list[int]]:
        """Quotient by an invariant subspace.  Classes are read at the non-pivot coordinates."""
        p = self.p
        R, piv = rref_rows(rows, self.dim, p) if rows else ([], [])
        pivset = set(piv)
        keep = [c for c in range(self.dim) if c not in pivset]
        acts = []
        for a in self.actions:
            mat = []
            for c in keep:
                img = reduce_against(a[c], R, piv, p)
                mat.append([img[k] for k in keep])
            acts.append(mat)
        return ActionModule(self.field, len(keep), acts), keep

    def direct_sum(self, other: "ActionModule") -> "ActionModule":
        if len(self.actions) != len(other.actions):
            raise InputError("direct sum of modules with different generator counts")
        f = self.field
        m, n = self.dim, other.dim
        acts = []
        for a, b in zip(self.actions, other.actions):
            mat = [list(r) + [f.zero] * n for r in a] + [[f.zero] * m + list(r) for r in b]
            acts.append(mat)
        return ActionModule(f, m + n, acts)

    def change_basis(self, P: Sequence[Sequence]) -> "ActionModule":
        """Module in the basis given by the rows of invertible ``P``: ``A' = P A P^-1``."""
        f = self.field
        Pm = Matrix(f, P, self.dim)
        Pinv = Pm.inverse().tolist()
        p = self.p
        return ActionModule(f, self.dim, [matmul_rows(matmul_rows(P, a, p), Pinv, p) for a in self.actions])

    def __repr__(self) -> str:
        return f"ActionModule(dim={self.dim}, generators={len(self.actions)}, field={self.field.name})"


# ---------------------------------------------------------------- Hom and End


def hom_space(M: ActionModule, N: ActionModule) -> list[list[list]]:
    """Basis of ``Hom(M, N)`` as ``m x n`` matrices."""
    if len(M.actions) != len(N.actions):
        raise InputError("modules have different generator counts")
    f = M.field
    p = M.p
    m, n = M.dim, N.dim
    if m == 0 or n == 0:
        return []
    # use a common independent family of generator indices
    idx = _independent_pairs(M, N)
    eqs = []
    for i in idx:
        A = M.actions[i]
        B = N.actions[i]
        for s in range(m):
            As = A[s]
            for t in range(n):
                row = [f.zero] * (m * n)
                for u in range(m):
                    x = As[u]
                    if x:
                        row[u * n + t] = f.add(row[u * n + t], x)
                for u in range(n):
                    y = B[u][t]
                    if y:
                        row[s * n + u] = f.sub(row[s * n + u], y)
                if any(row):
                    eqs.append(row)
    K = kernel_rows(eqs, m * n, p) if eqs else _ident(f, m * n)
    return [[list(v[s * n:(s + 1) * n]) for s in range(m)] for v in K]


def _independent_pairs(M: ActionModule, N: ActionModule) -> list[int]:
    """Indices whose stacked pairs ``(A_i^M, A_i^N)`` are linearly independent."""
    p = M.p
    width = M.dim * M.dim + N.dim * N.dim
    basis, piv, keep = [], [], []
    for i, (a, b) in enumerate(zip(M.actions, N.actions)):
        flat = [x for r in a for x in r] + [x for r in b for x in r]
        res = reduce_against(flat, basis, piv, p)
        if any(res):
            keep.append(i)
            basis, piv = rref_rows(basis + [res], width, p)
    return keep


def hom_dim(M: ActionModule, N: ActionModule) -> int:
    return len(hom_space(M, N))


@dataclass
class EndRing:
    """``End(M)`` with structure constants and its Jacobson radical."""

    basis: list          # m x m matrices
    algebra: StructureAlgebra
    radical: list        # RREF coordinate rows in ``basis``

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def radical_dim(self) -> int:
        return len(self.radical)

    def element(self, coords: Sequence) -> list[list]:
        f = self.algebra.field
        p = f.characteristic
        m = len(self.basis[0]) if self.basis else 0
        out = _zero_mat(f, m, m)
        for c, B in zip(coords, self.basis):
            if c:
                for s in range(m):
                    for t in range(m):
                        x = B[s][t]
                        if x:
                            out[s][t] = (out[s][t] + c * x) % p if p else out[s][t] + c * x
        return out


def end_ring(M: ActionModule) -> EndRing:
    if "end" not in M._cache:
        f = M.field
        basis = hom_space(M, M)
        # row-vector convention: composing x -> x F -> x F G is the matrix product F G
        alg = StructureAlgebra.from_matrices(f, [Matrix(f, b, M.dim) for b in basis])
        rad = alg.radical() if basis else []
        if rad:
            mats = [Matrix(f, _combo(f, basis, r, M.dim), M.dim) for r in rad]
            if not span_is_nilpotent(mats, f):  # pragma: no cover - guards the radical routine
                raise AssertionError("computed radical of End is not nilpotent")
        M._cache["end"] = EndRing(basis, alg, rad)
    return M._cache["end"]


def _combo(f: Field, basis, coeffs, m) -> list[list]:
    p = f.characteristic
    out = _zero_mat(f, m, m)
    for c, B in zip(coeffs, basis):
        if c:
            for s in range(m):
                for t in range(m):
                    x = B[s][t]
                    if x:
                        out[s][t] = (out[s][t] + c * x) % p if p else out[s][t] + c * x
    return out


# ---------------------------------------------------------------- decomposition


@dataclass
class Decomposition:
    pieces: list          # ActionModule summands
    bases: list           # rows (in M coordinates) spanning each summand
    witness: list         # stacked bases: invertible matrix from the sum to M

    def __len__(self) -> int:
        return len(self.pieces)


def _split_element(M: ActionModule, E: EndRing, seed: int = 0) -> list[list] | None:
    """An endomorphism whose minimal polynomial has two coprime factors, or None if ``End(M)`` is local."""
    f = M.field
    p = f.characteristic
    alg = E.algebra
    if E.dim - E.radical_dim == 1:
        return None
    Abar, keep = alg.quotient(E.radical) if E.radical else (alg, list(range(alg.dim)))
    d = Abar.dim

    def lift(z):
        coords = [f.zero] * alg.dim
        for k, x in zip(keep, z):
            coords[k] = x
        return E.element(coords)

    def splits(phi) -> bool:
        facs = factor(minimal_polynomial(Matrix(f, phi, M.dim)))
        return len(facs) > 1

    commutative = Abar.is_commutative()
    if p:
        Z = Abar.center()
        fixed = Abar.frobenius_fixed(Z)
        unit = Abar.unit
        for z in fixed:
            if not _proportional(z, unit, f):
                phi = lift(z)
                if splits(phi):
                    return phi
        if commutative:
            return None  # Abar is a finite field
    # candidates: basis, pairwise sums, then seeded random combinations
    cands = [Abar.basis_vector(a) for a in range(d)]
    cands += [[f.add(x, y) for x, y in zip(Abar.basis_vector(a), Abar.basis_vector(b))]
              for a, b in combinations(range(d), 2)]
    rng = random.Random(seed)
    for _ in range(8 * d + 8):
        cands.append([f(rng.randrange(-3, 4) if not p else rng.randrange(p)) for _ in range(d)])
    for z in cands:
        phi = lift(z)
        facs = factor(minimal_polynomial(Matrix(f, phi, M.dim)))
        if len(facs) > 1:
            return phi
        if commutative and not p and facs[0][0].degree == d and facs[0][1] >= 1:
            # a generator of a field of degree d; Abar is that field, hence local
            if _is_field_quotient(Abar, z):
                return None
    if p and not commutative:
        # End/J noncommutative semisimple over a finite field is never a division ring,
        # so a splitting element exists; the sample simply missed it
        raise UndecidedError("no splitting endomorphism found in the sample; raise the seed budget")
    raise UndecidedError("cannot decide whether End/J is a division algebra over Q")


def _proportional(z, unit, f) -> bool:
    piv = next((i for i, x in enumerate(unit) if x), None)
    if piv is None:
        return not any(z)
    lam = f.div(z[piv], unit[piv])
    return all(x == f.mul(lam, u) for x, u in zip(z, unit))


def _is_field_quotient(A: StructureAlgebra, z) -> bool:
    """``z`` generates ``A`` and has irreducible minpoly of degree ``dim A``."""
    f = A.field
    d = A.dim
    powers = [A.unit]
    for _ in range(d - 1):
        powers.append(A.mul(powers[-1], z))
    R, _ = rref_rows(powers, d, f.characteristic)
    if len(R) != d:
        return False
    L = Matrix(f, [A.mul(z, A.basis_vector(a)) for a in range(d)], d)
    facs = factor(minimal_polynomial(L))
    return len(facs) == 1 and facs[0][1] == 1 and facs[0][0].degree == d


def decompose(M: ActionModule, seed: int = 0) -> Decomposition:
    """Split ``M`` into indecomposable summands (Fitting splitting by endomorphisms)."""
    f = M.field
    p = M.p
    if M.dim == 0:
        return Decomposition([], [], [])
    E = end_ring(M)
    phi = _split_element(M, E, seed)
    if phi is None:
        ident = _ident(f, M.dim)
        return Decomposition([M], [ident], ident)
    Phi = Matrix(f, phi, M.dim)
    pieces, bases = [], []
    for g, k in factor(minimal_polynomial(Phi)):
        Q = (g ** k).eval_matrix(Phi)
        # generalized eigenspace {x : x Q = 0}
        K = kernel_rows(Q.T.tolist(), M.dim, p)
        sub, R = M.submodule(K)
        inner = decompose(sub, seed)
        for piece, b in zip(inner.pieces, inner.bases):
            pieces.append(piece)
            bases.append(matmul_rows(b, R, p))
    witness = [r for b in bases for r in b]
    if len(witness) != M.dim or not Matrix(f, witness, M.dim).is_invertible():  # pragma: no cover
        raise AssertionError("Fitting pieces do not span the module")
    return Decomposition(pieces, bases, witness)


def is_indecomposable(M: ActionModule, seed: int = 0) -> bool:
    if M.dim == 0:
        return False
    E = end_ring(M)
    return _split_element(M, E, seed) is None


# ---------------------------------------------------------------- isomorphism


def _indecomposable_iso(P: ActionModule, Q: ActionModule) -> list[list] | None:
    if P.dim != Q.dim:
        return None
    if P.dim == 0:
        return []
    f = P.field
    H1 = hom_space(P, Q)
    if not H1:
        return None
    H2 = hom_space(Q, P)
    if not H2:
        return None
    p = P.p
    # P, Q indecomposable with local End: P = Q iff some g o f is a unit, and the
    # non-units form an ideal, so testing basis pairs suffices
    for F in H1:
        for G in H2:
            if Matrix(f, matmul_rows(F, G, p), P.dim).is_invertible():
                return F
    return None


def isomorphism(M: ActionModule, N: ActionModule, seed: int = 0) -> list[list] | None:
    """An invertible intertwiner ``M -> N``, or None when none exists."""
    if M.dim != N.dim or len(M.actions) != len(N.actions):
        return None
    f = M.field
    if M.dim == 0:
        return []
    h_mn = hom_dim(M, N)
    if h_mn != hom_dim(M, M) or h_mn != hom_dim(N, N):
        return None
    DM = decompose(M, seed)
    DN = decompose(N, seed)
    if len(DM) != len(DN) or sorted(x.dim for x in DM.pieces) != sorted(x.dim for x in DN.pieces):
        return None
    used = [False] * len(DN)
    match = []
    for i, P in enumerate(DM.pieces):
        for j, Q in enumerate(DN.pieces):
            if used[j]:
                continue
            F = _indecomposable_iso(P, Q)
            if F is not None:
                used[j] = True
                match.append((i, j, F))
                break
        else:
            return None
    # assemble: M coords -> piece coords of M -> piece coords of N -> N coords
    offM, offN = _offsets(DM), _offsets(DN)
    blk = _zero_mat(f, M.dim, N.dim)
    for i, j, F in match:
        for s, row in enumerate(F):
            for t, x in enumerate(row):
                blk[offM[i] + s][offN[j] + t] = x
    BM = Matrix(f, DM.witness, M.dim)
    BN = Matrix(f, DN.witness, N.dim)
    W = (BM.inverse() @ Matrix(f, blk, N.dim) @ BN).tolist()
    if not is_morphism(M, N, W):  # pragma: no cover - guards the assembly
        raise AssertionError("assembled isomorphism is not a morphism")
    return W


def _offsets(D: Decomposition) -> list[int]:
    out, acc = [], 0
    for x in D.pieces:
        out.append(acc)
        acc += x.dim
    return out


def is_isomorphic(M: ActionModule, N: ActionModule, seed: int = 0) -> bool:
    return isomorphism(M, N, seed) is not None


def is_morphism(M: ActionModule, N: ActionModule, F: Sequence[Sequence]) -> bool:
    p = M.p
    if M.dim == 0 or N.dim == 0:
        return True
    return all(matmul_rows(a, F, p) == matmul_rows(F, b, p) for a, b in zip(M.actions, N.actions))


# ---------------------------------------------------------------- submodules


def _rref_shapes(m: int, k: int, field: Field):
    """All k-dimensional subspaces of GF(p)^m as RREF row lists."""
    f = field
    els = list(f.elements())
    for piv in combinations(range(m), k):
        pivset = set(piv)
        free = [(r, c) for r in range(k) for c in range(piv[r] + 1, m) if c not in pivset]
        for vals in product(els, repeat=len(free)):
            rows = [[f.zero] * m for _ in range(k)]
            for r, c in enumerate(piv):
                rows[r][c] = f.one
            for (r, c), v in zip(free, vals):
                rows[r][c] = v
            yield rows


def count_subspaces(m: int, q: int) -> int:
    total = 0
    for k in range(m + 1):
        num, den = 1, 1
        for i in range(k):
            num *= q ** (m - i) - 1
            den *= q ** (i + 1) - 1
        total += num // den
    return total


def submodules(M: ActionModule, budget: Budget | None = None) -> list[list[list]]:
    """All submodules as RREF row lists, smallest dimension first.

    Over GF(p) this is exhaustive over RREF shapes.  Over Q it returns the
    lattice generated by kernels and images of endomorphisms together with the
    generalized eigenspaces of the generators (sound, not exhaustive).
    """
    budget = budget or default_budget()
    if M.p:
        budget.check("subspaces to test", count_subspaces(M.dim, M.p), "max_candidates")
        return [rows for k in range(M.dim + 1) for rows in _rref_shapes(M.dim, k, M.field)
                if M.is_invariant(rows)]
    return lattice_submodules(M, budget)


def lattice_submodules(M: ActionModule, budget: Budget | None = None, extra=()) -> list[list[list]]:
    budget = budget or default_budget()
    f = M.field
    p = M.p
    m = M.dim
    found = {_key(_rref(f, m, [])): [], _key(_rref(f, m, _ident(f, m))): _rref(f, m, _ident(f, m))}
    cands = list(extra)
    for F in end_ring(M).basis:
        Fm = Matrix(f, F, m)
        for k in range(1, m + 1):
            Fk = (Fm ** k).tolist()
            cands.append(kernel_rows([list(c) for c in zip(*Fk)], m, p))  # x Fk = 0
            cands.append(rref_rows(Fk, m, p)[0])                          # image
    for rows in cands:
        rows = _rref(f, m, rows)
        if M.is_invariant(rows):
            found.setdefault(_key(rows), rows)
    # close under sum and intersection
    changed = True
    while changed:
        changed = False
        items = list(found.values())
        for a, b in combinations(items, 2):
            for rows in (_rref(f, m, list(a) + list(b)), _intersect(f, m, a, b)):
                k = _key(rows)
                if k not in found:
                    found[k] = rows
                    changed = True
                    budget.check("submodule lattice", len(found), "max_classes")
    return sorted(found.values(), key=lambda r: (len(r), _key(r)))


def _rref(f: Field, m: int, rows) -> list[list]:
    return rref_rows(rows, m, f.characteristic)[0] if rows else []


def _key(rows) -> tuple:
    return tuple(tuple(r) for r in rows)


def _intersect(f: Field, m: int, a, b) -> list[list]:
    p = f.characteristic
    ea = kernel_rows(a, m, p) if a else _ident(f, m)
    eb = kernel_rows(b, m, p) if b else _ident(f, m)
    return kernel_rows(list(ea) + list(eb), m, p)


@dataclass
class Triple:
    """Short exact sequence ``0 -> X -> Y -> Z -> 0`` with ``X`` given by rows in ``Y``."""

    sub: ActionModule
    middle: ActionModule
    quotient: ActionModule
    sub_rows: list
    quotient_coords: list

    def inclusion(self) -> list[list]:
        return [list(r) for r in self.sub_rows]

    def projection(self) -> list[list]:
        """``dim Y x dim Z`` matrix of ``Y -> Y/X``."""
        f = self.middle.field
        p = f.characteristic
        R = self.sub_rows
        piv = _pivots(R)
        out = []
        for s in range(self.middle.dim):
            e = [f.one if t == s else f.zero for t in range(self.middle.dim)]
            res = reduce_against(e, R, piv, p)
            out.append([res[k] for k in self.quotient_coords])
        return out


def short_exact_triples(M: ActionModule, budget: Budget | None = None, include_trivial: bool = True) -> list[Triple]:
    out = []
    for rows in submodules(M, budget):
        if not include_trivial and (len(rows) in (0, M.dim)):
            continue
        X, R = M.submodule(rows)
        Z, keep = M.quotient(rows)
        out.append(Triple(X, M, Z, R, keep))
    return out


__all__ = [
    "ActionModule", "hom_space", "hom_dim", "EndRing", "end_ring", "Decomposition", "decompose",
    "is_indecomposable", "isomorphism", "is_isomorphic", "is_morphism", "submodules",
    "lattice_submodules", "count_subspaces", "Triple", "short_exact_triples",
]
