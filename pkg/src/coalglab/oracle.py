"""Brute-force ground truth over small prime fields.

Nothing here calls the wedge, the cf recursion or the cocycle formula for
Ext^1; the oracles only evaluate Delta, check comodule axioms directly and
solve linear systems coordinate by coordinate.

Comodules of small length are parametrized by flag data.  In a basis
``x_1, ..., x_m`` adapted to a composition series, ``rho(x_s) = sum_{t <= s}
c_st (x) x_t`` with ``c_ss`` grouplike, and the axioms read

    Delta(c_st) = sum_{t <= u <= s} c_su (x) c_ut,     counit(c_st) = [s = t].
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field as dc_field
from itertools import permutations, product
from typing import Sequence

from .budget import Budget, default_budget
from .coalgebra import Coalgebra, Subspace, grouplike_labels, require_pointed
from .comodule import (Comodule, DimensionVector, cf, check_comodule, dimension_vector, hom_space,
                       is_isomorphic, socle_series)
from .errors import BudgetExceeded, InputError
from .exactlin.matrix import Matrix, kernel_rows, rref_rows


def _require_small_field(c: Coalgebra, budget: Budget, check_dim: bool = True) -> int:
    p = c.p
    if not p:
        raise InputError("oracles run over GF(p) only")
    budget.check("oracle prime", p, "max_prime")
    if check_dim:
        budget.check("oracle coalgebra dimension", c.dim, "max_coalgebra_dim")
    return p


def _vectors(p: int, k: int):
    return product(range(p), repeat=k)


def _combine(p: int, coeffs: Sequence[int], rows: Sequence[Sequence[int]], n: int) -> list[int]:
    out = [0] * n
    for a, r in zip(coeffs, rows):
        if a:
            for i, x in enumerate(r):
                if x:
                    out[i] = (out[i] + a * x) % p
    return out


def _projective_reps(p: int, k: int):
    """Coefficient vectors whose first nonzero entry is 1 (one per line)."""
    for lead in range(k):
        for tail in product(range(p), repeat=k - lead - 1):
            yield (0,) * lead + (1,) + tail


def _count_projective(p: int, k: int) -> int:
    return (p ** k - 1) // (p - 1) if k else 0


def _tensor(u: Sequence[int], v: Sequence[int], p: int) -> list[int]:
    return [(a * b) % p for a in u for b in v]


class _ImageSolver:
    """Fixed linear right inverse of ``x -> sum x_i v_i`` on its image."""

    def __init__(self, vectors: Sequence[Sequence[int]], p: int):
        n = len(vectors)
        w = len(vectors[0]) if vectors else 0
        aug = [list(v) + [1 if i == j else 0 for j in range(n)] for i, v in enumerate(vectors)]
        R, piv = rref_rows(aug, w + n, p) if aug else ([], [])
        self.p = p
        self.n = n
        self.width = w
        self.image = [(r[:w], r[w:], c) for r, c in zip(R, piv) if c < w]

    def residual(self, y: Sequence[int]) -> list[int]:
        p = self.p
        r = list(y)
        for img, _, c in self.image:
            f = r[c]
            if f:
                r = [(a - f * b) % p for a, b in zip(r, img)]
        return r

    def solve(self, y: Sequence[int]) -> list[int] | None:
        p = self.p
        r = list(y)
        x = [0] * self.n
        for img, combo, c in self.image:
            f = r[c]
            if f:
                r = [(a - f * b) % p for a, b in zip(r, img)]
                x = [(a + f * b) % p for a, b in zip(x, combo)]
        return None if any(r) else x


def _twisted_map(c: Coalgebra, h: Sequence[int], g: Sequence[int]) -> list[list[int]]:
    """Images of the basis under ``x -> (Delta(x) - h (x) x - x (x) g, counit(x))``."""
    n = c.dim
    p = c.p
    out = []
    for i in range(n):
        D = c.apply_delta(c.basis_vector(i))
        for j in range(n):
            if h[j]:
                D[j * n + i] = (D[j * n + i] - h[j]) % p
            if g[j]:
                D[i * n + j] = (D[i * n + j] - g[j]) % p
        D.append(c.counit[i])
        out.append(D)
    return out


class _FlagSpaces:
    """Solution spaces for flag data over one coalgebra (cached per grouplike pair)."""

    def __init__(self, c: Coalgebra):
        self.c = c
        self.p = c.p
        self._solvers: dict = {}
        self._prims: dict = {}

    def solver(self, h, g) -> _ImageSolver:
        key = (tuple(h), tuple(g))
        if key not in self._solvers:
            self._solvers[key] = _ImageSolver(_twisted_map(self.c, h, g), self.p)
        return self._solvers[key]

    def primitives(self, h, g) -> list[list[int]]:
        """Basis of the solutions of ``Delta(x) = h (x) x + x (x) g, counit(x) = 0``."""
        key = (tuple(h), tuple(g))
        if key not in self._prims:
            n = self.c.dim
            cols = _twisted_map(self.c, h, g)
            eqs = [list(r) for r in zip(*cols)]
            K = kernel_rows([r for r in eqs if any(r)], n, self.p) if any(any(r) for r in eqs) else \
                [[1 if i == j else 0 for j in range(n)] for i in range(n)]
            self._prims[key] = K
        return self._prims[key]

    def solve_c31(self, g3, g1, c32, c21) -> list[int] | None:
        y = _tensor(c32, c21, self.p) + [0]
        return self.solver(g3, g1).solve(y)


def _complement(p: int, n: int, rows: Sequence[Sequence[int]], avoid: Sequence[Sequence[int]]) -> list[list[int]]:
    """Rows of ``rows`` extending a basis of ``span(avoid)`` to one of ``span(rows + avoid)``."""
    base = [list(a) for a in avoid if any(a)]
    R, piv = rref_rows(base, n, p) if base else ([], [])
    out = []
    for r in rows:
        res = list(r)
        for row, cc in zip(R, piv):
            f = res[cc]
            if f:
                res = [(a - f * b) % p for a, b in zip(res, row)]
        if any(res):
            out.append(list(r))
            R, piv = rref_rows(R + [list(r)], n, p)
    return out


def _orderings(d: DimensionVector) -> list[tuple[str, ...]]:
    letters = [k for k, v in d.items for _ in range(v)]
    return sorted(set(permutations(letters)))


def _flag_comodule(c: Coalgebra, coeffs: dict) -> Comodule:
    """Comodule with ``rho(x_s) = sum_t coeffs[(s, t)] (x) x_t`` (0-based)."""
    m = 1 + max(s for s, _ in coeffs)
    n = c.dim
    acts = [[[0] * m for _ in range(m)] for _ in range(n)]
    for (s, t), vec in coeffs.items():
        for i, x in enumerate(vec):
            if x:
                acts[i][s][t] = x
    return Comodule.from_actions(c, acts)


# ---------------------------------------------------------------- comodule enumeration


def _candidates(c: Coalgebra, d: DimensionVector, budget: Budget):
    """Flag data covering every iso class with dimension vector ``d`` (with repeats)."""
    p = c.p
    n = c.dim
    gs = dict(zip(grouplike_labels(c), require_pointed(c)))
    for k in d.support():
        if k not in gs:
            raise InputError(f"{k!r} is not a grouplike")
    spaces = _FlagSpaces(c)
    m = d.total
    budget.check("comodule length", m, "max_total_dim")
    produced = 0

    def bump(k=1):
        nonlocal produced
        produced += k
        budget.check("raw comodule candidates", produced, "max_classes")

    if m == 0:
        return
    for sigma in _orderings(d):
        g = [gs[x] for x in sigma]
        if m == 1:
            bump()
            yield _flag_comodule(c, {(0, 0): g[0]})
            continue
        P21 = spaces.primitives(g[1], g[0])
        cob21 = [(a - b) % p for a, b in zip(g[0], g[1])]
        comp21 = _complement(p, n, P21, [cob21])
        c21s = [[0] * n] + [_combine(p, v, comp21, n) for v in _projective_reps(p, len(comp21))]
        if m == 2:
            for c21 in c21s:
                bump()
                yield _flag_comodule(c, {(0, 0): g[0], (1, 1): g[1], (1, 0): c21})
            continue
        P32 = spaces.primitives(g[2], g[1])
        cob32 = [(a - b) % p for a, b in zip(g[1], g[2])]
        comp32 = _complement(p, n, P32, [cob32])
        c32s = [[0] * n] + [_combine(p, v, comp32, n) for v in _projective_reps(p, len(comp32))]
        P31 = spaces.primitives(g[2], g[0])
        for c21 in c21s:
            for c32 in c32s:
                base = spaces.solve_c31(g[2], g[0], c32, c21)
                if base is None:
                    continue
                R = [[(a - b) % p for a, b in zip(g[0], g[2])]]
                if g[1] == g[2]:
                    R.append(c21)
                if g[0] == g[1]:
                    R.append(c32)
                comp31 = _complement(p, n, P31, R)
                free_scale = not any(c21) or not any(c32)
                if free_scale:
                    shifts = [(0,) * len(comp31)] + list(_projective_reps(p, len(comp31)))
                else:
                    shifts = list(_vectors(p, len(comp31)))
                for v in shifts:
                    c31 = [(a + b) % p for a, b in zip(base, _combine(p, v, comp31, n))]
                    bump()
                    yield _flag_comodule(c, {(0, 0): g[0], (1, 1): g[1], (2, 2): g[2],
                                             (1, 0): c21, (2, 1): c32, (2, 0): c31})
    if m > 3:  # pragma: no cover - guarded by the budget above
        raise BudgetExceeded("flag enumeration is implemented up to length 3")


def _signature(M: Comodule) -> tuple:
    """Isomorphism invariants used to bucket candidates."""
    p = M.p
    ranks = tuple(len(rref_rows(a, M.dim, p)[0]) if M.dim else 0 for a in M.actions)
    series = tuple(len(r) for r in socle_series(M))
    return (M.dim, cf(M).dim, len(hom_space(M, M)), series, ranks)


def enumerate_comodules(c: Coalgebra, d: DimensionVector, budget: Budget | None = None,
                        seed: int = 0) -> list[Comodule]:
    """Pairwise non-isomorphic comodules with dimension vector ``d`` (exhaustive over GF(p))."""
    budget = budget or default_budget()
    _require_small_field(c, budget)
    buckets: dict = {}
    out = []
    for M in _candidates(c, d, budget):
        if not check_comodule(M):  # pragma: no cover - flag data are solved exactly
            raise AssertionError("flag candidate violates the comodule axioms")
        sig = _signature(M)
        reps = buckets.setdefault(sig, [])
        if any(is_isomorphic(M, R, seed) for R in reps):
            continue
        reps.append(M)
        out.append(M)
    return out


def random_comodule(c: Coalgebra, d: DimensionVector, rng: random.Random) -> Comodule:
    """A random comodule with dimension vector ``d`` in a random basis."""
    p = c.p
    n = c.dim
    gs = dict(zip(grouplike_labels(c), require_pointed(c)))
    spaces = _FlagSpaces(c)
    sigma = rng.choice(_orderings(d))
    g = [gs[x] for x in sigma]
    m = len(g)

    def rand_in(rows):
        return _combine(p, [rng.randrange(p) for _ in rows], rows, n)

    coeffs = {(s, s): g[s] for s in range(m)}
    if m >= 2:
        coeffs[(1, 0)] = rand_in(spaces.primitives(g[1], g[0]))
    if m == 3:
        c21 = coeffs[(1, 0)]
        P32 = spaces.primitives(g[2], g[1])
        for _ in range(20):
            c32 = rand_in(P32)
            base = spaces.solve_c31(g[2], g[0], c32, c21)
            if base is not None:
                break
        else:
            c32 = [0] * n
            base = spaces.solve_c31(g[2], g[0], c32, c21)
        coeffs[(2, 1)] = c32
        extra = rand_in(spaces.primitives(g[2], g[0]))
        coeffs[(2, 0)] = [(a + b) % p for a, b in zip(base, extra)]
    M = _flag_comodule(c, coeffs)
    while True:
        P = [[rng.randrange(p) for _ in range(m)] for _ in range(m)]
        if Matrix(c.field, P, m).is_invertible():
            return M.change_basis(P)


# ---------------------------------------------------------------- extensions


@dataclass
class ExtensionCount:
    dim: int
    classes: int
    representatives: list = dc_field(default_factory=list)
    valid_cocycles: int = 0


def enumerate_extensions(s: Comodule, t: Comodule, budget: Budget | None = None) -> ExtensionCount:
    """Count extensions ``0 -> T -> Y -> S -> 0`` by trying every coefficient vector.

    Every ``x`` in ``C`` is tried as the off-diagonal coefficient of
    ``rho(u) = h (x) u + x (x) v``, ``rho(v) = g (x) v``; the comodule axioms are
    checked directly.  Classes are orbits of ``x -> x + lam (g - h)``.
    """
    c = s.coalgebra
    budget = budget or default_budget()
    p = _require_small_field(c, budget)
    n = c.dim
    budget.check("extension candidates", p ** n, "max_candidates")
    h = [a[0][0] for a in s.actions]
    g = [a[0][0] for a in t.actions]
    shift = [(a - b) % p for a, b in zip(g, h)]
    valid = []
    for x in _vectors(p, n):
        if _is_extension_cocycle(c, h, g, x):
            valid.append(x)
    seen = set()
    reps = []
    for x in valid:
        if x in seen:
            continue
        orbit = {tuple((a + lam * b) % p for a, b in zip(x, shift)) for lam in range(p)}
        seen |= orbit
        rep = min(orbit)
        reps.append(_flag_comodule(c, {(0, 0): g, (1, 1): h, (1, 0): list(rep)}))
    classes = len(reps)
    dim = round(math.log(classes, p)) if classes else 0
    if p ** dim != classes:  # pragma: no cover - classes form a vector space
        raise AssertionError(f"{classes} extension classes is not a power of {p}")
    return ExtensionCount(dim, classes, reps, len(valid))


def _is_extension_cocycle(c: Coalgebra, h, g, x) -> bool:
    # basis v = x_0 (socle, grouplike g), u = x_1 (top, grouplike h)
    M = _flag_comodule(c, {(0, 0): list(g), (1, 1): list(h), (1, 0): list(x)})
    return bool(check_comodule(M))


# ---------------------------------------------------------------- coefficient coalgebras


def min_subcoalgebra_oracle(m: Comodule, budget: Budget | None = None) -> Subspace:
    """Smallest subcoalgebra containing the coaction coefficients, by closure.

    Start from the coefficient span and keep adding the row and column spaces
    of ``Delta(x)`` (viewed as an ``n x n`` matrix) until nothing changes.
    """
    c = m.coalgebra
    budget = budget or default_budget()
    budget.check("oracle coalgebra dimension", c.dim, "max_coalgebra_dim")
    n = c.dim
    f = c.field
    vecs = [[m.actions[i][s][t] for i in range(n)] for s in range(m.dim) for t in range(m.dim)]
    V = Subspace.span(f, n, vecs) if vecs else Subspace.zero(f, n)
    while True:
        new = []
        for r in V.rows:
            D = c.apply_delta(r)
            mat = [D[j * n:(j + 1) * n] for j in range(n)]
            new.extend(mat)
            new.extend([list(col) for col in zip(*mat)])
        W = V + Subspace.span(f, n, [v for v in new if any(v)]) if new else V
        if W == V:
            return V
        V = W


def cf_dimvec_from_classes(c: Coalgebra, d: DimensionVector, budget: Budget | None = None) -> Subspace:
    """``sum cf(M)`` over the iso classes returned by :func:`enumerate_comodules`."""
    out = c.zero_space()
    for M in enumerate_comodules(c, d, budget):
        out = out + cf(M)
    return out


@dataclass
class SweepStats:
    orderings: int = 0
    points: int = 0


def cf_dimvec_oracle(c: Coalgebra, d: DimensionVector, budget: Budget | None = None,
                     stats: SweepStats | None = None) -> Subspace:
    """``sum cf(M)`` over every comodule with dimension vector ``d`` (fibered sweep).

    Sums over all comodules rather than a class list, which gives the same
    span.  For length 3 the coefficient ``c21`` is swept over every line of
    its solution space; for each line the admissible ``c32`` form a linear
    space and ``c31`` is affine in ``c32``, so one linear solve per line
    accounts for every comodule over that line.
    """
    budget = budget or default_budget()
    p = _require_small_field(c, budget)
    n = c.dim
    gs = dict(zip(grouplike_labels(c), require_pointed(c)))
    for k in d.support():
        if k not in gs:
            raise InputError(f"{k!r} is not a grouplike")
    m = d.total
    budget.check("comodule length", m, "max_total_dim")
    stats = stats if stats is not None else SweepStats()
    spaces = _FlagSpaces(c)
    acc: list[list[int]] = []
    if m == 0:
        return c.zero_space()
    for sigma in _orderings(d):
        stats.orderings += 1
        g = [gs[x] for x in sigma]
        acc.extend(g)
        if m == 1:
            continue
        P21 = spaces.primitives(g[1], g[0])
        acc.extend(P21)
        if m == 2:
            continue
        P32 = spaces.primitives(g[2], g[1])
        P31 = spaces.primitives(g[2], g[0])
        acc.extend(P32)
        acc.extend(P31)
        solver = spaces.solver(g[2], g[0])
        # sweep the smaller side; the other is cut out linearly
        sweep_left = len(P21) <= len(P32)
        swept, other = (P21, P32) if sweep_left else (P32, P21)
        budget.check("sweep points", _count_projective(p, len(swept)), "max_candidates")
        for coeffs in _projective_reps(p, len(swept)):
            stats.points += 1
            a = _combine(p, coeffs, swept, n)

            def tens(b):
                return (_tensor(b, a, p) if sweep_left else _tensor(a, b, p)) + [0]

            res = [solver.residual(tens(b)) for b in other]
            eqs = [list(r) for r in zip(*res)] if other else []
            eqs = [r for r in eqs if any(r)]
            if not other:
                L = []
            elif eqs:
                L = kernel_rows(eqs, len(other), p)
            else:
                L = [[1 if i == j else 0 for j in range(len(other))] for i in range(len(other))]
            for coef in L:
                b = _combine(p, coef, other, n)
                x = solver.solve(tens(b))
                if x is None:  # pragma: no cover - b was chosen in the solvable subspace
                    raise AssertionError("fibre solve failed")
                acc.append(a)
                acc.append(b)
                acc.append(x)
    return c.span([v for v in acc if any(v)])


__all__ = [
    "enumerate_comodules", "random_comodule", "ExtensionCount", "enumerate_extensions",
    "min_subcoalgebra_oracle", "cf_dimvec_oracle", "cf_dimvec_from_classes", "SweepStats",
    "dimension_vector",
]
