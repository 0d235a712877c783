"""Ext^1 between simples, the Ext quiver, the cf(d) recursion and wildness witnesses.

``Ext^1(S_h, S_g)`` classifies extensions ``0 -> S_g -> Y -> S_h -> 0``.  With
``rho(u) = h (x) u + x (x) v`` and ``rho(v) = g (x) v`` the axioms say exactly
that ``x`` is an ``(h, g)``-skew primitive:

    Delta(x) = h (x) x + x (x) g,     counit(x) = 0.

Rescaling ``u -> u + lam v`` moves ``x`` by ``lam (g - h)``, so
``dim Ext^1(S_h, S_g) = dim P(h, g) - [h != g]``.  The Ext quiver has
``dim Ext^1(S_h, S_g)`` arrows ``h -> g``; for a path coalgebra this returns the
quiver itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Sequence

from .budget import Budget, default_budget
from .coalgebra import (Coalgebra, Quiver, Subspace, check_coalgebra, grouplike_labels, path_coalgebra,
                        require_pointed, wedge, gamma3, loop_quiver)
from .comodule import Comodule, DimensionVector, cf
from .errors import InputError
from .exactlin.matrix import kernel_rows

INF = math.inf


def _pivots(R) -> list[int]:
    return [next(i for i, x in enumerate(r) if x) for r in R]


# ---------------------------------------------------------------- Ext^1


def skew_primitives(c: Coalgebra, h: Sequence, g: Sequence) -> Subspace:
    """``P(h, g) = {x : Delta(x) = h (x) x + x (x) g, counit(x) = 0}``."""
    f = c.field
    n = c.dim
    p = c.p
    cols = []
    for i in range(n):
        e = c.basis_vector(i)
        D = c.apply_delta(e)
        for j in range(n):
            if h[j]:
                D[j * n + i] = f.sub(D[j * n + i], h[j])
            if g[j]:
                D[i * n + j] = f.sub(D[i * n + j], g[j])
        D.append(c.counit[i])
        cols.append(D)
    eqs = [list(r) for r in zip(*cols)]
    eqs = [r for r in eqs if any(r)]
    if not eqs:
        return c.full()
    K = kernel_rows(eqs, n, p)
    return Subspace._from_rref(f, n, K, _pivots(K))


def _grouplike_of(s: Comodule) -> list:
    if s.dim != 1:
        raise InputError("expected a one-dimensional (simple) comodule")
    return [a[0][0] for a in s.actions]


def ext1_dim_grouplikes(c: Coalgebra, h: Sequence, g: Sequence) -> int:
    P = skew_primitives(c, h, g)
    return P.dim - (0 if list(h) == list(g) else 1)


def ext1_dim(s: Comodule, t: Comodule) -> int:
    """``dim Ext^1(S, T)``: extensions ``0 -> T -> Y -> S -> 0`` of simple comodules."""
    c = s.coalgebra
    require_pointed(c)
    return ext1_dim_grouplikes(c, _grouplike_of(s), _grouplike_of(t))


@dataclass
class ExtQuiver:
    quiver: Quiver
    multiplicity: dict        # (h label, g label) -> dim Ext^1(S_h, S_g)
    grouplikes: list          # coordinate vectors, in vertex order

    def arrows_between(self, h: str, g: str) -> int:
        return self.multiplicity.get((h, g), 0)


def ext_quiver(c: Coalgebra) -> ExtQuiver:
    gs = require_pointed(c)
    labels = grouplike_labels(c)
    mult = {}
    arrows = []
    for (lh, h), (lg, g) in product(list(zip(labels, gs)), repeat=2):
        k = ext1_dim_grouplikes(c, h, g)
        if k:
            mult[(lh, lg)] = k
            arrows.extend((f"ext[{lh},{lg}]{r}", lh, lg) for r in range(k))
    return ExtQuiver(Quiver(tuple(labels), tuple(arrows)), mult, gs)


# ---------------------------------------------------------------- cf(d) recursion


def _splittings(d: DimensionVector):
    """Nontrivial ordered pairs ``(e, f)`` with ``e + f = d``, lexicographic in ``e``."""
    keys = [k for k, _ in d.items]
    ranges = [range(v + 1) for _, v in d.items]
    for combo in product(*ranges):
        e = DimensionVector(tuple(zip(keys, combo)))
        f = DimensionVector(tuple((k, v - x) for k, v, x in zip(keys, [v for _, v in d.items], combo)))
        if e.total and f.total:
            yield e, f


def cf_dimvec(c: Coalgebra, d: DimensionVector, budget: Budget | None = None,
              memo: dict | None = None) -> Subspace:
    """Upper bound for ``cf(d)``: ``Kg`` for a single simple, otherwise
    ``sum cf(f) ^ cf(e)`` over all nontrivial ``e + f = d``."""
    budget = budget or default_budget()
    gs = require_pointed(c)
    labels = grouplike_labels(c)
    index = dict(zip(labels, gs))
    for k in d.support():
        if k not in index:
            raise InputError(f"{k!r} is not a grouplike of this coalgebra")
    downset = 1
    for _, v in d.items:
        downset *= v + 1
    budget.check("dimension-vector downset", downset, "max_candidates")
    memo = {} if memo is None else memo

    def rec(dv: DimensionVector) -> Subspace:
        key = dv.key()
        if key in memo:
            return memo[key]
        if dv.total == 0:
            out = c.zero_space()
        elif dv.total == 1:
            out = c.span([index[dv.support()[0]]])
        else:
            out = c.zero_space()
            for e, f in _splittings(dv):
                out = out + wedge(c, rec(f), rec(e))
        memo[key] = out
        return out

    return rec(d)


# ---------------------------------------------------------------- local finiteness


@dataclass(frozen=True)
class VertexFamily:
    """A family of vertices sharing the same arrow pattern; ``size`` may be ``INF``."""

    name: str
    size: float = INF


@dataclass
class QuiverPresentation:
    """Quiver data with possibly infinite counts.

    ``vertices`` lists plain labels and :class:`VertexFamily` entries.  Each
    arrow record ``(src, tgt, count)`` puts ``count`` arrows from every vertex
    of ``src`` to every vertex of ``tgt``; ``count`` may be ``INF``.
    """

    vertices: list
    arrows: list = dc_field(default_factory=list)

    def _size(self, name: str) -> float:
        for v in self.vertices:
            if isinstance(v, VertexFamily) and v.name == name:
                return v.size
            if v == name:
                return 1
        raise InputError(f"undeclared vertex or family {name!r}")

    @classmethod
    def from_quiver(cls, q: Quiver) -> "QuiverPresentation":
        recs = {}
        for _, s, t in q.arrows:
            recs[(s, t)] = recs.get((s, t), 0) + 1
        return cls(list(q.vertices), [(s, t, k) for (s, t), k in sorted(recs.items())])


def is_locally_finite(q: QuiverPresentation | Quiver) -> bool:
    """Finitely many arrows between every ordered pair of vertices."""
    if isinstance(q, Quiver):
        return True
    totals: dict = {}
    for s, t, k in q.arrows:
        q._size(s), q._size(t)
        totals[(s, t)] = totals.get((s, t), 0) + k
    return all(v != INF for v in totals.values())


def is_f_finite(q: QuiverPresentation | Quiver) -> bool:
    """Every vertex has finite in-bound degree."""
    if isinstance(q, Quiver):
        return True
    indeg: dict = {}
    for s, t, k in q.arrows:
        src = q._size(s)
        q._size(t)
        contrib = 0 if k == 0 else k * src
        indeg[t] = indeg.get(t, 0) + contrib
    return all(v != INF for v in indeg.values())


# ---------------------------------------------------------------- wildness witness


@dataclass
class WildnessWitness:
    found: bool
    kind: str = ""                       # "Gamma3" or "three-loops"
    pair: tuple = ()
    basis: list = dc_field(default_factory=list)    # coordinate vectors in C
    model: Coalgebra | None = None
    checks: dict = dc_field(default_factory=dict)
    multiplicities: dict = dc_field(default_factory=dict)

    def describe(self) -> str:
        if not self.found:
            return "no Ext-count witness (this is not a tameness certificate)"
        h, g = self.pair
        return f"{self.kind} witness on Ext^1(S_{h}, S_{g}) of dimension {self.multiplicities[(h, g)]}"


def verify_coalgebra_map(model: Coalgebra, c: Coalgebra, images: Sequence[Sequence]) -> bool:
    """Is ``b_i -> images[i]`` an injective coalgebra map ``model -> c``?"""
    f = c.field
    n = c.dim
    if len(images) != model.dim:
        return False
    if len(Subspace.span(f, n, images).rows) != model.dim:
        return False
    for i in range(model.dim):
        if c.counit_of(images[i]) != model.counit[i]:
            return False
        lhs = c.apply_delta(images[i])
        rhs = [f.zero] * (n * n)
        for j, k, x in model.delta[i]:
            for a, u in enumerate(images[j]):
                if not u:
                    continue
                for b, v in enumerate(images[k]):
                    if v:
                        rhs[a * n + b] = f.add(rhs[a * n + b], f.mul(x, f.mul(u, v)))
        if lhs != rhs:
            return False
    return True


def wildness_witness(c: Coalgebra) -> WildnessWitness:
    eq = ext_quiver(c)
    labels = list(eq.quiver.vertices)
    gvec = dict(zip(labels, eq.grouplikes))
    for (h, g), k in sorted(eq.multiplicity.items()):
        if k < 3:
            continue
        P = skew_primitives(c, gvec[h], gvec[g])
        if h == g:
            chosen = [list(r) for r in P.rows[:3]]
            model = path_coalgebra(loop_quiver(3), 1, c.field)
            images = [gvec[g]] + chosen
            kind = "three-loops"
        else:
            # skip the coboundary direction h - g
            cob = c.span([[c.field.sub(x, y) for x, y in zip(gvec[g], gvec[h])]])
            chosen = []
            acc = cob
            for r in P.rows:
                if not acc.contains_vector(r):
                    chosen.append(list(r))
                    acc = acc + c.span([r])
                if len(chosen) == 3:
                    break
            model = path_coalgebra(gamma3(), 1, c.field)
            images = [gvec[h], gvec[g]] + chosen
            kind = "Gamma3"
        sub = c.span(images)
        checks = {
            "is_subcoalgebra": c.is_subcoalgebra(sub),
            "restriction_passes_check": bool(check_coalgebra(c.restrict(sub))),
            "model_map_is_coalgebra_embedding": verify_coalgebra_map(model, c, images),
        }
        return WildnessWitness(True, kind, (h, g), images, model, checks, dict(eq.multiplicity))
    return WildnessWitness(False, multiplicities=dict(eq.multiplicity))


def embedding_support(c: Coalgebra, images: Sequence[Comodule]) -> Subspace:
    """``H = cf`` of the given comodules: the finite subcoalgebra an embedding must live in."""
    out = c.zero_space()
    for m in images:
        out = out + cf(m)
    return out


__all__ = [
    "INF", "skew_primitives", "ext1_dim", "ext1_dim_grouplikes", "ExtQuiver", "ext_quiver",
    "cf_dimvec", "VertexFamily", "QuiverPresentation", "is_locally_finite", "is_f_finite",
    "WildnessWitness", "wildness_witness", "verify_coalgebra_map", "embedding_support",
]
