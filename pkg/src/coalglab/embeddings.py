"""Representation-embedding functors on finite truncations, and a harness that checks them.

Sources and targets are all turned into :class:`~coalglab.linmod.ActionModule`
objects, so one set of routines (Hom, decompose, isomorphism) serves every
category involved.  Morphisms are matrices acting on row vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations_with_replacement
from typing import Callable, Sequence

from .budget import Budget, default_budget
from .coalgebra import Coalgebra, Quiver, kronecker_quiver, loop_quiver, path_coalgebra, path_label
from .comodule import Comodule, DimensionVector, check_comodule
from .errors import InputError
from .exactlin.algebra import span_is_nilpotent
from .exactlin.field import Field
from .exactlin.matrix import Matrix, matmul_rows, rref_rows
from . import linmod


def _zero(f: Field, r: int, c: int) -> list[list]:
    return [[f.zero] * c for _ in range(r)]


def _ident(f: Field, n: int) -> list[list]:
    return [[f.one if i == j else f.zero for j in range(n)] for i in range(n)]


def _block_diag(f: Field, blocks: Sequence[Sequence[Sequence]], sizes: Sequence[tuple[int, int]]) -> list[list]:
    R = sum(r for r, _ in sizes)
    C = sum(c for _, c in sizes)
    out = _zero(f, R, C)
    r0 = c0 = 0
    for b, (r, c) in zip(blocks, sizes):
        for i in range(r):
            for j in range(c):
                out[r0 + i][c0 + j] = b[i][j]
        r0 += r
        c0 += c
    return out


# ---------------------------------------------------------------- object types


@dataclass
class FreeAlgebraModule:
    """Right module over ``K<x_0, ..., x_{k-1}>``: one matrix per variable."""

    field: Field
    dim: int
    gens: list
    names: tuple = ()

    def __post_init__(self):
        f = self.field
        self.gens = [[[f(x) for x in r] for r in g] for g in self.gens]
        for g in self.gens:
            if len(g) != self.dim or any(len(r) != self.dim for r in g):
                raise InputError(f"generator is not {self.dim} x {self.dim}")
        if not self.names:
            self.names = tuple(f"x{i}" for i in range(len(self.gens)))

    @property
    def k(self) -> int:
        return len(self.gens)

    def module(self) -> linmod.ActionModule:
        return linmod.ActionModule(self.field, self.dim, self.gens)

    def direct_sum(self, other: "FreeAlgebraModule") -> "FreeAlgebraModule":
        M = self.module().direct_sum(other.module())
        return type(self)(self.field, M.dim, M.actions, self.names)


class NilpotentFreeModule(FreeAlgebraModule):
    """A module on which the non-unital algebra generated by the ``X_i`` is nilpotent."""

    def __post_init__(self):
        super().__post_init__()
        if self.dim and self.gens:
            mats = [Matrix(self.field, g, self.dim) for g in self.gens]
            if not span_is_nilpotent(mats, self.field):
                raise InputError("the generators do not act nilpotently")


@dataclass
class QuiverRep:
    """Vertex dimensions and arrow matrices; arrow ``s -> t`` is a ``dim_s x dim_t`` matrix on rows."""

    quiver: Quiver
    field: Field
    spaces: dict
    maps: dict

    def __post_init__(self):
        f = self.field
        for v in self.quiver.vertices:
            self.spaces.setdefault(v, 0)
        for v in self.spaces:
            if v not in self.quiver.vertices:
                raise InputError(f"unknown vertex {v!r}")
        fixed = {}
        for name, s, t in self.quiver.arrows:
            m = self.maps.get(name)
            if m is None:
                m = _zero(f, self.spaces[s], self.spaces[t])
            m = [[f(x) for x in r] for r in m]
            if len(m) != self.spaces[s] or any(len(r) != self.spaces[t] for r in m):
                raise InputError(f"arrow {name!r} needs a {self.spaces[s]} x {self.spaces[t]} matrix")
            fixed[name] = m
        extra = set(self.maps) - set(fixed)
        if extra:
            raise InputError(f"unknown arrows {sorted(extra)}")
        self.maps = fixed

    @property
    def dim(self) -> int:
        return sum(self.spaces.values())

    def offsets(self) -> dict:
        out, o = {}, 0
        for v in self.quiver.vertices:
            out[v] = o
            o += self.spaces[v]
        return out

    def dimension_vector(self) -> DimensionVector:
        return DimensionVector.of(self.spaces)

    def vertex_projection(self, v: str) -> list[list]:
        f = self.field
        n = self.dim
        o = self.offsets()[v]
        out = _zero(f, n, n)
        for i in range(self.spaces[v]):
            out[o + i][o + i] = f.one
        return out

    def arrow_matrix(self, name: str) -> list[list]:
        f = self.field
        n = self.dim
        off = self.offsets()
        _, s, t = next(a for a in self.quiver.arrows if a[0] == name)
        out = _zero(f, n, n)
        for i, r in enumerate(self.maps[name]):
            for j, x in enumerate(r):
                out[off[s] + i][off[t] + j] = x
        return out

    def module(self) -> linmod.ActionModule:
        acts = [self.vertex_projection(v) for v in self.quiver.vertices]
        acts += [self.arrow_matrix(nm) for nm, _, _ in self.quiver.arrows]
        return linmod.ActionModule(self.field, self.dim, acts)

    def direct_sum(self, other: "QuiverRep") -> "QuiverRep":
        f = self.field
        spaces = {v: self.spaces[v] + other.spaces[v] for v in self.quiver.vertices}
        maps = {}
        for nm, s, t in self.quiver.arrows:
            maps[nm] = _block_diag(f, [self.maps[nm], other.maps[nm]],
                                   [(self.spaces[s], self.spaces[t]), (other.spaces[s], other.spaces[t])])
        return QuiverRep(self.quiver, f, spaces, maps)


def _path_matrix(rep: QuiverRep, arrows: Sequence[str]) -> list[list]:
    p = rep.field.characteristic
    M = rep.arrow_matrix(arrows[0])
    for a in arrows[1:]:
        M = matmul_rows(M, rep.arrow_matrix(a), p)
    return M


def rep_to_comodule(rep: QuiverRep, c: Coalgebra, max_len: int) -> Comodule:
    """The comodule over the length-``max_len`` path coalgebra attached to a nilpotent representation."""
    q = rep.quiver
    acts = [None] * c.dim
    for s, t, path in q.paths(max_len):
        if not path:
            acts[c.index(s)] = rep.vertex_projection(s)
            continue
        acts[c.index(path_label(q, (s, t, path)))] = _path_matrix(rep, [q.arrows[i][0] for i in path])
    if any(a is None for a in acts):
        raise InputError("coalgebra basis does not match the quiver paths")
    m = Comodule.from_actions(c, acts)
    if not check_comodule(m):
        raise InputError("representation is not nilpotent of the given length")
    return m


def comodule_to_rep(m: Comodule, q: Quiver) -> QuiverRep:
    """Read a representation off a comodule over a path coalgebra of ``q``."""
    c = m.coalgebra
    f = m.field
    p = m.p
    mod = m.module()
    bases = {}
    for v in q.vertices:
        E = mod.actions[c.index(v)]
        R, _ = rref_rows(E, m.dim, p) if m.dim else ([], [])
        bases[v] = R
    spaces = {v: len(bases[v]) for v in q.vertices}
    maps = {}
    for name, s, t in q.arrows:
        A = mod.actions[c.index(name)]
        S = bases[s]
        T = bases[t]
        if not S or not T:
            maps[name] = _zero(f, len(S), len(T))
            continue
        TM = Matrix(f, T, m.dim)
        rows = []
        for r in S:
            img = [sum((r[a] * A[a][b] for a in range(m.dim) if r[a]), f.zero) for b in range(m.dim)]
            img = [f(x) for x in img]
            sol = TM.T.solve(Matrix(f, [[x] for x in img], 1))
            if sol is None:
                raise InputError("arrow does not map between vertex spaces")
            rows.append([sol[i, 0] for i in range(len(T))])
        maps[name] = rows
    return QuiverRep(q, f, spaces, maps)


# ---------------------------------------------------------------- functors


@dataclass
class Functor:
    """An object map and a morphism map; ``full`` marks functors claimed to be full."""

    name: str
    apply: Callable
    on_morphism: Callable
    full: bool = False
    source_module: Callable = lambda x: x.module()
    target_module: Callable = lambda y: y.module()


def functor_F(m: FreeAlgebraModule) -> QuiverRep:
    """``M`` on both vertices of the ``k + 1`` Kronecker quiver: arrow 0 is the identity, arrow ``i + 1`` is ``X_i``."""
    f = m.field
    q = kronecker_quiver(m.k + 1)
    maps = {"x0": _ident(f, m.dim)}
    for i, X in enumerate(m.gens):
        maps[f"x{i + 1}"] = X
    return QuiverRep(q, f, {"a": m.dim, "b": m.dim}, maps)


def functor_F_morphism(phi: Sequence[Sequence], src: FreeAlgebraModule, tgt: FreeAlgebraModule) -> list[list]:
    return _block_diag(src.field, [phi, phi], [(src.dim, tgt.dim)] * 2)


def functor_G(m: FreeAlgebraModule) -> Comodule:
    """``M (+) M`` over the length-1 coalgebra of ``k + 1`` loops with ``z_0 = (0 1; 0 0)`` and ``z_{i+1} = (0 X_i; 0 0)``."""
    f = m.field
    q = loop_quiver(m.k + 1)
    c = path_coalgebra(q, 1, f)
    n = m.dim
    acts = [None] * c.dim
    acts[c.index(q.vertices[0])] = _ident(f, 2 * n)
    blocks = [_ident(f, n)] + list(m.gens)
    for (name, _, _), X in zip(q.arrows, blocks):
        Z = _zero(f, 2 * n, 2 * n)
        for i in range(n):
            for j in range(n):
                Z[i][n + j] = X[i][j]
        acts[c.index(name)] = Z
    return Comodule.from_actions(c, acts)


def functor_G_morphism(phi, src: FreeAlgebraModule, tgt: FreeAlgebraModule) -> list[list]:
    return _block_diag(src.field, [phi, phi], [(src.dim, tgt.dim)] * 2)


def _check_lambdas(f: Field, lambdas: Sequence, need: int) -> list:
    lam = [f(x) for x in lambdas]
    if len(lam) < need:
        raise InputError(f"need at least {need} scalars, got {len(lam)}")
    if len(set(lam[:need])) != need:
        raise InputError("the scalars must be pairwise distinct")
    return lam


def shift_embedding(m: FreeAlgebraModule, trunc: int, lambdas: Sequence | None = None) -> FreeAlgebraModule:
    """``M^trunc`` with ``y`` acting by ``X_n`` on block ``n``, ``z`` shifting block ``n`` to ``n - 1``
    and ``t`` acting on block ``n`` as the scalar ``lambda_n``."""
    f = m.field
    if trunc < 1:
        raise InputError("truncation must be at least 1")
    if m.k > trunc:
        raise InputError(f"{m.k} variables do not fit in {trunc} blocks")
    lam = _check_lambdas(f, range(trunc) if lambdas is None else lambdas, trunc)
    n = m.dim
    N = n * trunc
    Y = _zero(f, N, N)
    Z = _zero(f, N, N)
    T = _zero(f, N, N)
    for b in range(trunc):
        X = m.gens[b] if b < m.k else _zero(f, n, n)
        for i in range(n):
            for j in range(n):
                Y[b * n + i][b * n + j] = X[i][j]
            if b:
                Z[b * n + i][(b - 1) * n + i] = f.one
            T[b * n + i][b * n + i] = lam[b]
    return FreeAlgebraModule(f, N, [Y, Z, T], ("y", "z", "t"))


def shift_embedding_morphism(phi, src: FreeAlgebraModule, tgt: FreeAlgebraModule, trunc: int) -> list[list]:
    return _block_diag(src.field, [phi] * trunc, [(src.dim, tgt.dim)] * trunc)


def bounded_quiver_embedding(r: QuiverRep, n: int | None = None, lambdas: dict | Sequence | None = None) -> FreeAlgebraModule:
    """``(+)_a M_a`` with ``x_0 = lambda_a`` on ``M_a`` and ``x_i`` acting by the ``i``-th arrow ``a -> b``."""
    f = r.field
    q = r.quiver
    verts = list(q.vertices)
    per_pair: dict = {}
    for name, s, t in q.arrows:
        per_pair.setdefault((s, t), []).append(name)
    bound = max((len(v) for v in per_pair.values()), default=0)
    if n is None:
        n = bound
    if bound > n:
        raise InputError(f"a vertex pair carries {bound} arrows, more than the bound {n}")
    if lambdas is None:
        lambdas = list(range(len(verts)))
    if isinstance(lambdas, dict):
        lam = {v: f(lambdas[v]) for v in verts if v in lambdas}
        missing = [v for v in verts if r.spaces[v] and v not in lam]
        if missing:
            raise InputError(f"no scalar for vertices {missing}")
    else:
        vals = _check_lambdas(f, lambdas, len(verts))
        lam = dict(zip(verts, vals))
    support = [v for v in verts if r.spaces[v]]
    if len({lam[v] for v in support}) != len(support):
        raise InputError("the scalars must be distinct on the support")
    dim = r.dim
    off = r.offsets()
    X0 = _zero(f, dim, dim)
    for v in support:
        for i in range(r.spaces[v]):
            X0[off[v] + i][off[v] + i] = lam[v]
    gens = [X0]
    for i in range(n):
        X = _zero(f, dim, dim)
        for (s, t), names in per_pair.items():
            if i < len(names):
                for a, row in enumerate(r.maps[names[i]]):
                    for b, x in enumerate(row):
                        X[off[s] + a][off[t] + b] = x
        gens.append(X)
    return FreeAlgebraModule(f, dim, gens)


def identity_functor() -> Functor:
    return Functor("identity", lambda x: x, lambda phi, s, t: [list(r) for r in phi], full=True)


def zero_functor() -> Functor:
    """Sends everything to the zero module; a negative control that must fail."""
    def to_zero(x):
        return linmod.ActionModule(x.field if hasattr(x, "field") else x.module().field, 0,
                                   [[] for _ in x.module().actions])
    return Functor("zero", to_zero, lambda phi, s, t: [], full=False, target_module=lambda y: y)


def F_functor() -> Functor:
    return Functor("F", functor_F, functor_F_morphism, full=True)


def G_functor() -> Functor:
    return Functor("G", functor_G, functor_G_morphism, full=False)


def shift_functor(trunc: int, lambdas: Sequence | None = None) -> Functor:
    return Functor(
        f"shift[{trunc}]",
        lambda m: shift_embedding(m, trunc, lambdas),
        lambda phi, s, t: shift_embedding_morphism(phi, s, t, trunc),
        full=True,
    )


def bounded_functor(n: int | None = None, lambdas=None) -> Functor:
    return Functor(
        "bounded",
        lambda r: bounded_quiver_embedding(r, n, lambdas),
        lambda phi, s, t: [list(x) for x in phi],
        full=True,
    )


# ---------------------------------------------------------------- source corpora


def nilpotent_module_classes(field: Field, dim: int, k: int, budget: Budget | None = None,
                             seed: int = 0) -> list[NilpotentFreeModule]:
    """Isomorphism classes of nilpotent ``K<x_0..x_{k-1}>``-modules of dimension ``dim`` (finite field)."""
    from .oracle import enumerate_comodules

    if dim == 0:
        return [NilpotentFreeModule(field, 0, [[] for _ in range(k)])]
    if k == 0:
        return [NilpotentFreeModule(field, dim, [])]
    q = loop_quiver(k)
    c = path_coalgebra(q, max(dim - 1, 1), field)
    out = []
    for m in enumerate_comodules(c, DimensionVector.of({q.vertices[0]: dim}), budget, seed):
        gens = [m.module().actions[c.index(name)] for name, _, _ in q.arrows]
        out.append(NilpotentFreeModule(field, dim, gens))
    return out


def nilpotent_module_corpus(field: Field, max_dim: int, max_vars: int, budget: Budget | None = None,
                            seed: int = 0) -> list[NilpotentFreeModule]:
    out = []
    for k in range(max_vars + 1):
        for d in range(1, max_dim + 1):
            out.extend(nilpotent_module_classes(field, d, k, budget, seed))
    return out


def quiver_rep_classes(q: Quiver, field: Field, max_total: int, budget: Budget | None = None,
                       seed: int = 0) -> list[QuiverRep]:
    """Isomorphism classes of nilpotent representations of total dimension ``1..max_total`` (finite field)."""
    from .oracle import enumerate_comodules

    c = path_coalgebra(q, max(max_total - 1, 1), field, budget)
    verts = list(q.vertices)
    out = []
    for total in range(1, max_total + 1):
        for combo in combinations_with_replacement(verts, total):
            d = DimensionVector.of({v: combo.count(v) for v in set(combo)})
            for m in enumerate_comodules(c, d, budget, seed):
                out.append(comodule_to_rep(m, q))
    return out


# ---------------------------------------------------------------- harness


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class EmbeddingReport:
    functor: str
    checks: list = dc_field(default_factory=list)
    hom_table: list = dc_field(default_factory=list)     # (i, j, dim Hom(Fx, Fy), dim Hom(x, y))
    end_defect: list = dc_field(default_factory=list)    # dim End(Fx) - dim End(x)

    def by_name(self, name: str) -> CheckResult:
        return next(c for c in self.checks if c.name == name)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        return [f"{'PASS' if c.passed else 'FAIL'} {self.functor}.{c.name}: {c.detail}" for c in self.checks]


def _rank(rows, ncols, p) -> int:
    return len(rref_rows(rows, ncols, p)[0]) if rows and ncols else 0


def _exact_image(functor: Functor, t: linmod.Triple, X, Y, Z, FX, FY, FZ) -> str | None:
    """``None`` when ``0 -> F X -> F Y -> F Z -> 0`` is exact with the induced maps, else a reason."""
    i = functor.on_morphism(t.inclusion(), X, Y)
    pr = functor.on_morphism(t.projection(), Y, Z)
    a, b, c = FX.dim, FY.dim, FZ.dim
    p = FY.field.characteristic if b else 0
    if a + c != b:
        return f"dimensions {a} + {c} != {b}"
    if a and not linmod.is_morphism(FX, FY, i):
        return "F(inclusion) is not a morphism"
    if c and not linmod.is_morphism(FY, FZ, pr):
        return "F(projection) is not a morphism"
    if _rank(i, b, p) != a:
        return "F(inclusion) is not injective"
    if _rank(pr, c, p) != c:
        return "F(projection) is not surjective"
    if a and c and any(any(r) for r in matmul_rows(i, pr, p)):
        return "composite is nonzero"
    return None


def _lift(functor: Functor, x, M: linmod.ActionModule):
    """Rebuild a source object of the same type from an action module."""
    if isinstance(x, QuiverRep):
        q = x.quiver
        nv = len(q.vertices)
        spaces = {}
        bases = {}
        p = M.p
        for idx, v in enumerate(q.vertices):
            R, _ = rref_rows(M.actions[idx], M.dim, p) if M.dim else ([], [])
            spaces[v] = len(R)
            bases[v] = R
        # assemble the change of basis adapted to the vertex decomposition
        P = [r for v in q.vertices for r in bases[v]]
        M2 = M.change_basis(P) if M.dim else M
        off, o = {}, 0
        for v in q.vertices:
            off[v] = o
            o += spaces[v]
        maps = {}
        for j, (nm, s, t) in enumerate(q.arrows):
            A = M2.actions[nv + j]
            maps[nm] = [[A[off[s] + a][off[t] + b] for b in range(spaces[t])] for a in range(spaces[s])]
        return QuiverRep(q, M.field, spaces, maps), P
    cls = type(x)
    return cls(M.field, M.dim, M.actions, x.names), None


def verify_representation_embedding(functor: Functor, corpus: Sequence, budget: Budget | None = None,
                                    seed: int = 0, pairs: bool = True, exactness: bool = True,
                                    end_shape: Callable | None = None) -> EmbeddingReport:
    """Indecomposables, iso reflection, exactness on every enumerated short exact triple,
    and the Hom-dimension table (compared when the functor is claimed to be full)."""
    budget = budget or default_budget()
    rep = EmbeddingReport(functor.name)
    src = [functor.source_module(x) for x in corpus]
    imgs = [functor.apply(x) for x in corpus]
    tgt = [functor.target_module(y) for y in imgs]

    bad = []
    for idx, (M, FM) in enumerate(zip(src, tgt)):
        a = linmod.is_indecomposable(M, seed)
        b = linmod.is_indecomposable(FM, seed)
        if a != b:
            word = {True: "indecomposable", False: "decomposable"}
            bad.append(f"#{idx}: source {word[a]}, image {word[b]}")
    rep.checks.append(CheckResult("indecomposables", not bad,
                                  f"{len(corpus)} objects" if not bad else "; ".join(bad[:3])))

    if pairs:
        # objects with different numbers of generators live in different categories
        same = [[len(a.actions) == len(b.actions) for b in src] for a in src]
        bad = []
        npairs = 0
        for i in range(len(corpus)):
            for j in range(i + 1, len(corpus)):
                if not same[i][j] or tgt[i].dim != tgt[j].dim:
                    continue
                npairs += 1
                if linmod.is_isomorphic(tgt[i], tgt[j], seed) and not linmod.is_isomorphic(src[i], src[j], seed):
                    bad.append(f"F(#{i}) ~ F(#{j}) but #{i} !~ #{j}")
        rep.checks.append(CheckResult("iso_reflection", not bad,
                                      f"{npairs} pairs" if not bad else "; ".join(bad[:3])))

        rows = []
        for i in range(len(corpus)):
            for j in range(len(corpus)):
                if not same[i][j]:
                    continue
                hf = linmod.hom_dim(tgt[i], tgt[j]) if tgt[i].dim and tgt[j].dim else 0
                hs = linmod.hom_dim(src[i], src[j]) if src[i].dim and src[j].dim else 0
                rows.append((i, j, hf, hs))
        rep.hom_table = rows

        # every source morphism goes to a morphism of images, injectively
        bad = []
        for i in range(len(corpus)):
            for j in range(len(corpus)):
                if not same[i][j] or not src[i].dim or not src[j].dim:
                    continue
                H = linmod.hom_space(src[i], src[j])
                images = [functor.on_morphism(h, corpus[i], corpus[j]) for h in H]
                if any(not linmod.is_morphism(tgt[i], tgt[j], im) for im in images):
                    bad.append(f"#{i},#{j}: image is not a morphism")
                    continue
                flat = [[x for r in im for x in r] for im in images]
                if H and _rank(flat, tgt[i].dim * tgt[j].dim, src[i].p) != len(H):
                    bad.append(f"#{i},#{j}: not faithful")
        rep.checks.append(CheckResult("morphisms", not bad, "functorial and faithful" if not bad else "; ".join(bad[:3])))
        rep.end_defect = [hf - hs for i, j, hf, hs in rows if i == j]
        if functor.full:
            bad = [f"#{i},#{j}: {hf} vs {hs}" for i, j, hf, hs in rows if hf != hs]
            rep.checks.append(CheckResult("hom_dimensions", not bad,
                                          f"{len(rows)} pairs" if not bad else "; ".join(bad[:3])))

    if exactness:
        bad = []
        count = 0
        for idx, (x, M) in enumerate(zip(corpus, src)):
            if M.dim == 0:
                continue
            for t in linmod.short_exact_triples(M, budget, include_trivial=False):
                X, P1 = _lift(functor, x, t.sub)
                Z, P2 = _lift(functor, x, t.quotient)
                if P1 is not None or P2 is not None:
                    # adapt the triple's maps to the rebuilt bases
                    f = M.field
                    p = M.p
                    inc = t.inclusion()
                    proj = t.projection()
                    if P1:
                        inc = matmul_rows(P1, inc, p)
                    if P2:
                        proj = matmul_rows(proj, Matrix(f, P2, len(P2)).inverse().rows, p)
                    t = _AdaptedTriple(inc, proj)
                FX = functor.target_module(functor.apply(X))
                FZ = functor.target_module(functor.apply(Z))
                FY = tgt[idx]
                why = _exact_image(functor, t, X, x, Z, FX, FY, FZ)
                count += 1
                if why:
                    bad.append(f"#{idx}: {why}")
        rep.checks.append(CheckResult("exactness", not bad,
                                      f"{count} triples" if not bad else "; ".join(bad[:3])))

    if end_shape is not None:
        bad = []
        for idx, (x, FM) in enumerate(zip(corpus, tgt)):
            if FM.dim and not end_shape(x, FM):
                bad.append(f"#{idx}")
        rep.checks.append(CheckResult("end_shape", not bad,
                                      f"{len(corpus)} objects" if not bad else ", ".join(bad[:5])))
    return rep


@dataclass
class _AdaptedTriple:
    inc: list
    proj: list

    def inclusion(self):
        return self.inc

    def projection(self):
        return self.proj


def g_end_shape(m: FreeAlgebraModule, image: linmod.ActionModule) -> bool:
    """Every endomorphism of ``G(M)`` is ``(a b; 0 a)`` with ``a`` an endomorphism of ``M``."""
    n = m.dim
    Mmod = m.module()
    for E in linmod.hom_space(image, image):
        if any(E[n + i][j] for i in range(n) for j in range(n)):
            return False
        a = [[E[i][j] for j in range(n)] for i in range(n)]
        if any(E[i][j] != E[n + i][n + j] for i in range(n) for j in range(n)):
            return False
        if not linmod.is_morphism(Mmod, Mmod, a):
            return False
    return True


__all__ = [
    "FreeAlgebraModule", "NilpotentFreeModule", "QuiverRep", "rep_to_comodule", "comodule_to_rep",
    "Functor", "functor_F", "functor_F_morphism", "functor_G", "functor_G_morphism", "shift_embedding",
    "shift_embedding_morphism", "bounded_quiver_embedding", "identity_functor", "zero_functor", "F_functor",
    "G_functor", "shift_functor", "bounded_functor", "nilpotent_module_classes", "nilpotent_module_corpus",
    "quiver_rep_classes", "CheckResult", "EmbeddingReport", "verify_representation_embedding", "g_end_shape",
]
