"""Left comodules over a :class:`~coalglab.coalgebra.Coalgebra`.

A left comodule ``rho(x_s) = sum c b_i (x) x_t`` is stored through its action
matrices ``A_i[s][t]``, i.e. as a right ``C*``-module: the dual functional
``b_i*`` sends ``x_s`` to row ``s`` of ``A_i``.  The axioms become

* ``A_j A_k = sum_i mu_i^{jk} A_i``  (coassociativity), and
* ``sum_i counit_i A_i = I``          (counit).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Mapping, Sequence

from .budget import Budget, default_budget
from .coalgebra import (CheckReport, Coalgebra, Subspace, grouplike_labels, grouplikes, orthogonal,
                        require_pointed)
from .errors import InputError
from .exactlin.matrix import Matrix, kernel_rows, kron_rows, matmul_rows, reduce_against, rref_rows
from . import linmod
from .linmod import ActionModule


def _zero_mat(f, r, c):
    return [[f.zero] * c for _ in range(r)]


def _pivots(R) -> list[int]:
    return [next(i for i, x in enumerate(r) if x) for r in R]


class Comodule:
    """Finite-dimensional left comodule."""

    def __init__(self, coalgebra: Coalgebra, dim: int, rho: Iterable[Sequence]):
        """``rho`` holds quadruples ``(s, i, t, c)``: ``c b_i (x) x_t`` occurs in ``rho(x_s)``."""
        c = coalgebra
        f = c.field
        n = c.dim
        acts = [_zero_mat(f, dim, dim) for _ in range(n)]
        for s, i, t, x in rho:
            if not (0 <= s < dim and 0 <= t < dim and 0 <= i < n):
                raise InputError(f"coaction entry ({s}, {i}, {t}) out of range")
            acts[i][s][t] = f.add(acts[i][s][t], f(x))
        self._init(c, dim, acts)

    def _init(self, c: Coalgebra, dim: int, acts: list) -> None:
        self.coalgebra = c
        self.dim = dim
        self.actions = acts
        self._module: ActionModule | None = None

    @classmethod
    def from_actions(cls, c: Coalgebra, actions: Sequence[Sequence[Sequence]]) -> "Comodule":
        f = c.field
        if len(actions) != c.dim:
            raise InputError("need one action matrix per coalgebra basis element")
        dim = len(actions[0]) if actions else 0
        acts = [[[f(x) for x in r] for r in a] for a in actions]
        obj = cls.__new__(cls)
        obj._init(c, dim, acts)
        return obj

    @classmethod
    def zero(cls, c: Coalgebra) -> "Comodule":
        return cls.from_actions(c, [[] for _ in range(c.dim)])

    @classmethod
    def simple(cls, c: Coalgebra, g) -> "Comodule":
        """``rho(x) = g (x) x`` for a grouplike ``g`` (label or coordinate vector)."""
        vec = c.basis_vector(g) if isinstance(g, (str, int)) else [c.field(x) for x in g]
        return cls.from_actions(c, [[[x]] for x in vec])

    @classmethod
    def regular(cls, c: Coalgebra) -> "Comodule":
        """``C`` over itself via ``Delta``."""
        mu = c.mu()
        n = c.dim
        return cls.from_actions(c, [[[mu[i][t][s] for t in range(n)] for s in range(n)] for i in range(n)])

    @property
    def field(self):
        return self.coalgebra.field

    @property
    def p(self) -> int:
        return self.coalgebra.p

    @property
    def rho(self) -> list[tuple]:
        out = []
        for i, a in enumerate(self.actions):
            for s, row in enumerate(a):
                for t, x in enumerate(row):
                    if x:
                        out.append((s, i, t, x))
        return sorted(out)

    def module(self) -> ActionModule:
        if self._module is None:
            self._module = ActionModule(self.field, self.dim, self.actions)
        return self._module

    def act(self, functional: Sequence) -> list[list]:
        """Matrix of ``x -> x . a`` for ``a`` in ``C*``."""
        return self.module().act(functional)

    def direct_sum(self, other: "Comodule") -> "Comodule":
        M = self.module().direct_sum(other.module())
        return Comodule.from_actions(self.coalgebra, M.actions)

    def change_basis(self, P) -> "Comodule":
        return Comodule.from_actions(self.coalgebra, self.module().change_basis(P).actions)

    def submodule(self, rows) -> tuple["Comodule", list]:
        M, R = self.module().submodule(rows)
        return Comodule.from_actions(self.coalgebra, M.actions) if M.dim else Comodule.zero(self.coalgebra), R

    def quotient(self, rows) -> tuple["Comodule", list]:
        M, keep = self.module().quotient(rows)
        return Comodule.from_actions(self.coalgebra, M.actions) if M.dim else Comodule.zero(self.coalgebra), keep

    def __repr__(self) -> str:
        return f"Comodule(dim={self.dim}, over dim-{self.coalgebra.dim} coalgebra)"


def _as_comodule(c: Coalgebra, M: ActionModule) -> Comodule:
    if M.dim == 0:
        return Comodule.zero(c)
    return Comodule.from_actions(c, M.actions)


def check_comodule(m: Comodule) -> CheckReport:
    c = m.coalgebra
    f = c.field
    p = c.p
    n = c.dim
    lab = c.labels
    bad = []
    mu = c.mu()
    A = m.actions
    d = m.dim
    if d == 0:
        return CheckReport(True, [])
    for j in range(n):
        for k in range(n):
            lhs = matmul_rows(A[j], A[k], p)
            rhs = m.act(mu[j][k])
            for s in range(d):
                for t in range(d):
                    if lhs[s][t] != rhs[s][t]:
                        bad.append(f"coassociativity at rho^2(x{s})[{lab[j]} (x) {lab[k]} (x) x{t}]: "
                                   f"{f.format(rhs[s][t])} != {f.format(lhs[s][t])}")
    unit = m.act(c.counit)
    for s in range(d):
        for t in range(d):
            want = f.one if s == t else f.zero
            if unit[s][t] != want:
                bad.append(f"counit law at x{s}, coordinate x{t}: {f.format(unit[s][t])} != {f.format(want)}")
    return CheckReport(not bad, bad)


# ---------------------------------------------------------------- coefficients


def coefficient_vectors(m: Comodule) -> list[list]:
    """The vectors ``c_st = sum_i A_i[s][t] b_i`` with ``rho(x_s) = sum_t c_st (x) x_t``."""
    n = m.coalgebra.dim
    return [[m.actions[i][s][t] for i in range(n)] for s in range(m.dim) for t in range(m.dim)]


def cf(m: Comodule) -> Subspace:
    """Coefficient coalgebra: span of the first tensor legs of the coaction."""
    return m.coalgebra.span(coefficient_vectors(m)) if m.dim else m.coalgebra.zero_space()


def annihilator(m: Comodule) -> Subspace:
    """``{a in C* : x . a = 0 for all x}``, solved from the action on each basis vector."""
    c = m.coalgebra
    n = c.dim
    if m.dim == 0:
        return c.full()
    eqs = []
    for s in range(m.dim):
        # coordinate t of x_s . a is sum_i a_i A_i[s][t]
        for t in range(m.dim):
            row = [m.actions[i][s][t] for i in range(n)]
            if any(row):
                eqs.append(row)
    if not eqs:
        return c.full()
    K = kernel_rows(eqs, n, c.p)
    return Subspace._from_rref(c.field, n, K, _pivots(K))


# ---------------------------------------------------------------- Hom, End, decompose


def hom_space(m: Comodule, n: Comodule) -> list[list[list]]:
    _same(m, n)
    return linmod.hom_space(m.module(), n.module())


def _same(m: Comodule, n: Comodule) -> None:
    if m.coalgebra is not n.coalgebra and m.coalgebra != n.coalgebra:
        raise InputError("comodules over different coalgebras")


def end_ring_radical(m: Comodule) -> linmod.EndRing:
    return linmod.end_ring(m.module())


@dataclass
class ComoduleDecomposition:
    pieces: list
    bases: list
    witness: list


def decompose(m: Comodule, seed: int = 0) -> ComoduleDecomposition:
    D = linmod.decompose(m.module(), seed)
    return ComoduleDecomposition([_as_comodule(m.coalgebra, x) for x in D.pieces], D.bases, D.witness)


def is_indecomposable(m: Comodule, seed: int = 0) -> bool:
    return linmod.is_indecomposable(m.module(), seed)


def isomorphism(m: Comodule, n: Comodule, seed: int = 0):
    _same(m, n)
    return linmod.isomorphism(m.module(), n.module(), seed)


def is_isomorphic(m: Comodule, n: Comodule, seed: int = 0) -> bool:
    return isomorphism(m, n, seed) is not None


# ---------------------------------------------------------------- dimension vectors


@dataclass(frozen=True)
class DimensionVector:
    """Finitely supported map from grouplike labels to multiplicities."""

    items: tuple = ()

    def __post_init__(self):
        clean = {}
        for k, v in self.items:
            v = int(v)
            if v < 0:
                raise InputError("dimension vector entries must be nonnegative")
            if v:
                clean[str(k)] = clean.get(str(k), 0) + v
        object.__setattr__(self, "items", tuple(sorted(clean.items())))

    @classmethod
    def of(cls, entries: Mapping[str, int] | None = None, **kw) -> "DimensionVector":
        data = dict(entries or {})
        data.update(kw)
        return cls(tuple(data.items()))

    def as_dict(self) -> dict[str, int]:
        return dict(self.items)

    def __getitem__(self, k: str) -> int:
        return self.as_dict().get(k, 0)

    @property
    def total(self) -> int:
        return sum(v for _, v in self.items)

    def support(self) -> list[str]:
        return [k for k, _ in self.items]

    def __le__(self, other: "DimensionVector") -> bool:
        o = other.as_dict()
        return all(v <= o.get(k, 0) for k, v in self.items)

    def __add__(self, other: "DimensionVector") -> "DimensionVector":
        return DimensionVector(self.items + other.items)

    def key(self) -> str:
        return ",".join(f"{k}:{v}" for k, v in self.items)

    def __str__(self) -> str:
        return "(" + ", ".join(f"{k}:{v}" for k, v in self.items) + ")"


def grouplike_duals(c: Coalgebra) -> list[list]:
    """Functionals ``chi_g`` with ``chi_g(h) = [g = h]`` on the grouplikes."""
    gs = require_pointed(c)
    f = c.field
    n = c.dim
    # solve chi . g_h = delta: rows g_h, unknown chi; take the RREF-based particular solution
    M = Matrix(f, gs, n)
    out = []
    for idx in range(len(gs)):
        rhs = Matrix(f, [[f.one if h == idx else f.zero] for h in range(len(gs))], 1)
        sol = M.solve(rhs)
        out.append([sol[i, 0] for i in range(n)])
    return out


def socle_rows(m: Comodule) -> list[list]:
    """Largest subcomodule killed by the radical of ``C*`` (equivalently with cf in the coradical)."""
    c = m.coalgebra
    p = c.p
    if m.dim == 0:
        return []
    J = c.dual_algebra().radical()
    cols = []
    for a in J:
        A = m.act(a)
        cols.extend(zip(*A))  # columns of act(a); x . act(a) = 0 means x . col = 0
    eqs = [list(col) for col in cols if any(col)]
    if not eqs:
        return rref_rows([[c.field.one if i == j else c.field.zero for j in range(m.dim)]
                          for i in range(m.dim)], m.dim, p)[0]
    return kernel_rows(eqs, m.dim, p)


def dimension_vector(m: Comodule) -> DimensionVector:
    c = m.coalgebra
    p = c.p
    labels = grouplike_labels(c)
    chis = grouplike_duals(c)
    counts = {lab: 0 for lab in labels}
    cur = m
    while cur.dim:
        soc = socle_rows(cur)
        sub, _ = cur.submodule(soc)
        for lab, chi in zip(labels, chis):
            A = sub.act(chi)
            counts[lab] += len(rref_rows(A, sub.dim, p)[0]) if sub.dim else 0
        if sum(len(rref_rows(sub.act(chi), sub.dim, p)[0]) for chi in chis) != sub.dim:
            raise InputError("socle is not spanned by grouplike simples")
        cur, _ = cur.quotient(soc)
    return DimensionVector(tuple(counts.items()))


def socle_series(m: Comodule) -> list[list]:
    """Ascending socle series as RREF row lists in ``m``'s coordinates."""
    p = m.p
    out = [[]]
    cur_rows: list = []
    while len(cur_rows) < m.dim:
        Q, keep = m.quotient(cur_rows)
        soc = socle_rows(Q)
        lifted = []
        for r in soc:
            v = [m.field.zero] * m.dim
            for k, x in zip(keep, r):
                v[k] = x
            lifted.append(v)
        cur_rows = rref_rows(list(cur_rows) + lifted, m.dim, p)[0]
        out.append(cur_rows)
    return out


# ---------------------------------------------------------------- short exact triples


@dataclass
class ComoduleTriple:
    sub: Comodule
    middle: Comodule
    quotient: Comodule
    sub_rows: list
    quotient_coords: list

    def as_tuple(self):
        return (self.sub, self.middle, self.quotient)


def short_exact_triples(m: Comodule, budget: Budget | None = None,
                        include_trivial: bool = True) -> list[ComoduleTriple]:
    budget = budget or default_budget()
    M = m.module()
    if m.p:
        subs = linmod.submodules(M, budget)
    else:
        extra = socle_series(m) if _pointed_ok(m.coalgebra) else []
        subs = linmod.lattice_submodules(M, budget, extra=extra)
    out = []
    for rows in subs:
        if not include_trivial and len(rows) in (0, m.dim):
            continue
        X, R = m.submodule(rows)
        Z, keep = m.quotient(rows)
        out.append(ComoduleTriple(X, m, Z, R, keep))
    return out


def _pointed_ok(c: Coalgebra) -> bool:
    try:
        require_pointed(c)
        return True
    except Exception:
        return False


# ---------------------------------------------------------------- right comodules and cotensor


class RightComodule:
    """Right comodule ``rho(x_s) = sum c x_t (x) d_i`` stored as matrices ``R_i[s][t]``.

    Axioms: ``R_k R_j = sum_i mu_i^{jk} R_i`` and ``sum counit_i R_i = I``.
    An optional family of left actions over another coalgebra turns it into a
    bicomodule; the structures commute when ``A_i R_j = R_j A_i``.
    """

    def __init__(self, coalgebra: Coalgebra, dim: int, mats: Sequence, left: Comodule | None = None):
        f = coalgebra.field
        if len(mats) != coalgebra.dim:
            raise InputError("need one matrix per coalgebra basis element")
        self.coalgebra = coalgebra
        self.dim = dim
        self.mats = [[[f(x) for x in r] for r in a] for a in mats]
        if left is not None and left.dim != dim:
            raise InputError("left structure lives on a space of different dimension")
        self.left = left

    @classmethod
    def regular(cls, c: Coalgebra) -> "RightComodule":
        mu = c.mu()
        n = c.dim
        return cls(c, n, [[[mu[t][i][s] for t in range(n)] for s in range(n)] for i in range(n)])

    def check(self) -> CheckReport:
        c = self.coalgebra
        f = c.field
        p = c.p
        mu = c.mu()
        n = c.dim
        d = self.dim
        bad = []
        if d == 0:
            return CheckReport(True, [])
        R = self.mats
        mod = ActionModule(f, d, R)
        for j in range(n):
            for k in range(n):
                if matmul_rows(R[k], R[j], p) != mod.act(mu[j][k]):
                    bad.append(f"right coassociativity fails at ({c.labels[j]}, {c.labels[k]})")
        ident = [[f.one if s == t else f.zero for t in range(d)] for s in range(d)]
        if mod.act(c.counit) != ident:
            bad.append("right counit law fails")
        if self.left is not None:
            rep = check_comodule(self.left)
            bad.extend("left structure: " + v for v in rep.violations)
            for i, A in enumerate(self.left.actions):
                for j, B in enumerate(R):
                    if matmul_rows(A, B, p) != matmul_rows(B, A, p):
                        bad.append(f"bicomodule compatibility fails at ({self.left.coalgebra.labels[i]}, "
                                   f"{c.labels[j]})")
        return CheckReport(not bad, bad)


@dataclass
class Cotensor:
    space: Subspace              # inside M (x) N, index s * dim N + u
    rank: int                    # rank of rho_M (x) id - id (x) rho_N
    comodule: Comodule | None = None
    inclusion: list = dc_field(default_factory=list)


def cotensor(mr: RightComodule, n: Comodule) -> Cotensor:
    """``M box_D N = ker(rho_M (x) id - id (x) rho_N)``, with the induced left coaction when ``M`` is a bicomodule."""
    D = mr.coalgebra
    if n.coalgebra is not D and n.coalgebra != D:
        raise InputError("cotensor over mismatched coalgebras")
    f = D.field
    p = D.p
    dm, dn = mr.dim, n.dim
    width = dm * dn
    eqs = []
    if width:
        # independent pairs (R_i, A_i) give the same kernel
        joint = ActionModule(f, dm + dn, [
            [list(r) + [f.zero] * dn for r in R] + [[f.zero] * dm + list(r) for r in A]
            for R, A in zip(mr.mats, n.actions)])
        gens = joint.generators()
        for G in gens:
            R = [row[:dm] for row in G[:dm]]
            A = [row[dm:] for row in G[dm:]]
            for t in range(dm):
                for v in range(dn):
                    row = [f.zero] * width
                    for s in range(dm):
                        x = R[s][t]
                        if x:
                            row[s * dn + v] = f.add(row[s * dn + v], x)
                    for u in range(dn):
                        y = A[u][v]
                        if y:
                            row[t * dn + u] = f.sub(row[t * dn + u], y)
                    if any(row):
                        eqs.append(row)
    rank = len(rref_rows(eqs, width, p)[0]) if eqs else 0
    if eqs:
        K = kernel_rows(eqs, width, p)
    else:
        K = [[f.one if i == j else f.zero for j in range(width)] for i in range(width)]
    space = Subspace._from_rref(f, width, K, _pivots(K))
    out = Cotensor(space, rank, inclusion=[list(r) for r in K])
    if mr.left is not None:
        C = mr.left.coalgebra
        ident = [[f.one if i == j else f.zero for j in range(dn)] for i in range(dn)]
        big = [kron_rows(A, ident, p) if width else [] for A in mr.left.actions]
        mats = []
        for B in big:
            mat = []
            for r in K:
                img = [sum((r[a] * B[a][b] for a in range(width) if r[a]), f.zero) for b in range(width)]
                if p:
                    img = [x % p for x in img]
                if any(reduce_against(img, K, space.pivots, p)):
                    raise InputError("cotensor is not stable under the left coaction")
                mat.append([img[c] for c in space.pivots])
            mats.append(mat)
        out.comodule = Comodule.from_actions(C, mats) if K else Comodule.zero(C)
    return out


__all__ = [
    "Comodule", "check_comodule", "coefficient_vectors", "cf", "annihilator", "hom_space",
    "end_ring_radical", "ComoduleDecomposition", "decompose", "is_indecomposable", "isomorphism",
    "is_isomorphic", "DimensionVector", "grouplike_duals", "socle_rows", "socle_series",
    "dimension_vector", "ComoduleTriple", "short_exact_triples", "RightComodule", "Cotensor",
    "cotensor", "orthogonal", "grouplikes",
]
