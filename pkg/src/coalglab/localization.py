"""Localization at an idempotent of ``C*`` attached to a set of vertices.

For an idempotent ``e`` of the convolution algebra:

* ``P_e(c) = sum e(c_1) c_2 e(c_3)``; its image ``eCe`` is a coalgebra with
  ``Delta(x) = (P_e (x) P_e) Delta(x)`` and counit ``e``.
* ``T(M) = M e`` is the image of the action of ``e``; it is an
  ``eCe``-comodule through ``phi -> phi o P_e``.
* ``eC = {sum c_1 e(c_2)}`` is a left ``C``-, right ``eCe``-bicomodule and
  ``S(N) = eC box_{eCe} N``.  The counit ``eps (x) id`` gives ``T S(N) -> N``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .coalgebra import (Coalgebra, Subspace, check_coalgebra, coradical, grouplike_labels, is_grouplike,
                        require_pointed)
from .comodule import Comodule, ComoduleTriple, RightComodule, check_comodule, cotensor, hom_space
from .errors import InputError
from .exactlin.matrix import Matrix, rref_rows
from .linmod import is_morphism


def _pivots(R) -> list[int]:
    return [next(i for i, x in enumerate(r) if x) for r in R]


@dataclass
class IdempotentPresentation:
    coalgebra: Coalgebra
    keep: tuple
    e: list
    _cache: dict = dc_field(default_factory=dict, repr=False, compare=False)

    def validate(self) -> None:
        c = self.coalgebra
        if c.convolve(self.e, self.e) != list(self.e):
            raise InputError("e is not idempotent")
        for lab, g in zip(grouplike_labels(c), require_pointed(c)):
            val = sum((x * y for x, y in zip(self.e, g)), c.field.zero)
            val = c.field(val)
            want = c.field.one if lab in self.keep else c.field.zero
            if val != want:
                raise InputError(f"e({lab}) = {c.field.format(val)}, expected {c.field.format(want)}")


def lift_idempotent(c: Coalgebra, keep: Sequence[str], max_rounds: int = 64) -> IdempotentPresentation:
    """Idempotent ``e`` with ``e(g) = [g in keep]`` on grouplikes."""
    f = c.field
    gs = require_pointed(c)
    labels = grouplike_labels(c)
    keep = tuple(sorted(set(keep)))
    for k in keep:
        if k not in labels:
            raise InputError(f"{k!r} is not a vertex (grouplike) of this coalgebra")
    c0 = coradical(c)
    # basis of C: the grouplikes, then standard vectors off the coradical pivots
    comp = c0.complement_indices()
    basis = [list(g) for g in gs] + [c.basis_vector(i) for i in comp]
    targets = [f.one if lab in keep else f.zero for lab in labels] + [f.zero] * len(comp)
    B = Matrix(f, basis, c.dim)
    sol = B.solve(Matrix(f, [[t] for t in targets], 1))
    e = [sol[i, 0] for i in range(c.dim)]
    for _ in range(max_rounds):
        e2 = c.convolve(e, e)
        if e2 == e:
            pres = IdempotentPresentation(c, keep, e)
            pres.validate()
            return pres
        e3 = c.convolve(e2, e)
        e = [f.sub(f.mul(f(3), a), f.mul(f(2), b)) for a, b in zip(e2, e3)]
    raise InputError("idempotent lifting did not converge")  # pragma: no cover


@dataclass
class Localization:
    pres: IdempotentPresentation
    projection: list      # P_e(b_i) for each basis element, as vectors in C
    corner: Subspace      # eCe inside C
    coalgebra: Coalgebra  # eCe in the RREF basis of ``corner``
    lifted_duals: list    # phi_r o P_e in C*, one per basis element of eCe


def localization(pres: IdempotentPresentation) -> Localization:
    if "loc" in pres._cache:
        return pres._cache["loc"]
    c = pres.coalgebra
    f = c.field
    n = c.dim
    e = pres.e
    proj = [c.right_action(e, c.left_action(e, c.basis_vector(i))) for i in range(n)]
    corner = c.span(proj) if any(any(v) for v in proj) else c.zero_space()
    piv = corner.pivots
    coords = [[v[k] for k in piv] for v in proj]
    labels = [c._label_for_row(r, idx) for idx, r in enumerate(corner.rows)]
    delta = []
    counit = []
    for r in corner.rows:
        D = c.apply_delta(r)
        acc: dict = {}
        for j in range(n):
            for k in range(n):
                x = D[j * n + k]
                if not x:
                    continue
                for a, u in enumerate(coords[j]):
                    if not u:
                        continue
                    for b, v in enumerate(coords[k]):
                        if v:
                            acc[(a, b)] = f.add(acc.get((a, b), f.zero), f.mul(x, f.mul(u, v)))
        delta.append([(a, b, x) for (a, b), x in sorted(acc.items()) if x])
        counit.append(f(sum((x * y for x, y in zip(e, r)), f.zero)))
    eCe = Coalgebra(f, labels, delta, counit)
    lifted = [[coords[i][r] for i in range(n)] for r in range(corner.dim)]
    loc = Localization(pres, proj, corner, eCe, lifted)
    pres._cache["loc"] = loc
    return loc


def localize_coalgebra(pres: IdempotentPresentation) -> Coalgebra:
    return localization(pres).coalgebra


@dataclass
class LocalizedComodule:
    comodule: Comodule
    basis: list           # rows of M spanning M e


def localize_comodule_with_basis(pres: IdempotentPresentation, m: Comodule) -> LocalizedComodule:
    loc = localization(pres)
    D = loc.coalgebra
    p = m.p
    if m.dim == 0:
        return LocalizedComodule(Comodule.zero(D), [])
    E = m.act(pres.e)
    U, piv = rref_rows(E, m.dim, p)
    if not U:
        return LocalizedComodule(Comodule.zero(D), [])
    mod = m.module()
    acts = []
    for phi in loc.lifted_duals:
        A = mod.act(phi)
        mat = []
        for r in U:
            img = [sum((r[s] * A[s][t] for s in range(m.dim) if r[s]), m.field.zero) for t in range(m.dim)]
            if p:
                img = [x % p for x in img]
            mat.append([img[k] for k in piv])
        acts.append(mat)
    return LocalizedComodule(Comodule.from_actions(D, acts), [list(r) for r in U])


def localize_comodule(pres: IdempotentPresentation, m: Comodule) -> Comodule:
    """``T(M) = M e`` as an ``eCe``-comodule."""
    return localize_comodule_with_basis(pres, m).comodule


@dataclass
class SectionData:
    eC: Subspace                 # inside C
    bicomodule: RightComodule    # right eCe-structure with the left C-structure attached


def section_bicomodule(pres: IdempotentPresentation) -> SectionData:
    if "eC" in pres._cache:
        return pres._cache["eC"]
    c = pres.coalgebra
    loc = localization(pres)
    n = c.dim
    imgs = [c.left_action(pres.e, c.basis_vector(i)) for i in range(n)]
    V = c.span(imgs) if any(any(v) for v in imgs) else c.zero_space()
    piv = V.pivots
    d = V.dim
    left = []
    for i in range(n):
        dual = c.basis_vector(i)
        left.append([[c.right_action(dual, r)[k] for k in piv] for r in V.rows])
    right = []
    for phi in loc.lifted_duals:
        right.append([[c.left_action(phi, r)[k] for k in piv] for r in V.rows])
    left_com = Comodule.from_actions(c, left) if d else Comodule.zero(c)
    bic = RightComodule(loc.coalgebra, d, right if d else [[] for _ in loc.lifted_duals], left=left_com)
    data = SectionData(V, bic)
    pres._cache["eC"] = data
    return data


def section_S(pres: IdempotentPresentation, n: Comodule) -> Comodule:
    """``S(N) = eC box_{eCe} N`` with its left ``C``-coaction."""
    data = section_bicomodule(pres)
    if n.dim == 0 or data.bicomodule.dim == 0:
        return Comodule.zero(pres.coalgebra)
    return cotensor(data.bicomodule, n).comodule


@dataclass
class TSCheck:
    dim_n: int
    dim_S: int
    dim_TS: int
    witness: list | None
    is_isomorphism: bool


def ts_counit(pres: IdempotentPresentation, n: Comodule) -> TSCheck:
    """The map ``T S(N) -> N`` induced by ``eps (x) id``, and whether it is an isomorphism."""
    c = pres.coalgebra
    f = c.field
    data = section_bicomodule(pres)
    if n.dim == 0 or data.bicomodule.dim == 0:
        return TSCheck(n.dim, 0, 0, [], n.dim == 0)
    ct = cotensor(data.bicomodule, n)
    S = ct.comodule
    loc_S = localize_comodule_with_basis(pres, S)
    dn = n.dim
    eps_V = [c.counit_of(r) for r in data.eC.rows]
    theta = []
    for urow in loc_S.basis:
        # S coordinates -> eC (x) N coordinates -> N
        vec = [f.zero] * (data.bicomodule.dim * dn)
        for a, x in enumerate(urow):
            if x:
                for idx, y in enumerate(ct.inclusion[a]):
                    if y:
                        vec[idx] = f.add(vec[idx], f.mul(x, y))
        out = [f.zero] * dn
        for s, ev in enumerate(eps_V):
            if ev:
                for u in range(dn):
                    z = vec[s * dn + u]
                    if z:
                        out[u] = f.add(out[u], f.mul(ev, z))
        theta.append(out)
    T = loc_S.comodule
    ok = (T.dim == dn and is_morphism(T.module(), n.module(), theta)
          and Matrix(f, theta, dn).is_invertible())
    return TSCheck(dn, S.dim, T.dim, theta, ok)


@dataclass
class TSReport:
    checks: list
    hom_table: list       # (i, j, dim Hom(S n_i, S n_j), dim Hom(n_i, n_j))

    @property
    def passed(self) -> bool:
        return all(ch.is_isomorphism for ch in self.checks) and all(a == b for _, _, a, b in self.hom_table)


def verify_TS_identity(pres: IdempotentPresentation, sample: Sequence[Comodule]) -> TSReport:
    checks = [ts_counit(pres, n) for n in sample]
    S_images = [section_S(pres, n) for n in sample]
    table = []
    for i, (a, Sa) in enumerate(zip(sample, S_images)):
        for j, (b, Sb) in enumerate(zip(sample, S_images)):
            hs = len(hom_space(Sa, Sb)) if Sa.dim and Sb.dim else 0
            hn = len(hom_space(a, b)) if a.dim and b.dim else 0
            table.append((i, j, hs, hn))
    return TSReport(checks, table)


@dataclass
class ExactnessCheck:
    dims: tuple           # (dim Xe, dim Ye, dim Ze)
    exact: bool


def check_exact_on_triple(pres: IdempotentPresentation, t: ComoduleTriple) -> ExactnessCheck:
    """``0 -> Xe -> Ye -> Ze -> 0`` is exact, using ``X`` as rows inside ``Y``."""
    c = pres.coalgebra
    p = c.p
    Y = t.middle
    m = Y.dim
    Ye = rref_rows(Y.act(pres.e), m, p)[0] if m else []
    X_rows = t.sub_rows
    # X e computed inside Y
    Xe_in_Y = []
    if X_rows:
        EY = Y.act(pres.e)
        for r in X_rows:
            img = [sum((r[s] * EY[s][u] for s in range(m) if r[s]), c.field.zero) for u in range(m)]
            Xe_in_Y.append([x % p for x in img] if p else img)
    Xe = rref_rows(Xe_in_Y, m, p)[0] if Xe_in_Y else []
    Ze = rref_rows(t.quotient.act(pres.e), t.quotient.dim, p)[0] if t.quotient.dim else []
    X_sp = Subspace.span(c.field, m, X_rows) if X_rows else Subspace.zero(c.field, m)
    Ye_sp = Subspace.span(c.field, m, Ye) if Ye else Subspace.zero(c.field, m)
    Xe_sp = Subspace.span(c.field, m, Xe) if Xe else Subspace.zero(c.field, m)
    exact = (len(Xe) - len(Ye) + len(Ze) == 0) and (X_sp & Ye_sp) == Xe_sp
    return ExactnessCheck((len(Xe), len(Ye), len(Ze)), exact)


def check_localization(pres: IdempotentPresentation) -> dict:
    """Axioms of ``eCe`` and of the bicomodule ``eC``."""
    loc = localization(pres)
    data = section_bicomodule(pres)
    return {
        "eCe": check_coalgebra(loc.coalgebra),
        "eC": data.bicomodule.check(),
    }


__all__ = [
    "IdempotentPresentation", "lift_idempotent", "Localization", "localization", "localize_coalgebra",
    "LocalizedComodule", "localize_comodule", "localize_comodule_with_basis", "SectionData",
    "section_bicomodule", "section_S", "TSCheck", "ts_counit", "TSReport", "verify_TS_identity",
    "ExactnessCheck", "check_exact_on_triple", "check_localization", "is_grouplike", "check_comodule",
]
