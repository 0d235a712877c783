"""Named coalgebras, comodules and modules used by the tests, the CLI and the acceptance suite."""

from __future__ import annotations

from itertools import product
from typing import Iterator

from .budget import Budget
from .coalgebra import (Coalgebra, Quiver, Subspace, gamma3, kronecker_quiver, line_quiver, loop_quiver, path_coalgebra,
                        single_arrow, two_cycle)
from .comodule import Comodule, DimensionVector
from .embeddings import NilpotentFreeModule
from .errors import InputError
from .exactlin.algebra import span_is_nilpotent
from .exactlin.field import Field, QQ
from .exactlin.matrix import Matrix
from .linmod import _rref_shapes

# (quiver factory, truncation length) for the recursion-versus-oracle corpus
PATH_CORPUS = {
    "arrow": (single_arrow, 1),
    "two-cycle": (two_cycle, 2),
    "loop": (lambda: loop_quiver(1), 2),
    "kronecker": (lambda: kronecker_quiver(2), 1),
    "three-loops": (lambda: loop_quiver(3), 1),
    "A3": (lambda: line_quiver(3), 2),
}

# quivers whose Ext quiver round trip is checked
QUIVER_CORPUS = {
    "arrow": single_arrow,
    "two-cycle": two_cycle,
    "loop": lambda: loop_quiver(1),
    "kronecker": lambda: kronecker_quiver(2),
    "gamma3": gamma3,
    "three-loops": lambda: loop_quiver(3),
    "A3": lambda: line_quiver(3),
}


def corpus_quiver(name: str) -> Quiver:
    try:
        return QUIVER_CORPUS[name]()
    except KeyError:
        raise InputError(f"unknown corpus quiver {name!r}; choose from {sorted(QUIVER_CORPUS)}") from None


def path_corpus(field: Field = QQ) -> list[tuple[str, Coalgebra]]:
    return [(name, path_coalgebra(q(), L, field)) for name, (q, L) in PATH_CORPUS.items()]


def matrix_coalgebra(n: int, field: Field = QQ) -> Coalgebra:
    """``M^c(n)``: ``Delta(e_ij) = sum_k e_ik (x) e_kj``, counit ``delta_ij``."""
    labels = [f"e{i}{j}" for i in range(n) for j in range(n)]
    delta = []
    for i in range(n):
        for j in range(n):
            delta.append([(i * n + k, k * n + j, 1) for k in range(n)])
    counit = [1 if i == j else 0 for i in range(n) for j in range(n)]
    return Coalgebra(field, labels, delta, counit)


def group_coalgebra_twisted(field: Field = QQ) -> Coalgebra:
    """``K[C_2]`` written in the basis ``u = 1 + g``, ``w = 1 - g`` (grouplikes are not basis vectors)."""
    two = field(2)
    half = field.inv(two)
    # Delta(u) = (u(x)u + w(x)w)/2, Delta(w) = (u(x)w + w(x)u)/2, counit(u) = 2, counit(w) = 0
    delta = [[(0, 0, half), (1, 1, half)], [(0, 1, half), (1, 0, half)]]
    return Coalgebra(field, ["u", "w"], delta, [two, field.zero])


def wedge_corpus(field: Field, max_dim: int = 5) -> list[tuple[str, Coalgebra]]:
    """Path coalgebras plus two coalgebras outside the path family, all of dimension ``<= max_dim``."""
    out = []
    cands = [
        ("arrow", path_coalgebra(single_arrow(), 1, field)),
        ("loop2", path_coalgebra(loop_quiver(1), 2, field)),
        ("two-cycle1", path_coalgebra(two_cycle(), 1, field)),
        ("kronecker", path_coalgebra(kronecker_quiver(2), 1, field)),
        ("three-loops", path_coalgebra(loop_quiver(3), 1, field)),
        ("A3-1", path_coalgebra(line_quiver(3), 1, field)),
        ("matrix2", matrix_coalgebra(2, field)),
    ]
    if field.characteristic != 2:
        cands.append(("C2-twisted", group_coalgebra_twisted(field)))
    for name, c in cands:
        if c.dim <= max_dim:
            out.append((name, c))
    return out


def dimension_vectors(labels, max_total: int, min_total: int = 1) -> Iterator[DimensionVector]:
    """All dimension vectors over ``labels`` with ``min_total <= |d| <= max_total``, in a fixed order."""
    labels = list(labels)
    for total in range(min_total, max_total + 1):
        for combo in product(range(total + 1), repeat=len(labels)):
            if sum(combo) == total:
                yield DimensionVector.of(dict(zip(labels, combo)))


def comodule_classes(c: Coalgebra, max_total: int, budget: Budget | None = None, seed: int = 0) -> list[Comodule]:
    """Representatives of all comodules with ``|dv| <= max_total`` (finite field)."""
    from .coalgebra import grouplike_labels
    from .oracle import enumerate_comodules

    out = []
    for d in dimension_vectors(grouplike_labels(c), max_total):
        out.extend(enumerate_comodules(c, d, budget, seed))
    return out


def all_subspaces(field: Field, n: int, max_dim: int) -> Iterator[Subspace]:
    """Every subspace of ``GF(p)^n`` of dimension at most ``max_dim``."""
    if not field.characteristic:
        raise InputError("subspace enumeration needs a finite field")
    for k in range(min(max_dim, n) + 1):
        for rows in _rref_shapes(n, k, field):
            yield Subspace.span(field, n, rows) if rows else Subspace.zero(field, n)


def nilpotent_matrices(field: Field, n: int) -> list[list[list]]:
    els = list(field.elements())
    out = []
    for entries in product(els, repeat=n * n):
        rows = [list(entries[i * n:(i + 1) * n]) for i in range(n)]
        if span_is_nilpotent([Matrix(field, rows, n)], field):
            out.append(rows)
    return out


def all_nilpotent_modules(field: Field, dim: int, k: int) -> list[NilpotentFreeModule]:
    """Every tuple of ``k`` matrices of size ``dim`` generating a nilpotent algebra (no iso reduction)."""
    if k == 0:
        return [NilpotentFreeModule(field, dim, [])]
    nil = nilpotent_matrices(field, dim)
    out = []
    for combo in product(nil, repeat=k):
        mats = [Matrix(field, X, dim) for X in combo]
        if span_is_nilpotent(mats, field):
            out.append(NilpotentFreeModule(field, dim, [list(map(list, X)) for X in combo]))
    return out


__all__ = [
    "PATH_CORPUS", "QUIVER_CORPUS", "corpus_quiver", "path_corpus", "matrix_coalgebra", "group_coalgebra_twisted",
    "wedge_corpus", "dimension_vectors", "comodule_classes", "all_subspaces", "nilpotent_matrices", "all_nilpotent_modules",
]
