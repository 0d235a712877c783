import pytest
from hypothesis import given, strategies as st

from coalglab.exactlin import GF, QQ
from coalglab.exactlin.matrix import Matrix
from coalglab.linmod import (ActionModule, count_subspaces, decompose, end_ring, hom_dim, hom_space,
                             is_indecomposable, is_isomorphic, is_morphism, isomorphism, short_exact_triples,
                             submodules)


def jordan(field, n, lam=0):
    return [[lam if i == j else (1 if j == i + 1 else 0) for j in range(n)] for i in range(n)]


def J(field, *sizes, lam=0):
    """Direct sum of nilpotent Jordan blocks as a module over K[x]."""
    mods = [ActionModule(field, n, [jordan(field, n, lam)]) for n in sizes]
    out = mods[0]
    for m in mods[1:]:
        out = out.direct_sum(m)
    return out


def test_jordan_block_end_ring():
    E = end_ring(J(QQ, 3))
    assert (E.dim, E.radical_dim) == (3, 2)
    assert is_indecomposable(J(QQ, 3))


def test_hom_between_blocks():
    assert hom_dim(J(QQ, 2), J(QQ, 1)) == 1
    assert hom_dim(J(QQ, 1), J(QQ, 2)) == 1
    assert hom_dim(J(QQ, 3), J(QQ, 2)) == 2
    for F in hom_space(J(QQ, 3), J(QQ, 2)):
        assert is_morphism(J(QQ, 3), J(QQ, 2), F)


def test_decompose_sums_of_blocks():
    M = J(GF(3), 2, 1, 3)
    D = decompose(M)
    assert sorted(p.dim for p in D.pieces) == [1, 2, 3]
    assert all(is_indecomposable(p) for p in D.pieces)
    assert not is_indecomposable(M)


def test_eigenvalues_separate_summands():
    A = ActionModule(QQ, 2, [[[1, 0], [0, 2]]])
    assert not is_indecomposable(A)
    assert not is_isomorphic(J(QQ, 1, lam=1), J(QQ, 1, lam=2))


def test_isomorphism_witness():
    M = J(GF(5), 2, 1)
    P = [[1, 2, 3], [0, 4, 1], [2, 0, 1]]
    N = M.change_basis(P)
    phi = isomorphism(M, N)
    assert phi is not None
    assert is_morphism(M, N, phi)
    assert Matrix(GF(5), phi, 3).is_invertible()


def test_count_subspaces():
    assert count_subspaces(2, 2) == 5
    assert count_subspaces(3, 3) == 1 + 13 + 13 + 1


def test_submodules_of_jordan_block():
    # a uniserial module has a chain of submodules
    assert len(submodules(J(GF(2), 3))) == 4
    # semisimple K^2 over GF(2): 0, three lines, everything
    assert len(submodules(ActionModule(GF(2), 2, [[[0, 0], [0, 0]]]))) == 5


def test_short_exact_triples_shapes():
    ts = short_exact_triples(J(GF(3), 2), include_trivial=False)
    assert len(ts) == 1
    t = ts[0]
    assert (t.sub.dim, t.quotient.dim) == (1, 1)
    assert is_morphism(t.sub, J(GF(3), 2), t.inclusion())
    assert is_morphism(J(GF(3), 2), t.quotient, t.projection())


def test_mixed_generator_counts_rejected():
    from coalglab.errors import InputError
    with pytest.raises(InputError):
        hom_space(J(QQ, 1), ActionModule(QQ, 1, [[[0]], [[0]]]))


F5 = GF(5)


@st.composite
def module_and_basis(draw):
    sizes = draw(st.lists(st.integers(1, 2), min_size=1, max_size=2))
    M = J(F5, *sizes)
    n = M.dim
    # unit lower times upper with nonzero diagonal is always invertible
    L = [[1 if i == j else (draw(st.integers(0, 4)) if j < i else 0) for j in range(n)] for i in range(n)]
    U = [[draw(st.integers(1, 4)) if i == j else (draw(st.integers(0, 4)) if j > i else 0) for j in range(n)]
         for i in range(n)]
    P = [[sum(L[i][k] * U[k][j] for k in range(n)) % 5 for j in range(n)] for i in range(n)]
    return M, P


@given(module_and_basis())
def test_invariants_under_basis_change(data):
    M, P = data
    N = M.change_basis(P)
    assert is_isomorphic(M, N)
    assert hom_dim(M, M) == hom_dim(N, N) == hom_dim(M, N)
    assert sorted(p.dim for p in decompose(N).pieces) == sorted(p.dim for p in decompose(M).pieces)
