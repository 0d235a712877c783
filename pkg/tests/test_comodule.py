import pytest
from hypothesis import given, strategies as st

from coalglab.coalgebra import path_coalgebra, single_arrow, two_cycle, loop_quiver
from coalglab.comodule import (Comodule, DimensionVector, RightComodule, annihilator, cf, check_comodule, cotensor,
                               decompose, dimension_vector, end_ring_radical, hom_space, is_indecomposable,
                               is_isomorphic, short_exact_triples, socle_series)
from coalglab.exactlin import GF


@pytest.fixture
def arrow():
    return path_coalgebra(single_arrow(), 1)


def uv(c):
    # rho(u) = a (x) u + alpha (x) v, rho(v) = b (x) v; indices a=0, b=1, alpha=2
    return Comodule(c, 2, [(0, 0, 0, 1), (0, 2, 1, 1), (1, 1, 1, 1)])


def test_simple_and_doubled_comodules(arrow):
    assert check_comodule(Comodule.simple(arrow, "a"))
    wrong = Comodule(arrow, 1, [(0, 0, 0, 2)])
    rep = check_comodule(wrong)
    assert not rep and rep.violations


def test_valid_two_dim_comodule(arrow):
    assert check_comodule(uv(arrow))


def test_reversed_two_dim_coaction_is_rejected(arrow):
    # rho(u) = a (x) u, rho(v) = alpha (x) u + b (x) v puts the arrow on the wrong side
    bad = Comodule(arrow, 2, [(0, 0, 0, 1), (1, 2, 0, 1), (1, 1, 1, 1)])
    rep = check_comodule(bad)
    assert not rep
    assert any(v.startswith("coassociativity") for v in rep.violations)


def test_regular_comodule(arrow):
    assert check_comodule(Comodule.regular(arrow))
    assert cf(Comodule.regular(arrow)) == arrow.full()


def test_coefficient_coalgebras(arrow):
    assert cf(Comodule.simple(arrow, "a")) == arrow.span_labels("a")
    assert cf(uv(arrow)) == arrow.full()
    assert cf(Comodule.zero(arrow)).dim == 0
    assert arrow.is_subcoalgebra(cf(uv(arrow)))


def test_annihilator_of_simple(arrow):
    assert annihilator(Comodule.simple(arrow, "a")) == arrow.span_labels("b", "alpha")
    assert annihilator(uv(arrow)).dim == 0


def test_hom_and_end(arrow):
    M = uv(arrow)
    Sa, Sb = Comodule.simple(arrow, "a"), Comodule.simple(arrow, "b")
    assert len(hom_space(Sb, M)) == 1
    assert len(hom_space(Sa, M)) == 0
    assert len(hom_space(M, Sa)) == 1
    assert len(hom_space(M, Sb)) == 0
    E = end_ring_radical(M)
    assert (E.dim, E.radical_dim) == (1, 0)
    E2 = end_ring_radical(Sa.direct_sum(Sa))
    assert (E2.dim, E2.radical_dim) == (4, 0)


def test_decompose(arrow):
    Sa, Sb = Comodule.simple(arrow, "a"), Comodule.simple(arrow, "b")
    D = decompose(Sa.direct_sum(Sb).direct_sum(uv(arrow)))
    dims = sorted(p.dim for p in D.pieces)
    assert dims == [1, 1, 2]
    assert is_indecomposable(uv(arrow))
    assert not is_indecomposable(Sa.direct_sum(Sb))


def test_isomorphism_after_basis_change(arrow):
    M = uv(arrow)
    N = M.change_basis([[1, 3], [0, 2]])
    assert check_comodule(N)
    assert is_isomorphic(M, N)
    Sa, Sb = Comodule.simple(arrow, "a"), Comodule.simple(arrow, "b")
    assert not is_isomorphic(M, Sa.direct_sum(Sb))


def test_dimension_vector(arrow):
    assert dimension_vector(uv(arrow)) == DimensionVector.of(a=1, b=1)
    # Delta(alpha) is a (x) alpha modulo the socle, so alpha contributes an a
    assert dimension_vector(Comodule.regular(arrow)) == DimensionVector.of(a=2, b=1)
    assert DimensionVector.of(a=0, b=2).support() == ["b"]


def test_socle_series(arrow):
    ser = socle_series(uv(arrow))
    assert [len(r) for r in ser] == [0, 1, 2]


def test_uv_has_one_nontrivial_triple(arrow):
    M = uv(arrow)
    ts = short_exact_triples(M, include_trivial=False)
    assert len(ts) == 1
    t = ts[0]
    assert is_isomorphic(t.sub, Comodule.simple(arrow, "b"))
    assert is_isomorphic(t.quotient, Comodule.simple(arrow, "a"))
    assert len(short_exact_triples(M)) == 3


def test_semisimple_triples_over_gf3():
    c = path_coalgebra(single_arrow(), 1, GF(3))
    S = Comodule.simple(c, "a")
    ts = short_exact_triples(S.direct_sum(S), include_trivial=False)
    # one line per point of the projective line over GF(3)
    assert len(ts) == 4
    assert all(t.sub.dim == 1 for t in ts)


def test_cotensor_with_regular_bicomodule(arrow):
    reg = RightComodule.regular(arrow)
    bi = RightComodule(arrow, arrow.dim, reg.mats, left=Comodule.regular(arrow))
    assert bi.check()
    for N in [uv(arrow), Comodule.simple(arrow, "b"), Comodule.regular(arrow)]:
        box = cotensor(bi, N)
        assert box.space.dim == N.dim
        assert check_comodule(box.comodule)
        assert is_isomorphic(box.comodule, N)


def test_rejects_mismatched_coalgebras(arrow):
    other = path_coalgebra(two_cycle(), 1)
    with pytest.raises(Exception):
        hom_space(Comodule.simple(arrow, "a"), Comodule.simple(other, "a"))


LOOP = path_coalgebra(loop_quiver(1), 2, GF(3))


@given(st.lists(st.integers(0, 2), min_size=4, max_size=4))
def test_direct_sum_coefficients(entries):
    M = Comodule.regular(LOOP)
    P = [[1 + entries[3] % 2, entries[0], entries[1]], [0, 1, entries[2]], [0, 0, 1]]
    N = M.change_basis(P)
    assert check_comodule(N)
    assert cf(N) == cf(M)
    assert cf(M.direct_sum(Comodule.simple(LOOP, "g"))) == cf(M)
    assert is_isomorphic(M, N)
