import pytest

from coalglab.coalgebra import check_coalgebra, line_quiver, loop_quiver, path_coalgebra, single_arrow, two_cycle
from coalglab.comodule import Comodule, check_comodule, dimension_vector, is_isomorphic, short_exact_triples
from coalglab.errors import InputError
from coalglab.exactlin import GF
from coalglab.localization import (check_exact_on_triple, check_localization, lift_idempotent, localization,
                                   localize_coalgebra, localize_comodule, section_bicomodule, section_S,
                                   ts_counit, verify_TS_identity)


@pytest.fixture
def arrow():
    return path_coalgebra(single_arrow(), 1)


def uv(c):
    return Comodule(c, 2, [(0, 0, 0, 1), (0, 2, 1, 1), (1, 1, 1, 1)])


def test_keep_everything_gives_counit(arrow):
    pres = lift_idempotent(arrow, ["a", "b"])
    assert list(pres.e) == list(arrow.counit)
    assert localize_coalgebra(pres).dim == arrow.dim


def test_keep_nothing_gives_zero(arrow):
    pres = lift_idempotent(arrow, [])
    assert not any(pres.e)
    assert localize_coalgebra(pres).dim == 0
    assert localize_comodule(pres, uv(arrow)).dim == 0


def test_arrow_keep_source(arrow):
    pres = lift_idempotent(arrow, ["a"])
    assert list(pres.e) == arrow.basis_vector("a")
    loc = localization(pres)
    assert loc.corner == arrow.span_labels("a")
    assert check_coalgebra(loc.coalgebra)


def test_two_cycle_corner():
    c = path_coalgebra(two_cycle(), 2)
    pres = lift_idempotent(c, ["a"])
    d = localize_coalgebra(pres)
    assert d.dim == 2 and check_coalgebra(d)
    assert set(d.labels) == {"a", "alpha*beta"}
    # the surviving loop is skew primitive at a
    assert len(d.delta[d.index("alpha*beta")]) == 2


def test_rejects_labels_that_are_not_grouplike(arrow):
    with pytest.raises(InputError):
        lift_idempotent(arrow, ["alpha"])
    with pytest.raises(InputError):
        lift_idempotent(arrow, ["nope"])


def test_localize_simples_and_uv(arrow):
    pa = lift_idempotent(arrow, ["a"])
    pb = lift_idempotent(arrow, ["b"])
    assert localize_comodule(pa, Comodule.simple(arrow, "a")).dim == 1
    assert localize_comodule(pa, Comodule.simple(arrow, "b")).dim == 0
    for pres in (pa, pb):
        L = localize_comodule(pres, uv(arrow))
        assert L.dim == 1 and check_comodule(L)


def test_localization_is_exact_on_triples():
    c = path_coalgebra(line_quiver(3), 2)
    pres = lift_idempotent(c, ["v1", "v3"])
    M = Comodule.regular(c)
    for t in short_exact_triples(M, include_trivial=False)[:20]:
        chk = check_exact_on_triple(pres, t)
        assert chk.exact, chk.dims


@pytest.mark.parametrize("q,length", [(single_arrow(), 1), (two_cycle(), 2), (line_quiver(3), 2),
                                      (loop_quiver(1), 2)])
def test_structure_checks_for_every_vertex_subset(q, length):
    from itertools import combinations
    c = path_coalgebra(q, length)
    vs = list(q.vertices)
    for r in range(len(vs) + 1):
        for keep in combinations(vs, r):
            reports = check_localization(lift_idempotent(c, keep))
            assert all(reports.values()), {k: v.violations for k, v in reports.items()}


def test_section_of_corner_is_eC(arrow):
    pres = lift_idempotent(arrow, ["a"])
    sec = section_bicomodule(pres)
    assert sec.bicomodule.check()
    D = localize_coalgebra(pres)
    regular = Comodule.regular(D)
    S = section_S(pres, regular)
    assert S.dim == sec.eC.dim
    assert is_isomorphic(S, Comodule.from_actions(arrow, sec.bicomodule.left.actions))


def test_section_of_zero(arrow):
    pres = lift_idempotent(arrow, ["b"])
    D = localize_coalgebra(pres)
    assert section_S(pres, Comodule.zero(D)).dim == 0


def test_T_after_S_is_identity():
    c = path_coalgebra(two_cycle(), 2)
    pres = lift_idempotent(c, ["a"])
    D = localize_coalgebra(pres)
    sample = [Comodule.simple(D, "a"), Comodule.regular(D), Comodule.regular(D).direct_sum(Comodule.simple(D, "a"))]
    for n in sample:
        chk = ts_counit(pres, n)
        assert chk.is_isomorphism
        assert chk.dim_TS == chk.dim_n
    rep = verify_TS_identity(pres, sample)
    assert rep.passed
    for _, _, hs, hn in rep.hom_table:
        assert hs == hn


def test_section_lands_in_the_kept_socle():
    c = path_coalgebra(single_arrow(), 1, GF(3))
    pres = lift_idempotent(c, ["b"])
    D = localize_coalgebra(pres)
    S = section_S(pres, Comodule.simple(D, D.labels[0]))
    assert check_comodule(S)
    assert dimension_vector(S)["b"] == 1
