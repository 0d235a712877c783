import pytest

from coalglab.coalgebra import kronecker_quiver, path_coalgebra, single_arrow
from coalglab.comodule import check_comodule, is_indecomposable as comodule_indecomposable, is_isomorphic
from coalglab.errors import InputError
from coalglab.exactlin import GF, QQ
from coalglab.embeddings import (F_functor, FreeAlgebraModule, G_functor, NilpotentFreeModule, QuiverRep,
                                 bounded_quiver_embedding, comodule_to_rep, functor_F, functor_G,
                                 nilpotent_module_corpus, quiver_rep_classes, rep_to_comodule, shift_embedding,
                                 shift_functor, verify_representation_embedding, zero_functor, identity_functor)
from coalglab import linmod

F3 = GF(3)


def K(field=QQ, k=1):
    return NilpotentFreeModule(field, 1, [[[0]]] * k)


def test_F_on_one_dimensional_module():
    rep = functor_F(K())
    assert rep.spaces == {"a": 1, "b": 1}
    assert rep.maps["x0"] == [[1]] and rep.maps["x1"] == [[0]]
    assert linmod.is_indecomposable(rep.module())


def test_G_on_one_dimensional_module():
    m = functor_G(K())
    assert m.dim == 2
    assert check_comodule(m)
    assert comodule_indecomposable(m)


def test_shift_example():
    out = shift_embedding(K(), 2, [0, 1])
    Y, Z, T = out.gens
    assert Y == [[0, 0], [0, 0]]
    assert Z == [[0, 0], [1, 0]]
    assert T == [[0, 0], [0, 1]]
    assert out.names == ("y", "z", "t")


def test_shift_rejects_repeated_scalars():
    with pytest.raises(InputError):
        shift_embedding(K(), 2, [1, 1])


def test_bounded_kronecker_example():
    q = kronecker_quiver(2)
    rep = QuiverRep(q, QQ, {"a": 1, "b": 1}, {"x0": [[1]], "x1": [[0]]})
    out = bounded_quiver_embedding(rep, 2, [1, 2])
    X0, X1, X2 = out.gens
    assert X0 == [[1, 0], [0, 2]]
    assert X1 == [[0, 1], [0, 0]]
    assert X2 == [[0, 0], [0, 0]]


def test_bounded_needs_room_for_parallel_arrows():
    rep = QuiverRep(kronecker_quiver(3), QQ, {"a": 1, "b": 1}, {})
    with pytest.raises(InputError):
        bounded_quiver_embedding(rep, 2)


def test_functors_are_additive():
    A = NilpotentFreeModule(F3, 2, [[[0, 1], [0, 0]]])
    B = K(F3)
    assert linmod.is_isomorphic(functor_F(A.direct_sum(B)).module(), functor_F(A).direct_sum(functor_F(B)).module())
    assert is_isomorphic(functor_G(A.direct_sum(B)), functor_G(A).direct_sum(functor_G(B)))
    s = shift_embedding(A.direct_sum(B), 2)
    t = shift_embedding(A, 2).direct_sum(shift_embedding(B, 2))
    assert linmod.is_isomorphic(s.module(), t.module())


def test_nilpotency_is_enforced():
    with pytest.raises(InputError):
        NilpotentFreeModule(QQ, 1, [[[1]]])
    assert FreeAlgebraModule(QQ, 1, [[[1]]]).k == 1


def test_rep_comodule_round_trip():
    q = single_arrow()
    c = path_coalgebra(q, 1, F3)
    for rep in quiver_rep_classes(q, F3, 3):
        m = rep_to_comodule(rep, c, 1)
        back = comodule_to_rep(m, q)
        assert back.dimension_vector() == rep.dimension_vector()
        assert linmod.is_isomorphic(back.module(), rep.module())


def test_verify_F_and_G_on_small_corpus():
    corpus = nilpotent_module_corpus(F3, 2, 1)
    for functor in (F_functor(), G_functor(), identity_functor()):
        rep = verify_representation_embedding(functor, corpus)
        assert rep.passed, rep.lines()


def test_verify_shift_on_small_corpus():
    corpus = nilpotent_module_corpus(GF(2), 2, 1)
    rep = verify_representation_embedding(shift_functor(2), corpus)
    assert rep.passed, rep.lines()


def test_zero_functor_is_caught():
    corpus = nilpotent_module_corpus(F3, 2, 1)
    rep = verify_representation_embedding(zero_functor(), corpus)
    assert not rep.passed
    assert not rep.by_name("iso_reflection").passed
