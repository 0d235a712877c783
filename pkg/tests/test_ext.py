import pytest

from coalglab.coalgebra import (gamma3, kronecker_quiver, line_quiver, loop_quiver,
                                path_coalgebra, single_arrow, two_cycle)
from coalglab.comodule import Comodule, DimensionVector
from coalglab.corpus import matrix_coalgebra
from coalglab.errors import InputError, NotPointedError
from coalglab.ext import (INF, QuiverPresentation, VertexFamily, cf_dimvec, ext1_dim, ext_quiver, is_f_finite,
                          is_locally_finite, skew_primitives, verify_coalgebra_map, wildness_witness)


def S(c, g):
    return Comodule.simple(c, g)


def test_ext_along_an_arrow():
    c = path_coalgebra(single_arrow(), 1)
    assert ext1_dim(S(c, "a"), S(c, "b")) == 1
    assert ext1_dim(S(c, "b"), S(c, "a")) == 0
    assert ext1_dim(S(c, "a"), S(c, "a")) == 0


@pytest.mark.parametrize("k", [1, 2, 3])
def test_ext_counts_loops(k):
    c = path_coalgebra(loop_quiver(k), 1)
    assert ext1_dim(S(c, "g"), S(c, "g")) == k


def test_skew_primitives_include_coboundary():
    c = path_coalgebra(single_arrow(), 1)
    a, b = c.basis_vector("a"), c.basis_vector("b")
    # alpha plus the trivial direction b - a
    assert skew_primitives(c, a, b).dim == 2
    assert skew_primitives(c, b, a).dim == 1


@pytest.mark.parametrize("q", [single_arrow(), two_cycle(), loop_quiver(1), kronecker_quiver(2), gamma3(),
                               loop_quiver(3), line_quiver(3)])
@pytest.mark.parametrize("length", [1, 2])
def test_ext_quiver_recovers_the_quiver(q, length):
    eq = ext_quiver(path_coalgebra(q, length))
    want = {}
    for _, s, t in q.arrows:
        want[(s, t)] = want.get((s, t), 0) + 1
    assert eq.multiplicity == want
    assert sorted(eq.quiver.vertices) == sorted(q.vertices)


def test_ext_quiver_needs_pointed():
    with pytest.raises(NotPointedError):
        ext_quiver(matrix_coalgebra(2))


def test_cf_dimvec_examples():
    c = path_coalgebra(single_arrow(), 1)
    assert cf_dimvec(c, DimensionVector.of(a=1)) == c.span_labels("a")
    assert cf_dimvec(c, DimensionVector.of(a=2)) == c.span_labels("a")
    assert cf_dimvec(c, DimensionVector.of(a=1, b=1)) == c.full()
    loop = path_coalgebra(loop_quiver(1), 2)
    assert cf_dimvec(loop, DimensionVector.of(g=2)) == loop.span_labels("g", "l")
    assert cf_dimvec(loop, DimensionVector.of(g=3)) == loop.full()


def test_cf_dimvec_rejects_unknown_label():
    c = path_coalgebra(single_arrow(), 1)
    with pytest.raises(InputError):
        cf_dimvec(c, DimensionVector.of(z=1))


def test_local_finiteness_of_finite_quivers():
    assert is_locally_finite(kronecker_quiver(3))
    assert is_f_finite(QuiverPresentation.from_quiver(gamma3()))


def test_infinitely_many_parallel_arrows():
    gamma_inf = QuiverPresentation(["a", "b"], [("a", "b", INF)])
    assert not is_locally_finite(gamma_inf)
    assert not is_f_finite(gamma_inf)


def test_infinite_star():
    star = QuiverPresentation([VertexFamily("leaves"), "hub"], [("leaves", "hub", 1)])
    assert is_locally_finite(star)
    assert not is_f_finite(star)
    outward = QuiverPresentation([VertexFamily("leaves"), "hub"], [("hub", "leaves", 1)])
    assert is_f_finite(outward)


def test_undeclared_vertex():
    with pytest.raises(InputError):
        is_locally_finite(QuiverPresentation(["a"], [("a", "b", 1)]))


@pytest.mark.parametrize("q,kind", [(loop_quiver(3), "three-loops"), (gamma3(), "Gamma3"),
                                    (kronecker_quiver(4), "Gamma3")])
def test_wildness_witnesses(q, kind):
    c = path_coalgebra(q, 1)
    w = wildness_witness(c)
    assert w.found and w.kind == kind
    assert all(w.checks.values()), w.checks
    assert verify_coalgebra_map(w.model, c, w.basis)


@pytest.mark.parametrize("q", [single_arrow(), kronecker_quiver(2), loop_quiver(2), two_cycle()])
def test_no_witness_below_three(q):
    w = wildness_witness(path_coalgebra(q, 2))
    assert not w.found
    assert "not a tameness certificate" in w.describe()


def test_coalgebra_map_rejects_non_maps():
    model = path_coalgebra(single_arrow(), 1)
    c = path_coalgebra(single_arrow(), 1)
    swapped = [c.basis_vector("b"), c.basis_vector("a"), c.basis_vector("alpha")]
    assert not verify_coalgebra_map(model, c, swapped)
    assert verify_coalgebra_map(model, c, [c.basis_vector(x) for x in ("a", "b", "alpha")])
