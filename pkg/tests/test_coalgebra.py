import pytest

from coalglab.coalgebra import (Coalgebra, Quiver, Subspace, check_coalgebra, coradical, coradical_filtration,
                                grouplike_labels, grouplikes, is_pointed, kronecker_quiver, line_quiver, loop_quiver,
                                orthogonal, orthogonal_ideal_product, path_coalgebra, require_pointed,
                                single_arrow, two_cycle, wedge)
from coalglab.corpus import group_coalgebra_twisted, matrix_coalgebra
from coalglab.errors import BudgetExceeded, InputError, NotPointedError
from coalglab.budget import Budget
from coalglab.exactlin import GF, QQ


def grouplike_line(counit=1):
    return Coalgebra(QQ, ["g"], [[(0, 0, 1)]], [counit])


@pytest.fixture
def arrow():
    return path_coalgebra(single_arrow(), 1)


def test_check_grouplike_line():
    assert check_coalgebra(grouplike_line())
    rep = check_coalgebra(grouplike_line(0))
    assert not rep
    assert any("counit" in v and "g" in v for v in rep.violations)


def test_check_detects_coassociativity_failure():
    # Delta(x) = x (x) x + x (x) y is not coassociative
    c = Coalgebra(QQ, ["x", "y"], [[(0, 0, 1), (0, 1, 1)], [(1, 1, 1)]], [1, 1])
    rep = check_coalgebra(c)
    assert not rep
    assert any("coassociativity" in v for v in rep.violations)


def test_path_coalgebra_shapes(arrow):
    assert check_coalgebra(arrow)
    assert arrow.labels == ("a", "b", "alpha") or list(arrow.labels) == ["a", "b", "alpha"]
    i = arrow.index
    assert sorted(arrow.delta[i("alpha")]) == sorted([(i("a"), i("alpha"), 1), (i("alpha"), i("b"), 1)])
    assert arrow.counit == [1, 1, 0] or list(arrow.counit) == [1, 1, 0]

    lone = path_coalgebra(Quiver(("v",), ()), 5)
    assert lone.dim == 1 and check_coalgebra(lone)

    loop = path_coalgebra(loop_quiver(1), 2)
    j = loop.index
    assert sorted(loop.delta[j("l*l")]) == sorted([(j("g"), j("l*l"), 1), (j("l"), j("l"), 1), (j("l*l"), j("g"), 1)])


def test_path_coalgebra_budget():
    with pytest.raises(BudgetExceeded):
        path_coalgebra(loop_quiver(3), 6, QQ, Budget(max_basis=100))


def test_arrow_labels_without_separator():
    with pytest.raises(InputError):
        Quiver(("a",), (("x*y", "a", "a"),))


def test_orthogonal_examples(arrow):
    assert orthogonal(arrow.zero_space()) == arrow.full()
    assert orthogonal(arrow.full()).dim == 0
    assert orthogonal(arrow.span_labels("a", "b")) == arrow.span_labels("alpha")


def test_wedge_examples(arrow):
    a, b = arrow.span_labels("a"), arrow.span_labels("b")
    assert wedge(arrow, a, b) == arrow.full()
    # the other order only sees the grouplikes
    assert wedge(arrow, b, a) == arrow.span_labels("a", "b")
    assert wedge(arrow, arrow.full(), arrow.full()) == arrow.full()
    assert wedge(arrow, arrow.zero_space(), arrow.zero_space()).dim == 0


def test_wedge_matches_dual_formula_in_faithful_order(arrow):
    a, b = arrow.span_labels("a"), arrow.span_labels("b")
    dual = orthogonal(orthogonal_ideal_product(arrow, orthogonal(a), orthogonal(b)))
    assert dual == wedge(arrow, a, b)


def test_coradical_examples(arrow):
    two = Coalgebra(QQ, ["a", "b"], [[(0, 0, 1)], [(1, 1, 1)]], [1, 1])
    assert coradical(two) == two.full()
    assert coradical(arrow) == arrow.span_labels("a", "b")
    loop = path_coalgebra(loop_quiver(1), 2)
    assert coradical(loop) == loop.span_labels("g")


def test_coradical_filtration_examples(arrow):
    two = Coalgebra(QQ, ["a", "b"], [[(0, 0, 1)], [(1, 1, 1)]], [1, 1])
    assert [v.dim for v in coradical_filtration(two)] == [2]
    assert coradical_filtration(arrow) == [arrow.span_labels("a", "b"), arrow.full()]
    loop = path_coalgebra(loop_quiver(1), 2)
    assert coradical_filtration(loop) == [loop.span_labels("g"), loop.span_labels("g", "l"), loop.full()]


@pytest.mark.parametrize("q", [single_arrow(), two_cycle(), kronecker_quiver(2), line_quiver(3), loop_quiver(2)])
def test_path_coalgebra_grouplikes_are_vertices(q):
    c = path_coalgebra(q, 2)
    assert is_pointed(c)
    assert sorted(grouplike_labels(c)) == sorted(q.vertices)


@pytest.mark.parametrize("field", [QQ, GF(3), GF(2)])
def test_matrix_coalgebra_not_pointed(field):
    c = matrix_coalgebra(2, field)
    assert check_coalgebra(c)
    assert coradical(c) == c.full()
    assert not is_pointed(c)
    with pytest.raises(NotPointedError):
        require_pointed(c)


def test_grouplikes_not_on_basis_vectors():
    c = group_coalgebra_twisted(QQ)
    assert check_coalgebra(c)
    gs = grouplikes(c)
    # 1 = (u + w)/2 and g = (u - w)/2
    assert sorted(map(tuple, gs)) == sorted([(QQ(1) / 2, QQ(1) / 2), (QQ(1) / 2, -QQ(1) / 2)])


def test_one_dim_coalgebra_pointed():
    assert is_pointed(grouplike_line())


def test_restrict_and_subcoalgebra(arrow):
    v = arrow.span_labels("a", "alpha", "b")
    assert arrow.is_subcoalgebra(v)
    assert not arrow.is_subcoalgebra(arrow.span_labels("alpha"))
    sub = arrow.restrict(arrow.span_labels("a"))
    assert sub.dim == 1 and check_coalgebra(sub)


def test_subspace_algebra():
    F = GF(3)
    x = Subspace.span(F, 3, [[1, 0, 0], [0, 1, 1]])
    y = Subspace.span(F, 3, [[0, 1, 1], [0, 0, 1]])
    assert (x & y) == Subspace.span(F, 3, [[0, 1, 1]])
    assert (x + y).dim == 3
    assert x.contains_vector([1, 2, 2])
    assert x.coords([1, 2, 2]) == [1, 2]


def test_convolution_unit(arrow):
    f = [1, 2, 3]
    assert arrow.convolve(arrow.counit, f) == f
    assert arrow.convolve(f, arrow.counit) == f
