import random

import pytest

from coalglab.budget import Budget
from coalglab.coalgebra import kronecker_quiver, loop_quiver, path_coalgebra, single_arrow, two_cycle
from coalglab.comodule import Comodule, DimensionVector, cf, check_comodule, dimension_vector, is_isomorphic
from coalglab.errors import BudgetExceeded, InputError
from coalglab.exactlin import GF, QQ
from coalglab.ext import cf_dimvec, ext1_dim
from coalglab.oracle import (SweepStats, cf_dimvec_from_classes, cf_dimvec_oracle, enumerate_comodules,
                             enumerate_extensions, min_subcoalgebra_oracle, random_comodule)

F2, F3 = GF(2), GF(3)


def arrow(field=F3):
    return path_coalgebra(single_arrow(), 1, field)


@pytest.mark.parametrize("c,d,count", [
    (arrow(), {"a": 1}, 1),
    (arrow(), {"a": 1, "b": 1}, 2),
    (arrow(), {"a": 2}, 1),
    (path_coalgebra(loop_quiver(1), 2, F2), {"g": 2}, 2),
    (path_coalgebra(loop_quiver(1), 2, F2), {"g": 3}, 3),
])
def test_class_counts(c, d, count):
    reps = enumerate_comodules(c, DimensionVector.of(d))
    assert len(reps) == count
    for M in reps:
        assert check_comodule(M)
        assert dimension_vector(M) == DimensionVector.of(d)
    for i, M in enumerate(reps):
        for N in reps[i + 1:]:
            assert not is_isomorphic(M, N)


@pytest.mark.parametrize("c,s,t,dim,classes", [
    (arrow(), "b", "a", 0, 1),
    (arrow(), "a", "b", 1, 3),
    (path_coalgebra(kronecker_quiver(2), 1, F2), "a", "b", 2, 4),
    (path_coalgebra(loop_quiver(1), 1, F3), "g", "g", 1, 3),
])
def test_extension_counts(c, s, t, dim, classes):
    S, T = Comodule.simple(c, s), Comodule.simple(c, t)
    n = enumerate_extensions(S, T)
    assert (n.dim, n.classes) == (dim, classes)
    assert n.dim == ext1_dim(S, T)


def test_extensions_need_finite_field():
    c = path_coalgebra(single_arrow(), 1, QQ)
    with pytest.raises(InputError):
        enumerate_extensions(Comodule.simple(c, "a"), Comodule.simple(c, "b"))


@pytest.mark.parametrize("name,c", [
    ("arrow", arrow()),
    ("loop", path_coalgebra(loop_quiver(1), 2, F3)),
    ("two-cycle", path_coalgebra(two_cycle(), 2, F2)),
])
def test_min_subcoalgebra_is_cf(name, c):
    for d in [{"a": 1, "b": 1}, {"g": 3}, {"a": 2, "b": 1}]:
        if not set(d) <= set(c.labels):
            continue
        for M in enumerate_comodules(c, DimensionVector.of(d)):
            assert min_subcoalgebra_oracle(M) == cf(M)


def test_min_subcoalgebra_closes_up():
    c = path_coalgebra(loop_quiver(1), 2, F3)
    # rho(x) = l*l (x) x is not a comodule; the closure still contains everything Delta touches
    fake = Comodule.from_actions(c, [[[0]], [[0]], [[1]]])
    assert min_subcoalgebra_oracle(fake) == c.full()


@pytest.mark.parametrize("c,d,expected", [
    (arrow(), {"a": 1, "b": 1}, ("a", "b", "alpha")),
    (arrow(), {"b": 2}, ("b",)),
    (path_coalgebra(loop_quiver(1), 2, F2), {"g": 2}, ("g", "l")),
    (path_coalgebra(loop_quiver(1), 2, F2), {"g": 3}, ("g", "l", "l*l")),
])
def test_cf_dimvec_oracle_examples(c, d, expected):
    dv = DimensionVector.of(d)
    stats = SweepStats()
    got = cf_dimvec_oracle(c, dv, stats=stats)
    assert got == c.span_labels(*expected)
    assert got == cf_dimvec_from_classes(c, dv)
    assert got == cf_dimvec(c, dv)
    assert stats.orderings >= 1


def test_oracle_budget():
    c = path_coalgebra(loop_quiver(1), 2, F2)
    with pytest.raises(BudgetExceeded):
        cf_dimvec_oracle(c, DimensionVector.of(g=4), budget=Budget(max_total_dim=3))


@pytest.mark.parametrize("c,d", [
    (arrow(), {"a": 1, "b": 1}),
    (path_coalgebra(loop_quiver(1), 2, F2), {"g": 3}),
    (path_coalgebra(two_cycle(), 2, F2), {"a": 2, "b": 1}),
])
def test_random_samples_hit_exactly_one_class(c, d):
    dv = DimensionVector.of(d)
    reps = enumerate_comodules(c, dv)
    rng = random.Random(7)
    for _ in range(15):
        M = random_comodule(c, dv, rng)
        assert check_comodule(M)
        assert sum(is_isomorphic(M, R) for R in reps) == 1
