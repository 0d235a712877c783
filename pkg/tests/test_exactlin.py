from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from coalglab.errors import InputError
from coalglab.exactlin import (GF, QQ, Matrix, Poly, StructureAlgebra, factor, field_from_name, kernel_basis,
                               kronecker, minimal_polynomial, minpoly_factors, radical_of_matrix_algebra, rref,
                               span_is_nilpotent)
from coalglab.exactlin.matrix import rref_rows


def M(rows, field=QQ):
    return Matrix(field, rows)


# ---------------------------------------------------------------- fields

def test_rationals_are_reduced():
    x = QQ.parse("2/4")
    assert x == Fraction(1, 2)
    assert QQ.format(x) == "1/2"
    assert QQ.format(QQ.parse("-6/3")) == "-2"


def test_prime_field_residues():
    F = GF(7)
    assert F.parse("-1") == 6
    assert F.inv(3) == 5
    assert F.div(1, 3) == 5
    assert list(F.elements()) == list(range(7))


@pytest.mark.parametrize("bad", ["GF:4", "GF:1", "R", "GF:x"])
def test_bad_field_names(bad):
    with pytest.raises(InputError):
        field_from_name(bad)


def test_field_names():
    assert field_from_name("Q") is QQ
    assert field_from_name("GF:5") == GF(5)
    assert field_from_name("GF(5)") == GF(5)


# ---------------------------------------------------------------- rref / kernel / kronecker examples

def test_rref_examples():
    R, piv, rank = rref(M([[1, 0], [0, 1]]))
    assert R == M([[1, 0], [0, 1]]) and piv == [0, 1] and rank == 2
    R, piv, rank = rref(Matrix.zeros(QQ, 3, 3))
    assert R.is_zero() and piv == [] and rank == 0
    R, piv, rank = rref(M([[1, 2], [2, 4]]))
    assert R == M([[1, 2], [0, 0]]) and piv == [0] and rank == 1


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(QQ, 3)).nrows == 0
    assert kernel_basis(Matrix.zeros(QQ, 2, 2)) == Matrix.identity(QQ, 2)
    K = kernel_basis(M([[1, 1]]))
    assert K == M([[1, -1]])


def test_kronecker_examples():
    assert kronecker(Matrix.identity(QQ, 2), Matrix.identity(QQ, 3)) == Matrix.identity(QQ, 6)
    a = M([[1, 2], [3, 4]])
    assert kronecker(a, M([[1]])) == a
    assert kronecker(M([[2]]), M([[0, 1], [1, 0]])) == M([[0, 2], [2, 0]])


def test_minpoly_factor_examples():
    x = Poly.x(QQ)
    assert minpoly_factors(Matrix.identity(QQ, 3)) == [(x - 1, 1)]
    assert minpoly_factors(M([[0, 1], [0, 0]])) == [(x, 2)]
    assert minpoly_factors(M([[1, 0], [0, 2]])) == [(x - 1, 1), (x - 2, 1)]


def test_factor_over_prime_field():
    F = GF(5)
    x = Poly.x(F)
    # x^2 + 2 is irreducible mod 5; x^2 - 1 splits
    assert factor(x * x + 2) == [(x * x + 2, 1)]
    assert factor(x * x - 1) == [(x + 1, 1), (x + 4, 1)]


def test_inverse_and_solve():
    A = M([[2, 1], [1, 1]])
    assert A @ A.inverse() == Matrix.identity(QQ, 2)
    sol = A.solve(M([[3], [2]]))
    assert sol == M([[1], [1]])
    assert M([[1, 1], [1, 1]]).solve(M([[1], [0]])) is None
    with pytest.raises(ZeroDivisionError):
        M([[1, 1], [1, 1]]).inverse()


# ---------------------------------------------------------------- properties

FIELDS = [QQ, GF(2), GF(3), GF(7)]


@st.composite
def matrices(draw, max_rows=4, max_cols=4, square=False):
    F = draw(st.sampled_from(FIELDS))
    r = draw(st.integers(1, max_rows))
    c = r if square else draw(st.integers(1, max_cols))
    if F.characteristic:
        ent = st.integers(0, F.characteristic - 1)
    else:
        ent = st.fractions(min_value=-4, max_value=4, max_denominator=3)
    rows = draw(st.lists(st.lists(ent, min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix(F, rows, c)


@given(matrices())
def test_rref_is_idempotent(m):
    R, piv, rank = rref(m)
    R2, piv2, rank2 = rref(R)
    assert R2 == R and piv2 == piv and rank2 == rank


@given(matrices())
def test_kernel_rank_nullity(m):
    K = kernel_basis(m)
    assert K.nrows + m.rank() == m.ncols
    for v in K.rows:
        assert all(not x for x in (m @ Matrix(m.field, [[y] for y in v], 1)).flatten())


@st.composite
def kron_triples(draw):
    F = draw(st.sampled_from(FIELDS))
    ent = st.integers(0, F.characteristic - 1) if F.characteristic else st.integers(-3, 3)
    out = []
    for _ in range(3):
        r, c = draw(st.integers(1, 3)), draw(st.integers(1, 3))
        rows = draw(st.lists(st.lists(ent, min_size=c, max_size=c), min_size=r, max_size=r))
        out.append(Matrix(F, rows, c))
    return out


@given(kron_triples())
def test_kronecker_associative(abc):
    a, b, c = abc
    assert kronecker(kronecker(a, b), c) == kronecker(a, kronecker(b, c))


@given(matrices(4, 4, square=True))
def test_minimal_polynomial_is_minimal(m):
    mp = minimal_polynomial(m)
    assert mp.eval_matrix(m).is_zero()
    # no proper divisor annihilates m
    assembled = Poly.const(m.field, 1)
    for g, k in minpoly_factors(m):
        assembled = assembled * g ** k
    assert assembled == mp
    for g, k in minpoly_factors(m):
        smaller = mp // g
        assert not smaller.eval_matrix(m).is_zero()


# ---------------------------------------------------------------- radical against brute force

def _closure(F, gens, n):
    basis = [Matrix.identity(F, n)] + list(gens)
    while True:
        rows, _ = rref_rows([b.flatten() for b in basis], n * n, F.characteristic)
        cur = [Matrix(F, [r[i * n:(i + 1) * n] for i in range(n)], n) for r in rows]
        prods = cur + [a @ b for a in cur for b in cur]
        rows2, _ = rref_rows([b.flatten() for b in prods], n * n, F.characteristic)
        if len(rows2) == len(rows):
            return cur
        basis = prods


def _brute_radical(F, basis):
    """``{x : x a nilpotent for every a}`` by enumeration over GF(p)."""
    p = F.characteristic
    d = len(basis)
    n = basis[0].nrows
    elems = []
    for coeffs in product(range(p), repeat=d):
        acc = Matrix.zeros(F, n, n)
        for c, b in zip(coeffs, basis):
            acc = acc + b.scale(c)
        elems.append((coeffs, acc))
    out = []
    for coeffs, x in elems:
        if all(((x @ a) ** n).is_zero() for _, a in elems):
            out.append(list(coeffs))
    return out


@given(st.sampled_from([2, 3]), st.lists(st.lists(st.integers(0, 2), min_size=9, max_size=9), min_size=1, max_size=2))
def test_radical_matches_brute_force(p, raw):
    F = GF(p)
    gens = [Matrix(F, [r[i * 3:(i + 1) * 3] for i in range(3)], 3) for r in raw]
    basis = _closure(F, gens, 3)
    if len(basis) > 5:
        return
    J = radical_of_matrix_algebra(basis, F)
    members = _brute_radical(F, basis)
    span, _ = rref_rows(members, len(basis), p)
    assert span == J
    assert len(members) == p ** len(J)


def test_span_is_nilpotent():
    F = GF(3)
    a = Matrix(F, [[0, 1], [0, 0]])
    b = Matrix(F, [[0, 0], [1, 0]])
    assert span_is_nilpotent([a], F)
    assert not span_is_nilpotent([a, b], F)


def test_structure_algebra_radical_of_upper_triangular():
    F = QQ
    E = lambda i, j: Matrix(F, [[1 if (r, c) == (i, j) else 0 for c in range(2)] for r in range(2)])
    A = StructureAlgebra.from_matrices(F, [E(0, 0), E(1, 1), E(0, 1)])
    J = A.radical()
    assert J == [[0, 0, 1]]
    assert not A.is_commutative()
