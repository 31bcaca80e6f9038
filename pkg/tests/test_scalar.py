# tests/test_scalar.py
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from algebra.errors import OrderMismatchError, ParseError
from algebra.scalar import (
    CycloField,
    CycloScalar,
    ScalarMatrix,
    common_order,
    cyclo_arith,
    cyclotomic_polynomial,
    degree,
    embed,
    mat_vec,
    nullspace,
    parse_rational,
    rank,
    sparse_rank,
)
from oracles import cyclotomic_coefficients

ORDERS = [1, 2, 3, 4, 5, 6, 8, 12]

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def scalars(draw, order=None):
    n = order if order is not None else draw(st.sampled_from(ORDERS))
    coeffs = draw(st.lists(small_fractions, min_size=degree(n), max_size=degree(n)))
    return CycloScalar(n, coeffs)


@st.composite
def scalar_triples(draw):
    n = draw(st.sampled_from(ORDERS))
    return tuple(draw(scalars(n)) for _ in range(3))


@pytest.mark.parametrize("n", range(1, 25))
def test_cyclotomic_polynomial_matches_sympy(n):
    assert list(cyclotomic_polynomial(n)) == cyclotomic_coefficients(n)


@settings(max_examples=60, deadline=None)
@given(scalar_triples())
def test_field_axioms(triple):
    a, b, c = triple
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if not a.is_zero():
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@settings(max_examples=40, deadline=None)
@given(scalars(), st.integers(min_value=-4, max_value=4))
def test_integer_powers(a, k):
    if a.is_zero():
        return
    assert a ** k * a ** -k == 1
    assert a ** (k + 1) == a ** k * a


def test_zeta_has_exact_order():
    for n in ORDERS:
        z = CycloScalar.zeta(n)
        assert z ** n == 1
        assert all(z ** k != 1 for k in range(1, n))


def test_root_of_unity_detection():
    assert CycloScalar.zeta(12, 5).is_root_of_unity()
    assert (-CycloScalar.zeta(3)).is_root_of_unity()
    assert not CycloScalar.rational(5, 2).is_root_of_unity()
    assert not CycloScalar(4).is_root_of_unity()


def test_equality_across_orders():
    assert CycloScalar.zeta(6, 2) == CycloScalar.zeta(3, 1)
    assert hash(CycloScalar.zeta(6, 2)) == hash(CycloScalar.zeta(3, 1))
    assert CycloScalar.zeta(4) ** 2 == CycloScalar.zeta(2) == -1
    assert embed(CycloScalar.zeta(3), 6) == CycloScalar.zeta(6, 2)


def test_mixed_orders_need_embedding():
    with pytest.raises(OrderMismatchError):
        CycloScalar.zeta(3) + CycloScalar.zeta(4)
    with pytest.raises(OrderMismatchError):
        cyclo_arith(CycloScalar.zeta(3), CycloScalar.zeta(4), "mul")
    with pytest.raises(OrderMismatchError):
        embed(CycloScalar.zeta(4), 6)


def test_common_order_compares_across_fields():
    assert common_order() == 1
    assert common_order(CycloScalar.zeta(4), CycloScalar.zeta(6)) == 12
    assert CycloScalar.zeta(4) != CycloScalar.zeta(6)
    assert CycloScalar.zeta(12, 3) == CycloScalar.zeta(4)
    assert CycloScalar.rational(3, -1) == CycloScalar.zeta(4) ** 2


def test_cyclo_arith_dispatch():
    z = CycloScalar.zeta(5)
    assert cyclo_arith(z, z, "mul") == CycloScalar.zeta(5, 2)
    assert cyclo_arith(z, z, "div") == 1
    assert cyclo_arith(z, z, "sub").is_zero()
    with pytest.raises(ValueError):
        cyclo_arith(z, z, "pow")


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        CycloScalar.zeta(3) / CycloScalar(3)


def test_field_factory_and_complex_value():
    F = CycloField(4)
    assert F.one + F.zero == 1
    assert F.zeta(1) * F.zeta(3) == F.one
    assert F.from_rational(Fraction(1, 2)) * 2 == 1
    assert abs(F.zeta(1).to_complex() - 1j) < 1e-12


def test_json_form():
    z = CycloScalar(3, [Fraction(1, 2), -1])
    assert z.to_json() == {"N": 3, "coeffs": ["1/2", "-1"]}
    assert CycloScalar.from_json(z.to_json()) == z
    with pytest.raises(ParseError):
        CycloScalar.from_json({"coeffs": []})


def test_parse_rational():
    assert parse_rational(" -3/4 ") == Fraction(-3, 4)
    with pytest.raises(ParseError):
        parse_rational("three")


def _matrix(values, order=1):
    return ScalarMatrix.from_rows([[CycloScalar.rational(order, v) for v in row] for row in values])


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5))
def test_rank_matches_sympy(values):
    assert rank(_matrix(values)) == sympy.Matrix(values).rank()


@settings(max_examples=30, deadline=None)
@given(st.lists(st.lists(st.integers(-2, 2), min_size=4, max_size=4), min_size=1, max_size=4))
def test_nullspace_is_exact_kernel(values):
    m = _matrix(values)
    basis = nullspace(m, 1)
    assert len(basis) == 4 - rank(m)
    for v in basis:
        assert all(x.is_zero() for x in mat_vec(m, v))


@st.composite
def scalar_matrices(draw):
    n = draw(st.sampled_from([1, 3, 4]))
    rows = draw(st.integers(1, 4))
    cols = draw(st.integers(1, 4))
    # sparse-ish entries so that rank deficiency actually shows up
    entry = st.one_of(st.just(CycloScalar(n)), scalars(n))
    return ScalarMatrix.from_rows([[draw(entry) for _ in range(cols)] for _ in range(rows)])


@settings(max_examples=50, deadline=None)
@given(scalar_matrices())
def test_rank_of_transpose(m):
    assert rank(m) == rank(m.transpose())
    assert rank(m) <= min(m.rows, m.cols)


def test_rank_of_transpose_on_a_dependent_matrix():
    z = CycloScalar.zeta(3)
    m = ScalarMatrix.from_rows([[CycloScalar.rational(3, 1), z, z * z], [z, z * z, CycloScalar.rational(3, 1)]])
    assert rank(m) == rank(m.transpose()) == 1


def test_nullspace_over_cyclotomic_field():
    z = CycloScalar.zeta(3)
    one = CycloScalar.rational(3, 1)
    m = ScalarMatrix.from_rows([[one, z], [z, z * z]])
    basis = nullspace(m)
    assert len(basis) == 1
    assert basis[0] == (-z, one)


def test_sparse_rank_is_order_independent_and_bounded():
    z = CycloScalar.zeta(4)
    one = CycloScalar.rational(4, 1)
    rows = [{0: one, 2: z}, {1: one}, {0: z, 2: -one}]
    assert sparse_rank(rows) == sparse_rank(list(reversed(rows))) == 2
    with pytest.raises(ValueError):
        sparse_rank(rows, cols=2)
