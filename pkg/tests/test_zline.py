# tests/test_zline.py
from fractions import Fraction

import pytest

from algebra.errors import ParseError, WindowError
from algebra.scalar import CycloScalar
from algebra.zline import (
    ZFunction,
    ZTwoFunction,
    cocycle_space_dim,
    escape_threshold,
    hh1_z_dim,
    hh1_z_report,
    parse_lambda,
    parse_q,
    solve_hh1_recurrence,
    tau2_escape_check,
    tau2_table,
    tau2_value,
)

TWO = CycloScalar.rational(1, 2)
ONE = CycloScalar.rational(1, 1)


def test_hh1_vanishes_for_lambda_two():
    assert hh1_z_dim(TWO, 20) == 0
    assert cocycle_space_dim(TWO, 20) == 1


def test_window_cocycles_are_multiples_of_lambda_power_minus_one():
    F = solve_hh1_recurrence(TWO, 1, 20)
    beta = Fraction(1, 2 - 1)
    assert all(F[n] == beta * (Fraction(2) ** n - 1) for n in range(-20, 21))
    assert F[3] == 7
    assert F[-1] == Fraction(-1, 2)


def test_trivial_lambda_is_the_control_case():
    assert hh1_z_dim(ONE, 20) == 1
    F = solve_hh1_recurrence(ONE, 3, 5)
    assert F[-4] == -12


def test_root_of_unity_lambda():
    lam = parse_lambda("zeta:4:1")
    assert lam.is_root_of_unity()
    assert hh1_z_dim(lam, 12) == 0
    # lambda^4 = 1: the cocycle returns to 0 every 4 steps
    assert solve_hh1_recurrence(lam, 1, 12)[8] == 0


def test_report():
    report = hh1_z_report(TWO, 12)
    assert report["dim"] == 0
    assert report["cocycle_dim"] == 1
    assert report["coboundary_dim"] == 1
    assert report["restricted_dim"] == 0
    assert report["beta"] == {"N": 1, "coeffs": ["1"]}
    control = hh1_z_report(ONE, 12)
    assert control["dim"] == 1 and control["beta"] is None


def test_small_windows():
    with pytest.raises(WindowError):
        hh1_z_dim(TWO, 1)
    with pytest.raises(WindowError):
        hh1_z_report(TWO, 1)
    with pytest.raises(WindowError):
        tau2_escape_check(ZFunction.step(), TWO, 5)


def test_escape_threshold():
    assert escape_threshold(12) == 8
    assert escape_threshold(6) == 4


def test_step_escapes():
    escapes, witness = tau2_escape_check(parse_q("step", TWO, 12), TWO, 12)
    assert escapes
    assert len(witness) >= 8
    assert len(witness) == 12


@pytest.mark.parametrize("lam", [TWO, CycloScalar.rational(1, Fraction(1, 3))])
def test_step_escape_is_monotone_in_the_window(lam):
    results = [tau2_escape_check(parse_q("step", lam, W), lam, W) for W in range(6, 19)]
    flags = [escapes for escapes, _ in results]
    assert flags == sorted(flags)
    assert all(flags)
    # the best fit is the constant 0 or 1, missing one side of the step
    assert [len(w) for _, w in results] == list(range(6, 19))


@pytest.mark.parametrize("q", ['finite:{"0": 1, "3": 2}', "geom:1,3", "geom:0,1"])
def test_restricted_functions_stay(q):
    escapes, witness = tau2_escape_check(parse_q(q, TWO, 12), TWO, 12)
    assert not escapes
    assert len(witness) <= escape_threshold(12)


def test_tau2_formula():
    F = ZTwoFunction.separable(ZFunction.constant(1), ZFunction.finite({2: 5}))
    # (tau_2 F)(m, n) = F(-m-n, m) lambda^n
    assert tau2_value(F, TWO, 2, 1) == 10
    assert tau2_value(F, TWO, 1, 1) == 0
    table = tau2_table(F, TWO, 3)
    assert len(table) == 49
    assert table[(2, -1)] == Fraction(5, 2)


def test_anti_diagonal_support():
    F = ZTwoFunction.anti_diagonal(ZFunction.step())
    assert F(-3, 3) == 1
    assert F(3, -3) == 0
    assert F(1, 1) == 0


def test_function_kinds():
    g = ZFunction.geometric(TWO, scale=3, offset=1)
    assert g(2) == 13
    assert g(-1) == Fraction(5, 2)
    assert ZFunction.step(threshold=2)(1) == 0
    t = ZFunction.table({n: n * n for n in range(-2, 3)}, W=2)
    assert t(-2) == 4
    with pytest.raises(WindowError):
        t(3)
    with pytest.raises(ParseError):
        ZFunction.table({0: 1}, W=2)
    with pytest.raises(ParseError):
        ZFunction("wavelet")


@pytest.mark.parametrize("text", ["0", "zeta:4", "zeta:x:1", "zeta:0:1", "abc"])
def test_bad_lambda(text):
    with pytest.raises(ParseError):
        parse_lambda(text)


@pytest.mark.parametrize("text", ["ramp", "finite:[1,2", "geom:1"])
def test_bad_q(text):
    with pytest.raises(ParseError):
        parse_q(text, TWO, 12)


def test_lambda_forms():
    assert parse_lambda("3/2") == Fraction(3, 2)
    assert parse_lambda("zeta:6:3") == -1
