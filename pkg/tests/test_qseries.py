import pytest

from qct.laurent import LaurentPoly, VarSet, ct_of_product
from qct.qseries import (bracket_run, dyson_andrews_rhs, morris_rhs, poch,
                         q_bracket, q_factorial, q_gamma, qq_poch,
                         shifted_factorial)
from qct.scalars import ONE, Q, ZERO, qpow
from qct.weights import WeightSpec, weight_factor_polys

VS1 = VarSet.build(1)
W = LaurentPoly.variable(VS1, 0)


def test_poch_empty_product():
    assert poch(W, 0) == LaurentPoly.one(VS1)


def test_poch_length_two():
    expect = (LaurentPoly.one(VS1) - W) * (LaurentPoly.one(VS1) - W.scalar_mul(Q))
    assert poch(W, 2) == expect


def test_poch_inverse_argument():
    arg = LaurentPoly.variable(VS1, 0, -1).scalar_mul(Q)
    assert poch(arg, 1) == LaurentPoly.one(VS1) - arg


def test_poch_negative_length_rejected():
    with pytest.raises(ValueError):
        poch(W, -1)


def test_poch_splitting_property():
    for l1 in range(0, 3):
        for l2 in range(0, 3):
            lhs = poch(W, l1 + l2)
            rhs = poch(W, l1) * poch(W.scalar_mul(qpow(l1)), l2)
            assert lhs == rhs


def test_q_gamma_values():
    assert q_gamma(1).is_one()
    assert q_gamma(3) == ONE + Q
    assert q_gamma(3, base=2) == ONE + Q * Q


def test_q_gamma_recurrence():
    for n in range(1, 9):
        assert q_gamma(n + 1) == q_bracket(n) * q_gamma(n)


def test_q_gamma_rejects_nonpositive():
    with pytest.raises(ValueError):
        q_gamma(0)


def test_brackets():
    assert q_bracket(0) == ZERO
    assert q_bracket(3) == ONE + Q + Q * Q
    assert q_factorial(2, base=2) == ONE + Q * Q
    # negative bracket is a bona fide rational function
    assert q_bracket(-1) == -ONE / Q


def test_bracket_run_is_gamma_ratio():
    for x in range(1, 5):
        for k in range(0, 4):
            assert bracket_run(x, k) == q_gamma(x + k) / q_gamma(x)


def test_shifted_factorial():
    assert shifted_factorial(3, (), 1).is_one()
    assert shifted_factorial(5, (1,), 1) == q_bracket(5)
    assert shifted_factorial(5, (1, 1), 1, n=2) == q_bracket(5) * q_bracket(4)
    assert shifted_factorial(0, (2, 1), 1, n=3, omit_first=True) == q_bracket(-1)
    assert shifted_factorial(0, (1, 1), 1, n=2, omit_first=True) == q_bracket(-1)
    assert shifted_factorial(0, (1,), 1, n=1, omit_first=True).is_one()


def test_qq_poch():
    assert qq_poch(2, 1) == ONE - Q * Q
    assert qq_poch(1, 3) == (ONE - Q) * (ONE - Q ** 2) * (ONE - Q ** 3)


def test_dyson_andrews_small_grid():
    for n0 in (2, 3, 4):
        for lam in (1, 2):
            spec = WeightSpec((n0,), lam)
            ct = ct_of_product(weight_factor_polys(spec), varset=spec.varset())
            assert ct == dyson_andrews_rhs(n0, lam)


def test_morris_rhs_n1():
    # single-variable case reduces to the q-binomial evaluation
    assert morris_rhs(1, 1, 1, 1) == q_gamma(3) / (q_gamma(2) * q_gamma(2))
