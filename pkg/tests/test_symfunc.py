from fractions import Fraction

import pytest

from qct.laurent import LaurentPoly, VarSet
from qct.partitions import Partition, dominance_leq, partitions_of
from qct.scalars import ONE, scalar
from qct.symfunc import (ExactDivisionError, SymExpansion, divexact_linear,
                         laurent_to_monomial_expansion, monomial_sym,
                         power_sum, schur, schur_laurent, vandermonde)


def test_monomial_sym_examples():
    m11 = monomial_sym(Partition([1, 1]), 3)
    assert set(m11.terms) == {(1, 1, 0), (1, 0, 1), (0, 1, 1)}
    assert all(c.is_one() for c in m11.terms.values())
    m2 = monomial_sym(Partition([2]), 2)
    assert set(m2.terms) == {(2, 0), (0, 2)}


def test_monomial_sym_elementary_pattern():
    # m with all-ones exponents lists the square-free monomials
    from itertools import combinations
    n, k = 5, 3
    m = monomial_sym(Partition([1] * k), n)
    assert len(m.terms) == len(list(combinations(range(n), k)))


def test_monomial_sym_too_long():
    with pytest.raises(ValueError):
        monomial_sym(Partition([1, 1, 1]), 2)


def test_schur_single_column_and_row():
    for n in (1, 2, 3, 4):
        assert schur(Partition([1] * n), n).coeffs == {Partition([1] * n): ONE}
    assert schur(Partition([1]), 2).coeffs == {Partition([1]): ONE}


def test_schur_21_in_three_variables():
    s = schur(Partition([2, 1]), 3)
    assert s.coeff(Partition([2, 1])) == ONE
    assert s.coeff(Partition([1, 1, 1])) == scalar(2)
    assert len(s.coeffs) == 2


def test_schur_monic_and_dominance_triangular():
    for w in range(1, 6):
        for n in range(1, 6):
            for kappa in partitions_of(w, max_len=n):
                exp = schur(kappa, n)
                assert exp.coeff(kappa).is_one()
                for mu in exp.coeffs:
                    assert dominance_leq(mu, kappa)


def test_bialternant_matches_numeric_ratio():
    # independent oracle: evaluate the alternant ratio at rational points
    kappa, n = Partition([2, 1]), 3
    s = schur_laurent(kappa, n)
    pts = [Fraction(2, 3), Fraction(3, 5), Fraction(5, 7)]
    padded = kappa.padded(n)
    col = [padded[c] + n - 1 - c for c in range(n)]
    num = 0
    den = 0
    from itertools import permutations

    def det(vals, exps):
        total = Fraction(0)
        for sigma in permutations(range(n)):
            sign = 1
            for a in range(n):
                for b in range(a + 1, n):
                    if sigma[a] > sigma[b]:
                        sign = -sign
            prod = Fraction(sign)
            for r in range(n):
                prod *= vals[r] ** exps[sigma[r]]
            total += prod
        return total

    numv = det(pts, col)
    denv = det(pts, [n - 1 - c for c in range(n)])
    got = s.evaluate([scalar(p.numerator) / scalar(p.denominator) for p in pts])
    assert got.evaluate(Fraction(0)) == numv / denv


def test_divexact_linear_raises_on_remainder():
    vs = VarSet.build(2)
    f = LaurentPoly(vs, {(1, 0): ONE})  # w1 alone is not divisible by w1 - w2
    with pytest.raises(ExactDivisionError):
        divexact_linear(f, 0, 1)


def test_vandermonde_division_roundtrip():
    vs = VarSet.build(3)
    v = vandermonde(vs, range(3))
    f = v * monomial_sym(Partition([2, 1]), 3)
    g = f
    for a in range(3):
        for b in range(a + 1, 3):
            g = divexact_linear(g, a, b)
    assert g == monomial_sym(Partition([2, 1]), 3)


def test_power_sums():
    assert power_sum(1, 2) == monomial_sym(Partition([1]), 2)
    assert power_sum(2, 2) == monomial_sym(Partition([2]), 2)
    assert set(power_sum(3, 3).terms) == {(3, 0, 0), (0, 3, 0), (0, 0, 3)}


def test_expansion_round_trip():
    exp = schur(Partition([2, 1]), 3)
    back = laurent_to_monomial_expansion(exp.to_laurent())
    assert back == exp.coeffs


def test_expansion_algebra():
    a = schur(Partition([2]), 2)
    b = schur(Partition([1, 1]), 2)
    s = a + b
    assert s.coeff(Partition([2])).is_one()
    assert s.coeff(Partition([1, 1])) == scalar(2)
    assert (s - s).is_zero()


def test_schur_basis_tag_conversion():
    exp = SymExpansion("schur", 3, {Partition([2, 1]): ONE})
    mono = exp.to_monomial()
    assert mono.coeffs == schur(Partition([2, 1]), 3).coeffs
