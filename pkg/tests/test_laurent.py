import random

import pytest

from qct.laurent import (LaurentPoly, VarSet, VarSetMismatchError,
                         clear_denominators, combine, ct_of_product,
                         parse_laurent, restricted_product)
from qct.scalars import ONE, Q, T, ZERO, scalar

VS2 = VarSet.build(2)
VS3 = VarSet.build(3)
ONE2 = LaurentPoly.one(VS2)


def mono(vs, exps, c=ONE):
    return LaurentPoly.monomial(vs, exps, c)


def test_combine_mul_direct_expansion():
    f = (ONE2 - mono(VS2, (1, -1))) * (ONE2 - mono(VS2, (-1, 1)))
    assert f.coeff((0, 0)) == scalar(2)
    assert f.coeff((1, -1)) == -ONE
    assert f.coeff((-1, 1)) == -ONE
    assert len(f.terms) == 3


def test_combine_identity():
    f = ONE2 - mono(VS2, (1, -1))
    assert combine(f, ONE2, "mul") == f


def test_pair_weight_expansion():
    # (1 - q w2/w1)(1 - w1/w2) = 1 + q - w1/w2 - q w2/w1
    g = (ONE2 - mono(VS2, (-1, 1), Q)) * (ONE2 - mono(VS2, (1, -1)))
    assert g.coeff((0, 0)) == ONE + Q
    assert g.coeff((1, -1)) == -ONE
    assert g.coeff((-1, 1)) == -Q
    assert g.constant_term() == ONE + Q


def test_constant_term_examples():
    assert (ONE2 - mono(VS2, (1, -1))).constant_term() == ONE
    assert mono(VS2, (2, -2)).constant_term() == ZERO


def test_varset_mismatch():
    with pytest.raises(VarSetMismatchError):
        combine(ONE2, LaurentPoly.one(VS3), "add")


def test_star():
    assert mono(VS2, (1, 1)).star() == mono(VS2, (-1, -1))
    g = (ONE2 - mono(VS2, (-1, 1), Q)) * (ONE2 - mono(VS2, (1, -1)))
    assert g.star().star() == g
    assert g.star().constant_term() == g.constant_term()


def test_scale_var():
    assert mono(VS2, (2, 0)).scale_var(0, Q) == mono(VS2, (2, 0), Q * Q)
    assert mono(VS2, (-1, 0)).scale_var(0, Q) == mono(VS2, (-1, 0), ONE / Q)
    f = LaurentPoly(VS2, {(1, 1): ONE, (0, 1): ONE}).scale_var(0, Q)
    assert f == LaurentPoly(VS2, {(1, 1): Q, (0, 1): ONE})
    with pytest.raises(ValueError):
        mono(VS2, (1, 0)).scale_var(0, ZERO)


def test_set_var_one():
    f = (ONE2 - mono(VS2, (1, -1))) * (ONE2 - mono(VS2, (-1, 1)))
    r = f.set_var_one(1)
    assert r.varset.size == 1
    assert r.coeff((0,)) == scalar(2)
    assert r.coeff((1,)) == -ONE
    assert r.coeff((-1,)) == -ONE
    assert LaurentPoly.one(VS2).set_var_one(0).constant_term() == ONE


def _random_deg0(rng, vs, nterms=4):
    terms = {}
    for _ in range(nterms):
        e = [rng.randint(-2, 2) for _ in range(vs.size - 1)]
        e.append(-sum(e))
        c = rng.randint(-3, 3)
        if c:
            terms[tuple(e)] = scalar(c)
    return LaurentPoly(vs, terms)


def test_ct_preserved_by_dehomogenization():
    rng = random.Random(11)
    for _ in range(25):
        fs = [_random_deg0(rng, VS3) for _ in range(4)]
        naive = fs[0]
        for g in fs[1:]:
            naive = naive * g
        assert naive.constant_term() == ct_of_product(fs) \
            == ct_of_product(fs, dehomogenize=True)


def test_dehomogenize_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        ct_of_product([ONE2 - mono(VS2, (1, 0))], dehomogenize=True)


def test_combine_assoc_comm_random():
    rng = random.Random(5)
    for _ in range(15):
        f, g, h = (_random_deg0(rng, VS3) for _ in range(3))
        assert (f * g) * h == f * (g * h)
        assert f * g == g * f
        assert (f + g) + h == f + (g + h)
        assert f + g == g + f


def test_positivity_of_self_pairing_at_real_points():
    from fractions import Fraction
    rng = random.Random(3)
    for _ in range(10):
        f = _random_deg0(rng, VS2)
        v = (f * f.star()).constant_term()
        val = v.evaluate(Fraction(1, 3), Fraction(1, 2))
        assert val >= 0


def test_restricted_product_window():
    # restrict to the slice where the first variable ends at exactly +1
    f = ONE2 + mono(VS2, (1, -1))
    g = ONE2 + mono(VS2, (1, -1))
    res = restricted_product([f, g], [(1, 1), (-2, 0)])
    assert set(res.terms) == {(1, -1)}
    assert res.coeff((1, -1)) == scalar(2)


def test_packed_fold_matches_scalar_fold():
    # >= 8 factors triggers the packed big-integer path; compare to naive
    rng = random.Random(23)
    for _ in range(6):
        fs = [_random_deg0(rng, VS3, nterms=3) for _ in range(8)]
        naive = fs[0]
        for g in fs[1:]:
            naive = naive * g
        assert ct_of_product(fs) == naive.constant_term()


def test_clear_denominators():
    f = LaurentPoly(VS2, {(1, -1): (ONE + Q) / (ONE - Q),
                          (0, 0): ONE / (ONE - Q * Q)})
    g, d = clear_denominators(f)
    assert d == ONE - Q * Q
    assert g == f.scalar_mul(d)
    assert all(c.den == {(0, 0): 1} for c in g.terms.values())


def test_text_round_trip():
    g = (ONE2 - mono(VS2, (-1, 1), Q)) * (ONE2 - mono(VS2, (1, -1)))
    assert parse_laurent(g.to_text(), VS2) == g
    big = LaurentPoly(VS2, {(0, 0): (ONE + Q) / (ONE - Q),
                            (2, -2): scalar(3) * Q, (-1, 0): -T})
    assert parse_laurent(big.to_text(), VS2) == big
    assert parse_laurent("0", VS2).is_zero()


def test_text_sorted_lexicographically():
    f = LaurentPoly(VS2, {(1, -1): -ONE, (0, 0): ONE + Q, (-1, 1): -Q})
    assert f.to_text() == "-q*w1^-1*w2 + 1 + q - w1*w2^-1"
