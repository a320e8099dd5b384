"""Macdonald operators and polynomials with fully formal (q, t) coefficients.

The polynomials are built as monic eigenfunctions of the first-order
Macdonald operator by back-substitution in the dominance-triangular
monomial basis; the higher operators are used as consistency checks.
Norms and principal specializations come with both closed product forms
and direct constant-term cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict

from .laurent import LaurentPoly, VarSet, ct_of_product
from .partitions import Partition, dominance_leq, partitions_of, revlex_key
from .qseries import int_factorial, poch_factors, qq_poch
from .scalars import ONE, Q, T, ZERO, ExactScalar, qpow, scalar
from .symfunc import (SymExpansion, _wvarset, divexact_linear,
                      laurent_to_monomial_expansion, monomial_sym, power_sum)


class OperatorCancellationError(ArithmeticError):
    """The rational prefactors failed to cancel after summing over subsets."""


class EigenvalueCollisionError(ArithmeticError):
    """Two partitions produced the same operator eigenvalue during the solve."""


@dataclass(frozen=True)
class MacdonaldOpSpec:
    """Order-r Macdonald operator on n variables with a declared shift base."""

    n: int
    r: int
    base: ExactScalar
    tparam: ExactScalar

    def __post_init__(self):
        if not (0 <= self.r <= self.n):
            raise ValueError("operator order must satisfy 0 <= r <= n")


def apply_macdonald_op(spec: MacdonaldOpSpec, f: LaurentPoly) -> LaurentPoly:
    """Apply the operator: sum over r-subsets I of the t-deformed rational
    prefactor times the shift of every variable in I by the base.

    Works over the common denominator (the Vandermonde product) and divides
    it out exactly; failure to cancel is a hard error.
    """
    n, r = spec.n, spec.r
    vs = f.varset
    if vs.size != n:
        raise ValueError("operator arity does not match the variable count")
    if r == 0:
        return f
    t = spec.tparam
    tpref = t ** (r * (r - 1) // 2)
    total = LaurentPoly.zero(vs)
    for subset in combinations(range(n), r):
        inside = set(subset)
        prefac = LaurentPoly.one(vs)
        sign = 1
        for a in range(n):
            for b in range(a + 1, n):
                a_in, b_in = a in inside, b in inside
                ea = [0] * n
                ea[a] = 1
                eb = [0] * n
                eb[b] = 1
                ea, eb = tuple(ea), tuple(eb)
                if a_in and not b_in:
                    prefac = prefac * LaurentPoly(vs, {ea: t, eb: -ONE})
                elif b_in and not a_in:
                    prefac = prefac * LaurentPoly(vs, {eb: t, ea: -ONE})
                    sign = -sign
                else:
                    prefac = prefac * LaurentPoly(vs, {ea: ONE, eb: -ONE})
        shifted = f
        for i in subset:
            shifted = shifted.scale_var(i, spec.base)
        term = prefac * shifted
        if sign < 0:
            term = -term
        total = total + term
    try:
        for a in range(n):
            for b in range(a + 1, n):
                total = divexact_linear(total, a, b)
    except ArithmeticError as exc:
        raise OperatorCancellationError(
            "operator prefactors did not cancel to a Laurent polynomial") from exc
    return total.scalar_mul(tpref)


def eigenvalue_e(kappa: Partition, n: int, base: ExactScalar = Q,
                 tparam: ExactScalar = T) -> ExactScalar:
    """First-order eigenvalue: sum over i of t^(n-i) * base^(kappa_i)."""
    if kappa.length > n:
        raise ValueError("partition has more parts than variables")
    padded = kappa.padded(n)
    out = ZERO
    for i in range(1, n + 1):
        out = out + tparam ** (n - i) * base ** padded[i - 1]
    return out


_BASE_TAGS = {}


def _base_tag(base: ExactScalar, tparam: ExactScalar):
    return (base.to_text(), tparam.to_text())


@lru_cache(maxsize=None)
def _op_matrix_column(mu: Partition, n: int, base_txt: str, t_txt: str) -> tuple:
    """Monomial-basis expansion of the first-order operator applied to m_mu."""
    from .scalars import parse_scalar

    base = parse_scalar(base_txt)
    tparam = parse_scalar(t_txt)
    spec = MacdonaldOpSpec(n, 1, base, tparam)
    image = apply_macdonald_op(spec, monomial_sym(mu, n))
    exp = laurent_to_monomial_expansion(image)
    return tuple(sorted(((p, c) for p, c in exp.items()), key=lambda kv: revlex_key(kv[0])))


_MACD_MEMO: Dict[tuple, SymExpansion] = {}


def macdonald_poly(kappa: Partition, n: int, base: ExactScalar = Q,
                   tparam: ExactScalar = T) -> SymExpansion:
    """Monic eigenfunction of the first-order operator with the eigenvalue
    attached to kappa, expanded over the monomial basis.

    The support is restricted to dominance-lower partitions, over which the
    operator acts triangularly; coefficients are solved top-down.
    """
    if kappa.length > n:
        raise ValueError("partition has more parts than variables")
    base_txt, t_txt = base.to_text(), tparam.to_text()
    memo_key = (kappa.parts, n, base_txt, t_txt)
    got = _MACD_MEMO.get(memo_key)
    if got is not None:
        return got
    from .cache import expansion_to_value, get_active_cache, value_to_expansion

    cache = get_active_cache()
    file_key = ["macdonald", list(kappa.parts), n, base_txt, t_txt]
    value = cache.load(file_key)
    if value is not None:
        exp = value_to_expansion(value, "monomial", n)
        _MACD_MEMO[memo_key] = exp
        return exp
    chain = [mu for mu in partitions_of(kappa.weight, max_len=n)
             if dominance_leq(mu, kappa)]
    columns: Dict[Partition, Dict[Partition, ExactScalar]] = {}
    for mu in chain:
        columns[mu] = dict(_op_matrix_column(mu, n, base_txt, t_txt))
    target = eigenvalue_e(kappa, n, base, tparam)
    coeffs: Dict[Partition, ExactScalar] = {kappa: ONE}
    for nu in chain:
        if nu == kappa:
            continue
        acc = ZERO
        for mu, a_mu in coeffs.items():
            if mu == nu:
                continue
            c = columns[mu].get(nu)
            if c is not None:
                acc = acc + c * a_mu
        gap = target - eigenvalue_e(nu, n, base, tparam)
        if gap.is_zero():
            raise EigenvalueCollisionError(
                f"eigenvalue collision between {kappa} and {nu}")
        a_nu = acc / gap
        if not a_nu.is_zero():
            coeffs[nu] = a_nu
    exp = SymExpansion("monomial", n, coeffs)
    _MACD_MEMO[memo_key] = exp
    cache.store(file_key, expansion_to_value(exp))
    return exp


def macdonald_poly_qtp(kappa: Partition, n: int, p: int) -> SymExpansion:
    """Macdonald polynomial with the shift base q*t^p (formal q, t)."""
    return macdonald_poly(kappa, n, Q * T ** p, T)


# ---------------------------------------------------------------------------
# norms and specializations at t = q^lam
# ---------------------------------------------------------------------------

def norm_prime(kappa: Partition, n: int, lam: int) -> ExactScalar:
    """Closed product form of the symmetric-weight self-inner-product at
    t = q^lam: the telescoped ratio over pairs i < j."""
    if lam < 1:
        raise ValueError("lam must be a positive integer")
    if kappa.length > n:
        raise ValueError("partition has more parts than variables")
    padded = kappa.padded(n)
    out = ONE
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d = padded[i - 1] - padded[j - 1]
            out = out * qq_poch(d + lam * (j - i), lam)
            out = out / qq_poch(d + 1 + lam * (j - i - 1), lam)
    return out


def symmetric_weight_factors(n: int, lam: int) -> list:
    """Binomial factors of the symmetric weight: (w_i/w_j; q)_lam over all
    ordered pairs i != j."""
    vs = _wvarset(n)
    factors = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            e = [0] * n
            e[i] = 1
            e[j] = -1
            ratio = LaurentPoly(vs, {tuple(e): ONE})
            factors.extend(poch_factors(ratio, lam))
    return factors


def norm_prime_ct(kappa: Partition, n: int, lam: int,
                  dehomogenize: bool = False) -> ExactScalar:
    """Direct constant-term evaluation of the same inner product."""
    P = macdonald_poly(kappa, n).subs_t_qpow(lam).to_laurent()
    seed = P.star() * P
    factors = [seed] + symmetric_weight_factors(n, lam)
    ct = ct_of_product(factors, dehomogenize=dehomogenize)
    return ct / scalar(int_factorial(n))


def prime_inner_product(f: LaurentPoly, g: LaurentPoly, lam: int) -> ExactScalar:
    """Symmetric-weight pairing (1/n!) CT(star(f) * g * weight)."""
    n = f.varset.size
    factors = [f.star() * g] + symmetric_weight_factors(n, lam)
    return ct_of_product(factors) / scalar(int_factorial(n))


def principal_specialization(kappa: Partition, n: int, lam: int) -> ExactScalar:
    """Value at the geometric point (1, q^lam, ..., q^((n-1)lam)) with
    t = q^lam, via the closed product form."""
    if lam < 1:
        raise ValueError("lam must be a positive integer")
    padded = kappa.padded(n)
    out = qpow(lam * sum((i - 1) * padded[i - 1] for i in range(1, n + 1)))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d = padded[i - 1] - padded[j - 1]
            out = out * qq_poch(d + lam * (j - i), lam) / qq_poch(lam * (j - i), lam)
    return out


def principal_specialization_eval(kappa: Partition, n: int, lam: int) -> ExactScalar:
    """The same value computed by substituting the geometric point into the
    polynomial itself (independent cross-check)."""
    P = macdonald_poly(kappa, n).subs_t_qpow(lam).to_laurent()
    values = [qpow(lam * i) for i in range(n)]
    return P.evaluate(values)


# ---------------------------------------------------------------------------
# power sums in the Macdonald basis
# ---------------------------------------------------------------------------

def power_sum_in_P(k: int, n: int, mode: str = "oracle",
                   lam: int | None = None) -> Dict[Partition, ExactScalar]:
    """Expansion coefficients of the k-th power sum over {P_kappa : |kappa| = k}.

    mode "oracle": exact triangular solve with formal (q, t).
    mode "alpha_formula": the literal closed form built from the principal
        specialization and shifted factorials, divided by the closed-form
        norm; needs t = q^lam.
    mode "a_formula": the literal gamma-ratio closed form; needs t = q^lam.
    Formula modes are evaluated as written and reported against the oracle;
    they never overwrite it.
    """
    if k < 1:
        raise ValueError("power-sum index must be positive")
    if mode == "oracle":
        return _power_sum_oracle(k, n)
    if lam is None or lam < 1:
        raise ValueError("formula modes need a positive integer lam")
    out: Dict[Partition, ExactScalar] = {}
    for kappa in partitions_of(k, max_len=n):
        if mode == "alpha_formula":
            out[kappa] = alpha_coefficient(kappa, n, lam) / norm_prime(kappa, n, lam)
        elif mode == "a_formula":
            out[kappa] = a_formula_coefficient(kappa, lam)
        else:
            raise ValueError(f"unknown mode {mode!r}")
    return out


def _power_sum_oracle(k: int, n: int) -> Dict[Partition, ExactScalar]:
    residual: Dict[Partition, ExactScalar] = {Partition([k]): ONE} if n >= 1 else {}
    coeffs: Dict[Partition, ExactScalar] = {}
    order = [mu for mu in partitions_of(k, max_len=n)]
    for mu in order:
        c = residual.get(mu)
        if c is None or c.is_zero():
            continue
        coeffs[mu] = c
        P = macdonald_poly(mu, n)
        for nu, a in P.coeffs.items():
            s = residual.get(nu, ZERO) - c * a
            if s.is_zero():
                residual.pop(nu, None)
            else:
                residual[nu] = s
    if any(not v.is_zero() for v in residual.values()):
        raise ArithmeticError("triangular solve left a nonzero residual")
    return coeffs


def reconstruct_power_sum(coeffs: Dict[Partition, ExactScalar], k: int,
                          n: int) -> LaurentPoly:
    """Sum of c_kappa * P_kappa as a Laurent polynomial (oracle check)."""
    vs = _wvarset(n)
    out = LaurentPoly.zero(vs)
    for kappa, c in coeffs.items():
        out = out + macdonald_poly(kappa, n).to_laurent().scalar_mul(c)
    return out


def alpha_coefficient(kappa: Partition, n: int, lam: int) -> ExactScalar:
    """Literal numerator of the analytic expansion coefficient:
    [k] * gamma(kappa_1) / [n]_{q^lam}! * gamma(lam*n+1)/gamma(lam+1)^n *
    principal specialization * dashed shifted factorial at 0 over the
    shifted factorial at 1 + (n-1)*lam."""
    from .qseries import q_bracket, q_factorial, q_gamma, shifted_factorial

    k = kappa.weight
    if k == 0 or kappa.length > n:
        raise ValueError("needs a non-empty partition fitting in n variables")
    out = q_bracket(k) * q_gamma(kappa.part(1)) / q_factorial(n, lam)
    out = out * q_gamma(lam * n + 1) / q_gamma(lam + 1) ** n
    out = out * principal_specialization(kappa, n, lam)
    out = out * shifted_factorial(0, kappa.parts, lam, n, omit_first=True)
    out = out / shifted_factorial(1 + (n - 1) * lam, kappa.parts, lam, n)
    return out


def a_formula_coefficient(kappa: Partition, lam: int) -> ExactScalar:
    """Literal gamma-ratio closed form for the same coefficient, evaluated
    at t = q^lam with every gamma ratio read as a product of q-brackets."""
    from .partitions import n_stat
    from .qseries import bracket_run, q_bracket, q_gamma

    k = kappa.weight
    r = kappa.length
    if k == 0:
        raise ValueError("needs a non-empty partition")
    out = qpow(lam * n_stat(kappa)) * q_bracket(k) * q_gamma(kappa.part(1))
    for i in range(2, r + 1):
        out = out * bracket_run(lam * (1 - i), kappa.part(i))
    for i in range(1, r + 1):
        out = out / q_gamma(lam * (r - i) + kappa.part(i))
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            out = out * bracket_run(kappa.part(i) - kappa.part(j) + 1 + lam * (j - i - 1), lam)
    return out


def node_form_coefficient(kappa: Partition) -> ExactScalar:
    """Formal (q, t) coefficient from the diagram-product inversion: for the
    one-row source shape, (1 - q^k) * X / c'."""
    from .partitions import arm_leg_products, x_row_coeff

    k = kappa.weight
    if k == 0:
        raise ValueError("needs a non-empty partition")
    _, cprime = arm_leg_products(kappa)
    return (ONE - qpow(k)) * x_row_coeff(kappa) / cprime
