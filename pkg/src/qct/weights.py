"""The q-deformed multi-component weight function, its constant-term
integrals and closed forms, the inner product it induces, the Gram-Schmidt
construction of the orthogonal polynomials, operator adjointness residuals,
and the permutation-sum evaluation with its product closed form."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Dict, Sequence

from .laurent import LaurentPoly, VarSet, ct_of_product, restricted_product
from .macdonald import MacdonaldOpSpec, apply_macdonald_op
from .partitions import Partition, partitions_of, revlex_key
from .qseries import (bracket_run, int_factorial, poch_factors, q_bracket,
                      q_factorial, q_gamma, qq_poch, shifted_factorial)
from .scalars import ONE, ZERO, ExactScalar, qpow, scalar
from .symfunc import SymExpansion, _wvarset, monomial_sym

Q1 = qpow(1)


class SingularGramError(ArithmeticError):
    """A self-inner-product vanished during Gram-Schmidt (violated hypotheses)."""


@dataclass(frozen=True)
class WeightSpec:
    """Block sizes and the deformation exponent of the weight function.

    sizes = (N0, N1, ..., Np); p is the number of z-components.
    """

    sizes: tuple
    lam: int

    def __post_init__(self):
        if not self.sizes or any(s < 0 for s in self.sizes):
            raise ValueError("block sizes must be non-negative, starting with N0")
        if self.lam < 0 or not isinstance(self.lam, int):
            raise ValueError("the deformation exponent must be a non-negative integer")

    @property
    def p(self) -> int:
        return len(self.sizes) - 1

    @property
    def n0(self) -> int:
        return self.sizes[0]

    def varset(self) -> VarSet:
        return VarSet.build(self.sizes[0], self.sizes[1:])

    def with_last_incremented(self) -> "WeightSpec":
        sizes = list(self.sizes)
        sizes[-1] += 1
        return WeightSpec(tuple(sizes), self.lam)


def _ratio(vs: VarSet, i: int, j: int, qshift: int = 0) -> LaurentPoly:
    e = [0] * vs.size
    e[i] = 1
    e[j] = -1
    return LaurentPoly(vs, {tuple(e): qpow(qshift)}) if qshift else \
        LaurentPoly(vs, {tuple(e): ONE})


def w_block_factor_polys(spec: WeightSpec) -> list:
    """The z-free part of the weight: the w-block pairs at length lam."""
    vs = spec.varset()
    lam = spec.lam
    factors: list = []
    for a_pos in range(spec.n0):
        for b_pos in range(a_pos + 1, spec.n0):
            factors += poch_factors(_ratio(vs, a_pos, b_pos), lam)
            factors += poch_factors(_ratio(vs, b_pos, a_pos, 1), lam)
    return factors


def z_coupled_factor_polys(spec: WeightSpec) -> list:
    """Every weight factor touching a z-variable: within z-blocks at length
    lam+1, across z-blocks and z-to-w at length lam."""
    vs = spec.varset()
    lam = spec.lam
    factors: list = []
    for alpha in range(1, spec.p + 1):
        idx = list(vs.z_indices(alpha))
        for a_pos in range(len(idx)):
            for b_pos in range(a_pos + 1, len(idx)):
                j, k = idx[a_pos], idx[b_pos]
                factors += poch_factors(_ratio(vs, j, k), lam + 1)
                factors += poch_factors(_ratio(vs, k, j, 1), lam + 1)
    for alpha in range(1, spec.p + 1):
        for beta in range(alpha + 1, spec.p + 1):
            for j in vs.z_indices(alpha):
                for k in vs.z_indices(beta):
                    factors += poch_factors(_ratio(vs, j, k), lam)
                    factors += poch_factors(_ratio(vs, k, j, 1), lam)
    for alpha in range(1, spec.p + 1):
        for j in vs.z_indices(alpha):
            for jp in range(spec.n0):
                factors += poch_factors(_ratio(vs, j, jp), lam)
                factors += poch_factors(_ratio(vs, jp, j, 1), lam)
    return factors


def weight_factor_polys(spec: WeightSpec) -> list:
    """All binomial factors of the weight, unexpanded.

    Per pair: within a z-block both shifted factorials have length lam+1;
    the w-block, z-to-z cross-block and z-to-w products have length lam.
    """
    return w_block_factor_polys(spec) + z_coupled_factor_polys(spec)


def build_weight(spec: WeightSpec) -> LaurentPoly:
    """Fully expanded weight: left-fold of the factors in ascending term
    count, purging zero coefficients eagerly."""
    vs = spec.varset()
    out = LaurentPoly.one(vs)
    for f in sorted(weight_factor_polys(spec), key=lambda g: len(g.terms)):
        out = out * f
    return out


def selberg_factor_polys(spec: WeightSpec, a: int, b: int, sign: int = 1,
                         pairing: str = "mixed") -> list:
    """Binomial factors of the boundary weight attached to the exponents (a, b).

    pairing "mixed" gives every variable x the product (sx; q)_a (sq/x; q)_b,
    the form the proved special cases force; pairing "literal" pairs a with
    both factors on the w's and b with both factors on the z's (the two
    agree when a == b).  sign = -1 negates every argument, which leaves all
    constant terms unchanged.
    """
    if a < 0 or b < 0:
        raise ValueError("a and b must be non-negative integers")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    vs = spec.varset()
    s = scalar(sign)
    factors: list = []

    def var_factors(i: int, len_plain: int, len_inv: int):
        x = LaurentPoly.variable(vs, i).scalar_mul(s)
        xinv = LaurentPoly.variable(vs, i, -1).scalar_mul(s * Q1)
        factors.extend(poch_factors(x, len_plain))
        factors.extend(poch_factors(xinv, len_inv))

    for i in range(spec.n0):
        if pairing == "mixed":
            var_factors(i, a, b)
        else:
            var_factors(i, a, a)
    for i in vs.all_z_indices():
        if pairing == "mixed":
            var_factors(i, a, b)
        else:
            var_factors(i, b, b)
    return factors


def build_selberg_factor(spec: WeightSpec, a: int, b: int, sign: int = 1,
                         pairing: str = "mixed") -> LaurentPoly:
    vs = spec.varset()
    out = LaurentPoly.one(vs)
    for f in sorted(selberg_factor_polys(spec, a, b, sign, pairing),
                    key=lambda g: len(g.terms)):
        out = out * f
    return out


def dp_integral(spec: WeightSpec, a: int, b: int, sign: int = 1,
                pairing: str = "mixed") -> ExactScalar:
    """Constant term of (boundary factor) * (weight)."""
    factors = selberg_factor_polys(spec, a, b, sign, pairing) + weight_factor_polys(spec)
    return ct_of_product(factors, varset=spec.varset())


def dp_integral_with_h(spec: WeightSpec, a: int, b: int,
                       h: SymExpansion) -> ExactScalar:
    """Pairing of a symmetric polynomial in the w's against the boundary
    factor under the weight: CT(weight * star(h) * boundary)."""
    vs = spec.varset()
    hw = h.to_laurent()
    seed = embed_w(hw.star(), vs)
    factors = [seed] + selberg_factor_polys(spec, a, b) + weight_factor_polys(spec)
    return ct_of_product(factors, varset=vs)


def embed_w(f: LaurentPoly, vs: VarSet) -> LaurentPoly:
    """Reinterpret a w-only polynomial over a varset with z-blocks."""
    pad = vs.size - f.varset.size
    if pad < 0 or f.varset.names != vs.names[: f.varset.size]:
        raise ValueError("cannot embed: w-blocks do not line up")
    return LaurentPoly(vs, {e + (0,) * pad: c for e, c in f.terms.items()})


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def conj21_rhs(n1: int, n0: int, a: int, b: int, lam: int) -> ExactScalar:
    """Conjectured product evaluation of the two-component integral: a
    q-gamma with base q^(lam+1) in front, base-q gammas elsewhere."""
    out = q_gamma(n1 + 1, base=lam + 1) / q_gamma(lam + 1) ** (n0 + n1)
    for j in range(n1):
        out = out * q_gamma((lam + 1) * j + a + b + lam * n0 + 1) \
            * q_gamma((lam + 1) * (j + 1) + lam * n0) \
            / (q_gamma((lam + 1) * j + a + lam * n0 + 1)
               * q_gamma((lam + 1) * j + b + lam * n0 + 1))
    for l in range(n0):
        out = out * q_gamma(a + b + 1 + lam * l) * q_gamma(1 + lam * (l + 1)) \
            / (q_gamma(a + 1 + lam * l) * q_gamma(b + 1 + lam * l))
    return out


def conj22_rhs(spec: WeightSpec, a: int, b: int) -> ExactScalar:
    """Conjectured ratio of integrals when the last block grows by one."""
    if spec.p < 1:
        raise ValueError("needs at least one z-component")
    lam = spec.lam
    np_ = spec.sizes[-1]
    rest = sum(spec.sizes[:-1])
    for nj in spec.sizes[1:-1]:
        if np_ < nj - 1:
            raise ValueError("hypothesis violated: last block too small")
    out = q_bracket(np_ + 1, base=lam + 1) / q_gamma(lam + 1)
    out = out * q_gamma((lam + 1) * np_ + a + b + lam * rest + 1) \
        * q_gamma((lam + 1) * (np_ + 1) + lam * rest) \
        / (q_gamma((lam + 1) * np_ + a + lam * rest + 1)
           * q_gamma((lam + 1) * np_ + b + lam * rest + 1))
    return out


# ---------------------------------------------------------------------------
# inner product with precomputed z-reduced weight
# ---------------------------------------------------------------------------

class InnerProductConfig:
    """Weight shared across many pairings of w-polynomials.

    The z-variables never appear in the arguments, so they are integrated
    out of the weight once: the reduced weight keeps w-exponents inside a
    window wide enough for every pairing of total degree <= window.
    """

    def __init__(self, spec: WeightSpec, window: int):
        self.spec = spec
        self.window = window
        self._reduced: dict | None = None

    def reduced_weight(self) -> dict:
        if self._reduced is None:
            from .cache import get_active_cache
            from .scalars import parse_scalar

            cache = get_active_cache()
            file_key = ["reduced_weight", list(self.spec.sizes), self.spec.lam,
                        self.window]
            value = cache.load(file_key)
            if value is not None:
                self._reduced = {tuple(e): parse_scalar(txt) for e, txt in value}
                return self._reduced
            spec = self.spec
            vs = spec.varset()
            n0 = spec.n0
            B = self.window
            win = [(-B, B)] * n0 + [(0, 0)] * (vs.size - n0)
            wfac = w_block_factor_polys(spec)
            zfac = z_coupled_factor_polys(spec)
            if not wfac and not zfac:
                self._reduced = {(0,) * n0: ONE}
            elif not zfac:
                res = restricted_product(wfac, win, varset=vs, l1_caps=(B, B))
                self._reduced = {e[:n0]: c for e, c in res.terms.items()}
            else:
                # integrate the z-variables out of their own factors first;
                # the z-free w-block would only inflate that fold's state
                slack = spec.lam * (n0 - 1)
                kwin = [(-B - slack, B + slack)] * n0 + [(0, 0)] * (vs.size - n0)
                cap = B + len(wfac)
                kernel = restricted_product(zfac, kwin, varset=vs, l1_caps=(cap, cap))
                res = restricted_product([kernel] + wfac, win, varset=vs,
                                         l1_caps=(B, B))
                self._reduced = {e[:n0]: c for e, c in res.terms.items()}
            cache.store(file_key, [[list(e), c.to_text()]
                                   for e, c in self._reduced.items()])
        return self._reduced

    def inner_product(self, f: LaurentPoly, g: LaurentPoly) -> ExactScalar:
        """CT(weight * star(f) * g) for w-polynomials f, g."""
        n0 = self.spec.n0
        if f.varset.size != n0 or g.varset.size != n0:
            raise ValueError("arguments must live on the w-variables")
        red = self.reduced_weight()
        total = ZERO
        for e, c in (f.star() * g).terms.items():
            w = red.get(tuple(-x for x in e))
            if w is not None:
                total = total + c * w
        return total

    def inner_product_expansions(self, f: SymExpansion, g: SymExpansion) -> ExactScalar:
        return self.inner_product(f.to_laurent(), g.to_laurent())


_CONFIGS: Dict[tuple, InnerProductConfig] = {}


def get_config(spec: WeightSpec, window: int) -> InnerProductConfig:
    """Shared configs, widened monotonically so reductions are reused."""
    for (sp, win), cfg in _CONFIGS.items():
        if sp == spec and win >= window:
            return cfg
    cfg = InnerProductConfig(spec, window)
    _CONFIGS[(spec, window)] = cfg
    return cfg


def inner_product(spec: WeightSpec, f: LaurentPoly, g: LaurentPoly) -> ExactScalar:
    window = max((abs(sum(e)) for e in list(f.terms) + list(g.terms)), default=0)
    window = max(window, max((max(map(abs, e), default=0) for e in list(f.terms) + list(g.terms)), default=0))
    return get_config(spec, window).inner_product(f, g)


# ---------------------------------------------------------------------------
# Gram-Schmidt construction
# ---------------------------------------------------------------------------

_GS_CACHE: Dict[tuple, dict] = {}


def gram_schmidt_chain(spec: WeightSpec, weight: int) -> dict:
    """All orthogonal polynomials of one degree, keyed by partition.

    Classical Gram-Schmidt over the monomial basis in ascending revlex
    order; every polynomial is monic on its own partition.
    """
    if spec.lam < 1:
        raise ValueError("the construction needs a positive integer exponent")
    key = (spec, weight)
    cached = _GS_CACHE.get(key)
    if cached is not None:
        return cached
    from .cache import expansion_to_value, get_active_cache, value_to_expansion
    from .partitions import parse_partition

    n0 = spec.n0
    cache = get_active_cache()
    file_key = ["gram_schmidt", list(spec.sizes), spec.lam, weight]
    value = cache.load(file_key)
    if value is not None:
        results = {parse_partition(k): value_to_expansion(v, "monomial", n0)
                   for k, v in value}
        _GS_CACHE[key] = results
        return results
    chain = sorted(partitions_of(weight, max_len=n0), key=revlex_key)
    cfg = get_config(spec, weight)
    gram: Dict[tuple, ExactScalar] = {}

    def G(alpha: Partition, beta: Partition) -> ExactScalar:
        got = gram.get((alpha, beta))
        if got is None:
            got = cfg.inner_product(monomial_sym(alpha, n0), monomial_sym(beta, n0))
            gram[(alpha, beta)] = got
        return got

    results: dict = {}
    prev: list = []
    for mu in chain:
        coeffs: Dict[Partition, ExactScalar] = {mu: ONE}
        for (nu, pnu, norm_nu) in prev:
            # <p_nu | m_mu> over <p_nu | p_nu>
            num = ZERO
            for alpha, c in pnu.items():
                num = num + c * G(alpha, mu)
            if num.is_zero():
                continue
            factor = num / norm_nu
            for alpha, c in pnu.items():
                s = coeffs.get(alpha, ZERO) - factor * c
                if s.is_zero():
                    coeffs.pop(alpha, None)
                else:
                    coeffs[alpha] = s
        norm = ZERO
        for alpha, ca in coeffs.items():
            for beta, cb in coeffs.items():
                norm = norm + ca * cb * G(alpha, beta)
        if norm.is_zero():
            raise SingularGramError(
                f"self inner product of the polynomial at {mu} vanished")
        prev.append((mu, coeffs, norm))
        results[mu] = SymExpansion("monomial", n0, dict(coeffs))
    _GS_CACHE[key] = results
    cache.store(file_key, [[str(mu), expansion_to_value(exp)]
                           for mu, exp in results.items()])
    return results


def gram_schmidt_p(kappa: Partition, spec: WeightSpec) -> SymExpansion:
    """The monic polynomial orthogonal to everything revlex-below it."""
    if kappa.length > spec.n0:
        raise ValueError("partition has more parts than w-variables")
    k1 = kappa.part(1)
    for n_alpha in spec.sizes[1:]:
        if n_alpha < k1 - 1:
            raise ValueError("hypothesis violated: z-block smaller than kappa_1 - 1")
    return gram_schmidt_chain(spec, kappa.weight)[kappa]


def orthogonal_norm(kappa: Partition, spec: WeightSpec) -> ExactScalar:
    """Self inner product of the Gram-Schmidt polynomial."""
    p = gram_schmidt_p(kappa, spec)
    cfg = get_config(spec, kappa.weight)
    return cfg.inner_product_expansions(p, p)


# ---------------------------------------------------------------------------
# operator adjointness
# ---------------------------------------------------------------------------

def adjoint_residual(kappa: Partition, mu: Partition, spec: WeightSpec,
                     r: int) -> ExactScalar:
    """<M f | g> - <f | M g> with the operator shift base q^(1 + lam*p)
    (the base q*t^p at t = q^lam); zero means the instance is self-adjoint."""
    n0 = spec.n0
    if kappa.length > n0 or mu.length > n0:
        raise ValueError("partition has more parts than w-variables")
    base = qpow(1 + spec.lam * spec.p)
    tparam = qpow(spec.lam)
    op = MacdonaldOpSpec(n0, r, base, tparam)
    f = monomial_sym(kappa, n0)
    g = monomial_sym(mu, n0)
    Mf = apply_macdonald_op(op, f)
    Mg = apply_macdonald_op(op, g)
    window = max(kappa.weight, mu.weight, kappa.part(1), mu.part(1))
    cfg = get_config(spec, window)
    return cfg.inner_product(Mf, g) - cfg.inner_product(f, Mg)


def adjoint_block_bound(kappa: Partition, mu: Partition) -> int:
    """Smallest admissible z-block size for the adjointness statement."""
    k1, m1 = kappa.part(1), mu.part(1)
    return k1 - 1 if k1 == m1 else min(k1, m1)


# ---------------------------------------------------------------------------
# conjectured normalization closed form and its growth factor
# ---------------------------------------------------------------------------

def norm44_rhs(kappa: Partition, n0: int, lam: int) -> ExactScalar:
    """Closed form for the self inner product of the one-z-component
    orthogonal polynomial at z-block size kappa_1, written with frequency
    statistics; integer shifts inside the length-lam products are read as
    runs of q-brackets."""
    if lam < 1:
        raise ValueError("lam must be a positive integer")
    k1 = kappa.part(1)
    freqs = kappa.frequencies()
    conj = kappa.conjugate()
    # the z-block factorial carries base q^(lam+1), exactly as in the proved
    # inner-product formulas where that block always appears with this base
    out = q_factorial(k1, base=lam + 1) * q_gamma(lam * n0 + 1, base=lam) \
        / q_gamma(lam + 1) ** (n0 + k1)
    for j in range(1, k1 + 1):
        out = out * bracket_run(lam * freqs.get(j, 0) + 1, lam)
    for j in range(1, k1 + 1):
        tail = conj.part(j)  # number of parts >= j
        out = out * bracket_run((lam + 1) * j + 1 + lam * tail, lam)
        out = out * bracket_run((lam + 1) * (j - 1) + 1 + lam * (n0 - tail), lam)
        out = out / bracket_run((lam + 1) * j + 1 + lam * freqs.get(j, 0), lam)
    return out


def norm_growth_factor(j: int, n0: int, lam: int, mode: str = "ratio") -> ExactScalar:
    """Multiplier taking the normalization from z-block size j to j+1.

    mode "ratio" is the integral-ratio form at a = b = 0 (bracket in base
    q^(lam+1)); mode "literal" keeps the plain bracket of (lam+1)(j+1) as
    printed, which differs from the ratio form by [lam+1].
    """
    run = bracket_run((lam + 1) * j + lam * n0 + 1, lam)
    if mode == "ratio":
        return q_bracket(j + 1, base=lam + 1) / q_gamma(lam + 1) * run
    if mode == "literal":
        return q_bracket((lam + 1) * (j + 1)) / q_gamma(lam + 1) * run
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# permutation sum and its closed form
# ---------------------------------------------------------------------------

def bg_config(n0: int, n1: int, b: int, lam: int):
    """Exponent vector and admissible inversion set: one distinguished
    variable with exponent b, then n0 with lam, then n1 with lam + 1;
    admissible inversions stay inside the first or the second group."""
    n = 1 + n0 + n1
    a = [0, b] + [lam] * n0 + [lam + 1] * n1  # 1-indexed
    allowed = set()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if j <= n0 + 1 or i >= n0 + 2:
                allowed.add((i, j))
    return n, a, allowed


def bg_sum_enum(n0: int, n1: int, b: int, lam: int) -> ExactScalar:
    """Explicit enumeration over permutations whose inversions are contained
    in the admissible set: each contributes q to the sum of the exponents of
    the larger inversion members, times the telescoping partial-sum product.

    The sum is assembled over the common product of q-brackets and reduced
    once at the end.
    """
    from .scalars import _padd, _pmul, _PONE

    n, a, allowed = bg_config(n0, n1, b, lam)
    admissible = []  # (q-power, multiset of bracket arguments)
    counts_max: Dict[int, int] = {}
    for sigma in permutations(range(1, n + 1)):
        power = 0
        ok = True
        for i in range(n):
            si = sigma[i]
            for j in range(i + 1, n):
                sj = sigma[j]
                if sj < si:
                    if (sj, si) not in allowed:
                        ok = False
                        break
                    power += a[si]
            if not ok:
                break
        if not ok:
            continue
        partials: Dict[int, int] = {}
        s = 0
        for l in range(n):
            s += a[sigma[l]]
            partials[s] = partials.get(s, 0) + 1
        admissible.append((power, partials))
        for v, c in partials.items():
            if counts_max.get(v, 0) < c:
                counts_max[v] = c
    bracket = {v: {(0, 0): 1, (v, 0): -1} for v in counts_max}  # 1 - q^v
    total: dict = {}
    for power, partials in admissible:
        num = {(power, 0): 1}
        for v, cmax in counts_max.items():
            for _ in range(cmax - partials.get(v, 0)):
                num = _pmul(num, bracket[v])
        total = _padd(total, num)
    den = dict(_PONE)
    for v, cmax in counts_max.items():
        for _ in range(cmax):
            den = _pmul(den, bracket[v])
    one_minus_q = {(0, 0): 1, (1, 0): -1}
    num_scale = dict(_PONE)
    for _ in range(n):
        num_scale = _pmul(num_scale, one_minus_q)
    return ExactScalar(_pmul(total, num_scale), den)


def bg_sum_closed(n0: int, n1: int, b: int, lam: int) -> ExactScalar:
    """Product closed form of the same sum."""
    out = ONE / (q_bracket(b) * q_bracket(lam) ** n0 * q_bracket(lam + 1) ** n1)
    for j in range(1, n1 + 1):
        out = out * q_bracket((lam + 1) * j) / q_bracket((lam + 1) * j + lam * n0 + b)
    return out


def bg_bridge_rhs(n0: int, n1: int, b: int, lam: int) -> ExactScalar:
    """Two-component integral value implied by the permutation sum for the
    case a = lam (the gamma prefactor times the sum)."""
    if b < 1 or lam < 1:
        raise ValueError("needs positive integer b and lam")
    pref = q_gamma((lam + 1) * n1 + lam * n0 + b + 1) \
        / (q_gamma(b) * q_gamma(lam) ** n0 * q_gamma(lam + 1) ** n1)
    return pref * bg_sum_closed(n0, n1, b, lam)


def bg_ct_lhs(n0: int, n1: int, b: int, lam: int) -> ExactScalar:
    """Direct constant term of the pairwise product with per-variable
    exponents from the configuration; the second factor of a pair loses one
    unit of length when the pair crosses the two groups."""
    n, a, allowed = bg_config(n0, n1, b, lam)
    vs = VarSet.build(n)
    factors: list = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            factors += poch_factors(_ratio(vs, i - 1, j - 1, 1), a[i])
            chi = 0 if (i, j) in allowed else 1
            factors += poch_factors(_ratio(vs, j - 1, i - 1), a[j] - chi)
    return ct_of_product(factors, varset=vs)


def bg_ct_rhs(n0: int, n1: int, b: int, lam: int) -> ExactScalar:
    n, a, _ = bg_config(n0, n1, b, lam)
    pref = q_gamma(sum(a) + 1)
    for i in range(1, n + 1):
        pref = pref / q_gamma(a[i])
    return pref * bg_sum_enum(n0, n1, b, lam)


# ---------------------------------------------------------------------------
# the Macdonald-polynomial constant-term identity
# ---------------------------------------------------------------------------

def kaneko_lhs_ct(kappa: Partition, n: int, a: int, b: int, lam: int) -> ExactScalar:
    """CT of P_kappa(w; q, q^lam) times the per-variable boundary factors
    times the one-component weight."""
    from .macdonald import macdonald_poly

    vs = _wvarset(n)
    seed = macdonald_poly(kappa, n).subs_t_qpow(lam).to_laurent()
    factors = [seed]
    for i in range(n):
        factors += poch_factors(LaurentPoly.variable(vs, i), a)
        factors += poch_factors(LaurentPoly.variable(vs, i, -1).scalar_mul(Q1), b)
    spec = WeightSpec((n,), lam)
    factors += weight_factor_polys(spec)
    return ct_of_product(factors, varset=vs)


def kaneko_rhs_product(kappa: Partition, n: int, a: int, b: int, lam: int) -> ExactScalar:
    """Explicit product side: sign and q-power prefactor, the base-q^lam
    factorial, pairwise finite shifted factorials, and the column ratio of
    q-shifted factorials (zero when a denominator length goes negative)."""
    padded = kappa.padded(n)
    k = kappa.weight
    out = scalar((-1) ** k) * qpow(sum(x * (x + 1) // 2 for x in padded))
    out = out * q_factorial(n, base=lam)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out * qq_poch(padded[i - 1] - padded[j - 1] + lam * (j - i), lam)
    for i in range(1, n + 1):
        len_b = b + (i - 1) * lam - padded[i - 1]
        if len_b < 0:
            return ZERO
        out = out * qq_poch(1, a + b + (n - i) * lam) \
            / (qq_poch(1, a + (n - i) * lam + padded[i - 1]) * qq_poch(1, len_b))
    return out


def kaneko_rhs_d0_form(kappa: Partition, n: int, a: int, b: int, lam: int) -> ExactScalar:
    """Alternative side: q-power times the one-component integral times the
    principal specialization times a ratio of generalized shifted factorials."""
    from .macdonald import principal_specialization
    from .qseries import morris_rhs

    k = kappa.weight
    out = qpow((b + 1) * k) * morris_rhs(n, a, b, lam)
    out = out * principal_specialization(kappa, n, lam)
    out = out * shifted_factorial(-b, kappa.parts, lam, n)
    out = out / shifted_factorial(a + 1 + (n - 1) * lam, kappa.parts, lam, n)
    return out


# ---------------------------------------------------------------------------
# the symmetrized two-component restatement
# ---------------------------------------------------------------------------

def reduced_two_component_ct(n0: int, n1: int, a: int, b: int, lam: int) -> ExactScalar:
    """CT of the two-component product with one unit of length moved off the
    second factor in each w-pair, and the boundary exponents mixed (a, b) on
    both variable families."""
    if lam < 1:
        raise ValueError("needs lam >= 1")
    vs = VarSet.build(n0, (n1,))
    factors: list = []
    widx = list(vs.w_indices())
    zidx = list(vs.z_indices(1))
    for i in widx + zidx:
        factors += poch_factors(LaurentPoly.variable(vs, i), a)
        factors += poch_factors(LaurentPoly.variable(vs, i, -1).scalar_mul(Q1), b)
    for apos in range(len(widx)):
        for bpos in range(apos + 1, len(widx)):
            i, j = widx[apos], widx[bpos]
            factors += poch_factors(_ratio(vs, j, i), lam)
            factors += poch_factors(_ratio(vs, i, j, 1), lam - 1)
    for apos in range(len(zidx)):
        for bpos in range(apos + 1, len(zidx)):
            i, j = zidx[apos], zidx[bpos]
            factors += poch_factors(_ratio(vs, j, i), lam + 1)
            factors += poch_factors(_ratio(vs, i, j, 1), lam)
    for i in widx:
        for j in zidx:
            factors += poch_factors(_ratio(vs, i, j, 1), lam)
            factors += poch_factors(_ratio(vs, j, i), lam)
    return ct_of_product(factors, varset=vs)


def reduced_two_component_rhs(n0: int, n1: int, a: int, b: int, lam: int) -> ExactScalar:
    return conj21_rhs(n1, n0, a, b, lam) \
        / (q_gamma(n0 + 1, base=lam) * q_gamma(n1 + 1, base=lam + 1))
