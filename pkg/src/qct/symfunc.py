"""Classical symmetric-function material: monomial symmetric polynomials,
Schur polynomials through the bialternant ratio with exact Vandermonde
division, power sums, and expansions keyed by partitions."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Dict, Sequence

from .laurent import LaurentPoly, VarSet
from .partitions import Partition, dominance_leq, partitions_of
from .scalars import ONE, ZERO, ExactScalar, scalar


class ExactDivisionError(ArithmeticError):
    """A division that the algebra guarantees to be exact left a remainder."""


@lru_cache(maxsize=None)
def _wvarset(n: int) -> VarSet:
    return VarSet.build(n)


def _distinct_permutations(exps: tuple):
    return set(permutations(exps))


@lru_cache(maxsize=None)
def monomial_sym(kappa: Partition, n: int) -> LaurentPoly:
    """Monomial symmetric polynomial: the sum of all distinct monomials whose
    exponent multiset is the padded partition."""
    if kappa.length > n:
        raise ValueError("partition has more parts than variables")
    vs = _wvarset(n)
    terms = {e: ONE for e in _distinct_permutations(kappa.padded(n))}
    return LaurentPoly(vs, terms)


def power_sum(k: int, n: int) -> LaurentPoly:
    """The k-th power sum in n variables."""
    if k < 1:
        raise ValueError("power-sum index must be positive")
    vs = _wvarset(n)
    terms = {}
    for i in range(n):
        e = [0] * n
        e[i] = k
        terms[tuple(e)] = ONE
    return LaurentPoly(vs, terms)


def divexact_linear(f: LaurentPoly, i: int, j: int) -> LaurentPoly:
    """Exact division of f by (w_i - w_j); raises ExactDivisionError if the
    division leaves a remainder."""
    if f.is_zero():
        return f
    slices: Dict[int, dict] = {}
    for e, c in f.terms.items():
        k = e[i]
        stripped = e[:i] + (0,) + e[i + 1:]
        sl = slices.setdefault(k, {})
        sl[stripped] = sl.get(stripped, ZERO) + c
    kmax = max(slices)
    kmin = min(slices)

    def bump_j(d: dict) -> dict:
        out = {}
        for e, c in d.items():
            e2 = e[:j] + (e[j] + 1,) + e[j + 1:]
            out[e2] = c
        return out

    def add_into(dst: dict, src: dict):
        for e, c in src.items():
            s = dst.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                dst.pop(e, None)
            else:
                dst[e] = s

    quotient: Dict[int, dict] = {}
    carry = {}
    add_into(carry, slices.get(kmax, {}))
    for k in range(kmax - 1, kmin - 1, -1):
        quotient[k] = carry
        carry = bump_j(carry)
        add_into(carry, slices.get(k, {}))
    # carry now holds C_kmin + w_j * B_kmin, the remainder slice
    if any(not c.is_zero() for c in carry.values()):
        raise ExactDivisionError("division by a Vandermonde factor is not exact")
    out = {}
    for k, sl in quotient.items():
        for e, c in sl.items():
            if c.is_zero():
                continue
            out[e[:i] + (k,) + e[i + 1:]] = c
    return LaurentPoly(f.varset, out)


def vandermonde(varset: VarSet, indices: Sequence[int]) -> LaurentPoly:
    """Product of (w_a - w_b) over index pairs a < b."""
    out = LaurentPoly.one(varset)
    idx = list(indices)
    for a_pos in range(len(idx)):
        for b_pos in range(a_pos + 1, len(idx)):
            a, b = idx[a_pos], idx[b_pos]
            ea = [0] * varset.size
            ea[a] = 1
            eb = [0] * varset.size
            eb[b] = 1
            out = out * (LaurentPoly(varset, {tuple(ea): ONE, tuple(eb): -ONE}))
    return out


def _alternant(varset: VarSet, col_exps: Sequence[int]) -> LaurentPoly:
    n = len(col_exps)
    terms: dict = {}
    for sigma in permutations(range(n)):
        sign = 1
        for a in range(n):
            for b in range(a + 1, n):
                if sigma[a] > sigma[b]:
                    sign = -sign
        e = [0] * varset.size
        for r in range(n):
            e[r] = col_exps[sigma[r]]
        e = tuple(e)
        c = scalar(sign)
        s = terms.get(e)
        s = c if s is None else s + c
        if s.is_zero():
            terms.pop(e, None)
        else:
            terms[e] = s
    return LaurentPoly(varset, terms)


@lru_cache(maxsize=None)
def schur_laurent(kappa: Partition, n: int) -> LaurentPoly:
    """Schur polynomial via the bialternant ratio, divided out exactly."""
    if kappa.length > n:
        raise ValueError("partition has more parts than variables")
    vs = _wvarset(n)
    padded = kappa.padded(n)
    col_exps = [padded[c] + n - 1 - c for c in range(n)]
    num = _alternant(vs, col_exps)
    for a in range(n):
        for b in range(a + 1, n):
            num = divexact_linear(num, a, b)
    return num


def laurent_to_monomial_expansion(f: LaurentPoly) -> Dict[Partition, ExactScalar]:
    """Read the monomial-basis coefficients off a symmetric polynomial by
    keeping only the weakly-decreasing exponent vectors."""
    out: Dict[Partition, ExactScalar] = {}
    for e, c in f.terms.items():
        if any(x < 0 for x in e):
            raise ValueError("not a polynomial: negative exponent present")
        if all(e[i] >= e[i + 1] for i in range(len(e) - 1)):
            out[Partition(e)] = c
    return out


@dataclass
class SymExpansion:
    """A symmetric polynomial recorded as coefficients on a declared basis."""

    basis: str
    n: int
    coeffs: Dict[Partition, ExactScalar] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in ("monomial", "schur", "macdonald"):
            raise ValueError(f"unknown basis {self.basis!r}")
        self.coeffs = {k: v for k, v in self.coeffs.items() if not v.is_zero()}
        if any(k.length > self.n for k in self.coeffs):
            raise ValueError("partition longer than the variable count")

    def coeff(self, kappa: Partition) -> ExactScalar:
        return self.coeffs.get(kappa, ZERO)

    def map_coeffs(self, fn) -> "SymExpansion":
        return SymExpansion(self.basis, self.n,
                            {k: fn(v) for k, v in self.coeffs.items()})

    def subs_t_qpow(self, lam: int) -> "SymExpansion":
        return self.map_coeffs(lambda c: c.subs_t_qpow(lam))

    def to_monomial(self) -> "SymExpansion":
        if self.basis == "monomial":
            return self
        out: Dict[Partition, ExactScalar] = {}
        for kappa, c in self.coeffs.items():
            block = schur_mexp(kappa, self.n) if self.basis == "schur" else None
            if block is None:
                raise ValueError(f"no conversion from basis {self.basis!r}")
            for mu, a in block.items():
                s = out.get(mu, ZERO) + c * a
                if s.is_zero():
                    out.pop(mu, None)
                else:
                    out[mu] = s
        return SymExpansion("monomial", self.n, out)

    def to_laurent(self) -> LaurentPoly:
        exp = self.to_monomial()
        vs = _wvarset(self.n)
        out = LaurentPoly.zero(vs)
        for kappa, c in exp.coeffs.items():
            out = out + monomial_sym(kappa, self.n).scalar_mul(c)
        return out

    def __add__(self, other: "SymExpansion") -> "SymExpansion":
        if (self.basis, self.n) != (other.basis, other.n):
            raise ValueError("expansion bases differ")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k, ZERO) + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return SymExpansion(self.basis, self.n, out)

    def __sub__(self, other: "SymExpansion") -> "SymExpansion":
        return self + other.scalar_mul(-ONE)

    def scalar_mul(self, c: ExactScalar) -> "SymExpansion":
        if c.is_zero():
            return SymExpansion(self.basis, self.n, {})
        return SymExpansion(self.basis, self.n,
                            {k: v * c for k, v in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        names = {"monomial": "m", "schur": "s", "macdonald": "P"}
        head = names[self.basis]
        bits = []
        for k in sorted(self.coeffs, key=lambda p: (p.weight, p.parts), reverse=True):
            bits.append(f"({self.coeffs[k].to_text()})*{head}[{k}]")
        return " + ".join(bits)


@lru_cache(maxsize=None)
def schur_mexp(kappa: Partition, n: int) -> Dict[Partition, ExactScalar]:
    """Monomial-basis coefficients of a Schur polynomial (cached)."""
    return laurent_to_monomial_expansion(schur_laurent(kappa, n))


def schur(kappa: Partition, n: int) -> SymExpansion:
    """Schur polynomial as a monomial-basis expansion."""
    return SymExpansion("monomial", n, dict(schur_mexp(kappa, n)))
