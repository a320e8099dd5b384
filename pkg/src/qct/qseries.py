"""q-analogue scalar builders: q-Pochhammer products, q-gamma at integer
arguments (with base an explicit power of q), q-brackets and factorials,
and the generalized shifted factorial attached to a partition."""

from __future__ import annotations

from typing import Sequence, Union

from .laurent import LaurentPoly
from .scalars import ONE, ExactScalar, qpow, scalar


def poch(a: Union[LaurentPoly, ExactScalar], lam: int):
    """Finite q-shifted factorial: the product of (1 - a*q^l) for l = 0..lam-1.

    Only the terminating regime is supported; a negative length would need
    the infinite product and is rejected.
    """
    if lam < 0:
        raise ValueError("q-Pochhammer length must be a non-negative integer")
    if isinstance(a, LaurentPoly):
        out = LaurentPoly.one(a.varset)
        for l in range(lam):
            out = out * (LaurentPoly.one(a.varset) - a.scalar_mul(qpow(l)))
        return out
    out = ONE
    for l in range(lam):
        out = out * (ONE - a * qpow(l))
    return out


def poch_factors(a: LaurentPoly, lam: int) -> list:
    """The individual binomials (1 - a*q^l), unexpanded, for the CT engine."""
    one = LaurentPoly.one(a.varset)
    return [one - a.scalar_mul(qpow(l)) for l in range(lam)]


def qq_poch(x: int, length: int) -> ExactScalar:
    """(q^x; q)_length as a scalar; x may be any integer."""
    out = ONE
    for l in range(length):
        out = out * (ONE - qpow(x + l))
    return out


def q_bracket(a: int, base: int = 1) -> ExactScalar:
    """[a] in base q^m: (1 - q^(m*a)) / (1 - q^m); a may be negative."""
    if base < 1:
        raise ValueError("base exponent must be a positive integer")
    return (ONE - qpow(base * a)) / (ONE - qpow(base))


def q_factorial(n: int, base: int = 1) -> ExactScalar:
    """[n]! in base q^m."""
    if n < 0:
        raise ValueError("factorial of a negative integer")
    out = ONE
    for j in range(1, n + 1):
        out = out * q_bracket(j, base)
    return out


def q_gamma(n: int, base: int = 1) -> ExactScalar:
    """q-gamma at a positive integer argument: the product [1][2]...[n-1] in base q^m."""
    if n < 1:
        raise ValueError("q-gamma argument must be a positive integer")
    return q_factorial(n - 1, base)


def bracket_run(x: int, length: int) -> ExactScalar:
    """Product [x][x+1]...[x+length-1] of q-brackets; equals a ratio of two
    q-gamma values when both arguments are positive, but is defined for any
    integer start."""
    out = ONE
    for m in range(length):
        out = out * q_bracket(x + m)
    return out


def shifted_factorial(x: int, kappa: Sequence[int], lam: int, n: int | None = None,
                      omit_first: bool = False) -> ExactScalar:
    """Generalized shifted factorial of a partition.

    The product over rows j of [x - lam*(j-1) + kappa_j - 1] ... [x - lam*(j-1)],
    i.e. a run of kappa_j q-brackets starting at x - lam*(j-1).  With
    omit_first=True the j=1 row is left out (the dashed variant).
    """
    if lam < 1:
        raise ValueError("lam must be a positive integer")
    parts = list(kappa)
    if n is not None:
        if n < len(parts):
            raise ValueError("partition longer than the declared row count")
        parts = parts + [0] * (n - len(parts))
    out = ONE
    for j, kj in enumerate(parts, start=1):
        if omit_first and j == 1:
            continue
        out = out * bracket_run(x - lam * (j - 1), kj)
    return out


def morris_rhs(n: int, a: int, b: int, lam: int) -> ExactScalar:
    """Closed form of the n-variable q-Morris constant term: the product over
    l of gamma(a+b+1+lam*l) * gamma(1+lam*(l+1)) over
    gamma(a+1+lam*l) * gamma(b+1+lam*l) * gamma(1+lam)."""
    out = ONE
    for l in range(n):
        out = out * q_gamma(a + b + 1 + lam * l) * q_gamma(1 + lam * (l + 1)) \
            / (q_gamma(a + 1 + lam * l) * q_gamma(b + 1 + lam * l) * q_gamma(1 + lam))
    return out


def dyson_andrews_rhs(n0: int, lam: int) -> ExactScalar:
    """Closed form of the one-component constant term:
    gamma(lam*n0 + 1) / gamma(lam + 1)^n0."""
    return q_gamma(lam * n0 + 1) / q_gamma(lam + 1) ** n0


def int_factorial(n: int) -> int:
    out = 1
    for j in range(2, n + 1):
        out *= j
    return out


def inv_int(n: int) -> ExactScalar:
    return ONE / scalar(n)
