"""Sparse multivariate Laurent polynomials over ExactScalar.

Variables are organized as one w-block followed by zero or more z-blocks;
exponent vectors are plain int tuples and may be negative.  The module also
houses the constant-term engine: an exact product fold that prunes terms
which provably cannot reach the requested exponent window, and slices
variables to their window as soon as all factors touching them have been
multiplied in.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .scalars import ONE, ZERO, ExactScalar, ExprParser, tokenize


class VarSetMismatchError(ValueError):
    """Operands live over different variable sets."""


@dataclass(frozen=True)
class VarSet:
    """Ordered variable names: a w-block of size n0, then z-blocks."""

    names: tuple
    n0: int
    zsizes: tuple

    @staticmethod
    def build(n0: int, zsizes: Sequence[int] = ()) -> "VarSet":
        if n0 < 0 or any(s < 0 for s in zsizes):
            raise ValueError("block sizes must be non-negative")
        names = [f"w{j}" for j in range(1, n0 + 1)]
        for alpha, size in enumerate(zsizes, start=1):
            names.extend(f"z{alpha}_{j}" for j in range(1, size + 1))
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        return VarSet(tuple(names), n0, tuple(zsizes))

    @property
    def size(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def w_indices(self) -> range:
        return range(self.n0)

    def z_indices(self, alpha: int) -> range:
        start = self.n0 + sum(self.zsizes[: alpha - 1])
        return range(start, start + self.zsizes[alpha - 1])

    def all_z_indices(self) -> range:
        return range(self.n0, self.size)


class LaurentPoly:
    """Sparse Laurent polynomial: dict from exponent tuple to nonzero scalar."""

    __slots__ = ("varset", "terms")

    def __init__(self, varset: VarSet, terms: dict | None = None):
        self.varset = varset
        self.terms = {} if terms is None else terms

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero(varset: VarSet) -> "LaurentPoly":
        return LaurentPoly(varset, {})

    @staticmethod
    def one(varset: VarSet) -> "LaurentPoly":
        return LaurentPoly(varset, {(0,) * varset.size: ONE})

    @staticmethod
    def constant(varset: VarSet, c: ExactScalar) -> "LaurentPoly":
        if c.is_zero():
            return LaurentPoly(varset, {})
        return LaurentPoly(varset, {(0,) * varset.size: c})

    @staticmethod
    def monomial(varset: VarSet, exps: Sequence[int], c: ExactScalar = ONE) -> "LaurentPoly":
        exps = tuple(exps)
        if len(exps) != varset.size:
            raise VarSetMismatchError("exponent vector length does not match varset")
        if c.is_zero():
            return LaurentPoly(varset, {})
        return LaurentPoly(varset, {exps: c})

    @staticmethod
    def variable(varset: VarSet, i: int, power: int = 1) -> "LaurentPoly":
        exps = [0] * varset.size
        exps[i] = power
        return LaurentPoly(varset, {tuple(exps): ONE})

    # -- basics ---------------------------------------------------------

    def _check(self, other: "LaurentPoly"):
        if self.varset != other.varset:
            raise VarSetMismatchError("varsets differ")

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.varset == other.varset and self.terms == other.terms

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()!r})"

    def copy(self) -> "LaurentPoly":
        return LaurentPoly(self.varset, dict(self.terms))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return LaurentPoly(self.varset, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.varset, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return LaurentPoly(self.varset, out)

    def scalar_mul(self, c: ExactScalar) -> "LaurentPoly":
        if c.is_zero():
            return LaurentPoly.zero(self.varset)
        if c.is_one():
            return self
        return LaurentPoly(self.varset, {e: v * c for e, v in self.terms.items()})

    def map_coeffs(self, fn) -> "LaurentPoly":
        out = {}
        for e, c in self.terms.items():
            c2 = fn(c)
            if not c2.is_zero():
                out[e] = c2
        return LaurentPoly(self.varset, out)

    # -- the operations of the calculus ----------------------------------

    def constant_term(self) -> ExactScalar:
        """Coefficient of the all-zero exponent vector (the torus integral)."""
        return self.terms.get((0,) * self.varset.size, ZERO)

    def coeff(self, exps: Sequence[int]) -> ExactScalar:
        return self.terms.get(tuple(exps), ZERO)

    def star(self) -> "LaurentPoly":
        """Unit-circle conjugation: every variable inverted, coefficients kept."""
        return LaurentPoly(self.varset, {tuple(-x for x in e): c for e, c in self.terms.items()})

    def scale_var(self, i: int, c: ExactScalar) -> "LaurentPoly":
        """Substitute variable i -> c * variable i (the q-shift action)."""
        if c.is_zero():
            raise ValueError("scale factor must be nonzero")
        out = {}
        for e, v in self.terms.items():
            out[e] = v * c ** e[i]
        return LaurentPoly(self.varset, out)

    def set_var_one(self, i: int) -> "LaurentPoly":
        """Substitute 1 for variable i, over the varset with that name removed."""
        names = self.varset.names[:i] + self.varset.names[i + 1:]
        n0 = self.varset.n0 - 1 if i < self.varset.n0 else self.varset.n0
        zsizes = list(self.varset.zsizes)
        if i >= self.varset.n0:
            j = i - self.varset.n0
            for a, s in enumerate(zsizes):
                if j < s:
                    zsizes[a] -= 1
                    break
                j -= s
        reduced = VarSet(names, n0, tuple(zsizes))
        out: dict = {}
        for e, c in self.terms.items():
            e2 = e[:i] + e[i + 1:]
            s = out.get(e2)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(e2, None)
            else:
                out[e2] = s
        return LaurentPoly(reduced, out)

    def total_degree_set(self) -> set:
        return {sum(e) for e in self.terms}

    def is_homogeneous_deg0(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def evaluate(self, var_values: Sequence[ExactScalar]) -> ExactScalar:
        """Exact evaluation with scalar values substituted for the variables."""
        total = ZERO
        for e, c in self.terms.items():
            term = c
            for x, v in zip(e, var_values):
                if x:
                    term = term * v ** x
            total = total + term
        return total

    # -- text form --------------------------------------------------------

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        names = self.varset.names
        chunks = []
        for e in sorted(self.terms):
            c = self.terms[e]
            mono = "*".join(
                n if x == 1 else f"{n}^{x}"
                for n, x in zip(names, e) if x
            )
            ctxt = c.to_text()
            if not mono:
                body, neg = ctxt, False
                if body.startswith("-") and len(c.num) == 1 and c.den == {(0, 0): 1}:
                    body, neg = body[1:], True
            elif c.is_one():
                body, neg = mono, False
            elif (-c).is_one():
                body, neg = mono, True
            elif len(c.num) == 1 and c.den == {(0, 0): 1}:
                neg = ctxt.startswith("-")
                body = f"{ctxt.lstrip('-')}*{mono}"
            else:
                neg = False
                body = f"({ctxt})*{mono}"
            if not chunks:
                chunks.append(f"-{body}" if neg else body)
            else:
                chunks.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(chunks)


def combine(f: LaurentPoly, g: LaurentPoly, op: str) -> LaurentPoly:
    """Dispatch form of addition/multiplication, kept for the CLI/reports."""
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown op {op!r}")


def parse_laurent(text: str, varset: VarSet) -> LaurentPoly:
    """Parse the canonical Laurent text form back into a polynomial."""
    from .scalars import Q, T

    def make_int(c):
        return LaurentPoly.constant(varset, ExactScalar.from_int(c))

    def make_name(name):
        if name == "q":
            return LaurentPoly.constant(varset, Q)
        if name == "t":
            return LaurentPoly.constant(varset, T)
        return LaurentPoly.variable(varset, varset.index(name))

    def pow_lp(base: LaurentPoly, k: int) -> LaurentPoly:
        if k < 0:
            if len(base.terms) != 1:
                raise ValueError("cannot invert a non-monomial")
            (e, c), = base.terms.items()
            return LaurentPoly(varset, {tuple(x * k for x in e): c ** k})
        out = LaurentPoly.one(varset)
        for _ in range(k):
            out = out * base
        return out

    def div_lp(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
        if len(b.terms) != 1:
            raise ValueError("cannot divide by a non-monomial Laurent polynomial")
        (e, c), = b.terms.items()
        inv = LaurentPoly(varset, {tuple(-x for x in e): c.inverse()})
        return a * inv

    class Wrapper:
        __slots__ = ("lp",)

        def __init__(self, lp):
            self.lp = lp

        def __add__(self, o):
            return Wrapper(self.lp + o.lp)

        def __sub__(self, o):
            return Wrapper(self.lp - o.lp)

        def __neg__(self):
            return Wrapper(-self.lp)

        def __mul__(self, o):
            return Wrapper(self.lp * o.lp)

        def __truediv__(self, o):
            return Wrapper(div_lp(self.lp, o.lp))

        def __pow__(self, k):
            return Wrapper(pow_lp(self.lp, k))

    parser = ExprParser(
        tokenize(text),
        lambda c: Wrapper(make_int(c)),
        lambda n: Wrapper(make_name(n)),
        Wrapper(LaurentPoly.one(varset)),
    )
    return parser.parse().lp


# ---------------------------------------------------------------------------
# constant-term engine
# ---------------------------------------------------------------------------

def _factor_ranges(terms: dict, n: int):
    lo = [0] * n
    hi = [0] * n
    first = True
    for e in terms:
        if first:
            lo = list(e)
            hi = list(e)
            first = False
            continue
        for v in range(n):
            x = e[v]
            if x < lo[v]:
                lo[v] = x
            elif x > hi[v]:
                hi[v] = x
    return lo, hi


def _order_factors(factors, n, window):
    """Greedy ordering that completes tightly-windowed variables early.

    Within a variable's group the factors alternate between those that can
    only raise and those that can only lower its exponent, which keeps the
    running exponent near the window and the intermediates small.
    """
    remaining = list(range(len(factors)))
    touching = [set() for _ in range(n)]
    for idx, f in enumerate(factors):
        lo, hi = f[1], f[2]
        for v in range(n):
            if lo[v] or hi[v]:
                touching[v].add(idx)
    width = [window[v][1] - window[v][0] for v in range(n)]
    var_order = sorted(range(n), key=lambda v: (width[v], len(touching[v]), v))
    order = []
    taken = set()
    for v in var_order:
        group = [i for i in touching[v] if i not in taken]
        ups = [i for i in group if factors[i][1][v] >= 0]
        downs = [i for i in group if factors[i][1][v] < 0]
        ups.sort(key=lambda i: len(factors[i][0]))
        downs.sort(key=lambda i: len(factors[i][0]))
        merged = []
        while ups or downs:
            if ups:
                merged.append(ups.pop())
            if downs:
                merged.append(downs.pop())
        order.extend(merged)
        taken.update(merged)
    for i in remaining:
        if i not in taken:
            order.append(i)
    return order


def restricted_product(factors: Iterable[LaurentPoly], window: Sequence[tuple],
                       varset: VarSet | None = None,
                       l1_caps: tuple | None = None) -> LaurentPoly:
    """Exact product of the factors, restricted to the exponent window.

    window[v] = (lo, hi) bounds the surviving exponents of variable v; terms
    that cannot land inside the window given the exponent ranges of the
    factors not yet multiplied in are discarded along the way, which keeps
    intermediates sparse without affecting the restricted result.

    l1_caps = (neg, pos), when given, additionally bounds the sums of the
    negative and of the positive final exponents over the open-window
    variables; pairings against fixed-degree arguments only need that thin
    slice, and the prune is what keeps the multi-block reductions tractable.

    Coefficients with trivial denominators run on the raw polynomial dicts;
    anything else falls back to full scalar arithmetic.
    """
    from .scalars import _PONE, _pmul

    factors = list(factors)
    if varset is None:
        if not factors:
            raise ValueError("need at least one factor or an explicit varset")
        varset = factors[0].varset
    n = varset.size
    for f in factors:
        if f.varset != varset:
            raise VarSetMismatchError("varsets differ")
    raw = all(c.den == _PONE for f in factors for c in f.terms.values())
    packed = False
    if raw and len(factors) >= 8:
        packed = all(eq >= 0 and et == 0
                     for f in factors for c in f.terms.values()
                     for (eq, et) in c.num)
    if packed:
        # univariate non-negative q-polynomials: pack each coefficient into a
        # pair of big integers (positive part, negative part) in base 2^K.
        # K bounds every digit that can ever arise: the l1-mass of any
        # intermediate coefficient is at most the product of the factor
        # masses, so digits never collide and int arithmetic is exact.
        mass = 1
        for f in factors:
            mass *= max(1, sum(sum(abs(v) for v in c.num.values())
                               for c in f.terms.values()))
        K = mass.bit_length() + 2
        data = []
        for f in factors:
            lo, hi = _factor_ranges(f.terms, n)
            terms = {}
            for e, c in f.terms.items():
                p = sum(v << (K * eq) for (eq, _), v in c.num.items() if v > 0)
                ng = sum((-v) << (K * eq) for (eq, _), v in c.num.items() if v < 0)
                terms[e] = (p, ng)
            data.append((terms, lo, hi))
    else:
        data = []
        for f in factors:
            lo, hi = _factor_ranges(f.terms, n)
            terms = {e: (c.num if raw else c) for e, c in f.terms.items()}
            data.append((terms, lo, hi))
    order = _order_factors(data, n, window)
    # suffix ranges: total exponent movement still available after step i
    suf_lo = [[0] * n]
    suf_hi = [[0] * n]
    for idx in reversed(order):
        _, lo, hi = data[idx]
        pl, ph = suf_lo[-1], suf_hi[-1]
        suf_lo.append([pl[v] + lo[v] for v in range(n)])
        suf_hi.append([ph[v] + hi[v] for v in range(n)])
    suf_lo.reverse()
    suf_hi.reverse()

    win_lo = [window[v][0] for v in range(n)]
    win_hi = [window[v][1] for v in range(n)]
    open_vars = [v for v in range(n) if window[v][0] != 0 or window[v][1] != 0]
    # the total degree of a surviving term is confined to the window sums
    td_lo = sum(win_lo)
    td_hi = sum(win_hi)
    caps = l1_caps if (l1_caps is not None and open_vars) else None

    if packed:
        cur = {(0,) * n: (1, 0)}
    else:
        cur = {(0,) * n: (dict(_PONE) if raw else ONE)}
    cur_lo = [0] * n
    cur_hi = [0] * n
    cur_td = (0, 0)
    for step, idx in enumerate(order):
        fterms, f_lo, f_hi = data[idx]
        rem_lo = suf_lo[step + 1]
        rem_hi = suf_hi[step + 1]
        # a variable only needs a per-term check when the reachable span of
        # the product can actually leave its admissible band this step
        hot = []
        for v in range(n):
            lo_bound = win_lo[v] - rem_hi[v]
            hi_bound = win_hi[v] - rem_lo[v]
            if cur_lo[v] + f_lo[v] < lo_bound or cur_hi[v] + f_hi[v] > hi_bound:
                hot.append((v, lo_bound, hi_bound))
        f_td = [sum(e) for e in fterms]
        rem_td_lo = sum(rem_lo)
        rem_td_hi = sum(rem_hi)
        td_bounds = None
        if cur_td[0] + min(f_td) + rem_td_hi < td_lo or \
           cur_td[1] + max(f_td) + rem_td_lo > td_hi:
            td_bounds = (td_lo - rem_td_hi, td_hi - rem_td_lo)
        fitems = [(e, [(v, d) for v, d in enumerate(e) if d], c)
                  for e, c in fterms.items()]
        nxt: dict = {}
        for e1, c1 in cur.items():
            for _, deltas, c2 in fitems:
                if deltas:
                    el = list(e1)
                    for v, d in deltas:
                        el[v] += d
                    e = tuple(el)
                else:
                    e = e1
                ok = True
                for v, lo_b, hi_b in hot:
                    x = e[v]
                    if x < lo_b or x > hi_b:
                        ok = False
                        break
                if ok and td_bounds is not None:
                    td = sum(e)
                    if td < td_bounds[0] or td > td_bounds[1]:
                        ok = False
                if ok and caps is not None:
                    neg = pos = 0
                    for v in open_vars:
                        reach_lo = e[v] + rem_lo[v]
                        reach_hi = e[v] + rem_hi[v]
                        if reach_lo > 0:
                            pos += reach_lo
                        if reach_hi < 0:
                            neg -= reach_hi
                    if neg > caps[0] or pos > caps[1]:
                        ok = False
                if not ok:
                    continue
                if packed:
                    p1, n1 = c1
                    p2, n2 = c2
                    cp = p1 * p2 + n1 * n2
                    cn = p1 * n2 + n1 * p2
                    s = nxt.get(e)
                    if s is not None:
                        cp += s[0]
                        cn += s[1]
                    if cp == cn:
                        nxt.pop(e, None)
                    else:
                        nxt[e] = (cp, cn)
                elif raw:
                    c = _pmul(c1, c2)
                    s = nxt.get(e)
                    if s is None:
                        nxt[e] = c
                    else:
                        # s is owned by nxt (fresh from _pmul); add in place
                        for k, v in c.items():
                            x = s.get(k, 0) + v
                            if x:
                                s[k] = x
                            else:
                                del s[k]
                        if not s:
                            del nxt[e]
                else:
                    c = c1 * c2
                    s = nxt.get(e)
                    s = c if s is None else s + c
                    if s.is_zero():
                        nxt.pop(e, None)
                    else:
                        nxt[e] = s
        cur = nxt
        if not cur:
            break
        cur_lo = [min(e[v] for e in cur) for v in range(n)]
        cur_hi = [max(e[v] for e in cur) for v in range(n)]
        tds = [sum(e) for e in cur]
        cur_td = (min(tds), max(tds))
    if packed:
        mask = (1 << K) - 1
        out = {}
        for e, (p, ng) in cur.items():
            num = {}
            pos = 0
            while p or ng:
                d = (p & mask) - (ng & mask)
                if d:
                    num[(pos, 0)] = d
                p >>= K
                ng >>= K
                pos += 1
            if num:
                out[e] = ExactScalar(num, dict(_PONE), _canonical=True)
        return LaurentPoly(varset, out)
    if raw:
        out = {}
        for e, num in cur.items():
            out[e] = ExactScalar(num, dict(_PONE), _canonical=True)
        return LaurentPoly(varset, out)
    return LaurentPoly(varset, cur)


def clear_denominators(f: LaurentPoly):
    """Scale a Laurent polynomial into integer-polynomial coefficients.

    Returns (g, d) with g = d*f and every coefficient of g denominator-free;
    d is the least common multiple of the coefficient denominators.
    """
    from .scalars import _PONE, _pdivexact, _pgcd, _pmul

    lcm = dict(_PONE)
    seen = []
    for c in f.terms.values():
        if c.den == _PONE:
            continue
        if any(c.den == s for s in seen):
            continue
        seen.append(c.den)
        g = _pgcd(lcm, c.den)
        lcm = _pmul(lcm, _pdivexact(c.den, g))
    d = ExactScalar(lcm, dict(_PONE), _canonical=True)
    if d.is_one():
        return f, d
    return f.map_coeffs(lambda c: c * d), d


def ct_of_product(factors: Iterable[LaurentPoly], varset: VarSet | None = None,
                  dehomogenize: bool = False) -> ExactScalar:
    """Constant term of an exact product of Laurent polynomials.

    With dehomogenize=True the factors must all be homogeneous of total
    degree 0; the last variable is then eliminated by setting it to 1,
    which preserves the constant term and shrinks the fold.
    """
    factors = list(factors)
    if varset is None:
        if not factors:
            raise ValueError("need at least one factor or an explicit varset")
        varset = factors[0].varset
    if dehomogenize and varset.size > 1:
        if not all(f.is_homogeneous_deg0() for f in factors):
            raise ValueError("dehomogenization requires degree-0 homogeneous factors")
        last = varset.size - 1
        factors = [f.set_var_one(last) for f in factors]
        varset = factors[0].varset
    # pull denominators out so the fold can run on integer coefficients
    scale = None
    cleared = []
    for f in factors:
        g, d = clear_denominators(f)
        cleared.append(g)
        if not d.is_one():
            scale = d if scale is None else scale * d
    n = varset.size
    window = [(0, 0)] * n
    res = restricted_product(cleared, window, varset)
    ct = res.constant_term()
    if scale is not None:
        ct = ct / scale
    return ct
