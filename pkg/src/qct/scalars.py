"""Exact rational functions in the two formal parameters q and t.

The coefficient domain for the whole package: every scalar is a fully
reduced ratio of integer-coefficient polynomials in (q, t), kept in a
canonical form so that equality is literal dictionary equality.

A raw polynomial is a dict mapping (q_exponent, t_exponent) -> nonzero int.
The empty dict is the zero polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd


class PoleError(ZeroDivisionError):
    """Evaluation point lies on a zero of the denominator."""


# ---------------------------------------------------------------------------
# raw bivariate polynomials
# ---------------------------------------------------------------------------

def _pconst(c: int) -> dict:
    return {(0, 0): c} if c else {}


_PONE = {(0, 0): 1}


def _padd(a: dict, b: dict) -> dict:
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _pneg(a: dict) -> dict:
    return {k: -v for k, v in a.items()}


def _psub(a: dict, b: dict) -> dict:
    return _padd(a, _pneg(b))


def _pmul(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if len(a) == 1:
        (qa, ta), ca = next(iter(a.items()))
        if ca == 1 and qa == 0 and ta == 0:
            return dict(b)
        return {(qa + qb, ta + tb): ca * cb for (qb, tb), cb in b.items()}
    if len(b) == 1:
        (qb, tb), cb = next(iter(b.items()))
        if cb == 1 and qb == 0 and tb == 0:
            return dict(a)
        return {(qa + qb, ta + tb): ca * cb for (qa, ta), ca in a.items()}
    out: dict = {}
    for (qa, ta), ca in a.items():
        for (qb, tb), cb in b.items():
            k = (qa + qb, ta + tb)
            s = out.get(k, 0) + ca * cb
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def _pmul_int(a: dict, c: int) -> dict:
    if c == 0:
        return {}
    if c == 1:
        return dict(a)
    return {k: v * c for k, v in a.items()}


def _pint_content(a: dict) -> int:
    g = 0
    for v in a.values():
        g = _igcd(g, v)
        if g == 1:
            return 1
    return g


def _pdiv_int(a: dict, c: int) -> dict:
    if c == 1:
        return dict(a)
    out = {}
    for k, v in a.items():
        d, r = divmod(v, c)
        if r:
            raise ArithmeticError("inexact integer division of polynomial content")
        out[k] = d
    return out


def _plead_key(a: dict):
    # leading = minimal monomial in graded lex with q ranked before t
    # (the q-series convention: series are read from the constant term up)
    return min(a, key=lambda e: (e[0] + e[1], e[0]))


def _plead_coeff(a: dict) -> int:
    return a[_plead_key(a)]


def _pevaluate(a: dict, q0: Fraction, t0: Fraction) -> Fraction:
    total = Fraction(0)
    for (eq, et), c in a.items():
        total += c * q0 ** eq * t0 ** et
    return total


# ---------------------------------------------------------------------------
# univariate helpers over Z[q] (dicts deg -> int), used by the (q,t) gcd
# ---------------------------------------------------------------------------

def _q_dense(a: dict) -> list:
    if not a:
        return []
    d = max(a)
    out = [0] * (d + 1)
    for e, c in a.items():
        out[e] = c
    return out


def _q_trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _q_content(a: list) -> int:
    g = 0
    for c in a:
        g = _igcd(g, c)
        if g == 1:
            return 1
    return g


def _q_primitive(a: list) -> list:
    g = _q_content(a)
    if g in (0, 1):
        return list(a)
    return [c // g for c in a]


def _q_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] += ca * cb
    return _q_trim(out)


def _q_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _q_trim(out)


def _q_scaled_rem(a: list, b: list) -> list:
    """Remainder of a by b up to an integer multiple (pseudo-division)."""
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    while _q_trim(r) and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for j, cb in enumerate(b):
            r[shift + j] -= lr * cb
        r = _q_trim(r)
        if r:
            g = _q_content(r)
            if g > 1:
                r = [c // g for c in r]
    return r


def _q_gcd(a: list, b: list) -> list:
    a = _q_trim(list(a))
    b = _q_trim(list(b))
    if not a:
        g = b
    elif not b:
        g = a
    else:
        ca, cb = _q_content(a), _q_content(b)
        f, g2 = _q_primitive(a), _q_primitive(b)
        if len(f) < len(g2):
            f, g2 = g2, f
        while g2:
            r = _q_scaled_rem(f, g2)
            f, g2 = g2, _q_primitive(r)
        g = [c * _igcd(ca, cb) for c in f]
    if g and g[-1] < 0:
        g = [-c for c in g]
    return g


def _q_divexact(a: list, b: list) -> list:
    """Exact division in Z[q]; raises if the division is not exact."""
    a = _q_trim(list(a))
    b = _q_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return []
    if len(b) == 1:
        c = b[0]
        out = []
        for v in a:
            d, r = divmod(v, c)
            if r:
                raise ArithmeticError("inexact division in Z[q]")
            out.append(d)
        return _q_trim(out)
    out = [0] * (len(a) - len(b) + 1)
    r = list(a)
    lb = b[-1]
    while _q_trim(r) and len(r) - 1 >= len(b) - 1:
        d, rem = divmod(r[-1], lb)
        if rem:
            raise ArithmeticError("inexact division in Z[q]")
        shift = len(r) - 1 - (len(b) - 1)
        out[shift] = d
        for j, cb in enumerate(b):
            r[shift + j] -= d * cb
        r = _q_trim(r)
    if _q_trim(r):
        raise ArithmeticError("inexact division in Z[q]")
    return _q_trim(out)


# ---------------------------------------------------------------------------
# gcd in Z[q][t] via primitive remainder sequences in t
# ---------------------------------------------------------------------------

def _t_slices(a: dict) -> list:
    """Dense list over t-degree with Z[q] dense-list coefficients."""
    if not a:
        return []
    dt = max(et for (_, et) in a)
    out = [dict() for _ in range(dt + 1)]
    for (eq, et), c in a.items():
        out[et][eq] = c
    return [_q_dense(s) for s in out]


def _t_trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _from_t_slices(sl: list) -> dict:
    out = {}
    for et, coeff in enumerate(sl):
        for eq, c in enumerate(coeff):
            if c:
                out[(eq, et)] = c
    return out


def _t_content(sl: list) -> list:
    g: list = []
    for coeff in sl:
        g = _q_gcd(g, coeff)
        if g == [1]:
            return g
    return g


def _t_primitive(sl: list) -> list:
    g = _t_content(sl)
    if not g or g == [1]:
        return [list(c) for c in sl]
    return [_q_divexact(c, g) for c in sl]


def _t_scaled_rem(a: list, b: list) -> list:
    r = [list(c) for c in a]
    lb = b[-1]
    db = len(b) - 1
    while _t_trim(r) and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [_q_mul(c, lb) for c in r]
        for j, cb in enumerate(b):
            r[shift + j] = _q_sub(r[shift + j], _q_mul(lr, cb))
        r = _t_trim(r)
        if r:
            g = _t_content(r)
            if g and g != [1]:
                r = [_q_divexact(c, g) for c in r]
    return r


def _pgcd(a: dict, b: dict) -> dict:
    """gcd in Z[q,t], primitive with positive leading coefficient."""
    if not a:
        g = dict(b)
    elif not b:
        g = dict(a)
    elif max(et for (_, et) in a) == 0 and max(et for (_, et) in b) == 0:
        ga = _q_gcd(_q_dense({eq: c for (eq, _), c in a.items()}),
                    _q_dense({eq: c for (eq, _), c in b.items()}))
        g = {(eq, 0): c for eq, c in enumerate(ga) if c}
    else:
        sa, sb = _t_slices(a), _t_slices(b)
        ca, cb = _t_content(sa), _t_content(sb)
        f, s = _t_primitive(sa), _t_primitive(sb)
        if len(f) < len(s):
            f, s = s, f
        while _t_trim(s):
            r = _t_scaled_rem(f, s)
            f, s = s, _t_primitive(_t_trim(r))
        cont = _q_gcd(ca, cb)
        g = _from_t_slices([_q_mul(c, cont) for c in _t_primitive(f)])
    if g and _plead_coeff(g) < 0:
        g = _pneg(g)
    return g


def _pdivexact(a: dict, b: dict) -> dict:
    """Exact division in Z[q,t]; raises if not exact."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return {}
    if b == _PONE:
        return dict(a)
    if len(b) == 1 and next(iter(b)) == (0, 0):
        return _pdiv_int(a, b[(0, 0)])
    sa, sb = _t_slices(a), _t_slices(b)
    if len(sb) == 1:
        quo = [_q_divexact(c, sb[0]) for c in sa]
        return _from_t_slices(quo)
    out = [[] for _ in range(len(sa) - len(sb) + 1)]
    r = [list(c) for c in sa]
    lb = sb[-1]
    db = len(sb) - 1
    while _t_trim(r) and len(r) - 1 >= db:
        qc = _q_divexact(r[-1], lb)
        shift = len(r) - 1 - db
        out[shift] = qc
        for j, cb in enumerate(sb):
            r[shift + j] = _q_sub(r[shift + j], _q_mul(qc, cb))
        r = _t_trim(r)
    if _t_trim(r):
        raise ArithmeticError("inexact division in Z[q,t]")
    return _from_t_slices(out)


def _poly_text(a: dict) -> str:
    if not a:
        return "0"
    parts = []
    for (eq, et) in sorted(a, key=lambda e: (e[0] + e[1], e[0])):
        c = a[(eq, et)]
        factors = []
        if eq:
            factors.append("q" if eq == 1 else f"q^{eq}")
        if et:
            factors.append("t" if et == 1 else f"t^{et}")
        mono = "*".join(factors)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# ExactScalar
# ---------------------------------------------------------------------------

class ExactScalar:
    """A reduced ratio of integer polynomials in (q, t).

    Canonical form: numerator and denominator share no polynomial factor
    and no integer content, and the denominator's leading coefficient
    (graded lex, q before t) is positive.  Instances are immutable.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: dict, den: dict, _canonical: bool = False):
        if not _canonical:
            num, den = _canonicalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_int(c: int) -> "ExactScalar":
        return ExactScalar(_pconst(c), dict(_PONE), _canonical=True)

    @staticmethod
    def from_fraction(f: Fraction) -> "ExactScalar":
        return ExactScalar(_pconst(f.numerator), _pconst(f.denominator))

    @staticmethod
    def monomial(c: int, eq: int, et: int = 0) -> "ExactScalar":
        if eq >= 0 and et >= 0:
            return ExactScalar({(eq, et): c} if c else {}, dict(_PONE), _canonical=True)
        num = {(max(eq, 0), max(et, 0)): c} if c else {}
        den = {(max(-eq, 0), max(-et, 0)): 1}
        return ExactScalar(num, den)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == _PONE and self.den == _PONE

    def __bool__(self) -> bool:
        return bool(self.num)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "ExactScalar") -> "ExactScalar":
        if not isinstance(other, ExactScalar):
            return NotImplemented
        if self.den == _PONE and other.den == _PONE:
            return ExactScalar(_padd(self.num, other.num), dict(_PONE), _canonical=True)
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return ExactScalar(num, _pmul(self.den, other.den))

    def __sub__(self, other: "ExactScalar") -> "ExactScalar":
        return self + (-other)

    def __neg__(self) -> "ExactScalar":
        return ExactScalar(_pneg(self.num), dict(self.den), _canonical=True)

    def __mul__(self, other: "ExactScalar") -> "ExactScalar":
        if not isinstance(other, ExactScalar):
            return NotImplemented
        if self.den == _PONE and other.den == _PONE:
            return ExactScalar(_pmul(self.num, other.num), dict(_PONE), _canonical=True)
        return ExactScalar(_pmul(self.num, other.num), _pmul(self.den, other.den))

    def __truediv__(self, other: "ExactScalar") -> "ExactScalar":
        if not isinstance(other, ExactScalar):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        return ExactScalar(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def inverse(self) -> "ExactScalar":
        if self.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        return ExactScalar(dict(self.den), dict(self.num))

    def __pow__(self, k: int) -> "ExactScalar":
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- structure ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((frozenset(self.num.items()), frozenset(self.den.items())))

    def __repr__(self) -> str:
        return f"ExactScalar({self.to_text()!r})"

    def to_text(self) -> str:
        if self.den == _PONE:
            return _poly_text(self.num)
        num = _poly_text(self.num)
        den = _poly_text(self.den)
        if len(self.num) > 1:
            num = f"({num})"
        if len(self.den) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def evaluate(self, q0: Fraction, t0: Fraction = Fraction(0)) -> Fraction:
        """Exact rational value at (q0, t0); raises PoleError on a denominator zero."""
        d = _pevaluate(self.den, q0, t0)
        if d == 0:
            raise PoleError(f"pole at q={q0}, t={t0}")
        return _pevaluate(self.num, q0, t0) / d

    def subs_t_qpow(self, lam: int) -> "ExactScalar":
        """Substitute t = q**lam, collapsing to a univariate rational function in q."""
        num = {}
        for (eq, et), c in self.num.items():
            k = (eq + lam * et, 0)
            num[k] = num.get(k, 0) + c
        den = {}
        for (eq, et), c in self.den.items():
            k = (eq + lam * et, 0)
            den[k] = den.get(k, 0) + c
        num = {k: v for k, v in num.items() if v}
        den = {k: v for k, v in den.items() if v}
        return ExactScalar(num, den)

    def uses_t(self) -> bool:
        return any(et for (_, et) in self.num) or any(et for (_, et) in self.den)


def _canonicalize(num: dict, den: dict):
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return {}, dict(_PONE)
    if den == _PONE:
        return dict(num), dict(_PONE)
    if len(den) == 1 and next(iter(den)) == (0, 0):
        c = den[(0, 0)]
        g = _igcd(_pint_content(num), abs(c))
        if c < 0:
            g = -g
        num = _pdiv_int(num, g)
        c //= g
        if c == 1:
            return num, dict(_PONE)
        return num, _pconst(c)
    g = _pgcd(num, den)
    if g != _PONE:
        num = _pdivexact(num, g)
        den = _pdivexact(den, g)
    ic = _igcd(_pint_content(num), _pint_content(den))
    if _plead_coeff(den) < 0:
        ic = -ic
    if ic != 1:
        num = _pdiv_int(num, ic)
        den = _pdiv_int(den, ic)
    return num, den


def normalize(num: dict, den: dict) -> ExactScalar:
    """Canonical reduced scalar from a raw numerator/denominator pair."""
    return ExactScalar(num, den)


ZERO = ExactScalar.from_int(0)
ONE = ExactScalar.from_int(1)
Q = ExactScalar.monomial(1, 1, 0)
T = ExactScalar.monomial(1, 0, 1)


def qpow(k: int) -> ExactScalar:
    """q**k as a scalar, k may be negative."""
    return ExactScalar.monomial(1, k, 0)


def tpow(k: int) -> ExactScalar:
    return ExactScalar.monomial(1, 0, k)


def scalar(c: int) -> ExactScalar:
    return ExactScalar.from_int(c)


def arith(a: ExactScalar, b: ExactScalar, op: str) -> ExactScalar:
    """Dispatch form of the four ring operations, kept for the CLI/reports."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# text parsing (shared tokenizer; laurent.py reuses it)
# ---------------------------------------------------------------------------

def tokenize(text: str) -> list:
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j])))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("name", text[i:j]))
            i = j
        elif ch in "+-*/^()":
            toks.append(("op", ch))
            i += 1
        else:
            raise ValueError(f"unexpected character {ch!r} in {text!r}")
    return toks


class ExprParser:
    """Tiny recursive-descent evaluator over +, -, *, /, ^ and parentheses.

    The atom callback supplies values for names and integers, so the same
    grammar serves both scalar and Laurent text forms.
    """

    def __init__(self, toks, make_int, make_name, one):
        self.toks = toks
        self.pos = 0
        self.make_int = make_int
        self.make_name = make_name
        self.one = one

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self):
        v = self.expr()
        if self.pos != len(self.toks):
            raise ValueError("trailing tokens in expression")
        return v

    def expr(self):
        kind, val = self.peek()
        neg = False
        if (kind, val) == ("op", "-"):
            self.take()
            neg = True
        elif (kind, val) == ("op", "+"):
            self.take()
        v = self.term()
        if neg:
            v = -v
        while True:
            kind, val = self.peek()
            if (kind, val) == ("op", "+"):
                self.take()
                v = v + self.term()
            elif (kind, val) == ("op", "-"):
                self.take()
                v = v - self.term()
            else:
                return v

    def term(self):
        v = self.factor()
        while True:
            kind, val = self.peek()
            if (kind, val) == ("op", "*"):
                self.take()
                v = v * self.factor()
            elif (kind, val) == ("op", "/"):
                self.take()
                v = v / self.factor()
            else:
                return v

    def factor(self):
        kind, val = self.take()
        if (kind, val) == ("op", "("):
            v = self.expr()
            kind, val = self.take()
            if (kind, val) != ("op", ")"):
                raise ValueError("expected ')'")
        elif kind == "int":
            v = self.make_int(val)
        elif kind == "name":
            v = self.make_name(val)
        else:
            raise ValueError(f"unexpected token {val!r}")
        kind, nxt = self.peek()
        if (kind, nxt) == ("op", "^"):
            self.take()
            sign = 1
            kind, nxt = self.peek()
            if (kind, nxt) == ("op", "-"):
                self.take()
                sign = -1
            kind, e = self.take()
            if kind != "int":
                raise ValueError("expected integer exponent")
            v = v ** (sign * e)
        return v


def parse_scalar(text: str) -> ExactScalar:
    """Parse the canonical scalar text form (and general q,t expressions)."""
    def make_name(name):
        if name == "q":
            return Q
        if name == "t":
            return T
        raise ValueError(f"unknown symbol {name!r} in scalar")

    return ExprParser(tokenize(text), ExactScalar.from_int, make_name, ONE).parse()
