"""Partitions: orderings, diagram statistics, arm/leg products and the
single-row transition coefficient used in the power-sum expansion."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .qseries import q_bracket, qq_poch
from .scalars import ONE, ExactScalar, qpow, scalar, tpow


class Partition:
    """Weakly decreasing tuple of positive integers (trailing zeros trimmed)."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        p = tuple(x for x in parts)
        while p and p[-1] == 0:
            p = p[:-1]
        if any(p[i] < p[i + 1] for i in range(len(p) - 1)) or any(x < 0 for x in p):
            raise ValueError(f"not a partition: {p}")
        object.__setattr__(self, "parts", p)

    # -- basic queries ----------------------------------------------------

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """1-indexed part, zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def padded(self, n: int) -> tuple:
        if n < len(self.parts):
            raise ValueError("padding length shorter than the partition")
        return self.parts + (0,) * (n - len(self.parts))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def frequencies(self) -> dict:
        """Map j -> multiplicity of the part j (nonzero parts only)."""
        out: dict = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def cells(self) -> Iterator[tuple]:
        """Diagram nodes (i, j) in matrix fashion, 1-indexed."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def arm(self, i: int, j: int) -> int:
        return self.parts[i - 1] - j

    def leg(self, i: int, j: int) -> int:
        return sum(1 for r in self.parts[i:] if r >= j)

    # -- dunder plumbing ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else ""

    def to_text(self) -> str:
        return str(self)


def parse_partition(text: str) -> Partition:
    """Accepts '2,1,1' and the frequency form '2 1^2' (also '2^1 1^2')."""
    text = text.strip()
    if not text:
        return Partition()
    if "," in text or ("^" not in text and " " not in text):
        return Partition(int(x) for x in text.split(",") if x.strip())
    parts: list = []
    for chunk in text.split():
        if "^" in chunk:
            base, mult = chunk.split("^")
            parts.extend([int(base)] * int(mult))
        else:
            parts.append(int(chunk))
    return Partition(sorted(parts, reverse=True))


def revlex_compare(kappa: Partition, mu: Partition) -> int:
    """Total order: weight first, then first differing part (largest wins).

    Returns -1, 0 or 1.  Cross-weight comparisons put the larger weight
    higher; within a fixed weight this is the ordering used to sequence the
    Gram-Schmidt construction.
    """
    if kappa.weight != mu.weight:
        return -1 if kappa.weight < mu.weight else 1
    a, b = kappa.parts, mu.parts
    for x, y in zip(a, b):
        if x != y:
            return 1 if x > y else -1
    if len(a) == len(b):
        return 0
    # equal weight with one a prefix of the other cannot happen
    return 1 if len(a) < len(b) else -1


def revlex_key(kappa: Partition):
    """Sort key ascending in the revlex total order."""
    return (kappa.weight, kappa.parts)


def dominance_leq(mu: Partition, kappa: Partition) -> bool:
    """Partial-sum comparison for partitions of equal weight."""
    if mu.weight != kappa.weight:
        return False
    sm = sk = 0
    for i in range(max(mu.length, kappa.length)):
        sm += mu.part(i + 1)
        sk += kappa.part(i + 1)
        if sm > sk:
            return False
    return True


@lru_cache(maxsize=None)
def partitions_of(k: int, max_len: int | None = None, max_part: int | None = None) -> tuple:
    """All partitions of k, revlex-descending, optionally bounded."""
    cap = k if max_part is None else min(max_part, k)
    out: list = []

    def rec(rest: int, biggest: int, acc: list):
        if rest == 0:
            out.append(Partition(acc))
            return
        if max_len is not None and len(acc) >= max_len:
            return
        for p in range(min(biggest, rest), 0, -1):
            acc.append(p)
            rec(rest - p, p, acc)
            acc.pop()

    if k == 0:
        return (Partition(),)
    rec(k, cap, [])
    out.sort(key=revlex_key, reverse=True)
    return tuple(out)


# ---------------------------------------------------------------------------
# diagram products
# ---------------------------------------------------------------------------

def arm_leg_products(kappa: Partition) -> tuple:
    """The pair (c, c') of arm/leg hook products over the diagram:
    c  = prod over cells of (1 - q^arm * t^(leg+1)),
    c' = prod over cells of (1 - q^(arm+1) * t^leg)."""
    c = ONE
    cp = ONE
    for (i, j) in kappa.cells():
        a = kappa.arm(i, j)
        l = kappa.leg(i, j)
        c = c * (ONE - qpow(a) * tpow(l + 1))
        cp = cp * (ONE - qpow(a + 1) * tpow(l))
    return c, cp


def x_row_coeff(kappa: Partition) -> ExactScalar:
    """Single-row transition coefficient: the product of (t^(i-1) - q^(j-1))
    over all diagram nodes except (1,1)."""
    if kappa.weight == 0:
        raise ValueError("requires a non-empty partition")
    out = ONE
    for (i, j) in kappa.cells():
        if (i, j) == (1, 1):
            continue
        out = out * (tpow(i - 1) - qpow(j - 1))
    return out


def x_row_coeff_label_form(kappa: Partition) -> ExactScalar:
    """Label-dependent rewriting of the same coefficient:
    t^n(kappa) * (q;q)_{kappa_1 - 1} * prod_{i>=2} (t^(1-i); q)_{kappa_i}."""
    if kappa.weight == 0:
        raise ValueError("requires a non-empty partition")
    out = tpow(n_stat(kappa)) * qq_poch(1, kappa.part(1) - 1)
    for i in range(2, kappa.length + 1):
        prod = ONE
        for m in range(kappa.part(i)):
            prod = prod * (ONE - tpow(1 - i) * qpow(m))
        out = out * prod
    return out


def c_prime_label_form(kappa: Partition, lam: int) -> ExactScalar:
    """Label-dependent form quoted for c' at t = q^lam, transcribed literally:
    prod_i 1/(q;q)_{kappa_i + lam*(r-i)} times
    prod_{i<j} (q^(kappa_i - kappa_j + 1 + lam*(j-i-1)); q)_lam.

    Kept verbatim for comparison; the node product is the authoritative
    definition and the two disagree (reciprocally) on one-row shapes.
    """
    r = kappa.length
    out = ONE
    for i in range(1, r + 1):
        out = out / qq_poch(1, kappa.part(i) + lam * (r - i))
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            out = out * qq_poch(kappa.part(i) - kappa.part(j) + 1 + lam * (j - i - 1), lam)
    return out


def z_sigma(sigma: Partition) -> ExactScalar:
    """Cycle-type normalizer with t-deformation:
    prod_i i^(f_i) * f_i! * (1 - t^i)^(-f_i)."""
    out = ONE
    for j, f in sigma.frequencies().items():
        fact = 1
        for m in range(2, f + 1):
            fact *= m
        out = out * scalar(j ** f * fact) / (ONE - tpow(j)) ** f
    return out


def n_stat(kappa: Partition) -> int:
    """The statistic sum of (i-1) * kappa_i over rows."""
    return sum((i - 1) * p for i, p in enumerate(kappa.parts, start=1))


def partition_stats(sigma: Partition) -> tuple:
    """(z_sigma(t), n(sigma)) in one call."""
    return z_sigma(sigma), n_stat(sigma)
