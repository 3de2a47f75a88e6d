"""Hamming, rank and sum-rank weights, ball sizes and classical bounds.

Bound values are carried as exact integers/rationals together with a log10
float view, since q^(mn) overflows doubles at the scales of interest.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import gf

HAMMING = "hamming"
RANK = "rank"
SUMRANK = "sumrank"

BALL_GUARD = 40          # enumerate compositions only while ell * s <= 40
BRUTEFORCE_GUARD = 1 << 24


@dataclass(frozen=True)
class OrderedPartition:
    parts: tuple

    def __post_init__(self):
        if not self.parts or any(p < 1 for p in self.parts):
            raise ValueError("partition parts must be positive")

    @property
    def n(self):
        return sum(self.parts)

    @property
    def ell(self):
        return len(self.parts)

    def blocks(self, vector):
        out = []
        i = 0
        for p in self.parts:
            out.append(vector[i:i + p])
            i += p
        return out


@dataclass
class BoundReport:
    metric: str
    name: str
    value: Fraction

    @property
    def log10(self):
        if self.value <= 0:
            return float("-inf")
        return (math.log10(self.value.numerator)
                - math.log10(self.value.denominator))


def weight(field, vector, metric=HAMMING, partition=None):
    """Weight of a vector over F_{q^m} in the requested metric."""
    if metric == HAMMING:
        return sum(1 for v in vector if v)
    if metric == RANK:
        return gf.rank_q(field, vector)
    if metric == SUMRANK:
        if partition is None or partition.n != len(vector):
            raise ValueError("sum-rank weight needs a partition matching "
                             "the vector length")
        return sum(gf.rank_q(field, block)
                   for block in partition.blocks(vector))
    raise ValueError(f"unknown metric {metric!r}")


def distance(field, u, v, metric=HAMMING, partition=None):
    diff = [field.sub(a, b) for a, b in zip(u, v)]
    return weight(field, diff, metric, partition)


def min_distance_bruteforce(field, generator_rows, metric=HAMMING,
                            partition=None):
    """Minimum weight over all nonzero codewords (the code is linear)."""
    k = len(generator_rows)
    if field.order ** k > BRUTEFORCE_GUARD:
        raise ValueError("brute-force guard exceeded (q^(mk) > 2^24)")
    n = len(generator_rows[0])
    best = None
    add, mul = field.add, field.mul
    for msg in itertools.product(field.elements(), repeat=k):
        if not any(msg):
            continue
        word = [0] * n
        for c, row in zip(msg, generator_rows):
            if c:
                for j, g in enumerate(row):
                    if g:
                        word[j] = add(word[j], mul(c, g))
        w = weight(field, word, metric, partition)
        if best is None or w < best:
            best = w
            if best == 1:
                break
    return best


# ---------------------------------------------------------------------------
# counting

def q_binomial(n, k, q):
    """Number of k-dimensional subspaces of F_q^n, as an exact integer."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    assert num % den == 0
    return num // den


def hamming_ball(n, radius, q):
    return sum(math.comb(n, i) * (q - 1) ** i for i in range(radius + 1))


def rank_ball(n, m, radius, q):
    """Vectors in F_{q^m}^n of rank weight <= radius."""
    return sum(q_binomial(m, i, q) * _prod_qm(n, i, q)
               for i in range(radius + 1))


def _prod_qm(n, i, q):
    out = 1
    for j in range(i):
        out *= q ** n - q ** j
    return out


def _rank_count_block(ni, m, s, q):
    """Vectors in F_{q^m}^{ni} of rank weight exactly s."""
    out = q_binomial(ni, s, q)
    for j in range(s):
        out *= q ** m - q ** j
    return out


def sumrank_ball(partition, m, radius, q):
    """Sum over ordered decompositions s_1 + ... + s_ell = s <= radius."""
    if partition.ell * radius > BALL_GUARD:
        raise ValueError("ball guard exceeded (ell * s > 40)")
    total = 0
    for s in range(radius + 1):
        for comp in _compositions(s, partition.ell):
            term = 1
            for ni, si in zip(partition.parts, comp):
                if si > ni:
                    term = 0
                    break
                term *= _rank_count_block(ni, m, si, q)
            total += term
    return total


def _compositions(s, parts):
    if parts == 1:
        yield (s,)
        return
    for first in range(s + 1):
        for rest in _compositions(s - first, parts - 1):
            yield (first,) + rest


def ball_size(metric, radius, n, q, m=1, partition=None):
    if metric == HAMMING:
        return hamming_ball(n, radius, q)
    if metric == RANK:
        return rank_ball(n, m, radius, q)
    if metric == SUMRANK:
        if partition is None:
            raise ValueError("sum-rank ball needs a partition")
        return sumrank_ball(partition, m, radius, q)
    raise ValueError(f"unknown metric {metric!r}")


# ---------------------------------------------------------------------------
# classical bounds (cardinality bounds; exact rationals)

def classical_bounds(metric, n, d, q, m=1, partition=None):
    """Singleton, sphere-packing and Gilbert-Varshamov values.

    Sphere-packing upper-bounds and GV lower-bounds the maximum cardinality
    of a code of minimum distance d in the given metric.
    """
    if not 1 <= d <= n:
        raise ValueError("need 1 <= d <= n")
    t = (d - 1) // 2
    reports = []
    if metric == HAMMING:
        singleton = Fraction(q ** (n - d + 1))
        sphere = Fraction(q ** n, hamming_ball(n, t, q))
        gv = Fraction(q ** n, hamming_ball(n, d - 1, q))
    elif metric == RANK:
        singleton = Fraction(q ** (max(n, m) * (min(n, m) - d + 1))) \
            if d <= min(n, m) else Fraction(1)
        sphere = Fraction(q ** (m * n), rank_ball(n, m, t, q))
        gv = Fraction(q ** (m * n), rank_ball(n, m, d - 1, q))
    elif metric == SUMRANK:
        if partition is None:
            raise ValueError("sum-rank bounds need a partition")
        singleton = Fraction(q ** (m * (n - d + 1)))
        # the ball enumeration guard may rule out the packing bounds
        sphere = gv = None
        if partition.ell * t <= BALL_GUARD:
            sphere = Fraction(q ** (m * n), sumrank_ball(partition, m, t, q))
        if partition.ell * (d - 1) <= BALL_GUARD:
            gv = Fraction(q ** (m * n),
                          sumrank_ball(partition, m, d - 1, q))
    else:
        raise ValueError(f"unknown metric {metric!r}")
    reports.append(BoundReport(metric, "singleton", singleton))
    if sphere is not None:
        reports.append(BoundReport(metric, "sphere_packing", sphere))
    if gv is not None:
        reports.append(BoundReport(metric, "gilbert_varshamov", gv))
    return reports
