"""Closed-form success-probability bounds for interleaved RS/alternant
decoding, the helper maximization, matrix counting and dimension bounds.

All bound values are exact Fractions clamped to [0, 1]; "not applicable"
outside a bound's validity window is signalled by returning None.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from . import grscode, metric

KOPT_FULL = "full"            # min(Singleton, Hamming, Griesmer, Plotkin)
KOPT_SINGLETON = "singleton"

BOUND_NAMES = ("L.RS", "L.A", "L.A1", "L.A2", "L.T", "U")


# ---------------------------------------------------------------------------
# upper bounds on the dimension of a q-ary code: k_q^opt(n, d)

def _singleton_k(q, n, d):
    return n - d + 1

def _hamming_k(q, n, d):
    t = (d - 1) // 2
    vol = metric.hamming_ball(n, t, q)
    k = 0
    while q ** (k + 1) * vol <= q ** n:
        k += 1
    return k

def _griesmer_k(q, n, d):
    k = 0
    while True:
        need = sum(-(-d // q ** i) for i in range(k + 1))
        if need > n:
            return k
        k += 1

def _plotkin_k(q, n, d):
    # shorten to n' with d > (1 - 1/q) n', then M <= q^(n-n') d/(d - theta n')
    theta = Fraction(q - 1, q)
    n_prime = min(n, -(-d * q // (q - 1)) - 1)
    if n_prime < d:
        n_prime = d  # d <= n' always possible since d > theta*d
    gap = d - theta * n_prime
    if gap <= 0:
        return n - d + 1  # fallback; no information
    size = q ** (n - n_prime) * (Fraction(d) / gap)
    k = 0
    while q ** (k + 1) <= size:
        k += 1
    return k


def kopt(q, n, d, policy=KOPT_FULL):
    """Upper bound on the dimension of a q-ary [n, ?, d] code."""
    if not 1 <= d <= n:
        raise ValueError("need 1 <= d <= n")
    if policy == KOPT_SINGLETON:
        return _singleton_k(q, n, d)
    return min(_singleton_k(q, n, d), _hamming_k(q, n, d),
               _griesmer_k(q, n, d), _plotkin_k(q, n, d))


# ---------------------------------------------------------------------------
# the convex-sum maximization helper

def maximize_convex_sum(a, b, c, B, s):
    """Upper bound on max sum of m_i^s over multisets of c values in [a, b]
    summing to B: ((B - c a)/(b - a) + 1)(b^s - a^s) + c a^s.
    """
    if a < 1 or b < a or not (c * a <= B <= c * b):
        raise ValueError("maximization window violated")
    if a == b:
        return Fraction(c * a ** s)
    return (Fraction(B - c * a, b - a) + 1) * (b ** s - a ** s) \
        + c * a ** s


# ---------------------------------------------------------------------------
# matrix counting

def count_matrices(s_rows, t_cols, r_rank, q):
    """(M, N): all matrices of rank r, and those without zero columns."""
    m = _m_count(s_rows, t_cols, r_rank, q)
    n = sum((-1) ** j * math.comb(t_cols, j)
            * _m_count(s_rows, t_cols - j, r_rank, q)
            for j in range(t_cols - r_rank + 1))
    return m, n


def _m_count(s, n, r, q):
    if r < 0 or r > min(s, n):
        return 0
    num = den = 1
    for i in range(r):
        num *= (q ** s - q ** i) * (q ** n - q ** i)
        den *= q ** r - q ** i
    assert num % den == 0
    return num // den


# ---------------------------------------------------------------------------
# success-probability bounds

@dataclass
class BoundInputs:
    q: int            # base field size (error alphabet for alternant bounds)
    m: int            # extension degree; the GRS code lives over q^m
    n: int
    d: int            # designed distance of the GRS code
    s: int            # interleaving order
    t: int            # number of errors
    kopt_policy: str = KOPT_FULL

    def __post_init__(self):
        if self.d > self.n or self.t < 1:
            raise ValueError("need d <= n and t >= 1")
        if self.n > self.q ** self.m - 1:
            raise ValueError("GRS needs n <= q^m - 1 nonzero locators")

    @property
    def t_max(self):
        return (self.s * (self.d - 1)) // (self.s + 1)


def _clamp01(x):
    return max(Fraction(0), min(Fraction(1), x))


def bound_l_rs(inputs):
    """L.RS: success lower bound for interleaved RS, errors over F_{q^m}."""
    q, m, d, s, t = inputs.q, inputs.m, inputs.d, inputs.s, inputs.t
    if t >= d:
        return None
    Q = q ** m
    # ratio (q^{ms} - q^{-m}) / (q^{ms} - 1), exactly
    ratio = Fraction(Q ** s * Q - 1, Q * (Q ** s - 1))
    # q^{-m(s+1)(t_max - t)} with t_max = s(d-1)/(s+1) exactly rational
    exponent = m * (s * (d - 1) - (s + 1) * t)
    tail = Fraction(1, Q - 1) * Fraction(q) ** (-exponent)
    return _clamp01(1 - ratio ** t * tail)


def _la_terms(inputs, policy, simplified):
    q, m, d, s, t = inputs.q, inputs.m, inputs.d, inputs.s, inputs.t
    total = Fraction(0)
    for w in range(d - t, t + 1):
        a_w = q ** max(0, w - (d - t - 1) * m)
        b_w = q ** kopt(q, w, d - t, policy)
        c_w = (q ** m - 1) ** w
        big_b = grscode.b_mds_total(w, d - t, q, m)
        # a_w and b_w bracket every subcode size and big_b sums them, so the
        # maximization window is guaranteed for n <= q^m - 1
        assert a_w <= b_w and c_w * a_w <= big_b <= c_w * b_w
        max_sum = maximize_convex_sum(a_w, b_w, c_w, big_b, s)
        if simplified:
            inner = max_sum - c_w
        else:
            b_ww = grscode.b_mds(w, d - t, w, q, m)
            inner = (Fraction(q ** s - 1, q - 1) * (c_w + b_ww - big_b)
                     - c_w + max_sum)
        total += Fraction(math.comb(t, w),
                          (q ** m - 1) * (q ** s - 1) ** w) * inner
    return _clamp01(1 - total)


def bound_l_a(inputs):
    """L.A: alternant success lower bound (Theorem form)."""
    if inputs.t >= inputs.d:
        return None
    return _la_terms(inputs, inputs.kopt_policy, simplified=False)


def bound_l_a1(inputs):
    """L.A1: as L.A but with the Singleton bound for k_q^opt."""
    if inputs.t >= inputs.d:
        return None
    return _la_terms(inputs, KOPT_SINGLETON, simplified=False)


def bound_l_a2(inputs):
    """L.A2: simplified lower bound (drops the |L_0| correction)."""
    if inputs.t >= inputs.d:
        return None
    return _la_terms(inputs, inputs.kopt_policy, simplified=True)


def bound_l_t(inputs):
    """L.T: lower bound for large interleaving order (requires s >= t)."""
    q, d, s, t = inputs.q, inputs.d, inputs.s, inputs.t
    if s < t:
        return None
    total = 0
    for r in range(max(0, 2 * t - d + 2), t + 1):
        total += count_matrices(s, t, r, q)[1]
    return _clamp01(Fraction(total, (q ** s - 1) ** t))


def z_xi(q, s, t, xi):
    """|Z^xi|: matrices in E_B with some e hitting exactly xi columns.

    Inclusion-exclusion over j-subsets of the (q^s-1)/(q-1) collinearity
    classes; the remaining t - j*xi columns range over the nonzero vectors
    outside those j classes, of which there are q^s - 1 - j(q-1).  (The
    source prints q^s - q^j there, which matches only at j = 1; exhaustive
    counting confirms this form.)
    """
    total = 0
    reps = (q ** s - 1) // (q - 1)
    for j in range(1, t // xi + 1):
        rest = q ** s - 1 - j * (q - 1)
        free = t - j * xi
        if rest < 0 and free > 0:
            continue
        d_j = 1
        for z in range(j):
            d_j *= math.comb(t - z * xi, xi)
        d_j *= (q - 1) ** (j * xi) * (rest ** free if free else 1)
        term = math.comb(reps, j) * d_j
        total += term if j % 2 else -term
    return total


def bound_u(inputs):
    """U: success upper bound (requires t >= d/2 so the xi-range is valid)."""
    q, d, s, t = inputs.q, inputs.d, inputs.s, inputs.t
    if 2 * t < d or t >= d:
        return None
    best = max(z_xi(q, s, t, xi) for xi in range(d - t, t + 1))
    return _clamp01(1 - Fraction(best, (q ** s - 1) ** t))


_BOUND_FUNCS = {
    "L.RS": bound_l_rs,
    "L.A": bound_l_a,
    "L.A1": bound_l_a1,
    "L.A2": bound_l_a2,
    "L.T": bound_l_t,
    "U": bound_u,
}


def bound(name, inputs):
    """Evaluate one named bound; None means "not applicable" here."""
    if name not in _BOUND_FUNCS:
        raise ValueError(f"unknown bound {name!r}")
    return _BOUND_FUNCS[name](inputs)


def all_bounds(inputs):
    return {name: bound(name, inputs) for name in BOUND_NAMES}
