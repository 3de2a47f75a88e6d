"""Bound calculators for generalized combination networks.

Closed forms for upper/lower bounds on r_max, (q,t)-feasibility thresholds
and the gap bounds of an (eps,ell)-N_{h,r,alpha*ell+eps} network.  Values
with rational closed forms are exact Fractions (gamma is stored as the
paper constant 3.48 = 87/25); bounds involving beta (which contains e) are
computed in the float log domain.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from . import gf
from .metric import q_binomial

GAMMA = Fraction(348, 100)          # q-binomial approximation constant


@dataclass(frozen=True)
class CombNetParams:
    h: int
    r: int
    alpha: int
    ell: int
    eps: int
    q: int
    t: int = 1

    def __post_init__(self):
        if self.alpha < 1 or self.ell < 1 or self.t < 1 or self.eps < 0:
            raise ValueError("need alpha, ell, t >= 1 and eps >= 0")
        if gf.prime_power(self.q) is None:
            raise ValueError("q must be a prime power")

    @property
    def theta(self):
        return self.alpha - (self.h - self.eps) // self.ell + 1

    def f(self, t=None):
        """(alpha*ell + eps - h) eps t^2 + (alpha*ell + 2eps - h) t + 1."""
        t = self.t if t is None else t
        a, l, e, h = self.alpha, self.ell, self.eps, self.h
        return (a * l + e - h) * e * t * t + (a * l + 2 * e - h) * t + 1

    def g(self, t=None):
        """max(lt,(h-l)t) * (min(lt,(h-l)t) - (h-l-e)t + 1)."""
        t = self.t if t is None else t
        lt, ht = self.ell * t, (self.h - self.ell) * t
        return max(lt, ht) * (min(lt, ht) - (self.h - self.ell - self.eps) * t + 1)

    @property
    def beta(self):
        """((alpha-1)! / (2 e gamma alpha))^(1/(alpha-1)); needs alpha >= 2."""
        a = self.alpha
        return (math.factorial(a - 1) / (2 * math.e * float(GAMMA) * a)) \
            ** (1 / (a - 1))

    @property
    def nontrivial(self):
        return self.ell + self.eps < self.h <= self.alpha * self.ell + self.eps


@dataclass
class NetBound:
    name: str
    kind: str                  # "upper" or "lower"
    applicable: bool
    value: Fraction = None     # exact value when rational
    log2: float = None         # always set when applicable
    note: str = ""

    def check_consistency(self, rel_tol=1e-9):
        """Exact and log views agree within rel_tol when both exist."""
        if self.applicable and self.value is not None and self.value > 0:
            exact = _log2_fraction(self.value)
            return abs(exact - self.log2) <= rel_tol * max(1.0, abs(exact))
        return True


def _log2_fraction(x):
    return math.log2(x.numerator) - math.log2(x.denominator)


def _mk(name, kind, value=None, log2=None, applicable=True, note=""):
    if value is not None and log2 is None:
        log2 = _log2_fraction(Fraction(value)) if value > 0 else float("-inf")
    return NetBound(name, kind, applicable,
                    Fraction(value) if value is not None else None,
                    log2, note)


def _na(name, kind, note):
    return NetBound(name, kind, False, note=note)


# ---------------------------------------------------------------------------
# upper bounds on r_max

def rmax_upper(params):
    """All upper bounds with validity predicates enforced."""
    p = params
    q, t, ell, eps, h, alpha = p.q, p.t, p.ell, p.eps, p.h, p.alpha
    out = []

    # Cor. on gamma-form / exact subspace count, valid for h - eps >= 2 ell
    if alpha >= 2 and h - eps >= 2 * ell:
        theta = p.theta
        loose = GAMMA * theta * Fraction(q) ** (ell * t * (eps * t + 1)) \
            + alpha - theta
        exact = q_binomial((eps + ell) * t, eps * t, q) \
            * (theta * Fraction(q ** (ell * t + 1) - 1, q - 1) - 1) \
            + (h - eps) // ell - 1
        out.append(_mk("UB.N.exact", "upper", exact))
        out.append(_mk("UB.N.gamma", "upper", loose))
    else:
        note = "needs alpha >= 2 and h - eps >= 2 ell"
        out.append(_na("UB.N.exact", "upper", note))
        out.append(_na("UB.N.gamma", "upper", note))

    # alpha = 2 refinement; non-trivially solvable networks give h <= 2l+eps
    if alpha == 2 and h - eps <= 2 * ell and h > ell + eps:
        expo = (h - ell) * (2 * ell + eps - h) * t * t + (h - ell) * t
        loose = GAMMA * Fraction(q) ** expo
        dim = 2 * ell * t - (h - eps) * t + 1
        exact = Fraction(q_binomial(h * t, dim, q),
                         q_binomial(ell * t, dim, q))
        out.append(_mk("UB.2.exact", "upper", exact))
        out.append(_mk("UB.2.gamma", "upper", loose))
    else:
        note = "needs alpha = 2 and ell + eps < h <= 2 ell + eps"
        out.append(_na("UB.2.exact", "upper", note))
        out.append(_na("UB.2.gamma", "upper", note))

    # covering-Grassmannian upper bound
    if (1 < ell * t < h * t and eps * t <= (h - ell) * t - 1
            and 2 <= alpha <= q_binomial(h * t - eps * t - 1, ell * t, q) + 1):
        num = q_binomial(h * t, h * t - eps * t - 1, q)
        den = q_binomial(h * t - ell * t, (h - ell - eps) * t - 1, q)
        exact = Fraction((alpha - 1) * num, den)
        exact = Fraction(math.floor(exact))
        loose = GAMMA * (alpha - 1) * Fraction(q) ** (ell * t * (eps * t + 1))
        out.append(_mk("UB.EZ.exact", "upper", exact))
        out.append(_mk("UB.EZ.gamma", "upper", loose))
    else:
        note = "needs 1 < lt < ht, eps <= h - ell - 1/t and alpha in range"
        out.append(_na("UB.EZ.exact", "upper", note))
        out.append(_na("UB.EZ.gamma", "upper", note))
    return out


# ---------------------------------------------------------------------------
# lower bounds on r_max

def covering_code_lower(n, k, delta, alpha, q):
    """(alpha-1) q^(max(k,n-k)(min(k,n-k)-delta+1)) for covering codes."""
    if not (1 <= delta <= k and delta + k <= n and alpha >= 2):
        raise ValueError("need 1 <= delta <= k, delta + k <= n, alpha >= 2")
    return (alpha - 1) * q ** (max(k, n - k) * (min(k, n - k) - delta + 1))


def rmax_lower(params):
    p = params
    q, t, alpha, h, ell, eps = p.q, p.t, p.alpha, p.h, p.ell, p.eps
    out = []

    if alpha >= 2 and h <= alpha * ell + eps:
        log2 = p.f(t) / (alpha - 1) * math.log2(q) + math.log2(p.beta)
        out.append(NetBound("LB.LLL", "lower", True, None, log2,
                            note="beta * q^(f(t)/(alpha-1)), float log view"))
    else:
        out.append(_na("LB.LLL", "lower", "needs alpha >= 2, h <= al+eps"))

    if alpha >= 2 and h <= 2 * ell + eps and p.g(t) >= 0:
        out.append(_mk("LB.EK", "lower", (alpha - 1) * q ** p.g(t)))
    else:
        out.append(_na("LB.EK", "lower", "needs alpha >= 2, h <= 2l + eps"))
    return out


def best_bounds(params):
    """Best-regime selection reproducing the bound-summary table."""
    p = params
    uppers = {b.name: b for b in rmax_upper(p)}
    lowers = {b.name: b for b in rmax_lower(p)}
    if p.alpha == 2:
        cands = [uppers["UB.2.gamma"], uppers["UB.EZ.gamma"]]
        cands = [c for c in cands if c.applicable]
        ub = min(cands, key=lambda b: b.log2) if cands else _na(
            "UB", "upper", "no applicable bound")
    elif p.h < 2 * p.ell + p.eps:
        ub = uppers["UB.EZ.gamma"]
    else:
        ub = uppers["UB.N.gamma"]
    lb = lowers["LB.EK"] if p.h < 2 * p.ell + p.eps else lowers["LB.LLL"]
    return ub, lb


# ---------------------------------------------------------------------------
# (q, t) feasibility thresholds

def qt_necessary_log2(params, t):
    """log2 of the threshold on q^t below which no (q,t)-solution exists."""
    p = params
    if p.h >= 2 * p.ell + p.eps:
        ratio = Fraction(p.r + p.theta - p.alpha) / (GAMMA * p.theta)
    else:
        ratio = Fraction(p.r) / (GAMMA * (p.alpha - 1))
    if ratio <= 0:
        return float("-inf")
    return _log2_fraction(ratio) / (p.ell * (p.eps * t + 1))


def qt_sufficient_log2(params, t):
    """log2 of the threshold on q^t above which a (q,t)-solution exists."""
    p = params
    if p.h >= 2 * p.ell + p.eps:
        return (p.alpha - 1) * t / p.f(t) * (math.log2(p.r)
                                             - math.log2(p.beta))
    return t / p.g(t) * math.log2(Fraction(p.r, p.alpha - 1))


def qt_conditions(params, t_max):
    """Feasibility curves for t = 1..t_max, as log2(q^t) thresholds."""
    return [(t, qt_necessary_log2(params, t), qt_sufficient_log2(params, t))
            for t in range(1, t_max + 1)]


# ---------------------------------------------------------------------------
# gap bounds

def _necessary_holds(params, q, t):
    """Exact check of q^t >= ratio^(1/(l(eps t + 1))) via cross powers."""
    p = params
    if p.h >= 2 * p.ell + p.eps:
        ratio = Fraction(p.r + p.theta - p.alpha) / (GAMMA * p.theta)
    else:
        ratio = Fraction(p.r) / (GAMMA * (p.alpha - 1))
    if ratio <= 1:
        return True
    power = p.ell * (p.eps * t + 1)
    return Fraction(q) ** (t * power) >= ratio


def min_qt_satisfying_necessary(params):
    """A = min{log2(q^t) : q^t meets the necessary condition}; exact search.

    Monotone in t for fixed q and in q for fixed t; scans prime powers up to
    the t = 1 threshold.
    """
    p = params
    best = None
    t1_threshold = 2
    while not _necessary_holds(params, t1_threshold, 1):
        t1_threshold = gf.next_prime_power(t1_threshold + 1)
    best = t1_threshold  # q = threshold, t = 1
    q = 2
    while q <= best:
        t = 1
        while q ** t < best and not _necessary_holds(params, q, t):
            t += 1
        if q ** t <= best and _necessary_holds(params, q, t):
            best = min(best, q ** t)
        q = gf.next_prime_power(q + 1)
    return best


def gap_bounds(params):
    """(gap_lb, gap_ub) plus the search witnesses, as a dict."""
    p = params
    if p.alpha < 2:
        raise ValueError("gap bounds need alpha >= 2")
    first_case = p.h >= 2 * p.ell + p.eps
    # upper bound: log2 q_s upper - A
    qs_ub_log2 = qt_sufficient_log2(params, 1)
    a_value = min_qt_satisfying_necessary(params)
    gap_ub = qs_ub_log2 - math.log2(a_value)
    # t_A / t_B: minimal t with 2^t above the necessary threshold
    t_a = 1
    while not _necessary_holds(params, 2, t_a):
        t_a += 1
    # lower bound: log2 q_s lower - t_delta (resp. t_star)
    if first_case:
        qs_lb_log2 = qt_necessary_log2(params, 1)
        target = math.log2(p.r) - math.log2(p.beta)
        t_delta = 1
        while p.f(t_delta) / (p.alpha - 1) < target:
            t_delta += 1
    else:
        qs_lb_log2 = qt_necessary_log2(params, 1)
        ratio = Fraction(p.r, p.alpha - 1)
        t_delta = 1
        while Fraction(2) ** p.g(t_delta) < ratio:
            t_delta += 1
    gap_lb = qs_lb_log2 - t_delta
    return {"gap_lb": gap_lb, "gap_ub": gap_ub, "t_A": t_a,
            "t_delta": t_delta, "A_log2": math.log2(a_value),
            "A_value": a_value}
