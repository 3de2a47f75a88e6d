"""Quadratic-lifted Reed-Solomon codes over F_q with q = 2^ell.

Codewords are evaluations of bivariate polynomials whose restriction to
every quadratic curve y = ax^2 + bx + c has degree < q - r.  A monomial
x^a y^b is good iff 2i + j + a (mod* q) < q - r for all i <=2 b and
j <=2 b - i, where mod* folds values >= q into [1, q-1] (multiples of q-1
map to q-1) and <=2 is the bitwise-dominance order.
"""

import itertools
import math
from dataclasses import dataclass

from . import gf

LAMBDA1 = 2 + math.sqrt(2)
LAMBDA2 = 2 - math.sqrt(2)
MU = math.log2(2 + math.sqrt(2))

# closed-form coefficients of |S_0| for r = 1 and r = 3 (exact surd forms
# (2 +- sqrt2)/4 and (4 +- sqrt2)/4)
_C1_PLUS = (2 + math.sqrt(2)) / 4
_C1_MINUS = (2 - math.sqrt(2)) / 4
_C3_PLUS = (4 + math.sqrt(2)) / 4
_C3_MINUS = (4 - math.sqrt(2)) / 4


@dataclass(frozen=True)
class QlrsParams:
    ell: int
    r: int

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError("need ell >= 1")
        if not 1 <= self.r <= self.q - 1:
            raise ValueError("need 1 <= r <= q - 1")

    @property
    def q(self):
        return 1 << self.ell


def mod_star(a, q):
    """Fold a into [0, q-1]: identity below q, multiples of q-1 to q-1."""
    if a <= q - 1:
        return a
    if a % (q - 1) == 0:
        return q - 1
    return a % (q - 1)


def _achievable_sums(b):
    """Bitmask of values 2i + j over i <=2 b, j <=2 b - i.

    Each set bit w of b contributes 0 (unused), w (to j) or 2w (to i).
    """
    mask = 1
    bit = 1
    while bit <= b:
        if b & bit:
            mask = mask | (mask << bit) | (mask << (2 * bit))
        bit <<= 1
    return mask


def is_good_monomial(a, b, params):
    """True iff 2i+j+a (mod* q) < q - r for every admissible (i, j)."""
    q, r = params.q, params.r
    if not (0 <= a <= q - 1 and 0 <= b <= q - 1):
        raise ValueError("exponents must lie in [0, q-1]")
    sums = _achievable_sums(b)
    v = 0
    while sums:
        if sums & 1 and mod_star(v + a, q) >= q - r:
            return False
        sums >>= 1
        v += 1
    return True


def good_monomials(params):
    q = params.q
    return [(a, b) for b in range(q) for a in range(q)
            if is_good_monomial(a, b, params)]


def dimension(params):
    """Number of good monomials (equals the code dimension)."""
    return len(good_monomials(params))


def bad_star_count(params):
    """|S*(ell)|: the number of (Phi, q-r)*-bad monomials."""
    return params.q ** 2 - dimension(params)


# ---------------------------------------------------------------------------
# ij reduction

def ij_reduce(ell, i, j):
    """Deduct q = 2^ell from 2i + j by zeroing shadow bits.

    Zeroing a bit of weight w in i removes 2w from 2i + j; in j it removes
    w.  Removals are powers of two processed largest-first, taken while they
    fit, which always lands exactly on q when 2i + j >= q (each partial sum
    is a multiple of the next candidate).  Inputs with 2i + j < q are
    returned unchanged (the no-op branch).
    """
    q = 1 << ell
    if not (0 <= i < q and 0 <= j < q):
        raise ValueError("need 0 <= i, j < q")
    if 2 * i + j < q:
        return i, j
    ip, jp = i, j
    removed = 0
    for h in range(ell, -1, -1):
        contrib = 1 << h
        if h >= 1 and (ip >> (h - 1)) & 1 and removed + contrib <= q:
            ip &= ~(1 << (h - 1))
            removed += contrib
        if removed == q:
            break
        if (jp >> h) & 1 and removed + contrib <= q:
            jp &= ~(1 << h)
            removed += contrib
        if removed == q:
            break
    assert removed == q
    return ip, jp


# ---------------------------------------------------------------------------
# bad-monomial sets S_t(ell) and the recursion

def s_t_exhaustive(ell, r, t):
    """Direct enumeration of S_t(ell) from its definition."""
    q = 1 << ell
    out = set()
    targets = {q - rp + t * q for rp in range(1, r + 1)}
    for b in range(q):
        sums = _achievable_sums(b)
        for a in range(q):
            if any(0 <= v - a < (3 * q + 1) and (sums >> (v - a)) & 1
                   for v in targets if v >= a):
                out.add((a, b))
    return out


RECURSION_MATRIX = ((3, 1, 0), (1, 1, 1), (0, 0, 1))


def min_valid_ell(r):
    """Smallest ell with r < q/2 = 2^(ell-1)."""
    ell = 1
    while r >= (1 << (ell - 1)):
        ell += 1
    return ell


def s_counts_recursive(ell, r):
    """(|S_0|, |S_1|, |S_2|) via the 3x3 recursion from exhaustive s(ell_0).

    The recursion step needs r < q/2; below the smallest valid level the
    sets are enumerated directly (they are tiny there).
    """
    ell0 = min_valid_ell(r)
    if ell < ell0:
        return tuple(len(s_t_exhaustive(ell, r, t)) for t in range(3))
    vec = [len(s_t_exhaustive(ell0, r, t)) for t in range(3)]
    for _ in range(ell - ell0):
        a, b, c = vec
        vec = [3 * a + b, a + b + c, c]
    return tuple(vec)


def s0_closed_form(ell, r):
    """Closed forms of |S_0(ell)| for r in {1, 3} (floating point)."""
    if r == 1:
        return _C1_PLUS * LAMBDA1 ** ell + _C1_MINUS * LAMBDA2 ** ell
    if r == 3:
        return _C3_PLUS * LAMBDA1 ** ell + _C3_MINUS * LAMBDA2 ** ell - 1.0
    raise ValueError("closed forms available for r in {1, 3}")


def bad_star_bounds(params):
    """(lower, upper) bounds on |S*(ell)| / r^2 from the bracket theorem.

    Requires 1 <= r <= q/4 (so the r = 3 system is valid at ell - ceil(s));
    when r is a power of two the bracket is r^2 S0^(1)(ell-s) <= |S*| <=
    r^2 S0^(3)(ell-s).
    """
    ell, r = params.ell, params.r
    if r > params.q // 4 or ell < 2:
        raise ValueError("bounds need ell >= 2 and 1 <= r <= q/4")
    if r & (r - 1) == 0:
        s = r.bit_length() - 1
        lo = s_counts_recursive(ell - s, 1)[0]
        hi = s_counts_recursive(ell - s, 3)[0]
        return lo, hi
    s_floor = int(math.floor(math.log2(r)))
    s_ceil = int(math.ceil(math.log2(r)))
    lo = s_counts_recursive(ell - s_floor, 1)[0] / 4
    hi = 4 * s_counts_recursive(ell - s_ceil, 3)[0]
    return lo, hi


def asymptotic_rate_defect_exponent():
    """The QLRS rate is 1 - Theta((q/r)^(mu - 2)) with mu = log2(2+sqrt 2)."""
    return MU - 2


# ---------------------------------------------------------------------------
# the code as a block code of length q^2

def evaluation_points(field):
    return list(itertools.product(field.elements(), repeat=2))


def _monomial_evaluations(field, monomials):
    rows = []
    for a, b in monomials:
        rows.append([field.mul(field.power(x, a), field.power(y, b))
                     for x, y in evaluation_points(field)])
    return rows


def evaluation_rank(params):
    """Rank of the good-monomial evaluation matrix (dimension cross-check)."""
    field = gf.field(2, params.ell, 1)
    rows = _monomial_evaluations(field, good_monomials(params))
    if not rows:
        return 0
    return gf.rank(field, rows)


def encode(params, coeffs):
    """Evaluate sum coeffs[(a,b)] x^a y^b at all points of F_q^2.

    Coefficient support must lie inside the good monomials.
    """
    field = gf.field(2, params.ell, 1)
    good = set(good_monomials(params))
    for mono in coeffs:
        if mono not in good:
            raise ValueError(f"monomial {mono} is not good for r={params.r}")
    word = [0] * params.q ** 2
    for (a, b), c in coeffs.items():
        if c:
            for idx, (x, y) in enumerate(evaluation_points(field)):
                term = field.mul(c, field.mul(field.power(x, a),
                                              field.power(y, b)))
                word[idx] = field.add(word[idx], term)
    return word


def distance_bounds(params):
    """(qr + 1, qr + q) bracket on the minimum Hamming distance."""
    return params.q * params.r + 1, params.q * params.r + params.q


def min_distance_bruteforce(params):
    """Enumerate the full code (guard: q^dimension manageable)."""
    field = gf.field(2, params.ell, 1)
    monos = good_monomials(params)
    k = len(monos)
    if field.order ** k > 1 << 24:
        raise ValueError("code too large to enumerate")
    rows = _monomial_evaluations(field, monos)
    best = None
    for msg in itertools.product(field.elements(), repeat=k):
        if not any(msg):
            continue
        word = [0] * params.q ** 2
        for c, row in zip(msg, rows):
            if c:
                for jdx, g in enumerate(row):
                    word[jdx] = field.add(word[jdx], field.mul(c, g))
        w = sum(1 for x in word if x)
        if best is None or w < best:
            best = w
    return best


# ---------------------------------------------------------------------------
# local recovery

def curves_through(field, point):
    """All q^2 quadratic curves through the point, as index lists.

    Curve (alpha, beta) maps x to alpha x^2 + beta x + gamma0 with gamma0
    fixed by the point; the list holds the q - 1 cell indices at x != x0
    in the row-major (x, y) indexing of evaluation_points.
    """
    x0, y0 = point
    q = field.order
    out = []
    for alpha in field.elements():
        for beta in field.elements():
            gamma0 = field.sub(y0, field.add(
                field.mul(alpha, field.mul(x0, x0)), field.mul(beta, x0)))
            cells = []
            for x in field.elements():
                if x == x0:
                    continue
                y = field.add(field.add(field.mul(alpha, field.mul(x, x)),
                                        field.mul(beta, x)), gamma0)
                cells.append(x * q + y)
            out.append(cells)
    return out


def local_recover(params, word, erased, position):
    """Recover word[position] using a curve with <= r - 1 other erasures.

    An RS erasure decode of the [q-1, q-r] restriction needs at least q - r
    known coordinates, i.e. tolerates r - 1 erasures among the other points.
    Returns the value or None when every curve is blocked.
    """
    field = gf.field(2, params.ell, 1)
    q = field.order
    x0, y0 = divmod(position, q)
    for cells in curves_through(field, (x0, y0)):
        known = [c for c in cells if c not in erased]
        if len(known) < q - params.r:
            continue
        xs = [c // q for c in known[:q - params.r]]
        vals = [word[c] for c in known[:q - params.r]]
        return _lagrange_eval(field, xs, vals, x0)
    return None


def _lagrange_eval(field, xs, vals, x0):
    acc = 0
    for i, xi in enumerate(xs):
        num = den = 1
        for j, xj in enumerate(xs):
            if i != j:
                num = field.mul(num, field.sub(x0, xj))
                den = field.mul(den, field.sub(xi, xj))
        acc = field.add(acc, field.mul(vals[i],
                                       field.mul(num, field.inv(den))))
    return acc


def lrs_fail_prob(q, r, tau):
    """Closed-form local-recovery failure probability of lifted RS codes."""
    inner = sum(math.comb(q - 1, i) * tau ** i * (1 - tau) ** (q - 1 - i)
                for i in range(r, q))
    return inner ** (q + 1)


def simulate_local(params, tau, trials, rng):
    """Fraction of trials in which an erased symbol has no usable curve."""
    field = gf.field(2, params.ell, 1)
    q = field.order
    target = 0
    curves = curves_through(field, (0, 0))
    failures = 0
    n = q * q
    for _ in range(trials):
        erased = {c for c in range(n) if c != target
                  and rng.random() < tau}
        erased.add(target)
        ok = False
        for cells in curves:
            hit = sum(1 for c in cells if c in erased)
            if hit <= params.r - 1:
                ok = True
                break
        if not ok:
            failures += 1
    return failures / trials
