"""GRS codes, alternant (subfield) subcodes and MDS counting quantities.

A GRS code of designed distance d is the right kernel of H * diag(v) with
H[i][j] = alpha_j^i, i in [0, d-2].  Its F_q-subfield subcode is the kernel
of the coordinate-expanded parity-check matrix; the summed-cardinality
quantities B^MDS feed the interleaved-decoding bounds.
"""

import math
from dataclasses import dataclass

from . import gf


@dataclass
class GrsSpec:
    """GRS code descriptor over F_{q^m} = field; k = n - d + 1."""
    field: object
    locators: list
    multipliers: list
    d: int

    def __post_init__(self):
        n = len(self.locators)
        if len(set(self.locators)) != n or 0 in self.locators:
            raise ValueError("locators must be distinct and nonzero")
        if len(self.multipliers) != n or 0 in self.multipliers:
            raise ValueError("multipliers must be nonzero, one per locator")
        if not 1 <= self.d <= n:
            raise ValueError("need 1 <= d <= n")

    @property
    def n(self):
        return len(self.locators)

    @property
    def k(self):
        return self.n - self.d + 1


def default_spec(field, n, d, multipliers=None):
    """Spec with locators gamma^0..gamma^(n-1) and all-one multipliers."""
    locs = [field.power(field.gamma, i) for i in range(n)]
    return GrsSpec(field, locs, multipliers or [1] * n, d)


def parity_check(spec):
    """(d-1) x n matrix H * diag(v); empty for d = 1 (full code)."""
    fld = spec.field
    rows = []
    powers = [1] * spec.n
    for _ in range(spec.d - 1):
        rows.append([fld.mul(p, v)
                     for p, v in zip(powers, spec.multipliers)])
        powers = [fld.mul(p, a) for p, a in zip(powers, spec.locators)]
    return gf.Matrix(fld, rows)


def dual_multipliers(spec):
    """u with ker(H diag(v)) = {(u_j f(alpha_j))_j : deg f < k}.

    u_j = (v_j * prod_{l != j} (alpha_j - alpha_l))^{-1}.
    """
    fld = spec.field
    out = []
    for j, aj in enumerate(spec.locators):
        prod = spec.multipliers[j]
        for l, al in enumerate(spec.locators):
            if l != j:
                prod = fld.mul(prod, fld.sub(aj, al))
        out.append(fld.inv(prod))
    return out


def generator_matrix(spec):
    """k x n generator of ker(H diag(v)): row i is (u_j alpha_j^i)_j."""
    fld = spec.field
    rows = []
    powers = dual_multipliers(spec)
    for _ in range(spec.k):
        rows.append(list(powers))
        powers = [fld.mul(p, a) for p, a in zip(powers, spec.locators)]
    return gf.Matrix(fld, rows)


@dataclass
class AlternantCode:
    """F_q-subfield subcode of a GRS code, with an explicit F_q-basis."""
    parent: GrsSpec
    generator: list       # k_A x n over the base field (codes)

    @property
    def dimension(self):
        return len(self.generator)


def expanded_parity_check(spec):
    """The (d-1)m x n parity-check matrix over F_q."""
    fld = spec.field
    h = parity_check(spec).data
    rows = []
    for row in h:
        coords = [fld.coords(x) for x in row]
        for i in range(fld.m):
            rows.append([c[i] for c in coords])
    return rows


def subfield_subcode(spec):
    """Alternant code: basis of the F_q-kernel of the expanded parity check."""
    fld = spec.field
    expanded = expanded_parity_check(spec)
    if not expanded:
        base_gen = [[1 if i == j else 0 for j in range(spec.n)]
                    for i in range(spec.n)]
        return AlternantCode(spec, base_gen)
    kernel = gf.right_kernel(fld.base, expanded)
    return AlternantCode(spec, kernel)


def alternant_dimension_bounds(spec):
    """(lower, upper) from Lemma-style bounds: n - m(n-k) and min(k, kopt)."""
    from . import ilbounds
    n, k, m = spec.n, spec.k, spec.field.m
    lower = max(n - m * (n - k), 0)
    upper = min(k, ilbounds.kopt(spec.field.q, n, spec.d))
    return lower, upper


# ---------------------------------------------------------------------------
# MDS weight enumerators and summed subfield-subcode cardinalities

def mds_weight_enum(n, k, Q, w):
    """A_w for an [n, k] MDS code over an alphabet of size Q."""
    if w == 0:
        return 1
    d = n - k + 1
    if w < d or w > n:
        return 0
    total = 0
    for j in range(w - d + 1):
        term = math.comb(w, j) * (Q ** (w - d + 1 - j) - 1)
        total += -term if j % 2 else term
    return math.comb(n, w) * total


def b_mds(n, d, w, q, m):
    """B_{n,d,w} = A_w * (q^m-1)^(n-w) * (q-1)^w (w = 0 gives (q^m-1)^n)."""
    a_w = mds_weight_enum(n, n - d + 1, q ** m, w)
    return a_w * (q ** m - 1) ** (n - w) * (q - 1) ** w


def b_mds_total(n, d, q, m):
    """Sum of subfield-subcode cardinalities over all multiplier vectors."""
    return (q ** m - 1) ** n + sum(b_mds(n, d, w, q, m)
                                   for w in range(d, n + 1))
