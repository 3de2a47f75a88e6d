"""Linearized Reed-Solomon codes: locators, generator matrix, encoding and
brute-force MSRD verification.

An LRS code evaluates skew polynomials of degree < k at the P-independent
locator set {a_l * beta_{l,t}^(q-1)} and scales column t of block l by
beta_{l,t}.  Entry (i, j) of the generator is N_i(a_l) * beta_{l,t}^(q^i).
"""

from dataclasses import dataclass, field as dc_field

from . import gf, metric, skew


@dataclass
class LrsSpec:
    field: object                 # F_{q^m}
    lengths: tuple                # block lengths n_1..n_ell, each <= m
    k: int
    representatives: list = None  # a_1..a_ell from distinct conjugacy classes
    multipliers: list = None      # per-block F_q-independent column multipliers
    ring: object = dc_field(default=None, repr=False)

    def __post_init__(self):
        fld = self.field
        self.ring = skew.SkewRing(fld)
        ell = len(self.lengths)
        if ell > fld.q - 1:
            raise ValueError("need ell <= q - 1 nonzero conjugacy classes")
        if any(nl > fld.m or nl < 1 for nl in self.lengths):
            raise ValueError("block lengths must satisfy 1 <= n_l <= m")
        if not 1 <= self.k <= self.n:
            raise ValueError("need 1 <= k <= n")
        if self.representatives is None:
            self.representatives = [fld.power(fld.gamma, l)
                                    for l in range(ell)]
        if self.multipliers is None:
            self.multipliers = default_multipliers(fld, self.lengths)
        if len(self.representatives) != ell:
            raise ValueError("one representative per block")
        if sum(len(b) for b in self.multipliers) != self.n:
            raise ValueError("multiplier blocks must match the lengths")
        reps = [self.ring.conjugacy_class(a) for a in self.representatives]
        if 0 in reps or len(set(reps)) != ell:
            raise ValueError("representatives must be nonzero and pairwise "
                             "sigma-distinct")
        for l, block in enumerate(self.multipliers):
            if gf.rank_q(fld, block) != len(block):
                raise ValueError(f"multipliers of block {l + 1} are "
                                 "F_q-linearly dependent")

    @property
    def ell(self):
        return len(self.lengths)

    @property
    def n(self):
        return sum(self.lengths)

    @property
    def partition(self):
        return metric.OrderedPartition(tuple(self.lengths))

    def flat_multipliers(self):
        return [b for block in self.multipliers for b in block]


def default_multipliers(fld, lengths):
    """Block l gets consecutive powers gamma^(l-1), ..., gamma^(l-1+n_l-1)."""
    return [[fld.power(fld.gamma, l + t) for t in range(nl)]
            for l, nl in enumerate(lengths)]


def default_spec(field, lengths, k):
    return LrsSpec(field, tuple(lengths), k)


def code_locators(spec):
    """The n locators a_l beta_{l,t}^(q-1); checked P-independent."""
    fld = spec.field
    locs = []
    for a, block in zip(spec.representatives, spec.multipliers):
        for b in block:
            locs.append(fld.mul(a, fld.power(b, fld.q - 1)))
    for l, block in enumerate(spec.multipliers):
        a = spec.representatives[l]
        part = [fld.mul(a, fld.power(b, fld.q - 1)) for b in block]
        if not skew.is_p_independent(spec.ring, part):
            raise ValueError(f"block {l + 1} locators are not P-independent")
    if not skew.is_p_independent(spec.ring, locs):
        raise ValueError("locator set is not P-independent")
    return locs


def generator_matrix(spec):
    """k x n generator; entry (i, t of block l) is N_i(a_l) beta_{l,t}^(q^i)."""
    fld = spec.field
    rows = []
    for i in range(spec.k):
        row = []
        for a, block in zip(spec.representatives, spec.multipliers):
            ni = spec.ring.truncated_norm(i, a)
            for b in block:
                row.append(fld.mul(ni, fld.frob(b, i)))
        rows.append(row)
    return gf.Matrix(fld, rows)


def encode(spec, message):
    """message * G; equals multiplier-scaled remainder evaluations."""
    if len(message) != spec.k:
        raise ValueError("message length must equal k")
    fld = spec.field
    gen = generator_matrix(spec).data
    word = [0] * spec.n
    for c, row in zip(message, gen):
        if c:
            for j, g in enumerate(row):
                if g:
                    word[j] = fld.add(word[j], fld.mul(c, g))
    return word


def encode_by_evaluation(spec, message):
    """Independent code path: b_j * f(alpha_j) for f = sum message_i X^i."""
    fld = spec.field
    f = spec.ring.poly(list(message))
    locs = code_locators(spec)
    mults = spec.flat_multipliers()
    return [fld.mul(b, f.evaluate(a)) for a, b in zip(locs, mults)]


def is_msrd(spec, partition=None):
    """Brute-force check that d_SR = n - k + 1 (guard q^(mk) <= 2^24)."""
    partition = partition or spec.partition
    gen = generator_matrix(spec).data
    d = metric.min_distance_bruteforce(spec.field, gen, metric.SUMRANK,
                                       partition)
    return d == spec.n - spec.k + 1
