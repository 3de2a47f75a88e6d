"""Support-constrained LRS generators and the distributed-LRS designer.

The GM condition |intersection of Z_i over Omega| + |Omega| <= k is checked
over deduplicated row groups: a violating Omega exists iff its full-group
closure violates, so searching the 2^(#distinct rows) closures is exact.
Constrained generators come from minimal skew polynomials (row i of T holds
the coefficients of f_{Z_i}); the designer solves the covering ILP of the
capacity and zero-constraint families exactly.
"""

import itertools
import random
from dataclasses import dataclass

from . import gf, lrs, skew


@dataclass
class ZeroPattern:
    n: int
    zeros: list               # zeros[i] is the set Z_{i+1} subset of [n]

    def __post_init__(self):
        self.zeros = [frozenset(z) for z in self.zeros]
        for z in self.zeros:
            if any(not 1 <= j <= self.n for j in z):
                raise ValueError("zero positions must lie in 1..n")

    @property
    def k(self):
        return len(self.zeros)

    def groups(self):
        """Distinct Z values with their row indices."""
        by_value = {}
        for i, z in enumerate(self.zeros):
            by_value.setdefault(z, []).append(i + 1)
        return list(by_value.items())


def _anchored_surplus(zeros, n, anchor):
    """min over row sets Omega containing the anchor of |union Y| - |Omega|,
    where Y_i = [n] \\ Z_i, via a min-cut (Dinic).

    The GM condition at dimension k is equivalent to every anchored surplus
    being >= n - k, and ktilde = n - min_i surplus_i.
    """
    nrows = len(zeros)
    src, snk = 0, nrows + n + 1
    inf = nrows + n + 10
    graph = [[] for _ in range(nrows + n + 2)]

    def arc(u, v, cap):
        graph[u].append([v, cap, len(graph[v])])
        graph[v].append([u, 0, len(graph[u]) - 1])

    for i in range(nrows):
        arc(src, 1 + i, inf if i == anchor else 1)
        for y in range(1, n + 1):
            if y not in zeros[i]:
                arc(1 + i, nrows + y, inf)
    for y in range(1, n + 1):
        arc(nrows + y, snk, 1)
    flow = _dinic(graph, src, snk, inf)
    omega = _source_side_rows(graph, src, nrows)
    return flow - nrows, omega


def _dinic(graph, src, snk, inf):
    flow = 0
    while True:
        level = {src: 0}
        queue = [src]
        for u in queue:
            for v, cap, _ in graph[u]:
                if cap > 0 and v not in level:
                    level[v] = level[u] + 1
                    queue.append(v)
        if snk not in level:
            return flow
        it = [0] * len(graph)

        def push(u, limit):
            if u == snk:
                return limit
            while it[u] < len(graph[u]):
                edge = graph[u][it[u]]
                v, cap, rev = edge
                if cap > 0 and level.get(v, -1) == level[u] + 1:
                    got = push(v, min(limit, cap))
                    if got:
                        edge[1] -= got
                        graph[v][rev][1] += got
                        return got
                it[u] += 1
            return 0

        while True:
            got = push(src, inf)
            if not got:
                break
            flow += got


def _source_side_rows(graph, src, nrows):
    seen = {src}
    queue = [src]
    for u in queue:
        for v, cap, _ in graph[u]:
            if cap > 0 and v not in seen:
                seen.add(v)
                queue.append(v)
    return sorted(u for u in seen if 1 <= u <= nrows)


def gm_check(pattern, k=None):
    """GM condition at dimension k; returns None or a violating row set."""
    k = pattern.k if k is None else k
    for i in range(pattern.k):
        surplus, omega = _anchored_surplus(pattern.zeros, pattern.n, i)
        if surplus < pattern.n - k:
            return omega
    return None


def ktilde(pattern):
    """max over nonempty Omega of |intersection| + |Omega|."""
    best = 0
    for i in range(pattern.k):
        surplus, _ = _anchored_surplus(pattern.zeros, pattern.n, i)
        best = max(best, pattern.n - surplus)
    return best


def gm_check_exhaustive(pattern, k=None):
    """Subset-enumeration oracle over deduplicated row groups (tests only)."""
    k = pattern.k if k is None else k
    groups = pattern.groups()
    full = frozenset(range(1, pattern.n + 1))
    for size in range(1, len(groups) + 1):
        for subset in itertools.combinations(range(len(groups)), size):
            inter = full
            rows = []
            for gi in subset:
                inter = inter & groups[gi][0]
                rows.extend(groups[gi][1])
            if len(inter) + len(rows) > k:
                return sorted(rows)
    return None


def pad_pattern(pattern, k=None):
    """Grow every Z_i to size k-1 while keeping the GM condition intact.

    Greedy with a per-element feasibility recheck; since only Z_i changes,
    it suffices to recheck the surplus anchored at row i.
    """
    k = pattern.k if k is None else k
    if gm_check(pattern, k) is not None:
        raise ValueError("pattern violates the GM condition")
    zeros = [set(z) for z in pattern.zeros]
    n = pattern.n
    for i in range(len(zeros)):
        for j in range(1, n + 1):
            if len(zeros[i]) >= k - 1:
                break
            if j in zeros[i]:
                continue
            zeros[i].add(j)
            surplus, _ = _anchored_surplus(zeros, n, i)
            if surplus < n - k:
                zeros[i].discard(j)
        if len(zeros[i]) != k - 1:
            raise ValueError(f"could not pad row {i + 1} to size {k - 1}")
    return ZeroPattern(pattern.n, zeros)


def field_size_bound(k, q, lengths):
    """Minimal extension degree m for a k-dimensional design: max(k, n_l).

    This is the value the dissertation's tables use.  The theorem's
    sufficient value max(k - 1 + log_q(k), n_l) is usually larger; see
    sufficient_extension_degree.
    """
    ell = len(lengths)
    if q <= ell:
        raise ValueError("need q >= ell + 1 for distinct conjugacy classes")
    return max(k, max(lengths))


def sufficient_extension_degree(k, q, lengths):
    """Smallest integer m with m >= max(k - 1 + log_q k, n_l) (theorem form)."""
    ell = len(lengths)
    if q <= ell:
        raise ValueError("need q >= ell + 1 for distinct conjugacy classes")
    m = max(k - 1, max(lengths))
    while q ** (m - k + 1) < k:
        m += 1
    return m


@dataclass
class ConstrainedResult:
    t_matrix: gf.Matrix        # k x k transform, rows = minpoly coefficients
    generator: gf.Matrix       # G = T * G_LRS with the prescribed zeros
    spec: lrs.LrsSpec
    pattern: ZeroPattern       # the padded pattern actually realized
    attempts: int


def _root_sets(spec, pattern):
    locs = lrs.code_locators(spec)
    return [[locs[j - 1] for j in sorted(z)] for z in pattern.zeros]


def _try_build(spec, padded):
    fld = spec.field
    ring = spec.ring
    k = padded.k
    t_rows = []
    for roots in _root_sets(spec, padded):
        if roots:
            f = skew.minimal_polynomial(ring, roots)
        else:
            f = ring.one()
        coeffs = f.coeffs + [0] * (k - len(f.coeffs))
        t_rows.append(coeffs)
    if gf.rank(fld, t_rows) != k:
        return None
    g = gf.mat_mul(fld, t_rows, lrs.generator_matrix(spec).data)
    return gf.Matrix(fld, t_rows), gf.Matrix(fld, g)


def _resample_multipliers(spec, rng):
    fld = spec.field
    blocks = []
    for nl in spec.lengths:
        while True:
            cand = [fld.random_nonzero(rng) for _ in range(nl)]
            if gf.rank_q(fld, cand) == nl:
                blocks.append(cand)
                break
    return lrs.LrsSpec(fld, spec.lengths, spec.k,
                       representatives=list(spec.representatives),
                       multipliers=blocks)


def build_constrained_generator(spec, pattern, rng=None, max_resamples=64):
    """Full-rank T and G = T * G_LRS with zeros exactly at the padded pattern.

    Multipliers are resampled (fresh per-block independent tuples) whenever
    T comes out singular; the Nullstellensatz argument keeps the success
    probability bounded away from zero at valid field sizes.
    """
    rng = rng or random.Random(0)
    if pattern.k != spec.k:
        raise ValueError("pattern must have k rows")
    violation = gm_check(pattern)
    if violation is not None:
        raise ValueError(f"GM condition violated by rows {violation}")
    need_m = field_size_bound(spec.k, spec.field.q, spec.lengths)
    if spec.field.m < need_m:
        raise ValueError(f"field too small: need extension degree {need_m}")
    padded = pad_pattern(pattern)
    attempt_spec = spec
    for attempt in range(1, max_resamples + 1):
        built = _try_build(attempt_spec, padded)
        if built is not None:
            t_mat, g = built
            _assert_zero_placement(g, padded)
            return ConstrainedResult(t_mat, g, attempt_spec, padded, attempt)
        attempt_spec = _resample_multipliers(spec, rng)
    raise RuntimeError(f"transform still singular after {max_resamples} "
                       "multiplier resamples")


def _assert_zero_placement(g, pattern):
    for i, row in enumerate(g.data):
        zeros = {j + 1 for j, x in enumerate(row) if x == 0}
        if zeros != set(pattern.zeros[i]):
            raise AssertionError(
                f"row {i + 1} zeros {sorted(zeros)} differ from the "
                f"prescribed {sorted(pattern.zeros[i])}")


def build_subcode_generator(pattern, spec, rng=None, max_resamples=64):
    """First k rows of the [n, ktilde] constrained generator.

    Pads the pattern with empty rows Z_{k+1..ktilde}; the resulting code has
    sum-rank distance >= n - ktilde + 1.
    """
    kt = ktilde(pattern)
    if spec.k != kt:
        raise ValueError(f"spec dimension must be ktilde = {kt}")
    extended = ZeroPattern(pattern.n,
                           list(pattern.zeros)
                           + [frozenset()] * (kt - pattern.k))
    result = build_constrained_generator(spec, extended, rng, max_resamples)
    sub = gf.Matrix(spec.field, result.generator.data[:pattern.k])
    return sub, result


# ---------------------------------------------------------------------------
# distributed multi-source designs

@dataclass
class NetworkInstance:
    lengths: list              # message lengths r_1..r_h
    access: list               # access sets J_1..J_s, subsets of [h]
    t: int
    rho: int
    ell: int

    def __post_init__(self):
        self.access = [frozenset(j) for j in self.access]
        h = self.h
        if h > 12:
            raise ValueError("designer guard: h <= 12")
        for j in self.access:
            if not j or any(not 1 <= i <= h for i in j):
                raise ValueError("access sets must be nonempty subsets of [h]")

    @property
    def h(self):
        return len(self.lengths)

    @property
    def s(self):
        return len(self.access)


@dataclass
class DesignResult:
    instance: NetworkInstance
    source_lengths: dict       # J -> n_J
    n: int
    ktilde: int
    d: int
    q: int
    m: int
    block_lengths: tuple
    pattern: ZeroPattern
    spec: lrs.LrsSpec
    t_matrix: gf.Matrix
    generator: gf.Matrix


class InfeasibleDesign(ValueError):
    def __init__(self, subset, msg):
        super().__init__(msg)
        self.subset = subset


def _covering_rows(instance):
    """Both constraint families as (covering index set, rhs, tag, Omega)."""
    h, ell, t, rho = instance.h, instance.ell, instance.t, instance.rho
    rows = []
    for size in range(1, h + 1):
        for omega in itertools.combinations(range(1, h + 1), size):
            oset = frozenset(omega)
            touch = [i for i, j in enumerate(instance.access) if j & oset]
            r_sum = sum(instance.lengths[i - 1] for i in omega)
            rows.append((tuple(touch), r_sum + 2 * t + rho, "capacity", oset))
            rows.append((tuple(touch), r_sum + 2 * ell * t + rho, "zero",
                         oset))
    return rows


def solve_source_lengths(instance):
    """Exact ILP by branch and bound: minimize sum n_J subject to both
    constraint families.  Any optimal point is accepted (non-unique optima
    are fine); every n_J in an optimum is at most the largest RHS.
    """
    rows = _covering_rows(instance)
    for touch, rhs, tag, omega in rows:
        if not touch and rhs > 0:
            raise InfeasibleDesign(
                omega, f"{tag} constraint for messages {sorted(omega)} "
                "cannot be met: no source covers them")
    s = instance.s
    cap = max(rhs for _, rhs, _, _ in rows)
    touches = [r[0] for r in rows]
    rhss = [r[1] for r in rows]
    last_var = [max(t) for t in touches]
    rows_of = [[ri for ri, t in enumerate(touches) if i in t]
               for i in range(s)]
    deficits = list(rhss)
    best = [None, s * cap + 1]
    assign = [0] * s

    def dfs(idx, total):
        need = 0
        for ri, d in enumerate(deficits):
            if d > 0:
                if last_var[ri] < idx:
                    return          # dead: no future variable can help
                if d > need:
                    need = d
        if total + need >= best[1]:
            return
        if idx == s:
            best[0] = list(assign)
            best[1] = total
            return
        for val in range(min(cap, best[1] - 1 - total), -1, -1):
            assign[idx] = val
            for ri in rows_of[idx]:
                deficits[ri] -= val
            dfs(idx + 1, total + val)
            for ri in rows_of[idx]:
                deficits[ri] += val
        assign[idx] = 0

    dfs(0, 0)
    if best[0] is None:
        raise InfeasibleDesign(frozenset(), "no feasible assignment found")
    return {instance.access[i]: best[0][i] for i in range(s)}, best[1]


def exhaustive_min_total(instance):
    """Oracle: smallest feasible total by direct enumeration (h <= 5)."""
    if instance.h > 5:
        raise ValueError("oracle limited to h <= 5")
    rows = _covering_rows(instance)
    s = instance.s
    cap = max(rhs for _, rhs, _, _ in rows)
    for total in range(0, s * cap + 1):
        for comp in _compositions(total, s):
            ok = all(sum(comp[i] for i in touch) >= rhs
                     for touch, rhs, _, _ in rows)
            if ok:
                return total
    return None


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def split_blocks(n, ell):
    """Near-equal split; extra symbols go to the ends, alternating inward."""
    base, extra = divmod(n, ell)
    sizes = [base] * ell
    lo, hi = 0, ell - 1
    at_front = True
    for _ in range(extra):
        if at_front:
            sizes[lo] += 1
            lo += 1
        else:
            sizes[hi] += 1
            hi -= 1
        at_front = not at_front
    return tuple(sizes)


def design_ktilde(instance, source_lengths):
    """ktilde = max over Omega of (sum n_J over J disjoint from Omega) + r."""
    h = instance.h
    best = 0
    for size in range(1, h + 1):
        for omega in itertools.combinations(range(1, h + 1), size):
            oset = frozenset(omega)
            disjoint = sum(nj for j, nj in source_lengths.items()
                           if not j & oset)
            best = max(best, disjoint + sum(instance.lengths[i - 1]
                                            for i in omega))
    return best


def design_pattern(instance, source_lengths):
    """Zero pattern of the k x n encoding matrix (rows by message, columns
    by source, in the access-list order)."""
    col = 1
    col_ranges = {}
    for j in instance.access:
        nj = source_lengths[j]
        col_ranges[j] = range(col, col + nj)
        col += nj
    n = col - 1
    zeros = []
    for msg in range(1, instance.h + 1):
        for _ in range(instance.lengths[msg - 1]):
            z = set()
            for j in instance.access:
                if msg not in j:
                    z.update(col_ranges[j])
            zeros.append(z)
    return ZeroPattern(n, zeros)


def distributed_design(instance, rng=None, max_resamples=64):
    """Designs and constructs a distributed LRS code for the instance."""
    source_lengths, n = solve_source_lengths(instance)
    kt = design_ktilde(instance, source_lengths)
    d = 2 * instance.ell * instance.t + instance.rho + 1
    blocks = split_blocks(n, instance.ell)
    q = gf.next_prime_power(instance.ell + 1)
    m = field_size_bound(kt, q, blocks)
    p, e = gf.prime_power(q)
    fld = gf.field(p, e, m)
    pattern = design_pattern(instance, source_lengths)
    spec = lrs.default_spec(fld, blocks, kt)
    generator, result = build_subcode_generator(pattern, spec, rng,
                                                max_resamples)
    return DesignResult(instance, source_lengths, n, kt, d, q, m, blocks,
                        pattern, result.spec, result.t_matrix, generator)


# ---------------------------------------------------------------------------
# lifting

def lift(field, codeword_blocks):
    """X = [block-diagonal identities | stacked expanded-block transposes].

    codeword_blocks is a list of F_{q^m}-vectors c_J; the result is the
    n x (n + m) matrix over F_q whose rows are the transmitted packets.
    """
    base = field.base
    m = field.m
    sizes = [len(c) for c in codeword_blocks]
    n = sum(sizes)
    rows = []
    offset = 0
    for c in codeword_blocks:
        expanded = gf.expand_matrix(field, c)   # m x n_J over F_q
        for t in range(len(c)):
            row = [0] * n + [expanded[i][t] for i in range(m)]
            row[offset + t] = 1
            rows.append(row)
        offset += len(c)
    return gf.Matrix(base, rows)
