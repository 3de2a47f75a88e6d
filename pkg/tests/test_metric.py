import itertools
import random

import pytest

from skewcodes import gf, metric

F4 = gf.field(2, 1, 2)
F16 = gf.field(2, 2, 2)
F9 = gf.field(3, 1, 2)


def test_zero_weight_every_metric():
    part = metric.OrderedPartition((2, 2))
    zero = [0, 0, 0, 0]
    assert metric.weight(F16, zero, metric.HAMMING) == 0
    assert metric.weight(F16, zero, metric.RANK) == 0
    assert metric.weight(F16, zero, metric.SUMRANK, part) == 0


def test_sumrank_with_unit_blocks_is_hamming():
    rng = random.Random(0)
    for _ in range(200):
        n = rng.randrange(1, 7)
        vec = [rng.randrange(F16.order) for _ in range(n)]
        part = metric.OrderedPartition((1,) * n)
        assert metric.weight(F16, vec, metric.SUMRANK, part) == \
            metric.weight(F16, vec, metric.HAMMING)


def test_weight_ordering_rank_sumrank_hamming():
    rng = random.Random(1)
    for _ in range(1000):
        n = rng.randrange(2, 8)
        vec = [rng.randrange(F9.order) for _ in range(n)]
        cuts = sorted(rng.sample(range(1, n), rng.randrange(0, n - 1)))
        parts = tuple(b - a for a, b in zip([0] + cuts, cuts + [n]))
        part = metric.OrderedPartition(parts)
        wr = metric.weight(F9, vec, metric.RANK)
        ws = metric.weight(F9, vec, metric.SUMRANK, part)
        wh = metric.weight(F9, vec, metric.HAMMING)
        assert wr <= ws <= wh


def test_partition_mismatch_raises():
    with pytest.raises(ValueError):
        metric.weight(F16, [1, 2, 3], metric.SUMRANK,
                      metric.OrderedPartition((2, 2)))


def test_min_distance_full_code():
    f4 = F4
    ident = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    assert metric.min_distance_bruteforce(f4, ident) == 1


def test_min_distance_grs_32_over_f4():
    # [3,2] GRS over F_4: generator from two rows of locator powers
    fld = F4
    locs = [1, fld.gamma, fld.mul(fld.gamma, fld.gamma)]
    gen = [[1, 1, 1], locs]
    assert metric.min_distance_bruteforce(fld, gen) == 2


def test_q_binomial_basics():
    assert metric.q_binomial(5, 0, 2) == 1
    assert metric.q_binomial(2, 1, 2) == 3
    # subspace count by brute force for F_2^3, dim 1: 7 lines
    assert metric.q_binomial(3, 1, 2) == 7


def test_rank_ball_tau1_enumerated():
    # 2x2 binary matrices of rank <= 1: 1 + [2 1]_2 (2^2 - 1) = 10
    assert metric.rank_ball(2, 2, 1, 2) == 10
    fld = gf.field(2, 1, 2)
    count = 0
    for vec in itertools.product(fld.elements(), repeat=2):
        if metric.weight(fld, list(vec), metric.RANK) <= 1:
            count += 1
    assert count == 10


def test_ball_monotone_and_full():
    part = metric.OrderedPartition((2, 1))
    prev = 0
    for r in range(4):
        b = metric.sumrank_ball(part, 2, r, 2)
        assert b >= prev
        prev = b
    assert metric.sumrank_ball(part, 2, 3, 2) == 2 ** (2 * 3)
    assert metric.hamming_ball(4, 4, 3) == 3 ** 4
    assert metric.rank_ball(2, 3, 2, 2) == 2 ** 6


def test_sumrank_ball_unit_blocks_matches_hamming():
    for n in range(1, 5):
        part = metric.OrderedPartition((1,) * n)
        for m in (1, 2, 3):
            for r in range(n + 1):
                assert metric.sumrank_ball(part, m, r, 2) == \
                    metric.hamming_ball(n, r, 2 ** m)


def test_sumrank_ball_exhaustive_small():
    fld = F9
    part = metric.OrderedPartition((2, 1))
    for r in range(4):
        count = sum(
            1 for vec in itertools.product(fld.elements(), repeat=3)
            if metric.weight(fld, list(vec), metric.SUMRANK, part) <= r)
        assert count == metric.sumrank_ball(part, 2, r, 3)


def test_classical_bounds_hamming():
    reports = {r.name: r.value for r in
               metric.classical_bounds(metric.HAMMING, 7, 3, 2)}
    assert reports["sphere_packing"] == 16          # perfect Hamming code
    assert reports["singleton"] == 2 ** 5
    reports_d1 = {r.name: r.value for r in
                  metric.classical_bounds(metric.HAMMING, 5, 1, 3)}
    assert reports_d1["singleton"] == 3 ** 5


def test_classical_bounds_sumrank_toy():
    part = metric.OrderedPartition((8, 7, 8))
    reports = {r.name: r.value for r in
               metric.classical_bounds(metric.SUMRANK, 23, 15, 4, 9, part)}
    # Singleton: k <= n - d + 1, i.e. 15 <= 23 - 9 + 1 holds for the toy code
    assert reports["singleton"] == 4 ** (9 * (23 - 15 + 1))
    assert 15 <= 23 - 9 + 1


def test_gv_le_max_size_le_sphere_packing_tiny():
    # exhaustive max code size for n <= 4, q = 2 in the Hamming metric
    import math as m
    for n in range(2, 5):
        for d in range(1, n + 1):
            words = list(itertools.product(range(2), repeat=n))
            best = 1
            # greedy-complete search over cliques is expensive; use the exact
            # search on the small space
            def extend(chosen, rest):
                nonlocal best
                best = max(best, len(chosen))
                for i, w in enumerate(rest):
                    if all(sum(a != b for a, b in zip(w, c)) >= d
                           for c in chosen):
                        extend(chosen + [w], rest[i + 1:])
            extend([words[0]], words[1:])
            reports = {r.name: r.value for r in
                       metric.classical_bounds(metric.HAMMING, n, d, 2)}
            assert reports["gilbert_varshamov"] <= best
            assert best <= reports["sphere_packing"]


def test_ball_guard():
    part = metric.OrderedPartition((3,) * 21)
    with pytest.raises(ValueError):
        metric.sumrank_ball(part, 2, 2, 2)


def test_bound_report_log10():
    r = metric.BoundReport(metric.HAMMING, "singleton",
                           metric.Fraction(10 ** 50))
    assert abs(r.log10 - 50.0) < 1e-9
