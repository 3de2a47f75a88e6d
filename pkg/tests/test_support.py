import random

import pytest

from skewcodes import gf, lrs, metric, support

TOY = support.NetworkInstance(
    lengths=[1, 3, 2, 3],
    access=[{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}],
    t=2, rho=2, ell=3)


def toy_pattern():
    # rows grouped by message (1, 3, 2, 3), columns by source (6, 7, 2, 8)
    lengths = {frozenset({1, 2, 3}): 6, frozenset({1, 2, 4}): 7,
               frozenset({1, 3, 4}): 2, frozenset({2, 3, 4}): 8}
    return support.design_pattern(TOY, lengths)


def test_gm_check_empty_ok():
    pattern = support.ZeroPattern(5, [set(), set(), set()])
    assert support.gm_check(pattern) is None


def test_gm_check_duplicate_full_rows_violate():
    for k in (2, 3, 5):
        zeros = [set(range(1, k))] * 2 + [set()] * (k - 2)
        pattern = support.ZeroPattern(k + 2, zeros)
        assert support.gm_check(pattern) == [1, 2]


def test_gm_check_monotone():
    rng = random.Random(0)
    for _ in range(60):
        n, k = 8, 4
        zeros = [set(rng.sample(range(1, n + 1), rng.randrange(0, k)))
                 for _ in range(k)]
        pattern = support.ZeroPattern(n, zeros)
        if support.gm_check(pattern) is not None:
            grown = [set(z) | {rng.randrange(1, n + 1)} for z in zeros]
            assert support.gm_check(support.ZeroPattern(n, grown)) is not None


def test_gm_check_flow_matches_subset_oracle():
    rng = random.Random(99)
    for _ in range(150):
        n = rng.randrange(2, 8)
        k = rng.randrange(1, 6)
        zeros = [set(rng.sample(range(1, n + 1), rng.randrange(0, n + 1)))
                 for _ in range(k)]
        pattern = support.ZeroPattern(n, zeros)
        got = support.gm_check(pattern)
        want = support.gm_check_exhaustive(pattern)
        assert (got is None) == (want is None)
        if got is not None:
            inter = set(range(1, n + 1))
            for i in got:
                inter &= set(pattern.zeros[i - 1])
            assert len(inter) + len(got) > pattern.k


def test_ktilde_flow_matches_subset_maximum():
    rng = random.Random(98)
    import itertools as it
    for _ in range(80):
        n = rng.randrange(2, 7)
        k = rng.randrange(1, 5)
        zeros = [set(rng.sample(range(1, n + 1), rng.randrange(0, n + 1)))
                 for _ in range(k)]
        pattern = support.ZeroPattern(n, zeros)
        best = 0
        for size in range(1, k + 1):
            for omega in it.combinations(range(k), size):
                inter = set(range(1, n + 1))
                for i in omega:
                    inter &= set(zeros[i])
                best = max(best, len(inter) + size)
        assert support.ktilde(pattern) == best


def test_toy_pattern_satisfies_gm():
    pattern = toy_pattern()
    assert pattern.k == 9 and pattern.n == 23
    assert support.gm_check(pattern) is None
    assert support.ktilde(pattern) == 9


def test_ktilde_examples():
    ok = support.ZeroPattern(6, [{1}, {2}, {3}])
    assert support.ktilde(ok) == 3      # pattern satisfying GM: ktilde = k
    bad = support.ZeroPattern(6, [{1}, {1}])
    assert support.ktilde(bad) == 3     # Z_1 = Z_2 = {1}, k = 2 -> 3


def test_pad_pattern():
    n, k = 8, 4
    empty = support.ZeroPattern(n, [set() for _ in range(k)])
    padded = support.pad_pattern(empty)
    assert all(len(z) == k - 1 for z in padded.zeros)
    assert support.gm_check(padded) is None
    # already-full patterns are unchanged; padding never removes indices
    again = support.pad_pattern(padded)
    assert again.zeros == padded.zeros
    partial = support.ZeroPattern(n, [{1}, {2}, {3}, set()])
    grown = support.pad_pattern(partial)
    for old, new in zip(partial.zeros, grown.zeros):
        assert old <= new


def test_field_size_bound():
    assert support.field_size_bound(1, 4, (3, 2)) == 3     # k=1: max n_l
    assert support.field_size_bound(9, 4, (8, 7, 8)) == 9  # toy ell = 3
    assert support.field_size_bound(9, 2, (15,)) == 15     # toy ell = 1
    with pytest.raises(ValueError):
        support.field_size_bound(3, 3, (2, 2, 2))          # q <= ell


def test_constrained_generator_tiny():
    # k=2, Z_1={1}, Z_2={2}, [3,2] LRS over F_{3^2}
    fld = gf.field(3, 1, 2)
    spec = lrs.default_spec(fld, (2, 1), 2)
    pattern = support.ZeroPattern(3, [{1}, {2}])
    result = support.build_constrained_generator(spec, pattern,
                                                 random.Random(1))
    g = result.generator.data
    for i, row in enumerate(g):
        zeros = {j + 1 for j, x in enumerate(row) if x == 0}
        assert zeros == set(result.pattern.zeros[i])
        assert set(pattern.zeros[i]) <= zeros
    # T invertible and row spaces agree: <G> = <G_LRS>
    assert result.t_matrix.rank() == 2
    stacked = g + lrs.generator_matrix(result.spec).data
    assert gf.rank(fld, stacked) == 2


def test_constrained_generator_rejects_gm_violation():
    fld = gf.field(3, 1, 2)
    spec = lrs.default_spec(fld, (2, 1), 2)
    bad = support.ZeroPattern(3, [{1}, {1}])
    with pytest.raises(ValueError):
        support.build_constrained_generator(spec, bad)


def test_subcode_generator_distance():
    # Z_1 = Z_2 = {1} with k = 2 -> ktilde = 3; subcode distance
    # >= n - ktilde + 1, brute-forced on a tiny instance
    fld = gf.field(3, 1, 3)
    pattern = support.ZeroPattern(4, [{1}, {1}])
    kt = support.ktilde(pattern)
    assert kt == 3
    spec = lrs.default_spec(fld, (3, 1), kt)
    gen, _ = support.build_subcode_generator(pattern, spec, random.Random(2))
    for i, row in enumerate(gen.data):
        for j in pattern.zeros[i]:
            assert row[j - 1] == 0
    d = metric.min_distance_bruteforce(fld, gen.data, metric.SUMRANK,
                                       spec.partition)
    assert d >= pattern.n - kt + 1


def test_solver_matches_exhaustive_oracle():
    rng = random.Random(3)
    for _ in range(12):
        h = rng.randrange(2, 5)
        lengths = [rng.randrange(1, 3) for _ in range(h)]
        access = []
        for _ in range(rng.randrange(2, 4)):
            size = rng.randrange(1, h + 1)
            access.append(set(rng.sample(range(1, h + 1), size)))
        # ensure every message is covered so the instance is feasible
        for msg in range(1, h + 1):
            if not any(msg in a for a in access):
                access[rng.randrange(len(access))].add(msg)
        inst = support.NetworkInstance(lengths, access, t=1, rho=1,
                                       ell=rng.randrange(1, 3))
        _, n = support.solve_source_lengths(inst)
        assert n == support.exhaustive_min_total(inst)


def test_infeasible_reports_subset():
    inst = support.NetworkInstance([1, 1], [{1}], t=1, rho=0, ell=1)
    with pytest.raises(support.InfeasibleDesign) as err:
        support.solve_source_lengths(inst)
    assert 2 in err.value.subset


def test_split_blocks():
    assert support.split_blocks(23, 3) == (8, 7, 8)
    assert support.split_blocks(19, 2) == (10, 9)
    assert support.split_blocks(15, 1) == (15,)
    assert support.split_blocks(33, 1) == (33,)
    assert sum(support.split_blocks(43, 7)) == 43


def test_all_design_table_rows():
    # every printed row of both parameter tables: the toy access structure
    # for ell = 1..7 plus two alternative access structures for ell = 1..3
    toy_access = [{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}]
    pair_access = [{1, 2}, {1, 3}, {2, 4}, {3, 4}]
    single_access = [{1}, {2}, {3}, {4}]
    rows = [
        (toy_access, 1, (15, 9, 7, 2, 15)),
        (toy_access, 2, (19, 9, 11, 3, 10)),
        (toy_access, 3, (23, 9, 15, 4, 9)),
        (toy_access, 4, (27, 9, 19, 5, 9)),
        (toy_access, 5, (33, 11, 23, 7, 11)),
        (toy_access, 6, (38, 12, 27, 7, 12)),
        (toy_access, 7, (43, 13, 31, 8, 13)),
        (single_access, 1, (33, 27, 7, 2, 33)),
        (single_access, 2, (49, 39, 11, 3, 39)),
        (single_access, 3, (65, 51, 15, 4, 51)),
        (pair_access, 1, (17, 11, 7, 2, 17)),
        (pair_access, 2, (25, 15, 11, 3, 15)),
        (pair_access, 3, (33, 19, 15, 4, 19)),
    ]
    for access, ell, want in rows:
        inst = support.NetworkInstance([1, 3, 2, 3], access, t=2, rho=2,
                                       ell=ell)
        lengths, n = support.solve_source_lengths(inst)
        kt = support.design_ktilde(inst, lengths)
        d = 2 * ell * inst.t + inst.rho + 1
        q = gf.next_prime_power(ell + 1)
        m = support.field_size_bound(kt, q, support.split_blocks(n, ell))
        assert (n, kt, d, q, m) == want, (access, ell)


def test_toy_design_rows_ell_1_and_2():
    for ell, want_n, want_d, want_q, want_m in ((1, 15, 7, 2, 15),
                                                (2, 19, 11, 3, 10)):
        inst = support.NetworkInstance(TOY.lengths, TOY.access, TOY.t,
                                       TOY.rho, ell)
        lengths, n = support.solve_source_lengths(inst)
        assert n == want_n
        kt = support.design_ktilde(inst, lengths)
        assert kt == 9
        d = 2 * ell * inst.t + inst.rho + 1
        assert d == want_d
        blocks = support.split_blocks(n, ell)
        q = gf.next_prime_power(ell + 1)
        assert q == want_q
        assert support.field_size_bound(kt, q, blocks) == want_m


def test_lift_shapes_and_zero_blocks():
    fld = gf.field(2, 1, 3)
    blocks = [[0, 0], [0]]
    x = support.lift(fld, blocks)
    n, m = 3, 3
    assert x.nrows == n and x.ncols == n + m
    for i, row in enumerate(x.data):
        assert row[:n] == [1 if j == i else 0 for j in range(n)]
        assert all(v == 0 for v in row[n:])
    # nonzero payload appears for nonzero codewords
    y = support.lift(fld, [[fld.gamma, 1], [3]])
    assert any(any(v for v in row[n:]) for row in y.data)


def test_lift_error_sumrank_bound():
    # wt_SR of a rank <= t error is at most ell * t for any row partition
    rng = random.Random(4)
    base = gf.field(2, 1, 1)
    for _ in range(30):
        bign, m, t, ell = 6, 3, 2, 3
        a = [[rng.randrange(2) for _ in range(t)] for _ in range(bign)]
        b = [[rng.randrange(2) for _ in range(m)] for _ in range(t)]
        err = gf.mat_mul(base, a, b)    # rank <= t
        part = metric.OrderedPartition((2, 2, 2))
        total = 0
        start = 0
        for p in part.parts:
            total += gf.rank(base, err[start:start + p])
            start += p
        assert total <= ell * t
