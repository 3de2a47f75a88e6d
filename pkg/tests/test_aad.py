import random

import pytest

from skewcodes import aad, gf


def test_construct_family_sizes():
    fam = aad.construct(4, 1, 5)
    assert fam.size == 5 ** 2
    fam2 = aad.construct(5, 2, 11)
    assert fam2.size == 11 ** 1


def test_subspace_dimension_exact():
    fam = aad.construct(5, 2, 11)
    for gen in fam.generators:
        assert gf.rank(fam.field, gen) == 2
        # first k coordinates are unit rows
        for t, row in enumerate(gen):
            assert row[:2] == [1 if i == t else 0 for i in range(2)]


def test_spread_5_2_11():
    fam = aad.construct(5, 2, 11)
    assert aad.verify_spread(fam)


def test_spread_various_windows():
    for n, k, q in ((4, 1, 5), (5, 1, 7), (3, 1, 4), (5, 2, 11), (6, 2, 13)):
        fam = aad.construct(n, k, q)
        assert fam.size == q ** (n - 2 * k)
        assert aad.verify_spread(fam)


def test_identical_subspaces_not_spread():
    fam = aad.construct(4, 1, 5)
    fake = aad.AadFamily(fam.field, 4, 1,
                         [fam.generators[0], fam.generators[0]])
    assert not aad.verify_spread(fake)


def test_aad_exhaustive_4_1_5():
    fam = aad.construct(4, 1, 5)
    assert aad.verify_aad(fam, aad.guaranteed_l(4, 1))
    assert aad.guaranteed_l(4, 1) == 3


def test_sampled_mode_agrees():
    fam = aad.construct(5, 1, 7)
    rng = random.Random(0)
    assert aad.verify_aad(fam, aad.guaranteed_l(5, 1), mode="sample",
                          samples=200, rng=rng)


def test_negative_control_random_family_can_violate_small_l():
    # a spread that is not the construction can exceed a tiny L
    field = gf.field(5, 1, 1)
    gens = [[[1, 0, x, y]] for x in range(5) for y in range(5)]
    fam = aad.AadFamily(field, 4, 1, gens)
    assert aad.verify_spread(fam)
    assert not aad.verify_aad(fam, 1)


def test_construction_size_vs_upper_bound_grid():
    points = 0
    for n, k in ((4, 1), (5, 1), (6, 1), (7, 1), (5, 2), (6, 2), (7, 2),
                 (8, 2), (9, 2), (10, 2)):
        q = gf.next_prime_power(n * k)
        upper, _ = aad.bounds(n, k, aad.guaranteed_l(n, k), q)
        assert q ** (n - 2 * k) <= upper
        points += 1
    assert points == 10


def test_upper_bound_l_zero_and_monotone():
    upper0, _ = aad.bounds(5, 1, 0, 7)
    assert upper0 == 1
    prev = upper0
    for l_bound in range(1, 6):
        upper, _ = aad.bounds(5, 1, l_bound, 7)
        assert upper > prev
        prev = upper


def test_parameter_windows():
    with pytest.raises(ValueError):
        aad.construct(4, 2, 11)      # n <= 2k
    with pytest.raises(ValueError):
        aad.construct(5, 2, 7)       # q < nk
    with pytest.raises(ValueError):
        aad.construct(7, 3, 23)      # k >= 3 not constructed
    with pytest.raises(ValueError):
        aad.verify_aad(aad.construct(5, 2, 31), 5)  # 31^5 > 2^22 guard
