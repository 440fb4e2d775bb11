import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import brute_aperiodic_af, brute_periodic_af, random_unimodular
from lazkit.af import (aperiodic_af, aperiodic_grid, aperiodic_grid_naive, correlation, dft, f_pi,
                       family_grid, frequency_domain_af, idft, periodic_af, periodic_grid,
                       periodic_grid_naive, theta_stats)
from lazkit.constructions import (example5_sequence, generic_cubic, quadratic_family,
                                  scs_from_difference_set, verify_difference_set)
from lazkit.seqcore import AmbiguityGrid, PolyphaseSequence, SequenceFamily, Zone, make_polyphase

SQ31 = math.sqrt(31)


@pytest.fixture(scope="module")
def ex1():
    return quadratic_family(32, 2, 2)


@pytest.fixture(scope="module")
def ex3():
    return scs_from_difference_set(verify_difference_set(13, [4, 5, 8, 10]))


# point evaluation

def test_auto_origin_is_n(rng):
    s = random_unimodular(rng, 11)
    assert abs(periodic_af(s, s, 0, 0) - 11) <= 1e-12
    assert abs(aperiodic_af(s, s, 0, 0) - 11) <= 1e-12


def test_quadratic_peak_on_its_line(ex1):
    u = ex1[0]
    assert abs(abs(periodic_af(u, u, 1, 4)) - 32) <= 1e-9
    assert abs(periodic_af(u, u, 1, 3)) <= 1e-9


def test_cubic_off_origin_magnitude():
    u = generic_cubic(31, 1)
    assert abs(abs(periodic_af(u, u, 1, 0)) - SQ31) <= 1e-9


def test_point_matches_brute_force(rng):
    a, b = random_unimodular(rng, 9), random_unimodular(rng, 9)
    av, bv = a.values.tolist(), b.values.tolist()
    for tau, nu in [(0, 0), (3, -2), (-4, 7), (8, 8)]:
        assert abs(periodic_af(a, b, tau, nu) - brute_periodic_af(av, bv, tau, nu)) <= 1e-10
        assert abs(aperiodic_af(a, b, tau, nu) - brute_aperiodic_af(av, bv, tau, nu)) <= 1e-10


def test_aperiodic_outside_support_is_zero(rng):
    s = random_unimodular(rng, 6)
    assert aperiodic_af(s, s, 6, 0) == 0
    assert aperiodic_af(s, s, -9, 2) == 0


def test_example5_aperiodic_point():
    chips = example5_sequence().values.real.tolist()
    want = sum(chips[t] * chips[t + 1] * complex(math.cos(2 * math.pi * t / 128),
                                                  math.sin(2 * math.pi * t / 128)) for t in range(127))
    assert abs(aperiodic_af(example5_sequence(), example5_sequence(), 1, 1) - want) <= 1e-9


def test_period_mismatch():
    with pytest.raises(ValueError, match="period"):
        periodic_af(np.ones(3), np.ones(4), 0, 0)


def test_correlation_is_zero_doppler_slice(ex3):
    c = ex3.sequence
    for tau in range(1, 13):
        assert abs(abs(correlation(c, c, tau)) - 13 * math.sqrt(3) / 4) <= 1e-9


# grids

def test_example1_grid_lines(ex1):
    u = ex1[0]
    block = periodic_grid(u, u).block
    taus, nus = np.nonzero(block > 1e-6)
    assert np.all((nus - 4 * taus) % 32 == 0)
    assert np.allclose(block[taus, nus], 32, atol=1e-7)
    assert len(taus) == 32


def test_example3_magnitude_classes(ex3):
    mags = periodic_grid(ex3.sequence, ex3.sequence).mags.ravel()
    classes = np.array([13, 13 * math.sqrt(3) / 4, 13 / 4])
    assert np.min(np.abs(mags[:, None] - classes), axis=1).max() <= 1e-7


def test_all_ones_aperiodic_triangle():
    g = aperiodic_grid(np.ones(4), np.ones(4))
    row = [g.at(t, 0) for t in range(-3, 4)]
    np.testing.assert_allclose(row, [1, 2, 3, 4, 3, 2, 1], atol=1e-12)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 24), st.integers(0, 2**32 - 1))
def test_fast_grids_match_naive(n, seed):
    r = np.random.default_rng(seed)
    a = r.normal(size=n) + 1j * r.normal(size=n)
    b = np.exp(2j * np.pi * r.random(n))
    np.testing.assert_allclose(periodic_grid(a, b).mags, periodic_grid_naive(a, b).mags, atol=1e-8)
    np.testing.assert_allclose(aperiodic_grid(a, b).mags, aperiodic_grid_naive(a, b).mags, atol=1e-8)


def test_naive_grid_matches_brute_force(rng):
    n = 8
    a = rng.choice([-1.0, 1.0], size=n).astype(complex)
    b = rng.choice([-1.0, 1.0], size=n).astype(complex)
    g = aperiodic_grid_naive(a, b)
    p = periodic_grid_naive(a, b)
    for tau in range(-(n - 1), n):
        for nu in range(-(n - 1), n):
            assert abs(g.at(tau, nu) - abs(brute_aperiodic_af(a.tolist(), b.tolist(), tau, nu))) <= 1e-10
            assert abs(p.at(tau, nu) - abs(brute_periodic_af(a.tolist(), b.tolist(), tau, nu))) <= 1e-10


def test_grid_method_switch(rng):
    s = random_unimodular(rng, 10)
    np.testing.assert_allclose(periodic_grid(s, s, method="naive").mags, periodic_grid(s, s).mags, atol=1e-10)
    with pytest.raises(ValueError):
        periodic_grid(s, s, method="bogus")


def test_grid_shape_and_range(rng):
    s = random_unimodular(rng, 7)
    for g in (periodic_grid(s, s), aperiodic_grid(s, s)):
        assert g.mags.shape == (13, 13)
        assert g.mags.min() >= 0 and g.mags.max() <= 7 + 1e-6


def test_conjugate_symmetry(rng):
    a, b = random_unimodular(rng, 12), random_unimodular(rng, 12)
    for grid in (periodic_grid, aperiodic_grid):
        gab, gba = grid(a, b).mags, grid(b, a).mags
        # |AF_ab(tau, nu)| = |AF_ba(-tau, -nu)|
        np.testing.assert_allclose(gab, gba[::-1, ::-1], atol=1e-9)


def test_thread_count_does_not_change_results(rng, monkeypatch):
    a, b = random_unimodular(rng, 64), random_unimodular(rng, 64)
    monkeypatch.setenv("LAZ_KIT_THREADS", "1")
    one = periodic_grid(a, b).mags
    monkeypatch.setenv("LAZ_KIT_THREADS", "4")
    four = periodic_grid(a, b).mags
    np.testing.assert_array_equal(one, four)


# transforms

def test_dft_of_all_ones():
    np.testing.assert_allclose(dft(np.ones(9)), [3] + [0] * 8, atol=1e-12)


def test_idft_example3_energy(ex3):
    assert abs(np.sum(np.abs(idft(ex3.freq)) ** 2) - 13) <= 1e-10


def test_transform_roundtrip(rng):
    x = rng.normal(size=64) + 1j * rng.normal(size=64)
    np.testing.assert_allclose(idft(dft(x)), x, atol=1e-10)


def test_frequency_domain_af_matches_time_domain(rng):
    a, b = random_unimodular(rng, 16), random_unimodular(rng, 16)
    A, B = dft(a), dft(b)
    for tau in range(16):
        for nu in range(16):
            assert abs(frequency_domain_af(A, B, tau, nu) - periodic_af(a, b, tau, nu)) <= 1e-9


def test_frequency_domain_examples(ex3):
    assert abs(frequency_domain_af(dft(np.ones(5)), dft(np.ones(5)), 0, 0) - 5) <= 1e-12
    assert abs(abs(frequency_domain_af(ex3.freq, ex3.freq, 1, 0)) - 13 * math.sqrt(3) / 4) <= 1e-9


# family statistics

def test_theta_single_cubic():
    st_ = theta_stats(SequenceFamily([generic_cubic(31, 1)]))
    assert abs(st_.theta_a - SQ31) <= 1e-9
    assert st_.theta_c == 0
    assert abs(st_.theta_max - SQ31) <= 1e-9


def test_theta_example1(ex1):
    assert abs(theta_stats(ex1).theta_max - 32) <= 1e-9


def test_theta_all_ones():
    assert abs(theta_stats(SequenceFamily([PolyphaseSequence(np.ones(6))])).theta_a - 6) <= 1e-12


def test_theta_matches_pairwise_scan(rng):
    fam = SequenceFamily([random_unimodular(rng, 10) for _ in range(3)])
    auto = max(np.delete(periodic_grid(s, s).block.ravel(), 0).max() for s in fam)  # drop (0, 0)
    cross = max(periodic_grid(fam[i], fam[j]).mags.max() for i in range(3) for j in range(3) if i != j)
    stats = theta_stats(fam)
    assert abs(stats.theta_a - auto) <= 1e-12 and abs(stats.theta_c - cross) <= 1e-12


def test_f_pi_examples(ex1):
    assert f_pi(ex1, Zone(4, 4)) <= 1e-9
    pair = SequenceFamily([generic_cubic(31, 1, 0, 0), generic_cubic(31, 1, 0, 15)])
    assert abs(f_pi(pair, Zone(31, 15)) - SQ31) <= 1e-9
    assert f_pi(ex1, Zone(1, 1)) <= 1e-9


def test_family_grid_zeroes_only_auto_origin(ex1):
    g = family_grid(ex1)
    assert g.at(0, 0) <= 1e-9  # cross origins are zero too for this family
    assert abs(g.at(0, 16) - 32) <= 1e-9  # cross peak on nu = 4 tau - 16


# serialization formats

def test_grid_json_and_csv(ex1):
    g = periodic_grid(ex1[0], ex1[1])
    obj = json.loads(json.dumps(g.to_json()))
    assert obj["n"] == 32 and obj["kind"] == "periodic"
    back = AmbiguityGrid.from_json(obj)
    np.testing.assert_array_equal(back.mags, g.mags)
    rows = g.to_csv().strip().splitlines()
    assert len(rows) == 1 + 63 * 63
    tau, nu, mag = rows[1 + 63 * 31 + 31].split(",")
    assert (tau, nu) == ("0", "0") and float(mag) == g.at(0, 0)
