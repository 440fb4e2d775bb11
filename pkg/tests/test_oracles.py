import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_unimodular
from lazkit.constructions import difference_set_catalog, generic_cubic, verify_difference_set
from lazkit.oracles import (lemma1_check, lemma4_check, lemma4_predicted, selftest, v_sum_bruteforce,
                            v_sum_closed, weil_check)


def test_v_sum_examples():
    assert abs(v_sum_bruteforce(9, 0, 0)) == pytest.approx(9)
    assert v_sum_closed(9, 0, 0) == 9
    assert abs(v_sum_bruteforce(9, 3, 6)) == pytest.approx(math.sqrt(27), abs=1e-9)
    assert v_sum_closed(9, 3, 6) == pytest.approx(math.sqrt(27))
    assert abs(v_sum_bruteforce(9, 3, 1)) <= 1e-9 and v_sum_closed(9, 3, 1) == 0


def test_v_sum_needs_odd_n():
    with pytest.raises(ValueError):
        v_sum_closed(8, 1, 1)


@given(st.integers(0, 40).map(lambda k: 2 * k + 1), st.integers(-100, 100), st.integers(-100, 100))
def test_v_sum_closed_form(n, x, y):
    assert abs(abs(v_sum_bruteforce(n, x, y)) - v_sum_closed(n, x, y)) <= 1e-9 * n


def test_zero_axis_all_ones_and_cubic():
    assert lemma1_check(np.ones(10)).max_off_axis <= 1e-12
    assert lemma1_check(generic_cubic(31, 1)).passed(31)


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 64), st.integers(0, 2**32 - 1))
def test_zero_axis_random(n, seed):
    assert lemma1_check(random_unimodular(np.random.default_rng(seed), n)).passed(n)


def test_zero_axis_rejects_non_unimodular():
    with pytest.raises(ValueError):
        lemma1_check(np.array([1, 2, 1]))


def test_diffset_class_values():
    assert lemma4_predicted(13, 4) == pytest.approx((13, 13 * math.sqrt(3) / 4, 3.25))
    assert lemma4_predicted(7, 3) == pytest.approx((7, 7 * math.sqrt(2) / 3, 7 / 3))


@pytest.mark.parametrize("ds", difference_set_catalog(), ids=lambda d: str(d.params))
def test_diffset_classes_catalog(ds):
    assert lemma4_check(ds)


def test_weil_examples():
    measured, ceiling = weil_check(7, [0, 1, 0, 1])
    assert measured <= ceiling and ceiling == pytest.approx(2 * math.sqrt(7))
    x = np.arange(7)
    assert measured == pytest.approx(abs(np.exp(2j * np.pi * (x ** 3 + x) / 7).sum()), abs=1e-12)
    assert weil_check(11, [3, 5]) == pytest.approx((0.0, 0.0), abs=1e-9)


def test_weil_rejects_bad_input():
    with pytest.raises(ValueError):
        weil_check(9, [0, 1])
    with pytest.raises(ValueError):
        weil_check(7, [1])


def test_cubic_cross_ceiling_p11():
    from lazkit.af import periodic_grid
    p = 11
    for a2 in range(2, p):
        m = periodic_grid(generic_cubic(p, 1), generic_cubic(p, a2, 3, 4)).mags
        assert m.max() <= 2 * math.sqrt(p) + 1e-9


def test_selftest_passes():
    results = selftest(3)
    assert len(results) == 4 and all(ok for _, ok in results)
