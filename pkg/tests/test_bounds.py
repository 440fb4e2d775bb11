import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from lazkit.af import f_pi, theta_stats
from lazkit.bounds import (BoundValue, Certificate, aperiodic_laz_bound, certify, ding_af_bound,
                           global_af_bound, laz_bound_unimodular, sarwate_af_deficit,
                           sarwate_tradeoff_deficit, scs_correlation_bound, scs_global_bounds,
                           scs_laz_bound, scs_lcz_bound, welch_bound, zaz_capacity)
from lazkit.constructions import (cubic_family, generic_cubic, quadratic_family,
                                  scs_from_difference_set, verify_difference_set)
from lazkit.seqcore import SequenceFamily, Zone

# the closed forms typed out a second time, as plain arithmetic


def welch_ref(n, m):
    return n * math.sqrt((m - 1) / (n * m - 1))


def laz_ref(n, m, zx, zy):
    return n / math.sqrt(zy) * math.sqrt(max(0.0, (m * zx * zy / n - 1) / (m * zx - 1)))


def ap_ref(n, m, zx, zy):
    num = n * n * (m * zx * zy - n - zx + 1)
    return math.sqrt(max(0.0, num / ((n + zx - 1) * (m * zx - 1) * zy)))


def test_welch_values():
    assert welch_bound(31, 1).value == 0
    assert welch_bound(31, 31).value == pytest.approx(31 / math.sqrt(32), abs=1e-12)
    assert welch_bound(13, 4).value == pytest.approx(13 * math.sqrt(3 / 51), abs=1e-12)
    assert round(welch_bound(31, 31).value, 4) == 5.4801


def test_sarwate_tradeoff():
    assert sarwate_tradeoff_deficit(16, 3, 0.0, 4.0) == pytest.approx(0.0, abs=1e-12)
    assert sarwate_tradeoff_deficit(16, 3, 0.0, 0.0) == -1


def test_sarwate_tradeoff_on_cubic_family():
    fam = cubic_family(31)
    # correlation analogues: the nu = 0 slices of the grids
    from lazkit.af import periodic_grid
    la = max(periodic_grid(s, s).block[1:, 0].max() for s in fam)
    lc = max(periodic_grid(fam[i], fam[j]).block[:, 0].max() for i in range(31) for j in range(31) if i != j)
    assert sarwate_tradeoff_deficit(31, 31, la, lc) >= 0


def test_scs_correlation_values():
    assert scs_correlation_bound(13, 1, 13).value == 0
    assert scs_correlation_bound(13, 1, 4).value == pytest.approx(13 * math.sqrt(9 / 48), abs=1e-12)
    assert scs_correlation_bound(31, 31, 31).value == pytest.approx(welch_bound(31, 31).value, abs=1e-12)


def test_ding_values():
    assert ding_af_bound(31, 1).value == pytest.approx(31 * math.sqrt(30 / 960), abs=1e-12)
    d = ding_af_bound(1, 1)
    assert d.value == 0 and not d.applicable
    assert ding_af_bound(31, 1).value < global_af_bound(31).value


def test_laz_values():
    assert laz_bound_unimodular(32, 2, 4, 4).value == 0
    assert laz_bound_unimodular(31, 2, 31, 15).value == pytest.approx(31 / math.sqrt(15) * math.sqrt(29 / 61), abs=1e-12)
    assert round(laz_bound_unimodular(31, 2, 31, 15).value, 4) == 5.5189


@given(st.integers(1, 200), st.integers(1, 16), st.integers(1, 200), st.integers(1, 200))
def test_laz_matches_reference(n, m, zx, zy):
    if m * zx == 1:
        assert not laz_bound_unimodular(n, m, zx, zy).applicable
        return
    assert laz_bound_unimodular(n, m, zx, zy).value == pytest.approx(laz_ref(n, m, zx, zy), rel=1e-12, abs=1e-12)


@given(st.integers(1, 200), st.integers(1, 8), st.integers(1, 200), st.integers(1, 200))
def test_laz_zero_delay_column_form(n, m, zx, zy):
    p = m * zx * zy
    if m * zx == 1 or p <= n:
        return
    want = math.sqrt(n * (p - n) / (p - zy))
    assert laz_bound_unimodular(n, m, zx, zy).value == pytest.approx(want, rel=1e-12)


@given(st.integers(2, 100), st.data())
def test_scs_lcz_full_zone_is_global_auto(n, data):
    l = data.draw(st.integers(1, n))
    first_branch = n * math.sqrt((n - l) / (l * (n - 1)))
    assert scs_lcz_bound(n, 1, l, n).value == pytest.approx(first_branch, rel=1e-12, abs=1e-12)
    assert scs_global_bounds(n, l)[0].value >= first_branch - 1e-12


def test_capacity():
    assert zaz_capacity(32, 2) == (16, 64)
    assert zaz_capacity(8, 2) == (4, 16)
    assert zaz_capacity(13, 1) == (13, 52)


def test_global_and_af_deficit():
    assert global_af_bound(31).value == pytest.approx(math.sqrt(31))
    assert sarwate_af_deficit(31, 1, math.sqrt(31), 0.0) == pytest.approx(0.0, abs=1e-12)


def test_scs_laz_values():
    assert scs_laz_bound(8, 2, 2, 2).value == 0
    assert scs_laz_bound(8, 2, 2, 3).value == pytest.approx(math.sqrt(32 / 11), abs=1e-12)


def test_scs_lcz_values():
    assert scs_lcz_bound(13, 1, 4, 13).value == pytest.approx(13 * math.sqrt(9 / 48), abs=1e-12)
    assert scs_lcz_bound(8, 2, 4, 2).value == 0


def test_scs_global_values():
    auto, cross = scs_global_bounds(13, 4)
    assert auto.value == pytest.approx(13 * math.sqrt(9 / 48), abs=1e-12)
    assert cross.value == pytest.approx(6.5, abs=1e-12)
    assert scs_global_bounds(20, 20)[0].value == pytest.approx(math.sqrt(20), abs=1e-12)
    assert scs_global_bounds(20, 1)[0].value == pytest.approx(20, abs=1e-12)


def test_aperiodic_laz_values():
    b = aperiodic_laz_bound(128, 1, 4, 4)
    assert b.value == 0 and not b.applicable
    assert aperiodic_laz_bound(7, 4, 2, 2).value == pytest.approx(math.sqrt(49 * 8 / 112), abs=1e-12)


@given(st.integers(2, 100), st.integers(1, 8), st.integers(1, 100), st.integers(1, 100))
def test_aperiodic_matches_reference(n, m, zx, zy):
    b = aperiodic_laz_bound(n, m, zx, zy)
    if m * zx > 1:
        assert b.value == pytest.approx(ap_ref(n, m, zx, zy), rel=1e-12, abs=1e-12)


@given(st.integers(2, 100), st.integers(2, 8), st.integers(2, 100))
def test_aperiodic_zy1_is_lcz_form(n, m, zx):
    # with zy = 1 the expression only involves n, m, zx
    want = math.sqrt(max(0.0, n * n * (m * zx - n - zx + 1) / ((n + zx - 1) * (m * zx - 1))))
    assert aperiodic_laz_bound(n, m, zx, 1).value == pytest.approx(want, abs=1e-12)


@given(st.integers(1, 100), st.integers(1, 8), st.integers(1, 100), st.integers(1, 100))
def test_bounds_nonnegative(n, m, zx, zy):
    for b in (laz_bound_unimodular(n, m, zx, zy), scs_laz_bound(n, m, zx, zy),
              aperiodic_laz_bound(n, m, zx, zy), welch_bound(n, m), ding_af_bound(n, m)):
        assert b.value >= 0
        assert b.applicable or b.value == 0


@pytest.mark.parametrize("fn,args", [(welch_bound, (0, 1)), (laz_bound_unimodular, (4, 0, 1, 1)),
                                     (scs_correlation_bound, (4, 1, 5))])
def test_bad_inputs(fn, args):
    with pytest.raises(ValueError):
        fn(*args)


def test_bound_reductions():
    for n in range(2, 65):
        for m in range(1, 9):
            assert laz_bound_unimodular(n, m, n, n).value == pytest.approx(math.sqrt(n), rel=1e-12)
            assert scs_correlation_bound(n, m, n).value == pytest.approx(welch_bound(n, m).value, abs=1e-9)
            assert ding_af_bound(n, m).value < math.sqrt(n)


# certificates

def test_verdicts():
    b = BoundValue("x", 10.0, True)
    assert Certificate(b, 10.0, 1e-6).verdict == "optimal"
    assert Certificate(b, 10.4, 1e-6).verdict == "near-optimal"
    assert Certificate(b, 11.0, 1e-6).verdict == "suboptimal"
    assert Certificate(b, 9.0, 1e-6).verdict == "violates-bound"
    assert Certificate(b, 10.5, 1e-6).gap == pytest.approx(0.5)


def test_certify_cubic_global():
    fam = SequenceFamily([generic_cubic(31, 1)])
    cert = certify(fam, theta_stats(fam))
    assert cert.bound.name == "global" and cert.verdict == "optimal"


def test_certify_example1_zone():
    fam = quadratic_family(32, 2, 2)
    cert = certify(fam, f_pi(fam, Zone(4, 4)), zone=Zone(4, 4))
    assert cert.bound.name == "laz" and cert.verdict == "optimal"
    assert Zone(4, 4).area == zaz_capacity(32, 2)[1]


def test_certify_example3_scs():
    fam = scs_from_difference_set(verify_difference_set(13, [4, 5, 8, 10])).family
    stats = theta_stats(fam)
    assert stats.theta_a == pytest.approx(13 * math.sqrt(3) / 4, abs=1e-9)
    cert = certify(fam, stats)
    assert cert.bound.name == "scs-global-auto" and cert.verdict == "optimal"


def test_certify_selection():
    fam = quadratic_family(16, 1, 2)
    assert certify(fam, 0.0, zone=Zone(2, 2), kind="aperiodic").bound.name == "aperiodic-laz"
    assert certify(fam, 5.0, bound="welch").bound.name == "welch"
    with pytest.raises(ValueError):
        certify(fam, 1.0, bound="nope")


def test_json_shapes():
    assert set(welch_bound(4, 2).to_json()) == {"bound", "inputs", "value", "applicable"}
    cert = certify(SequenceFamily([generic_cubic(7, 1)]), 3.0).to_json()
    assert set(cert) == {"bound", "inputs", "bound_value", "applicable", "measured", "gap", "verdict"}
