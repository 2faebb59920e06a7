"""DTraT defuzzification: anchors, the golden crisp table, and shift laws."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from it2ipa import IT2TrapFN, add, dtrat, fixtures, it2
from helpers import it2_values


def test_crisp_identity():
    for c in (0.0, 0.25, 1.0):
        assert dtrat(IT2TrapFN.crisp(c)) == pytest.approx(c, abs=1e-15)


def test_reference_importance_x1():
    # upper quarter-sum 0.50825, lower 0.47925, mean 0.49375
    w = it2((0.333, 0.5, 0.5, 0.7, 1, 1), (0.417, 0.5, 0.5, 0.6, 0.9, 0.9))
    assert dtrat(w) == pytest.approx(0.49375, abs=1e-12)
    assert dtrat(w) == pytest.approx(0.494, abs=1e-3)


def test_low_term_matches_reference_x3_performance(terms):
    value = dtrat(terms["Low"])
    assert value == pytest.approx(0.11625, abs=1e-12)
    assert value == pytest.approx(fixtures.reference_defuzzified()["x_3"][1], abs=1e-3)


def test_golden_crisp_table(bundled_profiles):
    """All 36 reference crisp values reproduce within 1e-3."""
    reference = fixtures.reference_defuzzified()
    assert len(reference) == 18
    for fid, (ref_w, ref_r) in reference.items():
        profile = bundled_profiles[fid]
        assert dtrat(profile.w_fuzzy) == pytest.approx(ref_w, abs=1e-3), fid
        assert dtrat(profile.r_fuzzy) == pytest.approx(ref_r, abs=1e-3), fid


@given(it2_values(unit_heights=True), st.floats(min_value=0.0, max_value=2.0, allow_nan=False))
def test_shift_law_exact_for_unit_heights(a, c):
    # with unit heights both quarter-sums shift by exactly c
    shifted = add(a, IT2TrapFN.crisp(c))
    assert dtrat(shifted) == pytest.approx(dtrat(a) + c, abs=1e-12)


@given(it2_values(), st.floats(min_value=1e-3, max_value=2.0, allow_nan=False))
def test_monotone_under_positive_shift(a, c):
    # heights below one damp the shift but never reverse it
    assert dtrat(add(a, IT2TrapFN.crisp(c))) > dtrat(a)


def test_scale_values_inside_unit_interval(scale):
    for _, value in scale.terms:
        assert 0.0 <= dtrat(value) <= 1.0
