"""Main path against the stored arbitrary-precision fixtures."""

import math

import pytest

from stokes_isolas import beta1_breakdown, find_beta_zeros
from stokes_isolas.oracle import DEFAULT_FIXTURES, load_fixtures

# 7-digit reference values for the critical depths next to their 50-digit
# refinements (the coarse values carry their own ~5e-6 print rounding).
KNOWN_ZEROS = {
    (2, 0): 1.84940,
    (3, 0): 0.82064,
    (4, 0): 0.566633,
    (4, 1): 1.255969,
}
ORACLE_ZEROS = {
    (2, 0): 1.84940408375057,
    (3, 0): 0.820643167352878,
    (4, 0): 0.566633042083988,
    (4, 1): 1.25597417332237,
}


@pytest.fixture(scope="module")
def fixtures():
    return load_fixtures(DEFAULT_FIXTURES)


def test_fixture_file_shape(fixtures):
    assert len(fixtures) >= 20
    for p, h, value, digits in fixtures:
        assert p in (2, 3, 4)
        assert h > 0
        assert math.isfinite(value)
        assert digits >= 30


def test_fixture_depth_coverage(fixtures):
    for p in (2, 3, 4):
        hs = [h for q, h, _, _ in fixtures if q == p]
        assert len(hs) >= 6
        assert min(hs) < 1.0 and max(hs) >= 8.0


def test_agreement_within_cancellation_floor(fixtures):
    # any disagreement beyond the reported floor is a transcription bug
    for p, h, oracle_value, _ in fixtures:
        bd = beta1_breakdown(p, h)
        assert abs(bd.total - oracle_value) <= bd.cancellation_floor, (p, h)


def test_refined_zeros_match_coarse_references():
    for key, coarse in KNOWN_ZEROS.items():
        assert abs(ORACLE_ZEROS[key] - coarse) <= 6e-6


def test_main_path_zeros_match_oracle_zeros():
    zeros2 = find_beta_zeros(2, 1.5, 2.2, 200, 1e-10)
    assert zeros2[0] == pytest.approx(ORACLE_ZEROS[(2, 0)], abs=1e-8)
    zeros3 = find_beta_zeros(3, 0.6, 1.0, 200, 1e-10)
    assert zeros3[0] == pytest.approx(ORACLE_ZEROS[(3, 0)], abs=1e-8)
    zeros4 = find_beta_zeros(4, 0.4, 1.5, 400, 1e-10)
    assert zeros4[0] == pytest.approx(ORACLE_ZEROS[(4, 0)], abs=1e-8)
    assert zeros4[1] == pytest.approx(ORACLE_ZEROS[(4, 1)], abs=1e-8)


def test_deep_water_ratio_fixture(fixtures):
    # stored (4, 14) point against the equivalent-coefficient leading form
    val = next(v for p, h, v, _ in fixtures if p == 4 and h == 14.0)
    lead = -(5.0 * math.sqrt(15.0) / 24.0) * math.exp(-28.0)
    assert 0.99 <= val / lead <= 1.01


def test_oracle_config_minimum_precision():
    pytest.importorskip("mpmath")
    from stokes_isolas.oracle import OracleConfig

    with pytest.raises(ValueError):
        OracleConfig(digits=30)


def test_shallow_relative_agreement_live():
    # below the fixtures' depth range the O(1)-sized terms make the 8-ulp
    # summation floor unreachable; transcription is audited in relative terms
    mp = pytest.importorskip("mpmath")
    from stokes_isolas.oracle import OracleConfig, oracle_beta1

    cfg = OracleConfig()
    for p, h in [(2, 0.3), (3, 0.3), (4, 0.35)]:
        ours = beta1_breakdown(p, h).total
        ref = float(oracle_beta1(p, h, cfg))
        assert ours == pytest.approx(ref, rel=1e-12), (p, h)
