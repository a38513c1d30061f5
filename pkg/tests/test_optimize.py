"""Region objectives, boundary cubics, maximizer, derivative claims."""

import math

import numpy as np
import pytest

from ulambda.errors import OutsideRegion
from ulambda.functionals import LAMBDA_STAR
from ulambda.optimize import (
    MaxResult,
    RegionPoint,
    check_monotonicity_claims,
    derivative_fd_agreement,
    dg_dx,
    dg_dy,
    g1,
    g2,
    g3,
    in_region,
    locate_g1_crossover,
    maximize_over_E,
    phi_curve,
    phi_deriv,
)


def test_g_values_at_origin():
    p = RegionPoint(0.0, 0.0)
    for g in (g1, g2, g3):
        assert g(p, 0.7) == pytest.approx(1 / 3)


def test_g1_corner_values():
    assert g1(RegionPoint(1, 0), 1.0) == pytest.approx(4.0)
    assert g1(RegionPoint(0, 0.5), 1.0) == pytest.approx(2.0)


def test_g2_values():
    assert g2(RegionPoint(1, 0), 0.9) == pytest.approx(2.71)
    assert g2(RegionPoint(0, 0.5), 1.0) == pytest.approx(1.0)


def test_g3_values():
    assert g3(RegionPoint(1, 0), 1.0) == pytest.approx(11.0)
    assert g3(RegionPoint(0, 0.5), 0.5) == pytest.approx(1.5)


def test_region_validation():
    assert in_region(0.5, 0.37)
    assert not in_region(0.5, 0.38)
    with pytest.raises(OutsideRegion):
        RegionPoint(0.5, 0.38)
    with pytest.raises(OutsideRegion):
        g1((1.2, 0.0), 0.5)


def test_phi_corner_values():
    for lam in (0.2, 0.5, 0.8, 1.0):
        assert phi_curve(1, 1.0, lam) == pytest.approx((1 + lam) ** 2)
        assert phi_curve(2, 1.0, lam) == pytest.approx(1 + lam + lam**2)
        assert phi_curve(3, 1.0, lam) == pytest.approx(3 + 5 * lam + 3 * lam**2)


def test_phi1_interior_peak():
    lam = 0.5
    x0 = math.sqrt(lam**2 + lam + 7 / 3) - 1
    assert x0 == pytest.approx(0.755942, abs=1e-6)
    assert phi_curve(1, x0, lam) == pytest.approx(2.3594369338476975, abs=1e-12)


def test_boundary_identity():
    # the arc cubics must equal the two-variable objectives on the parabola
    xs = np.linspace(0.0, 1.0, 1000)
    for lam in (0.1, 0.35, 0.7, 1.0):
        for which, g in ((1, g1), (2, g2), (3, g3)):
            for x in xs:
                y = 0.5 * (1 - x * x)
                assert abs(g((x, y), lam) - phi_curve(which, x, lam)) <= 1e-12


def test_phi_deriv_matches_difference_quotient():
    h = 1e-7
    for lam in (0.3, 0.9):
        for which in (1, 2, 3):
            for x in (0.1, 0.5, 0.9):
                fd = (phi_curve(which, x + h, lam) - phi_curve(which, x - h, lam)) / (2 * h)
                assert phi_deriv(which, x, lam) == pytest.approx(fd, abs=1e-6)


def test_maximize_g1_corner_regime():
    r = maximize_over_E("g1", 1.0)
    assert r.value == pytest.approx(4.0, abs=1e-9)
    assert r.argmax.x == pytest.approx(1.0, abs=1e-6)
    assert r.argmax.y == pytest.approx(0.0, abs=1e-6)


def test_maximize_g1_interior_regime():
    r = maximize_over_E("g1", 0.5)
    assert r.value == pytest.approx(2.3594369338476975, abs=1e-9)
    assert r.argmax.x == pytest.approx(0.755942, abs=1e-5)
    # the argmax sits on the parabolic arc
    assert r.argmax.y == pytest.approx(0.5 * (1 - r.argmax.x**2), abs=1e-9)


def test_maximize_g2_and_g3():
    r = maximize_over_E("g2", 0.9)
    assert r.value == pytest.approx(2.71, abs=1e-9)
    r = maximize_over_E("g3", 1.0)
    assert r.value == pytest.approx(11.0, abs=1e-9)
    assert r.argmax.x == pytest.approx(1.0, abs=1e-6)


def test_maximize_validates_arguments():
    with pytest.raises(ValueError):
        maximize_over_E("g1", 0.5, tol=1e-12)
    with pytest.raises(ValueError):
        maximize_over_E("g9", 0.5)


def test_maximize_result_shape():
    r = maximize_over_E("g3", 0.4, grid_n=401)
    assert isinstance(r, MaxResult)
    obj = r.to_json()
    assert set(obj) == {"function", "lambda", "argmax", "value", "tolerance", "method", "tied"}
    assert obj["function"] == "g3"
    assert r.tol <= 1e-9


def test_grid_versus_quadrature_free_scan():
    # independent coarse oracle: brute scan of the region at another grid
    lam = 0.65
    best = -np.inf
    for x in np.linspace(0, 1, 1501):
        ymax = 0.5 * (1 - x * x)
        ys = np.linspace(0, ymax, 301)
        q = 1 + lam + lam * lam
        vals = (1 - x * x - 4 * ys**2 / (1 + x)) / 3 + 2 * (1 + lam) * ys + lam * x * x + q * x
        best = max(best, float(vals.max()))
    r = maximize_over_E("g1", lam)
    assert r.value >= best - 1e-12
    assert r.value <= best + 1e-4  # coarse scan is within grid resolution


def test_analytic_partials_positive_claims():
    for lam in (0.1, 0.5, 1.0):
        rep = check_monotonicity_claims(lam, n=120)
        assert rep.dg_dx_positive
        assert rep.phi3_increasing
        assert rep.fd_max_rel_err <= 1e-6


def test_monotonicity_lambda_one():
    rep = check_monotonicity_claims(1.0, n=120)
    assert rep.phi1_nondecreasing and rep.phi2_nondecreasing
    assert min(rep.dg_dx_min) > 0


def test_monotonicity_interior_regime_flags():
    rep = check_monotonicity_claims(0.5, n=120)
    # the first two arc cubics lose monotonicity below their thresholds
    assert not rep.phi1_nondecreasing
    assert not rep.phi2_nondecreasing
    assert rep.phi3_increasing
    assert phi_deriv(1, 1.0, 0.5) == pytest.approx(4 / 3 + 0.75 - 3)
    assert phi_deriv(1, 0.0, 0.5) > 0  # sign change on [0, 1]


def test_monotonicity_phi2_lower_bound():
    rep = check_monotonicity_claims(0.9, n=120)
    assert rep.phi_deriv_min[1] >= 0.9**2 - 2 / 3 - 1e-12


def test_fd_agreement_tight():
    for lam in (0.25, 0.75):
        assert derivative_fd_agreement(lam) <= 1e-6


def test_dg_dy_signs():
    # g1 and g3 increase in y everywhere; g2 only while 8y < 3(1+lam)(1+x)
    assert dg_dy(1, 0.3, 0.4, 0.2) > 0
    assert dg_dy(3, 0.0, 0.5, 0.1) > 0
    assert dg_dy(2, 0.0, 0.5, 0.2) < 0
    assert dg_dx(2, 1.0, 0.0, 0.05) > 0


def test_crossover_location():
    c = locate_g1_crossover()
    assert abs(c - LAMBDA_STAR) <= 0.002


def test_regime_agreement_on_fine_grid():
    # lam * max g1 tracks the catalogued zalcman(3) value across regimes,
    # and lam * max g3 reproduces the krushkal(5,1) polynomial everywhere
    from ulambda.functionals import ZALCMAN_3, bound_for

    for k in range(1, 21):
        lam = round(0.05 * k, 10)
        v1 = lam * maximize_over_E("g1", lam, grid_n=801).value
        assert abs(v1 - bound_for(ZALCMAN_3, lam).value) <= 1e-6
        v3 = lam * maximize_over_E("g3", lam, grid_n=801).value
        assert abs(v3 - lam * (3 + 5 * lam + 3 * lam**2)) <= 1e-6


def test_g2_corner_dominance_above_threshold():
    for lam in (math.sqrt(2 / 3), 0.85, 0.95, 1.0):
        r = maximize_over_E("g2", lam, grid_n=801)
        assert abs(r.argmax.x - 1.0) <= 1e-4
        assert abs(r.argmax.y) <= 1e-4
        assert lam * r.value == pytest.approx(lam * (1 + lam + lam**2), abs=1e-9)
