"""Radial eigensolver: assembly, Sturm bisection, refinement, extrapolation.

Small dense assemblies are cross-checked against numpy's symmetric
eigensolver; model scaling laws are exact by construction and asserted
exactly.
"""

import math

import numpy as np
import pytest

from kahlerlab.spectral import (
    BisectionResult,
    ComplexHyperbolic,
    EigenResult,
    RealHyperbolic,
    assemble_tridiagonal,
    lambda0_estimate,
    richardson_extrapolate,
    sharpness_report,
    smallest_eigenvalue,
    smallest_eigenvalue_detailed,
)


def _dense(diag, off):
    n = len(diag)
    m = np.diag(np.asarray(diag, dtype=float))
    for i in range(n - 1):
        m[i, i + 1] = m[i + 1, i] = off[i]
    return m


def test_bisection_fixed_matrices():
    assert smallest_eigenvalue(np.array([3.0]), np.array([])) == pytest.approx(3.0)
    diag = np.array([2.0, 2.0])
    off = np.array([-1.0])
    assert smallest_eigenvalue(diag, off) == pytest.approx(1.0, abs=1e-11)
    diag = np.array([5.0, -1.0, 7.0])
    off = np.array([0.0, 0.0])
    assert smallest_eigenvalue(diag, off) == pytest.approx(-1.0, abs=1e-11)


def test_bisection_matches_dense_oracle_on_random_matrices():
    rng = np.random.default_rng(20240817)
    for _ in range(25):
        n = int(rng.integers(2, 40))
        diag = rng.normal(size=n) * 3.0
        off = rng.normal(size=n - 1)
        expected = np.linalg.eigvalsh(_dense(diag, off))[0]
        got = smallest_eigenvalue(diag, off)
        assert got == pytest.approx(expected, abs=1e-10, rel=1e-10)


def test_bisection_result_brackets_the_value():
    diag = np.array([2.0, 3.0, 4.0])
    off = np.array([-1.0, -0.5])
    res = smallest_eigenvalue_detailed(diag, off)
    assert isinstance(res, BisectionResult)
    assert res.lo <= res.value <= res.hi
    assert res.hi - res.lo <= 1e-11
    assert res.iterations > 0
    assert res.pivot_perturbations >= 0


def test_bisection_input_validation():
    with pytest.raises(ValueError):
        smallest_eigenvalue(np.array([]), np.array([]))
    with pytest.raises(ValueError):
        smallest_eigenvalue(np.array([1.0, 2.0]), np.array([]))
    with pytest.raises(ValueError):
        smallest_eigenvalue_detailed(np.array([1.0]), np.array([]), tol=0.0)


def test_model_validation():
    with pytest.raises(ValueError):
        RealHyperbolic(1)
    with pytest.raises(ValueError):
        RealHyperbolic(3, curvature=0.0)
    with pytest.raises(ValueError):
        RealHyperbolic(3, curvature=-2.0)
    with pytest.raises(ValueError):
        ComplexHyperbolic(0)
    assert RealHyperbolic(4).spectral_bottom == pytest.approx(9.0 / 4.0)
    assert ComplexHyperbolic(3).spectral_bottom == pytest.approx(9.0)
    assert RealHyperbolic(2).describe()["kind"] == "real_hyperbolic"
    assert ComplexHyperbolic(1).describe() == {"kind": "complex_hyperbolic", "n": 1}


def test_assembly_validation():
    model = RealHyperbolic(2)
    with pytest.raises(ValueError):
        assemble_tridiagonal(model, 0.0, 100)
    with pytest.raises(ValueError):
        assemble_tridiagonal(model, -1.0, 100)
    with pytest.raises(ValueError):
        assemble_tridiagonal(model, 5.0, 1)
    with pytest.raises(ValueError, match="overflow"):
        assemble_tridiagonal(RealHyperbolic(9), 2000.0, 10)


def test_assembly_shapes_and_symmetry_signs():
    diag, off = assemble_tridiagonal(ComplexHyperbolic(1), 10.0, 50)
    assert diag.shape == (50,) and off.shape == (49,)
    assert np.all(diag > 0)
    assert np.all(off < 0)


def test_real_hyperbolic_curvature_scaling_is_exact():
    base = lambda0_estimate(RealHyperbolic(3), 12.0, 600)
    scaled = lambda0_estimate(RealHyperbolic(3, curvature=2.5), 12.0, 600)
    assert scaled.lambda_min == base.lambda_min
    assert scaled.scaled_lambda == 2.5 * base.lambda_min
    assert base.scaled_lambda == base.lambda_min


def test_complex_hyperbolic_scaling_halves():
    res = lambda0_estimate(ComplexHyperbolic(2), 10.0, 500)
    assert res.scaled_lambda == res.lambda_min / 2.0


def test_eigenvalue_sits_above_the_essential_bottom():
    for model in (RealHyperbolic(2), RealHyperbolic(4), ComplexHyperbolic(1)):
        res = lambda0_estimate(model, 14.0, 700)
        assert res.lambda_min > model.spectral_bottom


def test_eigenvalue_decreases_with_radius():
    model = ComplexHyperbolic(1)
    values = [lambda0_estimate(model, r, 800).lambda_min for r in (6.0, 10.0, 14.0)]
    assert values[0] > values[1] > values[2]


def test_eigen_result_payload():
    res = lambda0_estimate(ComplexHyperbolic(1), 8.0, 400)
    assert isinstance(res, EigenResult)
    payload = res.to_dict()
    assert payload["model"] == {"kind": "complex_hyperbolic", "n": 1}
    assert payload["R"] == 8.0 and payload["N"] == 400
    assert payload["extrapolated"] is None
    assert payload["pivot_perturbations"] == 0
    assert payload["residual"] < 1e-10


def test_refined_residual_is_certified_small():
    diag, off = assemble_tridiagonal(ComplexHyperbolic(1), 25.0, 5000)
    res = lambda0_estimate(ComplexHyperbolic(1), 25.0, 5000)
    norm_bound = np.max(np.abs(diag)) + 2 * np.max(np.abs(off))
    assert res.residual <= 1e-10
    assert res.residual < 1e-15 * norm_bound
    v = np.linalg.eigvalsh(_dense(diag, off))[0] if len(diag) <= 2000 else None
    assert v is None or res.lambda_min == pytest.approx(v, rel=1e-9)


def test_richardson_recovers_synthetic_tail():
    a, b = 0.25, 3.7
    samples = [(r, a + b / (r * r)) for r in (10.0, 20.0, 40.0)]
    assert richardson_extrapolate(samples) == pytest.approx(a, abs=1e-12)


def test_richardson_validation():
    with pytest.raises(ValueError):
        richardson_extrapolate([(10.0, 0.3)])
    with pytest.raises(ValueError):
        richardson_extrapolate([(10.0, 0.3), (10.0, 0.4)])


def test_disc_bottom_converges_toward_one_quarter():
    # the Dirichlet value carries a pi^2 / R^2 tail above the limit 1/4
    model = RealHyperbolic(2)
    lam_30 = lambda0_estimate(model, 30.0, 3000).lambda_min
    lam_60 = lambda0_estimate(model, 60.0, 6000).lambda_min
    assert 0.25 < lam_60 < lam_30 < 0.262
    assert abs(lam_30 - 0.25 - math.pi ** 2 / 900.0) < 2e-3


def test_sharpness_report_quick_run():
    rep = sharpness_report(1, radii=(10.0, 15.0), cells=4000, window=0.02)
    assert rep.n == 1
    assert rep.bound == pytest.approx(0.5)
    assert len(rep.samples) == 2
    assert rep.ratio == pytest.approx(rep.extrapolated_scaled / 0.5)
    assert rep.passed
    with pytest.raises(ValueError):
        sharpness_report(0)


def test_grid_refinement_is_second_order():
    model = RealHyperbolic(2)
    radius = 10.0
    lam_h = lambda0_estimate(model, radius, 250).lambda_min
    lam_h2 = lambda0_estimate(model, radius, 500).lambda_min
    lam_h4 = lambda0_estimate(model, radius, 1000).lambda_min
    order = math.log2((lam_h - lam_h2) / (lam_h2 - lam_h4))
    assert 1.8 <= order <= 2.2
