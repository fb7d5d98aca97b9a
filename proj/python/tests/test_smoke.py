import json
import math

import pytest

import frachardy as fh


def test_classical_constant():
    for d in range(3, 9):
        assert fh.optimal_constant(1.0, d) == pytest.approx((d - 2) ** 2 / 4, rel=1e-12)


def test_psi_matches_constant_at_alpha0():
    a0 = fh.alpha0(0.5, 2)
    assert a0 == 0.75
    assert fh.psi(0.5, 2, a0) == pytest.approx(fh.optimal_constant(0.5, 2), rel=1e-12)
    assert fh.psi(0.5, 2, 0.75) == pytest.approx(0.22847329052223181269, rel=1e-13)


def test_indicator_kernels():
    assert fh.riesz(0.0, [0]) == 1.0
    assert fh.riesz(0.0, [3]) == 0.0
    assert fh.riesz(1.0, [0, 1]) == 1.0


def test_kernel_against_one_dimensional_closed_form():
    a, m = -0.25, 5
    closed = (4 ** a * math.gamma(0.5 + a) * math.gamma(m - a)
              / (math.sqrt(math.pi) * abs(math.gamma(-a)) * math.gamma(m + 1 + a)))
    assert fh.riesz(a, [m]) == pytest.approx(closed, rel=1e-9)


def test_kernel_table_dict():
    t = fh.kernel_table(0.5, 2, 4)
    assert t["d"] == 2 and t["radius"] == 4
    assert "mass" in t
    assert len(t["entries"]) == 15


def test_errors_are_typed():
    with pytest.raises(fh.DomainError):
        fh.psi(0.5, 3, 2.0)
    with pytest.raises(fh.Error):
        fh.hardy_weight(0.5, 0.4, [1, 0, 0])
    q = fh.QuadratureSpec()
    q.rel_tol = -1.0
    with pytest.raises(fh.DomainError):
        q.validate()


def test_hardy_deficits_nonnegative():
    for deficit, form in fh.hardy_deficits(0.25, 1, 0.375, 6, seed=3, samples=10):
        assert deficit >= -1e-8 * form


def test_classify_and_scan():
    assert fh.classify(0.5, 3, 0.9) == "positive_critical"
    rep = fh.scan(0.25, 1, [0.3, 0.375], [10, 20, 40])
    assert [s["classification"] for s in rep["scans"]] == ["positive_critical", "null_critical"]
    assert rep["scans"][0]["verdict"] == "convergent"
    json.dumps(rep)


def test_ground_state_residual():
    r = fh.ground_state_residual(0.25, 0.4, [1], 200)
    assert abs(r["residual"]) < 1e-5 * r["target"]
