import numpy as np
import pytest

from ccrlab import props
from ccrlab.states import x_family_state


def test_verdict_pass_and_dict():
    v = props.PropertyVerdict("x", 3, 1e-11, 1e-10, 7)
    assert v.passed
    assert v.to_dict() == {"name": "x", "trials": 3, "worst_violation": 1e-11, "slack": 1e-10, "seed": 7, "pass": True}
    assert not props.PropertyVerdict("x", 3, 2e-10, 1e-10, 7).passed


@pytest.mark.parametrize("measure", props.CONVEX)
def test_convexity_small(measure):
    v = props.check_convexity(measure, 3, 200, seed=1)
    assert v.passed, v
    assert v.name == f"convexity:{measure}:d=3"


@pytest.mark.parametrize("measure", props.CONCAVE)
def test_concavity_small(measure):
    v = props.check_concavity(measure, 2, 200, seed=1)
    assert v.passed, v


def test_equal_state_mixture_has_zero_gap(rng):
    from ccrlab.states import random_density

    rho = random_density(3, 2, rng)
    for name in props.CONVEX + props.CONCAVE:
        f = props.MEASURES[name]
        assert abs(f(rho, 0) - (0.3 * f(rho, 0) + 0.7 * f(rho, 0))) <= 1e-12


def test_unknown_ids_are_rejected():
    with pytest.raises(KeyError):
        props.check_convexity("S_vn", 2, 1, 0)
    with pytest.raises(KeyError):
        props.check_concavity("P_l", 2, 1, 0)
    with pytest.raises(KeyError):
        props.mixing_suite(["nope"], 2, 1, 0)


def test_suite_matches_single_measure_runs():
    joint = props.mixing_suite(["U_q", "S_l"], 3, 50, seed=5)
    assert joint[0] == props.check_convexity("U_q", 3, 50, seed=5)
    assert joint[1] == props.check_concavity("S_l", 3, 50, seed=5)


def test_seed_reproducibility():
    assert props.identity_sweep((2, 3), 5, 11) == props.identity_sweep((2, 3), 5, 11)
    assert props.check_monotone_uc(30, 11) == props.check_monotone_uc(30, 11)


def test_corrupted_measure_is_caught(monkeypatch):
    monkeypatch.setitem(props.MEASURES, "U_q", lambda rho, j: -float(np.real(np.trace(rho.matrix @ rho.matrix))))
    assert not props.check_convexity("U_q", 2, 50, seed=0).passed


def test_extreme_cases():
    for v in props.check_extreme_cases(3, 100, seed=2):
        assert v.passed, v


def test_identity_sweep_small():
    verdicts = props.identity_sweep((2, 3, 4), 20, seed=3)
    assert len(verdicts) == 15
    assert all(v.name.startswith("identity:") for v in verdicts)
    assert all(v.passed for v in verdicts), [v for v in verdicts if not v.passed]


def test_monotone_parts_that_hold():
    by_name = {v.name: v for v in props.check_monotone_uc(300, seed=4)}
    for key in ("nonnegativity", "zero_iff_pure_marginal", "local_unitary_invariance", "schmidt_directional_rank2"):
        v = by_name[f"monotone:{key}"]
        assert v.passed, v


@pytest.mark.parametrize("x", [0.2, 0.5, 0.8, 0.95])
def test_directional_derivative_x_state_oracle(x):
    # diagonal marginal diag(l1, l2): U_c = 2 l1 l2, so the directional product is -2 (l1 - l2)^2
    lam = np.array([x * x, 1 - x * x])
    h, e = props.FD_STEP, np.array([1.0, -1.0])
    basis = np.eye(2)
    deriv = (props._uc_of_spectrum(lam + h * e, basis) - props._uc_of_spectrum(lam - h * e, basis)) / (2 * h)
    assert (lam[0] - lam[1]) * deriv == pytest.approx(-2 * (lam[0] - lam[1]) ** 2, abs=1e-8)
    assert props._uc_of_spectrum(lam, basis) == pytest.approx(2 * lam[0] * lam[1])
    assert x_family_state(x).reduced("A").spectrum.max() == pytest.approx(lam.max())


def test_detector_curve_values():
    uq, uc, pl = props.detector_curve([0.0, 0.5, 1.0]).T
    np.testing.assert_allclose(uq, [0.0, (1 - np.sqrt(3) / 2) / 2, 0.5], atol=1e-12)
    np.testing.assert_allclose(uq + uc + pl, 0.5, atol=1e-12)
    np.testing.assert_allclose(pl, 0.0, atol=1e-12)


@pytest.mark.parametrize("amps", [(2**-0.5, 2**-0.5), (0.6, 0.8), (1.0, 0.0)])
def test_detector_transfer(amps):
    for v in props.check_detector_transfer(amps):
        assert v.passed, v
