import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ccrlab import uncertainty as un
from ccrlab.complementarity import coherence_wy
from ccrlab.exceptions import DimensionError
from ccrlab.states import (
    DensityMatrix,
    DetectorModel,
    detector_reduced_state,
    random_density,
    x_family_state,
)

from conftest import I2, MIXED_QUARTER, PLUS, SX, SY, SZ, random_hermitian, sqrt_2x2

P0 = np.diag([1.0, 0.0])


def test_variance_examples():
    assert un.variance(np.diag([1.0, 0.0]), SZ) == pytest.approx(0.0, abs=1e-15)
    assert un.variance(I2 / 2, SZ) == pytest.approx(1.0)
    rho = np.diag([0.2, 0.3, 0.5])
    for j, p in enumerate([0.2, 0.3, 0.5]):
        proj = np.zeros((3, 3))
        proj[j, j] = 1
        assert un.variance(rho, proj) == pytest.approx(p - p * p)


def test_variance_dimension_mismatch():
    with pytest.raises(DimensionError):
        un.variance(I2 / 2, np.eye(3))


def test_skew_information_examples():
    assert un.skew_information(np.diag([0.3, 0.7]), SZ) == pytest.approx(0.0, abs=1e-15)
    assert un.skew_information(PLUS, P0) == pytest.approx(0.25)


def test_skew_equals_variance_for_pure(rng):
    for _ in range(50):
        rho = random_density(4, 1, rng)
        a = random_hermitian(4, rng)
        assert un.skew_information(rho, a) == pytest.approx(un.variance(rho, a), abs=1e-10)


def test_classical_uncertainty_examples():
    assert un.classical_uncertainty(random_density(3, 1, 5), random_hermitian(3, np.random.default_rng(1))) == pytest.approx(0, abs=1e-10)
    assert un.classical_uncertainty(I2 / 2, P0) == pytest.approx(0.25)


def test_classical_uncertainty_two_formulas():
    # sqrt(rho) from the 2x2 closed form, independent of the eigensolver
    s = sqrt_2x2(MIXED_QUARTER)
    a0 = SZ - np.trace(MIXED_QUARTER @ SZ).real * I2
    var = np.trace(MIXED_QUARTER @ a0 @ a0).real
    comm = s @ a0 - a0 @ s
    q = -0.5 * np.trace(comm @ comm).real
    c = np.trace(s @ a0 @ s @ a0).real
    assert var == pytest.approx(q + c, abs=1e-14)
    assert un.variance(MIXED_QUARTER, SZ) == pytest.approx(var, abs=1e-12)
    assert un.skew_information(MIXED_QUARTER, SZ) == pytest.approx(q, abs=1e-12)
    assert un.classical_uncertainty(MIXED_QUARTER, SZ) == pytest.approx(c, abs=1e-12)
    assert un.classical_uncertainty(MIXED_QUARTER, SZ) == pytest.approx(
        un.variance(MIXED_QUARTER, SZ) - un.skew_information(MIXED_QUARTER, SZ), abs=1e-9
    )


def test_path_quantum_examples():
    for j in range(3):
        assert un.path_quantum_uncertainty(np.diag([0.2, 0.3, 0.5]), j) == pytest.approx(0, abs=1e-15)
    for d in (2, 3, 5):
        psi = np.ones(d) / np.sqrt(d)
        rho = np.outer(psi, psi)
        for j in range(d):
            assert un.path_quantum_uncertainty(rho, j) == pytest.approx((d - 1) / d**2, abs=1e-12)
    known = np.diag([0.0, 1.0, 0.0])
    for j in range(3):
        assert un.path_quantum_uncertainty(known, j) == pytest.approx(0, abs=1e-15)


def test_path_index_checked():
    with pytest.raises(IndexError):
        un.path_quantum_uncertainty(I2 / 2, 2)


@pytest.mark.parametrize("gamma", [0.0, 0.25, 0.5, 0.9, 1.0])
def test_detector_closed_forms(gamma):
    rho = detector_reduced_state(DetectorModel.symmetric_two_path(gamma))
    # sqrt(rho) by hand: eigenvalues (1 +- gamma)/2
    root = np.sqrt(1 - gamma**2)
    assert un.path_classical_uncertainty(rho, 0) == pytest.approx(root / 4, abs=1e-12)
    assert un.total_quantum_uncertainty(rho) == pytest.approx((1 - root) / 2, abs=1e-12)
    assert un.total_classical_uncertainty(rho) == pytest.approx(root / 2, abs=1e-12)


def test_path_classical_examples():
    assert un.path_classical_uncertainty(PLUS, 0) == pytest.approx(0, abs=1e-15)
    assert un.path_classical_uncertainty(I2 / 2, 1) == pytest.approx(0.25)


def test_totals_examples():
    assert un.total_quantum_uncertainty(np.diag([0.1, 0.9])) == pytest.approx(0, abs=1e-15)
    assert un.total_quantum_uncertainty(PLUS) == pytest.approx(0.5)
    assert un.total_classical_uncertainty(PLUS) == pytest.approx(0, abs=1e-15)
    assert un.total_classical_uncertainty(I2 / 2) == pytest.approx(0.5)


@pytest.mark.parametrize("x", np.linspace(0, 1, 11))
def test_x_state_classical_total(x):
    rho = x_family_state(x).reduced("A")
    assert un.total_classical_uncertainty(rho) == pytest.approx(2 * x * x * (1 - x * x), abs=1e-12)
    assert un.total_quantum_uncertainty(rho) == pytest.approx(0, abs=1e-12)


def test_robertson_examples(rng):
    lhs, rhs, holds = un.robertson_check(random_density(2, 2, rng), SZ, np.diag([2.0, -1.0]))
    assert rhs == pytest.approx(0, abs=1e-15) and holds
    lhs, rhs, holds = un.robertson_check(np.diag([1.0, 0.0]), SX, SY)
    assert lhs == pytest.approx(1) and rhs == pytest.approx(1) and holds


def test_robertson_random(rng):
    for _ in range(1000):
        d = int(rng.integers(2, 6))
        rho = random_density(d, int(rng.integers(1, d + 1)), rng)
        assert un.robertson_check(rho, random_hermitian(d, rng), random_hermitian(d, rng))[2]


states = st.tuples(st.sampled_from([2, 3, 4, 8]), st.integers(0, 2**32 - 1)).map(
    lambda t: random_density(t[0], int(np.random.default_rng(t[1]).integers(1, t[0] + 1)), t[1])
)


@settings(max_examples=200, deadline=None)
@given(rho=states, seed=st.integers(0, 2**32 - 1))
def test_variance_decomposes(rho, seed):
    a = random_hermitian(rho.dim, np.random.default_rng(seed))
    v, q, c = un.split(rho, a)
    assert abs(v - q - c) <= 1e-9
    assert q <= v + 1e-10


@settings(max_examples=200, deadline=None)
@given(rho=states)
def test_path_sums(rho):
    d = rho.dim
    uq, uc = un.total_quantum_uncertainty(rho), un.total_classical_uncertainty(rho)
    assert abs(uq + uc - (1 - np.sum(rho.diagonal**2))) <= 1e-9
    assert uq + uc <= (d - 1) / d + 1e-10
    assert abs(uq - coherence_wy(rho)) <= 1e-10
    total_var = 0.0
    for j in range(d):
        proj = np.zeros((d, d))
        proj[j, j] = 1
        total_var += un.variance(rho, proj)
        assert abs(un.path_quantum_uncertainty(rho, j) - un.skew_information(rho, proj)) <= 1e-9
        assert abs(un.path_classical_uncertainty(rho, j) - un.classical_uncertainty(rho, proj)) <= 1e-9
    assert abs(total_var - uq - uc) <= 1e-9


def test_unc_identity_random_sweep(rng):
    for d in (2, 3, 4, 8):
        for _ in range(1000):
            rho = random_density(d, int(rng.integers(1, d + 1)), rng)
            s = un.total_quantum_uncertainty(rho) + un.total_classical_uncertainty(rho)
            assert abs(s - (1 - np.sum(rho.diagonal**2))) <= 1e-9


def test_large_observable_does_not_trip_clamp(rng):
    rho = random_density(3, 1, rng)
    a = 1e3 * random_hermitian(3, rng)
    assert un.classical_uncertainty(rho, a) >= 0
