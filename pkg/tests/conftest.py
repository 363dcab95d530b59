import numpy as np
import pytest

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]])
SZ = np.diag([1.0, -1.0]).astype(complex)
I2 = np.eye(2, dtype=complex)
PLUS = np.full((2, 2), 0.5, dtype=complex)
# rho = p1|z+><z+| + p2|x+><x+| at p1 = 1/2
MIXED_QUARTER = np.array([[0.75, 0.25], [0.25, 0.25]], dtype=complex)


def sqrt_2x2(rho):
    """Closed-form PSD square root of a 2x2 matrix: (rho + sqrt(det) I) / sqrt(tr + 2 sqrt(det))."""
    s = np.sqrt(max(np.linalg.det(rho).real, 0.0))
    return (rho + s * np.eye(2)) / np.sqrt(np.trace(rho).real + 2 * s)


def random_hermitian(d, rng):
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return 0.5 * (g + g.conj().T)


@pytest.fixture
def rng():
    return np.random.default_rng(20201018)
