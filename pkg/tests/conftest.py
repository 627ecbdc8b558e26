"""Shared oracles for the test suite.

The matrix-exponential oracle is deliberately independent of the package's
closed-form propagators: scaled 12-term Taylor summation with repeated
squaring.  Tests that validate series coefficients against high-precision
numerical differentiation use mpmath directly.
"""

import numpy as np
import pytest

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
ID2 = np.eye(2, dtype=complex)


def taylor_expm(h: np.ndarray, terms: int = 12) -> np.ndarray:
    """exp(h) by scaling, 12-term Taylor summation, and repeated squaring."""
    h = np.asarray(h, dtype=complex)
    k = 0
    norm = np.max(np.abs(h))
    while norm > 0.25:
        h = h / 2.0
        norm /= 2.0
        k += 1
    out = np.eye(2, dtype=complex)
    term = np.eye(2, dtype=complex)
    for n in range(1, terms + 1):
        term = term @ h / n
        out = out + term
    for _ in range(k):
        out = out @ out
    return out


def pauli_vec(m: np.ndarray):
    """(c0, cx, cy, cz) of a 2x2 matrix by trace projection."""
    m = np.asarray(m)
    return (
        (m[0, 0] + m[1, 1]) / 2,
        (m[0, 1] + m[1, 0]) / 2,
        1j * (m[0, 1] - m[1, 0]) / 2,
        (m[0, 0] - m[1, 1]) / 2,
    )


def maxdiff(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


@pytest.fixture(scope="session")
def mp():
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 30
    return mpmath
