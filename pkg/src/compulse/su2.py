"""Exact 2x2 unitary algebra for single-qubit rotations with systematic errors.

Rotations about axes in the xy plane are the elementary operations.  Two error
channels are modelled: a fractional miscalibration of every rotation angle
(pulse length error, fraction ``epsilon``) and a constant detuning of the
drive relative to its strength (off-resonance error, fraction ``f``), which
tilts every rotation axis toward z.  Both may act at once.

All matrices are plain complex numpy arrays, all functions are pure, and the
small value types are frozen dataclasses, so everything is safe to share
across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

PULSE_LENGTH = "ple"
OFF_RESONANCE = "ore"
SIMULTANEOUS = "sim"
MODEL_KINDS = (PULSE_LENGTH, OFF_RESONANCE, SIMULTANEOUS)

TWO_PI = 2.0 * math.pi

IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


@dataclass(frozen=True)
class Pulse:
    """One elementary rotation: angle and axis phase, both in radians.

    The stored angle is always nonnegative.  A negative angle request is
    rewritten to ``(|angle|, phase + pi)``, which is exact for ideal rotations
    and for pulse length errors; the rewrite is recorded in ``flipped`` so
    that off-resonance propagators, for which it is not valid, can refuse the
    pulse.  Phases are reduced to [0, 2pi).
    """

    angle: float
    phase: float
    flipped: bool = False

    def __post_init__(self) -> None:
        angle = float(self.angle)
        phase = float(self.phase)
        if not (math.isfinite(angle) and math.isfinite(phase)):
            raise ValueError(f"pulse parameters must be finite, got ({angle}, {phase})")
        flipped = self.flipped
        if angle < 0.0:
            angle, phase, flipped = -angle, phase + math.pi, True
        object.__setattr__(self, "angle", angle)
        object.__setattr__(self, "phase", phase % TWO_PI)
        object.__setattr__(self, "flipped", flipped)


@dataclass(frozen=True)
class ErrorModel:
    """Which systematic error applies and how large it is.

    ``kind`` is one of ``"ple"`` (pulse length), ``"ore"`` (off-resonance) or
    ``"sim"`` (both at once).  A pulse-length model carries only ``epsilon``,
    an off-resonance model only ``f``.
    """

    kind: str
    epsilon: float = 0.0
    f: float = 0.0

    def __post_init__(self) -> None:
        if self.kind not in MODEL_KINDS:
            raise ValueError(f"unknown error model kind {self.kind!r}")
        if self.kind == PULSE_LENGTH and self.f != 0.0:
            raise ValueError("pulse-length model must not carry an off-resonance fraction")
        if self.kind == OFF_RESONANCE and self.epsilon != 0.0:
            raise ValueError("off-resonance model must not carry a pulse-length fraction")

    @classmethod
    def pulse_length(cls, epsilon: float) -> "ErrorModel":
        return cls(PULSE_LENGTH, epsilon=epsilon)

    @classmethod
    def off_resonance(cls, f: float) -> "ErrorModel":
        return cls(OFF_RESONANCE, f=f)

    @classmethod
    def simultaneous(cls, epsilon: float, f: float) -> "ErrorModel":
        return cls(SIMULTANEOUS, epsilon=epsilon, f=f)


@dataclass(frozen=True)
class PauliDecomposition:
    """Coefficients of M = c0*I + cx*sigma_x + cy*sigma_y + cz*sigma_z."""

    c0: complex
    cx: complex
    cy: complex
    cz: complex

    @property
    def vector(self) -> tuple[complex, complex, complex]:
        return (self.cx, self.cy, self.cz)

    @property
    def vector_norm(self) -> float:
        return math.sqrt(abs(self.cx) ** 2 + abs(self.cy) ** 2 + abs(self.cz) ** 2)

    def reconstruct(self) -> np.ndarray:
        return (
            self.c0 * IDENTITY
            + self.cx * SIGMA_X
            + self.cy * SIGMA_Y
            + self.cz * SIGMA_Z
        )


def rotation(theta: float, phi: float) -> np.ndarray:
    """Ideal rotation exp[-i theta (sigma_x cos(phi) + sigma_y sin(phi)) / 2].

    Parameters
    ----------
    theta : float
        Rotation angle in radians.  May be negative (an exact identity maps
        it to a positive rotation with phase shifted by pi).
    phi : float
        Azimuthal angle of the rotation axis in the xy plane, radians.

    Returns
    -------
    np.ndarray
        The 2x2 special-unitary propagator.
    """
    if not (math.isfinite(theta) and math.isfinite(phi)):
        raise ValueError(f"rotation arguments must be finite, got ({theta}, {phi})")
    c = math.cos(theta / 2.0)
    s = math.sin(theta / 2.0)
    e = complex(math.cos(phi), -math.sin(phi))
    return np.array(
        [[c, -1j * s * e], [-1j * s * e.conjugate(), c]], dtype=complex
    )


def _tilted_rotation(theta: float, phi: float, weight: float, f: float) -> np.ndarray:
    """exp[-i theta (weight*(sigma_x c + sigma_y s) + f sigma_z) / 2] in closed form."""
    m = math.hypot(weight, f)
    a = theta * m / 2.0
    c = math.cos(a)
    s = math.sin(a) / m
    nx = weight * math.cos(phi)
    ny = weight * math.sin(phi)
    return np.array(
        [
            [c - 1j * s * f, -1j * s * (nx - 1j * ny)],
            [-1j * s * (nx + 1j * ny), c + 1j * s * f],
        ],
        dtype=complex,
    )


def propagator(pulse: Pulse, model: ErrorModel) -> np.ndarray:
    """Erroneous propagator of a single pulse under the given error model.

    Pulse length errors scale the rotation angle by (1 + epsilon).  An
    off-resonance fraction f adds f*sigma_z to the generator, tilting the
    rotation axis; with both errors present the transverse part of the
    generator is additionally scaled by (1 + epsilon).  With all error
    fractions zero this reduces exactly to :func:`rotation`.
    """
    if model.kind == PULSE_LENGTH:
        return rotation(pulse.angle * (1.0 + model.epsilon), pulse.phase)
    if pulse.flipped:
        raise ValueError(
            "off-resonance propagators are defined for nonnegative angles only; "
            "this pulse was built from a negative-angle request"
        )
    weight = 1.0 + model.epsilon if model.kind == SIMULTANEOUS else 1.0
    return _tilted_rotation(pulse.angle, pulse.phase, weight, model.f)


def compose(pulses, model: ErrorModel) -> np.ndarray:
    """Propagator of a pulse sequence, first pulse applied first.

    ``pulses`` is any iterable of :class:`Pulse` in chronological order (a
    :class:`~compulse.sequences.PulseSequence` works directly).  The result
    is the matrix product with the chronologically first pulse as the
    rightmost factor.
    """
    out = None
    for p in pulses:
        m = propagator(p, model)
        out = m if out is None else m @ out
    if out is None:
        raise ValueError("cannot compose an empty pulse sequence")
    return out


def adjoint(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(m).conj().T.copy()


def fidelity(v: np.ndarray, u: np.ndarray) -> float:
    """Propagator fidelity |Tr(v u^dag)| / 2, global-phase invariant.

    Equals 1 exactly when the two unitaries agree up to a global phase.  The
    modulus discards the phase, which matters because 2pi rotations inside
    composite sequences contribute global factors of -1.
    """
    overlap = 0.5 * np.trace(np.asarray(v) @ np.asarray(u).conj().T)
    return min(abs(overlap), 1.0)


def pauli_decompose(m: np.ndarray) -> PauliDecomposition:
    """Expand a 2x2 matrix in the basis {I, sigma_x, sigma_y, sigma_z}."""
    m = np.asarray(m)
    return PauliDecomposition(
        c0=complex(m[0, 0] + m[1, 1]) / 2.0,
        cx=complex(m[0, 1] + m[1, 0]) / 2.0,
        cy=complex(1j * (m[0, 1] - m[1, 0])) / 2.0,
        cz=complex(m[0, 0] - m[1, 1]) / 2.0,
    )
