"""Independent numeric checks of the series engine's order and coefficient claims.

Nothing here touches the power-series code path: sequences are composed with
plain matrix arithmetic (in extended precision, so that infidelities of order
x^8 stay above the rounding floor on the sweep grids), infidelities are swept
over geometric grids, and error orders and leading coefficients are recovered
from log-log slopes and small-x extrapolation.  Agreement between the two
routes is what certifies a sequence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import series as _series
from .sequences import CATALOG_MODELS, PulseSequence, build
from .su2 import OFF_RESONANCE, PULSE_LENGTH, SIMULTANEOUS, Pulse

_LD = np.longdouble
_CLD = np.clongdouble

#: sweep defaults: geometric grid and the infidelity window used for fitting
GRID_MIN, GRID_MAX, GRID_POINTS = 1e-4, 1e-1, 25
FIT_WINDOW = (1e-14, 1e-2)

_AXIS_KIND = {"eps": PULSE_LENGTH, "f": OFF_RESONANCE}


def geometric_grid(lo: float = GRID_MIN, hi: float = GRID_MAX, n: int = GRID_POINTS) -> np.ndarray:
    return np.geomspace(lo, hi, n)


def _propagator_ld(pulse: Pulse, kind: str, eps, f) -> np.ndarray:
    """Erroneous propagator in extended precision (axis-angle closed form)."""
    theta = _LD(pulse.angle)
    phi = _LD(pulse.phase)
    if kind == PULSE_LENGTH:
        theta = theta * (1 + _LD(eps))
        w, fz = _LD(1), _LD(0)
    else:
        if pulse.flipped:
            raise ValueError(
                "off-resonance propagators are defined for nonnegative angles only; "
                "this pulse was built from a negative-angle request"
            )
        if kind == OFF_RESONANCE:
            w, fz = _LD(1), _LD(f)
        else:
            w, fz = 1 + _LD(eps), _LD(f)
    m = np.sqrt(w * w + fz * fz)
    a = theta * m / 2
    c = np.cos(a)
    s = np.sin(a) / m
    nx = w * np.cos(phi)
    ny = w * np.sin(phi)
    out = np.empty((2, 2), dtype=_CLD)
    out[0, 0] = c - 1j * s * fz
    out[0, 1] = -1j * s * (nx - 1j * ny)
    out[1, 0] = -1j * s * (nx + 1j * ny)
    out[1, 1] = c + 1j * s * fz
    return out


def _compose_ld(pulses, kind: str, eps, f) -> np.ndarray:
    out = None
    for p in pulses:
        m = _propagator_ld(p, kind, eps, f)
        out = m if out is None else m @ out
    if out is None:
        raise ValueError("cannot compose an empty pulse sequence")
    return out


def _target_matrix_ld(target: Pulse) -> np.ndarray:
    return _propagator_ld(target, PULSE_LENGTH, 0.0, 0.0)


def infidelity_ld(pulses, kind: str, eps, f, target: Pulse) -> float:
    """1 - |Tr(V U^dag)|/2 in extended precision, returned as float-like longdouble."""
    v = _compose_ld(pulses, kind, eps, f)
    u = _target_matrix_ld(target)
    overlap = (v @ u.conj().T).trace() / 2
    return 1 - min(abs(overlap), _LD(1))


def _default_target(seq) -> Pulse:
    if isinstance(seq, PulseSequence):
        return seq.target
    return Pulse(0.0, 0.0)


@dataclass(frozen=True)
class SweepResult:
    """Infidelity sweep plus the log-log fit over the clean window.

    ``order`` is the rounded slope/2 when the fit is unambiguous, None when
    it is not; ``beyond_resolution`` marks sweeps whose infidelities never
    rise above the rounding floor (exact identities).
    """

    values: np.ndarray
    infidelities: np.ndarray
    slope: float | None
    intercept: float | None
    order: int | None
    ambiguous: bool
    beyond_resolution: bool
    fit_residual: float | None
    points_used: int


def estimate_order(seq, axis: str, target: Pulse | None = None, grid=None) -> SweepResult:
    """Infer the error order of a sequence from a log-log infidelity sweep.

    ``axis`` selects the error variable: "eps" sweeps a pure pulse-length
    error, "f" a pure off-resonance error.  Only grid points whose
    infidelity falls inside ``FIT_WINDOW`` enter the fit (below it is
    rounding noise, above it higher orders contaminate the slope); the order
    is accepted when slope/2 is within 0.1 of an integer.
    """
    kind = _AXIS_KIND[axis]
    target = target or _default_target(seq)
    grid = geometric_grid() if grid is None else np.asarray(grid, dtype=float)
    infid = np.array(
        [
            infidelity_ld(seq, kind, x if axis == "eps" else 0.0, x if axis == "f" else 0.0, target)
            for x in grid
        ],
        dtype=float,
    )
    lo, hi = FIT_WINDOW
    keep = (infid >= lo) & (infid <= hi)
    if keep.sum() < 3:
        beyond = bool((infid < lo).all())
        return SweepResult(grid, infid, None, None, None, not beyond, beyond, None, int(keep.sum()))
    x_all = np.log(grid[keep])
    y_all = np.log(infid[keep])

    # The slope approaches 2n only as x -> 0; when the next-order coefficient
    # is much larger than the leading one, the top of the clean window still
    # bends the fit.  Trim from the large-x end until slope/2 locks onto an
    # integer, keeping at least 4 points; report the full-window fit if it
    # never does.
    chosen = None
    for stop in range(len(x_all), 2, -1):
        x, y = x_all[:stop], y_all[:stop]
        slope, intercept = np.polyfit(x, y, 1)
        resid = float(np.sqrt(np.mean((y - (slope * x + intercept)) ** 2)))
        n = round(slope / 2.0)
        ambiguous = abs(slope / 2.0 - n) >= 0.1 or n < 1
        if chosen is None:
            chosen = (slope, intercept, resid, n, ambiguous, stop)
        if not ambiguous and stop >= 4:
            chosen = (slope, intercept, resid, n, ambiguous, stop)
            break
    slope, intercept, resid, n, ambiguous, used = chosen
    return SweepResult(
        grid,
        infid,
        float(slope),
        float(intercept),
        None if ambiguous else int(n),
        ambiguous,
        False,
        resid,
        int(used),
    )


def fit_leading_coefficient(
    seq, axis: str, degree: int, target: Pulse | None = None, grid=None
) -> float:
    """Fit c in infidelity = c x^degree + ... from the small-x end of a sweep.

    The reduced values y/x^degree are extrapolated to x = 0 with a least
    squares fit in (1, x, x^2), which absorbs one odd and one even
    correction term.  Points are used only where the infidelity is large
    enough to be clean and small enough that degree+3 terms stay negligible.
    """
    kind = _AXIS_KIND[axis]
    target = target or _default_target(seq)
    grid = geometric_grid() if grid is None else np.asarray(grid, dtype=float)
    infid = np.array(
        [
            infidelity_ld(seq, kind, x if axis == "eps" else 0.0, x if axis == "f" else 0.0, target)
            for x in grid
        ],
        dtype=float,
    )
    keep = (infid >= 1e-14) & (infid <= 1e-7)
    if keep.sum() < 3:
        keep = (infid >= 1e-14) & (infid <= 1e-6)
    if keep.sum() < 3:
        raise ValueError("noise floor reached: too few clean sweep points for a coefficient fit")
    x = grid[keep]
    r = infid[keep] / x**degree
    basis = np.vstack([np.ones_like(x), x, x * x]).T
    coeffs, *_ = np.linalg.lstsq(basis, r, rcond=None)
    return float(coeffs[0])


@dataclass(frozen=True)
class CrossoverResult:
    """Per-angle leading-error magnitudes for several variants, plus where
    the first two variants swap rank."""

    thetas: np.ndarray
    magnitudes: dict[str, np.ndarray]
    crossover_theta: float | None
    flagged: bool


def _degree3_magnitude(name: str, theta: float) -> float:
    seq = build(name, theta)
    res = _series.residual(seq.pulses, seq.target, PULSE_LENGTH, degree=3)
    if res.degree_pauli_norm(1) > 1e-10 or res.degree_pauli_norm(2) > 1e-10:
        raise ValueError(f"{name} is not second-order correct at theta = {theta}")
    return res.degree_pauli_norm(3)


def crossover_scan(names, thetas) -> CrossoverResult:
    """Third-order error magnitude of second-order pulse-length sequences.

    Evaluates the degree-3 sigma-vector norm of every named variant over the
    angle grid and locates (by bisection) the angle where the first variant's
    magnitude crosses the second's.  A missing sign change is flagged rather
    than guessed.
    """
    names = list(names)
    if len(names) < 2:
        raise ValueError("need at least two variants to compare")
    thetas = np.asarray(thetas, dtype=float)
    mags = {name: np.array([_degree3_magnitude(name, t) for t in thetas]) for name in names}

    a, b = names[0], names[1]
    diff = mags[a] - mags[b]
    crossover = None
    flagged = True
    if np.max(np.abs(diff)) < 1e-12:
        # indistinguishable variants: no crossover to report
        return CrossoverResult(thetas, mags, None, True)
    for i in range(len(thetas) - 1):
        if diff[i] * diff[i + 1] < 0.0:
            lo, hi = thetas[i], thetas[i + 1]
            for _ in range(60):
                mid = 0.5 * (lo + hi)
                dm = _degree3_magnitude(a, mid) - _degree3_magnitude(b, mid)
                if dm == 0.0:
                    lo = hi = mid
                    break
                if (dm < 0.0) == (diff[i] < 0.0):
                    lo = mid
                else:
                    hi = mid
            crossover, flagged = float(0.5 * (lo + hi)), False
            break
    return CrossoverResult(thetas, mags, crossover, flagged)


def inverse_quality(seq, seq_inv, model_kind: str, grid=None) -> SweepResult:
    """Order of the residual of seq_inv following seq, against the identity.

    Both sequences are concatenated chronologically and swept under the given
    model; an exact inverse comes back flagged ``beyond_resolution``.
    """
    axis = "eps" if model_kind == PULSE_LENGTH else "f"
    pulses = tuple(seq) + tuple(seq_inv)
    return estimate_order(pulses, axis, target=Pulse(0.0, 0.0), grid=grid)


@dataclass(frozen=True)
class SurfaceFit:
    """Two-dimensional infidelity table with the fitted leading coefficients."""

    eps_grid: np.ndarray
    f_grid: np.ndarray
    infidelity: np.ndarray  # shape (len(eps_grid), len(f_grid))
    coeff_eps: float
    eps_degree: int
    coeff_f: float
    f_degree: int
    coeff_cross: float  # coefficient of eps^2 f^2


def fidelity_surface(
    seq,
    eps_grid=None,
    f_grid=None,
    target: Pulse | None = None,
    eps_degree: int = 6,
    f_degree: int = 4,
) -> SurfaceFit:
    """Infidelity over a 2-D error grid plus leading-coefficient fits.

    The two axis coefficients come from 1-D fits along the grid edges; the
    eps^2 f^2 cross coefficient is fitted on the diagonal after subtracting
    both axis contributions, with eps^2 f^4 and eps^4 f^2 nuisance terms
    absorbed by least squares.
    """
    target = target or _default_target(seq)
    eps_grid = geometric_grid(3e-3, 3e-2, 7) if eps_grid is None else np.asarray(eps_grid, dtype=float)
    f_grid = geometric_grid(3e-3, 3e-2, 7) if f_grid is None else np.asarray(f_grid, dtype=float)

    surface = np.array(
        [[infidelity_ld(seq, SIMULTANEOUS, e, f, target) for f in f_grid] for e in eps_grid],
        dtype=float,
    )

    coeff_eps = fit_leading_coefficient(seq, "eps", eps_degree, target=target)
    coeff_f = fit_leading_coefficient(seq, "f", f_degree, target=target)

    # Averaging the diagonal cross term over +eps and -eps removes the
    # odd-in-eps piece (an eps f^3 term shares total degree 4 with eps^2 f^2),
    # leaving c22 x^4 plus odd-in-f and even corrections handled by the basis.
    xs, rows = [], []
    for x in np.geomspace(2e-3, 2e-2, 9):
        cross = 0.0
        for sign in (1.0, -1.0):
            total = infidelity_ld(seq, SIMULTANEOUS, sign * x, x, target)
            only_e = infidelity_ld(seq, SIMULTANEOUS, sign * x, 0.0, target)
            only_f = infidelity_ld(seq, SIMULTANEOUS, 0.0, x, target)
            cross += float(total - only_e - only_f) / 2.0
        if abs(cross) > 1e-15:
            xs.append(x)
            rows.append(cross / x**4)
    if len(xs) < 3:
        raise ValueError("noise floor reached: cross term not resolvable on this grid")
    xs = np.asarray(xs)
    basis = np.vstack([np.ones_like(xs), xs, xs * xs]).T
    coeffs, *_ = np.linalg.lstsq(basis, np.asarray(rows), rcond=None)

    return SurfaceFit(
        eps_grid,
        f_grid,
        surface,
        float(coeff_eps),
        eps_degree,
        float(coeff_f),
        f_degree,
        float(coeffs[0]),
    )


def catalog_order_table(theta: float = math.pi) -> dict[str, tuple[int | None, int | None]]:
    """(series order, numeric order) for every catalog sequence at one angle.

    Sequences defined only for 180 degree targets are evaluated there
    regardless of ``theta``.  The simultaneous-error sequence is reported
    under its pulse-length axis.
    """
    out = {}
    for name, model in CATALOG_MODELS.items():
        try:
            seq = build(name, theta)
        except ValueError:
            seq = build(name, math.pi)
        axis = "f" if model == OFF_RESONANCE else "eps"
        kind = _AXIS_KIND[axis]
        rep = _series.leading_error(
            _series.residual(seq.pulses, seq.target, kind, _series.DEFAULT_DEGREE)
        )
        sweep = estimate_order(seq, axis)
        out[name] = (rep.order, sweep.order)
    return out
