"""Time evolution and steady state of the transistor master equation."""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

import numpy as np

from .model import DIM, TransistorModel, liouvillian

TRACE_TOL = 1e-8
HERMITICITY_TOL = 1e-10
POSITIVITY_TOL = 1e-8


class InvariantViolationError(RuntimeError):
    """A trajectory sample broke a density-matrix invariant (dt too large)."""

    def __init__(self, message: str, time: float):
        super().__init__(f"{message} at t = {time}")
        self.time = time


class NonUniqueSteadyStateError(RuntimeError):
    """The Liouvillian null space is not one-dimensional."""


@dataclass(frozen=True)
class IntegratorConfig:
    """Fixed-step classical 4th-order Runge-Kutta settings."""

    dt: float = 1e-3

    def __post_init__(self):
        if not 0 < self.dt <= 0.01:
            raise ValueError("dt must be in (0, 0.01]; the stiffest default rate "
                             "J(2)(1+n) ~ 2 needs >= 50 steps per relaxation time")


@dataclass
class Trajectory:
    """Density-matrix samples (t, rho) at strictly increasing times."""

    times: list[float] = field(default_factory=list)
    states: list[np.ndarray] = field(default_factory=list)

    def append(self, t: float, rho: np.ndarray):
        if self.times and t <= self.times[-1]:
            raise ValueError("sample times must be strictly increasing")
        self.times.append(t)
        self.states.append(rho)

    @property
    def final(self) -> np.ndarray:
        return self.states[-1]

    def __iter__(self):
        return iter(zip(self.times, self.states))

    def __len__(self):
        return len(self.times)


def validate_density_matrix(rho: np.ndarray, *, time: float = 0.0) -> None:
    """Check Hermiticity, unit trace and positivity within solver tolerances."""
    if abs(np.trace(rho).real - 1.0) > TRACE_TOL or abs(np.trace(rho).imag) > TRACE_TOL:
        raise InvariantViolationError(f"trace drifted to {np.trace(rho)}", time)
    if np.abs(rho - rho.conj().T).max() > HERMITICITY_TOL:
        raise InvariantViolationError("Hermiticity violated", time)
    if np.linalg.eigvalsh((rho + rho.conj().T) / 2).min() < -POSITIVITY_TOL:
        raise InvariantViolationError("negative eigenvalue beyond tolerance", time)


@functools.lru_cache(maxsize=256)
def _rk4_step_matrix(model: TransistorModel, dt: float) -> np.ndarray:
    """One classical RK4 step for the linear system d(vec rho)/dt = L vec rho.

    For a linear autonomous system the four-stage update collapses exactly to
    the degree-4 Taylor polynomial of exp(dt L)."""
    ld = liouvillian(model) * dt
    m = np.eye(DIM * DIM, dtype=complex) + ld
    term = ld
    for k in (2, 3, 4):
        term = term @ ld / k
        m += term
    return m


def _propagate(model: TransistorModel, vec: np.ndarray, duration: float, dt: float) -> np.ndarray:
    """Advance vec(rho) by `duration` in fixed dt steps, shortening the last."""
    if duration <= 0:
        return vec
    n_full = int(duration / dt + 1e-9)
    remainder = duration - n_full * dt
    if n_full:
        vec = np.linalg.matrix_power(_rk4_step_matrix(model, dt), n_full) @ vec
    if remainder > 1e-12:
        vec = _rk4_step_matrix(model, remainder) @ vec
    return vec


def evolve(
    model: TransistorModel,
    rho0: np.ndarray,
    t_end: float,
    cfg: IntegratorConfig = IntegratorConfig(),
    sample_times: list[float] | None = None,
) -> Trajectory:
    """Integrate the master equation from rho0 to t_end.

    Samples are taken at `sample_times` (defaulting to just t_end; t_end is
    always included).  Trace and positivity are monitored at every sample, not
    renormalized, so step-size error stays visible."""
    if t_end < 0:
        raise ValueError("t_end must be >= 0")
    rho0 = np.asarray(rho0, dtype=complex)
    validate_density_matrix(rho0, time=0.0)

    times = sorted(set(sample_times)) if sample_times else []
    if times and (times[0] < 0 or times[-1] > t_end + 1e-12):
        raise ValueError("sample_times must lie in [0, t_end]")
    if not times or times[-1] < t_end - 1e-12:
        times.append(t_end)

    traj = Trajectory()
    vec = rho0.ravel().copy()
    t_prev = 0.0
    if times[0] <= 1e-15:
        traj.append(0.0, rho0.copy())
        times = times[1:]
    for t in times:
        vec = _propagate(model, vec, t - t_prev, cfg.dt)
        t_prev = t
        rho = vec.reshape(DIM, DIM)
        validate_density_matrix(rho, time=t)
        traj.append(t, rho.copy())
    return traj


SINGULAR_VALUE_TOL = 1e-10
UNIQUENESS_GAP = 1e-6


def steady_state(model: TransistorModel) -> np.ndarray:
    """Unique fixed point of the master equation via the Liouvillian null space.

    Takes the right singular vector of smallest singular value of the 64x64
    Liouvillian, reshapes, Hermitizes and normalizes the trace.  Fails if the
    smallest singular value is not numerically zero or the second-smallest is
    small enough to signal a non-unique steady state."""
    lv = liouvillian(model)
    _, sv, vh = np.linalg.svd(lv)
    if sv[-1] > SINGULAR_VALUE_TOL:
        raise NonUniqueSteadyStateError(
            f"no null vector: smallest singular value {sv[-1]:.3e}")
    if sv[-2] < UNIQUENESS_GAP:
        raise NonUniqueSteadyStateError(
            f"degenerate null space: second singular value {sv[-2]:.3e}")
    rho = vh[-1].conj().reshape(DIM, DIM)
    rho = (rho + rho.conj().T) / 2
    rho /= np.trace(rho).real
    validate_density_matrix(rho)
    return rho


def trace_distance(a: np.ndarray, b: np.ndarray) -> float:
    """(1/2) ||a - b||_1 for Hermitian a, b."""
    return 0.5 * np.abs(np.linalg.eigvalsh(a - b)).sum()
