"""Heat currents, finite-difference derivatives and amplification factors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .model import QUBIT_LABELS, QubitLabel, TransistorModel, dissipator, master_rhs
from .dynamics import IntegratorConfig, evolve, steady_state

IMAG_RESIDUE_TOL = 1e-10
DIVERGENCE_THRESHOLD = 1e-12


class ImaginaryResidueError(RuntimeError):
    """Tr(H L_X[rho]) came out with a non-negligible imaginary part."""


class DivergedAmplificationError(RuntimeError):
    """The amplification denominator dJ_B/dT_B underflowed."""


@dataclass(frozen=True)
class StencilConfig:
    """Five-point midpoint stencil increment for all d/dT_B derivatives."""

    h: float = 1e-3

    def __post_init__(self):
        if self.h <= 0:
            raise ValueError("h must be > 0")


@dataclass(frozen=True)
class HeatCurrents:
    j_a: float
    j_b: float
    j_c: float

    @property
    def total(self) -> float:
        return self.j_a + self.j_b + self.j_c

    def as_array(self) -> np.ndarray:
        return np.array([self.j_a, self.j_b, self.j_c])


@dataclass(frozen=True)
class AmplificationResult:
    """Dynamic amplification factors alpha_X = dJ_X/dJ_B at one grid point."""

    alpha_a: float
    alpha_c: float
    djb_dtb: float
    diverged: bool
    t_b: float
    time: float | None  # None marks steady mode
    state_id: str = ""
    stencil_h: float = 1e-3
    currents: HeatCurrents | None = None


def heat_current(model: TransistorModel, bath: QubitLabel, rho: np.ndarray) -> float:
    """J_X = Tr(H_sys L_X[rho]); energy flowing from bath X into the system."""
    h = model.hamiltonian.diag
    value = np.sum(h * np.diag(dissipator(model, bath, rho)))
    if abs(value.imag) > IMAG_RESIDUE_TOL:
        raise ImaginaryResidueError(
            f"J_{bath} has imaginary residue {value.imag:.3e}")
    return float(value.real)


def heat_currents(model: TransistorModel, rho: np.ndarray) -> HeatCurrents:
    return HeatCurrents(*(heat_current(model, x, rho) for x in QUBIT_LABELS))


def five_point_derivative(f: Callable[[float], float], x0: float, h: float) -> float:
    """O(h^4) midpoint rule; exact for polynomials of degree <= 4."""
    return (f(x0 - 2 * h) - 8 * f(x0 - h) + 8 * f(x0 + h) - f(x0 + 2 * h)) / (12 * h)


def _currents_at(
    model: TransistorModel,
    t_b: float,
    rho0: np.ndarray | None,
    t: float | None,
    integrator: IntegratorConfig,
) -> tuple[TransistorModel, np.ndarray]:
    """Model and state at bath-B temperature t_b: steady solve or evolution."""
    shifted = model.with_bath_temperature("B", t_b)
    if rho0 is None:
        rho = steady_state(shifted)
    else:
        rho = evolve(shifted, rho0, t, integrator).final
    return shifted, rho


def amplification(
    model: TransistorModel,
    t_b: float,
    *,
    rho0: np.ndarray | None = None,
    t: float | None = None,
    stencil: StencilConfig = StencilConfig(),
    integrator: IntegratorConfig = IntegratorConfig(),
    state_id: str = "",
) -> AmplificationResult:
    """alpha_A and alpha_C at base temperature t_b.

    Steady mode (rho0 is None): each stencil evaluation is a steady-state
    solve at the shifted temperature.  Transient mode: each evaluation evolves
    the *same* rho0 to time t under the shifted bath-B temperature.  The four
    stencil points are complete, independent re-simulations."""
    h = stencil.h
    if t_b <= 2 * h:
        raise ValueError("need T_B > 2h to keep all stencil temperatures positive")
    if rho0 is not None and t is None:
        raise ValueError("transient mode needs an evolution time t")

    def currents(temp: float) -> np.ndarray:
        shifted, rho = _currents_at(model, temp, rho0, t, integrator)
        return heat_currents(shifted, rho).as_array()

    js = {d: currents(t_b + d * h) for d in (-2, -1, 1, 2)}
    dj = (js[-2] - 8 * js[-1] + 8 * js[1] - js[2]) / (12 * h)
    djb = float(dj[1])
    diverged = abs(djb) < DIVERGENCE_THRESHOLD
    if diverged:
        # signed sentinel magnitudes: keep the sign information, flag the row
        alpha_a = float(np.sign(dj[0]) * np.sign(djb or 1.0) * np.inf) if dj[0] else 0.0
        alpha_c = float(np.sign(dj[2]) * np.sign(djb or 1.0) * np.inf) if dj[2] else 0.0
    else:
        alpha_a = float(dj[0] / djb)
        alpha_c = float(dj[2] / djb)

    _, rho_here = _currents_at(model, t_b, rho0, t, integrator)
    here = heat_currents(model.with_bath_temperature("B", t_b), rho_here)
    return AmplificationResult(
        alpha_a=alpha_a,
        alpha_c=alpha_c,
        djb_dtb=djb,
        diverged=diverged,
        t_b=t_b,
        time=t,
        state_id=state_id,
        stencil_h=h,
        currents=here,
    )


def transient_identity_residual(
    model: TransistorModel,
    t_b: float,
    *,
    rho0: np.ndarray | None = None,
    t: float | None = None,
    stencil: StencilConfig = StencilConfig(),
    integrator: IntegratorConfig = IntegratorConfig(),
) -> float:
    """|LHS - RHS| of the transient amplification identity.

    LHS = alpha_A + alpha_C + 1 from the amplification stencil; RHS applies
    the same stencil in T_B to Tr[H d(rho)/dt] through the full master-equation
    right-hand side (an independent code path through the commutator), divided
    by dJ_B/dT_B."""
    result = amplification(
        model, t_b, rho0=rho0, t=t, stencil=stencil, integrator=integrator)
    if result.diverged:
        raise DivergedAmplificationError(
            f"dJ_B/dT_B = {result.djb_dtb:.3e} below threshold")
    lhs = result.alpha_a + result.alpha_c + 1.0

    h_diag = model.hamiltonian.diag

    def energy_flow(temp: float) -> float:
        shifted, rho = _currents_at(model, temp, rho0, t, integrator)
        return float(np.sum(h_diag * np.diag(master_rhs(shifted, rho))).real)

    rhs = five_point_derivative(energy_flow, t_b, stencil.h) / result.djb_dtb
    return abs(lhs - rhs)


def alpha_gap(result: AmplificationResult) -> float:
    """| |alpha_A| - |alpha_C| |; undefined on divergent results."""
    if result.diverged:
        raise DivergedAmplificationError("alpha_gap undefined for diverged result")
    return abs(abs(result.alpha_a) - abs(result.alpha_c))
