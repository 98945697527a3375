"""Three-qubit thermal-transistor model: Hamiltonian, bath channels, master equation.

Conventions
-----------
Basis states |abc> with qubit order A, B, C and index 4a + 2b + c
(0-based; the 1-based labels |1> = |000> ... |8> = |111> are used in docs).
|0> is the sigma_z eigenvector with eigenvalue +1.  hbar = k_B = 1, all
quantities dimensionless.
"""

from __future__ import annotations

import functools
import math
import warnings
from dataclasses import dataclass

import numpy as np

DIM = 8

QubitLabel = str
QUBIT_LABELS: tuple[QubitLabel, ...] = ("A", "B", "C")

# bit position of each qubit in the basis index 4a + 2b + c
QUBIT_BIT = {"A": 2, "B": 1, "C": 0}

# frequencies closer than this are treated as one Bohr-frequency group
FREQUENCY_TOL = 1e-9


class DegeneracyWarning(UserWarning):
    """A zero-frequency transition group was found for a bath.

    Such groups are excluded from the positive-frequency jump operators;
    they act through the separate zero-frequency channels instead."""


@dataclass(frozen=True)
class CouplingConfig:
    """Pairwise sigma_z x sigma_z coupling energies between the qubits."""

    omega_ab: float = 1.0
    omega_bc: float = 1.0
    omega_ca: float = 0.0

    def __post_init__(self):
        for v in (self.omega_ab, self.omega_bc, self.omega_ca):
            if not math.isfinite(v):
                raise ValueError("coupling energies must be finite")


@dataclass(frozen=True)
class BathConfig:
    """One Ohmic bosonic bath attached to a single qubit."""

    label: QubitLabel
    temperature: float
    kappa: float = 1.0

    def __post_init__(self):
        if self.label not in QUBIT_LABELS:
            raise ValueError(f"unknown qubit label {self.label!r}")
        if not self.temperature > 0:
            raise ValueError("bath temperature must be > 0")
        if self.kappa < 0:
            raise ValueError("kappa must be >= 0")


@dataclass(frozen=True)
class Hamiltonian:
    """System Hamiltonian; diagonal in the computational basis."""

    energies: tuple[float, ...]

    def __post_init__(self):
        if len(self.energies) != DIM:
            raise ValueError("need 8 diagonal energies")

    @property
    def diag(self) -> np.ndarray:
        return np.asarray(self.energies, dtype=float)

    def matrix(self) -> np.ndarray:
        return np.diag(self.diag)


@dataclass(frozen=True)
class FrequencyGroup:
    """All single-flip transitions of one bath's qubit at one Bohr frequency.

    Pairs are oriented (upper, lower): E_upper - E_lower = frequency >= 0."""

    frequency: float
    pairs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class JumpOperator:
    """Eigenoperator of one bath at a strictly positive Bohr frequency."""

    bath: QubitLabel
    frequency: float
    pairs: tuple[tuple[int, int], ...]  # (upper, lower), E_up - E_lo = frequency
    rate_down: float  # J(w) (1 + n)
    rate_up: float  # J(w) n

    def matrix(self) -> np.ndarray:
        """Lowering pattern A[lower, upper] = 1 over the group's pairs."""
        a = np.zeros((DIM, DIM))
        for upper, lower in self.pairs:
            a[lower, upper] = 1.0
        return a


@dataclass(frozen=True)
class ZeroFrequencyChannel:
    """Energy-conserving flip channel of one bath (degenerate transition pair).

    The Ohmic rate J(w) n(w) -> kappa T as w -> 0+, so each orientation of the
    flip acts as an independent Lindblad operator at rate kappa * T."""

    bath: QubitLabel
    pair: tuple[int, int]
    rate: float


def _spin(bit: int) -> int:
    return 1 - 2 * bit


def build_hamiltonian(cfg: CouplingConfig) -> Hamiltonian:
    """Diagonal energies of the pairwise sigma_z sigma_z Hamiltonian."""
    energies = []
    for idx in range(DIM):
        sa, sb, sc = _spin((idx >> 2) & 1), _spin((idx >> 1) & 1), _spin(idx & 1)
        energies.append(
            0.5 * (cfg.omega_ab * sa * sb + cfg.omega_bc * sb * sc + cfg.omega_ca * sc * sa)
        )
    return Hamiltonian(tuple(energies))


def bohr_spectrum(h: Hamiltonian, bath: QubitLabel) -> list[FrequencyGroup]:
    """Single-flip transitions of the bath's qubit, grouped by Bohr frequency.

    Each of the 4 flip pairs appears once, oriented (upper, lower); groups are
    sorted by ascending frequency and a zero-frequency group is included when
    the pair is degenerate."""
    bit = QUBIT_BIT[bath]
    e = h.diag
    groups: list[tuple[float, list[tuple[int, int]]]] = []
    for j in range(DIM):
        i = j ^ (1 << bit)
        if i > j:
            continue
        upper, lower = (i, j) if e[i] >= e[j] else (j, i)
        w = e[upper] - e[lower]
        if w <= FREQUENCY_TOL:
            upper, lower = min(i, j), max(i, j)
            w = 0.0
        for gw, pairs in groups:
            if abs(gw - w) <= FREQUENCY_TOL:
                pairs.append((upper, lower))
                break
        else:
            groups.append((w, [(upper, lower)]))
    groups.sort(key=lambda g: g[0])
    return [FrequencyGroup(w, tuple(pairs)) for w, pairs in groups]


def bose_occupation(omega: float, temperature: float) -> float:
    """Bose-Einstein occupation 1/(e^{w/T} - 1), overflow-safe.

    Uses n = e^{-w/T} / (1 - e^{-w/T}); the naive form overflows already at
    w/T = 710."""
    if omega <= 0:
        raise ValueError("omega must be > 0")
    if temperature <= 0:
        raise ValueError("temperature must be > 0")
    x = math.exp(-omega / temperature)
    return x / (1.0 - x)


def jump_operators(h: Hamiltonian, bath: BathConfig) -> list[JumpOperator]:
    """One jump operator per strictly positive Bohr-frequency group.

    Zero-frequency groups are excluded here (a DegeneracyWarning is emitted so
    the caller can see the dropped group); they enter the dynamics through
    :func:`zero_frequency_channels`."""
    ops = []
    for group in bohr_spectrum(h, bath.label):
        if group.frequency <= FREQUENCY_TOL:
            warnings.warn(
                f"bath {bath.label}: zero-frequency transition group "
                f"{group.pairs} excluded from jump operators",
                DegeneracyWarning,
                stacklevel=2,
            )
            continue
        w = group.frequency
        n = bose_occupation(w, bath.temperature)
        spectral = bath.kappa * w
        ops.append(
            JumpOperator(
                bath=bath.label,
                frequency=w,
                pairs=group.pairs,
                rate_down=spectral * (1.0 + n),
                rate_up=spectral * n,
            )
        )
    return ops


def zero_frequency_channels(h: Hamiltonian, bath: BathConfig) -> list[ZeroFrequencyChannel]:
    """Flip channels of the bath's degenerate transition pairs, rate kappa*T."""
    channels = []
    for group in bohr_spectrum(h, bath.label):
        if group.frequency <= FREQUENCY_TOL:
            for pair in group.pairs:
                channels.append(
                    ZeroFrequencyChannel(
                        bath=bath.label,
                        pair=pair,
                        rate=bath.kappa * bath.temperature,
                    )
                )
    return channels


@dataclass(frozen=True)
class TransistorModel:
    """Three coupled qubits, each attached to its own Ohmic bath."""

    coupling: CouplingConfig
    baths: tuple[BathConfig, BathConfig, BathConfig]

    def __post_init__(self):
        labels = tuple(b.label for b in self.baths)
        if labels != QUBIT_LABELS:
            raise ValueError(f"baths must be given in order A, B, C, got {labels}")

    @classmethod
    def default(
        cls,
        t_a: float = 0.2,
        t_b: float = 0.08,
        t_c: float = 0.02,
        coupling: CouplingConfig = CouplingConfig(),
        kappa: float = 1.0,
    ) -> "TransistorModel":
        return cls(
            coupling=coupling,
            baths=(
                BathConfig("A", t_a, kappa),
                BathConfig("B", t_b, kappa),
                BathConfig("C", t_c, kappa),
            ),
        )

    def bath(self, label: QubitLabel) -> BathConfig:
        return self.baths[QUBIT_LABELS.index(label)]

    def with_bath_temperature(self, label: QubitLabel, temperature: float) -> "TransistorModel":
        baths = tuple(
            BathConfig(b.label, temperature, b.kappa) if b.label == label else b
            for b in self.baths
        )
        return TransistorModel(self.coupling, baths)  # type: ignore[arg-type]

    @property
    def hamiltonian(self) -> Hamiltonian:
        return build_hamiltonian(self.coupling)

    def jump_operators(self, label: QubitLabel) -> list[JumpOperator]:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", DegeneracyWarning)
            return jump_operators(self.hamiltonian, self.bath(label))

    def zero_frequency_channels(self, label: QubitLabel) -> list[ZeroFrequencyChannel]:
        return zero_frequency_channels(self.hamiltonian, self.bath(label))


def _bath_channels(model: TransistorModel, label: QubitLabel) -> list[tuple[int, int, float]]:
    """Flatten one bath's dissipation to (target, source, rate) jump channels.

    Each transition pair is applied as its own Lindblad operator |target><source|
    (the incoherent, per-transition treatment of the degenerate eigenbasis)."""
    channels = []
    for op in model.jump_operators(label):
        for upper, lower in op.pairs:
            channels.append((lower, upper, op.rate_down))
            channels.append((upper, lower, op.rate_up))
    for zc in model.zero_frequency_channels(label):
        i, j = zc.pair
        channels.append((i, j, zc.rate))
        channels.append((j, i, zc.rate))
    return channels


@functools.lru_cache(maxsize=256)
def _bath_channels_cached(model: TransistorModel, label: QubitLabel) -> tuple[tuple[int, int, float], ...]:
    return tuple(_bath_channels(model, label))


def dissipator(model: TransistorModel, bath: QubitLabel, rho: np.ndarray) -> np.ndarray:
    """Lindblad dissipator of one bath applied to a density matrix.

    Traceless and Hermiticity-preserving.  For a single jump channel
    L = |a><b| at rate g the contribution is
    g * (rho_bb |a><a| - (1/2){rho, |b><b|})."""
    rho = np.asarray(rho, dtype=complex)
    out = np.zeros((DIM, DIM), dtype=complex)
    for a, b, g in _bath_channels_cached(model, bath):
        out[a, a] += g * rho[b, b]
        out[b, :] -= 0.5 * g * rho[b, :]
        out[:, b] -= 0.5 * g * rho[:, b]
    return out


def master_rhs(model: TransistorModel, rho: np.ndarray) -> np.ndarray:
    """Right-hand side of the master equation: -i[H, rho] + sum of dissipators.

    H is diagonal, so the commutator only touches off-diagonal entries."""
    rho = np.asarray(rho, dtype=complex)
    e = model.hamiltonian.diag
    out = (-1j * (e[:, None] - e[None, :])) * rho
    for label in QUBIT_LABELS:
        out += dissipator(model, label, rho)
    return out


@functools.lru_cache(maxsize=256)
def liouvillian(model: TransistorModel) -> np.ndarray:
    """The 64x64 matrix of rho -> master_rhs(rho) over row-major vec(rho)."""
    e = model.hamiltonian.diag
    ident = np.eye(DIM)
    h = np.diag(e)
    lv = -1j * (np.kron(h, ident) - np.kron(ident, h))
    for label in QUBIT_LABELS:
        for a, b, g in _bath_channels_cached(model, label):
            e_ab = np.zeros((DIM, DIM))
            e_ab[a, b] = 1.0
            e_bb = np.zeros((DIM, DIM))
            e_bb[b, b] = 1.0
            lv += g * (
                np.kron(e_ab, e_ab)
                - 0.5 * np.kron(e_bb, ident)
                - 0.5 * np.kron(ident, e_bb)
            )
    return lv


def gibbs_state(h: Hamiltonian, temperature: float) -> np.ndarray:
    """Thermal state e^{-H/T} / Z."""
    if temperature <= 0:
        raise ValueError("temperature must be > 0")
    w = np.exp(-(h.diag - h.diag.min()) / temperature)
    return np.diag(w / w.sum()).astype(complex)
