"""Initial states: paradigmatic kets, published example states, Haar sampling.

Reproducibility contract: sampling uses the counter-based Philox generator
keyed by (seed, class stream offset), so (state class, 64-bit seed) always
yields bit-identical amplitudes, independently of call order or platform.
"""

from __future__ import annotations

import enum

import numpy as np

NORM_TOL = 1e-12

_SQ2 = 1.0 / np.sqrt(2.0)

# single-qubit eigenbases used by the W-class sampling recipe
_BASIS_Z = (np.array([1.0, 0.0], complex), np.array([0.0, 1.0], complex))
_BASIS_X = (np.array([_SQ2, _SQ2], complex), np.array([_SQ2, -_SQ2], complex))
_BASIS_Y = (np.array([_SQ2, 1j * _SQ2], complex), np.array([_SQ2, -1j * _SQ2], complex))


class StateClass(enum.Enum):
    """The seven sampling families of the 350-state random scan."""

    GHZ_CLASS = "ghz"
    W_CLASS_Z = "wz"
    W_CLASS_X = "wx"
    W_CLASS_Y = "wy"
    BISEPARABLE_A_BC = "a_bc"
    BISEPARABLE_AB_C = "ab_c"
    PRODUCT = "product"


# per-class stream offsets for the Philox key (arbitrary, fixed forever)
_CLASS_STREAM = {
    StateClass.GHZ_CLASS: 0x01,
    StateClass.W_CLASS_Z: 0x02,
    StateClass.W_CLASS_X: 0x03,
    StateClass.W_CLASS_Y: 0x04,
    StateClass.BISEPARABLE_A_BC: 0x05,
    StateClass.BISEPARABLE_AB_C: 0x06,
    StateClass.PRODUCT: 0x07,
}

PARADIGM_NAMES = ("GHZ", "W", "k000", "k001", "k011")

PAPER_EXAMPLE_NAMES = ("GHZ'", "AB:C'", "W'", "Product'")


def _normalize(amps: np.ndarray) -> np.ndarray:
    norm = np.linalg.norm(amps)
    if norm == 0:
        raise ValueError("zero state")
    return amps / norm


def paradigm_state(name: str) -> np.ndarray:
    """GHZ, W or a computational basis ket, as 8 amplitudes."""
    amps = np.zeros(8, dtype=complex)
    if name == "GHZ":
        amps[0] = amps[7] = _SQ2
    elif name == "W":
        amps[1] = amps[2] = amps[4] = 1.0 / np.sqrt(3.0)
    elif name == "k000":
        amps[0] = 1.0
    elif name == "k001":
        amps[1] = 1.0
    elif name == "k011":
        amps[3] = 1.0
    else:
        raise ValueError(f"unknown paradigm state {name!r}")
    return amps


# published coefficients of the four necessarily-transient example states,
# rounded to four decimals in the source, hence normalized after assembly
_GHZ_PRIME = {
    "000": -0.5446 - 0.5546j,
    "001": -0.6614 - 0.1799j,
    "010": 0.4376 + 0.4659j,
    "100": -2.2000 + 0.3749j,
    "011": -1.0505 + 0.2633j,
    "110": -0.4266 - 0.4274j,
    "101": -0.9067 + 0.9039j,
    "111": 0.1572 + 2.3707j,
}

_ABC_PRIME_AB = np.array(
    [-0.2506 - 1.2750j, 0.4573 + 0.0094j, 1.1436 + 0.5672j, -0.9806 + 1.2475j])
_ABC_PRIME_C = np.array([-0.7718 + 0.4604j, 0.2562 - 0.3517j])

_W_PRIME = {
    "001": -0.6549 - 1.5778j,
    "010": 0.1125 - 0.4555j,
    "100": 0.8575 - 0.4032j,
    "000": -0.5980 - 1.0251j,
}

_PRODUCT_PRIME = (
    np.array([0.7938 - 0.4108j, 1.6511 + 0.8510j]),
    np.array([-0.5692 + 1.3391j, -0.5305 - 0.3410j]),
    np.array([-2.4324 - 1.0312j, -1.1394 - 0.7807j]),
)


def _ket_index(bits: str) -> int:
    return int(bits, 2)


def paper_example_state(which: str) -> np.ndarray:
    """One of the four published necessarily-transient initial states."""
    if which == "GHZ'":
        amps = np.zeros(8, dtype=complex)
        for bits, coeff in _GHZ_PRIME.items():
            amps[_ket_index(bits)] = coeff
    elif which == "AB:C'":
        amps = np.kron(_ABC_PRIME_AB, _ABC_PRIME_C)
    elif which == "W'":
        amps = np.zeros(8, dtype=complex)
        for bits, coeff in _W_PRIME.items():
            amps[_ket_index(bits)] = coeff
    elif which == "Product'":
        a, b, c = _PRODUCT_PRIME
        amps = np.kron(np.kron(a, b), c)
    else:
        raise ValueError(f"unknown paper example {which!r}")
    return _normalize(amps)


def _generator(state_class: StateClass, seed: int) -> np.random.Generator:
    key = np.array([np.uint64(seed), np.uint64(_CLASS_STREAM[state_class])])
    return np.random.Generator(np.random.Philox(key=key))


def _gaussian_amplitudes(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


def _haar_vector(rng: np.random.Generator, n: int) -> np.ndarray:
    return _normalize(_gaussian_amplitudes(rng, n))


def _w_class_sample(rng: np.random.Generator, basis) -> np.ndarray:
    """a|001> + b|010> + c|100> + d|000> with |0>, |1> in the given basis."""
    b0, b1 = basis
    kets = (
        np.kron(np.kron(b0, b0), b1),
        np.kron(np.kron(b0, b1), b0),
        np.kron(np.kron(b1, b0), b0),
        np.kron(np.kron(b0, b0), b0),
    )
    coeffs = _gaussian_amplitudes(rng, 4)
    return _normalize(sum(c * k for c, k in zip(coeffs, kets)))


def sample_random(state_class: StateClass, seed: int) -> np.ndarray:
    """Haar-style sample from one of the seven state classes."""
    rng = _generator(state_class, seed)
    if state_class is StateClass.GHZ_CLASS:
        return _haar_vector(rng, 8)
    if state_class is StateClass.W_CLASS_Z:
        return _w_class_sample(rng, _BASIS_Z)
    if state_class is StateClass.W_CLASS_X:
        return _w_class_sample(rng, _BASIS_X)
    if state_class is StateClass.W_CLASS_Y:
        return _w_class_sample(rng, _BASIS_Y)
    if state_class is StateClass.BISEPARABLE_A_BC:
        return np.kron(_haar_vector(rng, 2), _haar_vector(rng, 4))
    if state_class is StateClass.BISEPARABLE_AB_C:
        return np.kron(_haar_vector(rng, 4), _haar_vector(rng, 2))
    if state_class is StateClass.PRODUCT:
        return np.kron(
            np.kron(_haar_vector(rng, 2), _haar_vector(rng, 2)), _haar_vector(rng, 2))
    raise ValueError(f"unknown state class {state_class!r}")


def density_of(psi: np.ndarray) -> np.ndarray:
    """Rank-1 projector |psi><psi| of a normalized pure state."""
    psi = np.asarray(psi, dtype=complex)
    if abs(np.linalg.norm(psi) - 1.0) > NORM_TOL:
        raise ValueError("state is not normalized")
    return np.outer(psi, psi.conj())


def partial_trace(rho: np.ndarray, keep: tuple[int, ...]) -> np.ndarray:
    """Reduced state over the kept qubit slots (0 = A, 1 = B, 2 = C)."""
    t = rho.reshape(2, 2, 2, 2, 2, 2)
    drop = [q for q in range(3) if q not in keep]
    for q in sorted(drop, reverse=True):
        t = np.trace(t, axis1=q, axis2=q + t.ndim // 2)
    d = 2 ** len(keep)
    return t.reshape(d, d)
