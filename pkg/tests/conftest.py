"""Shared fixtures for the qtt test suite."""

import numpy as np
import pytest

from qtt import TransistorModel


@pytest.fixture(scope="session")
def model():
    """Default transistor model: T_A = 0.2, T_B = 0.08, T_C = 0.02, kappa = 1."""
    return TransistorModel.default()


@pytest.fixture()
def rng():
    return np.random.default_rng(1234)


@pytest.fixture()
def random_density(rng):
    """A generic full-rank density matrix for linearity / invariance checks."""
    m = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    rho = m @ m.conj().T
    return rho / np.trace(rho).real
