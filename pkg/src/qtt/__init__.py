"""Three-qubit quantum thermal transistor simulator."""

__version__ = "0.1.0"

from .model import (  # noqa: F401
    BathConfig,
    CouplingConfig,
    Hamiltonian,
    JumpOperator,
    TransistorModel,
    bohr_spectrum,
    bose_occupation,
    build_hamiltonian,
    dissipator,
    gibbs_state,
    jump_operators,
    liouvillian,
    master_rhs,
    zero_frequency_channels,
)
from .dynamics import (  # noqa: F401
    IntegratorConfig,
    Trajectory,
    evolve,
    steady_state,
    trace_distance,
)
from .observables import (  # noqa: F401
    AmplificationResult,
    HeatCurrents,
    StencilConfig,
    alpha_gap,
    amplification,
    five_point_derivative,
    heat_current,
    heat_currents,
    transient_identity_residual,
)
from .states import (  # noqa: F401
    StateClass,
    density_of,
    paper_example_state,
    paradigm_state,
    sample_random,
)
