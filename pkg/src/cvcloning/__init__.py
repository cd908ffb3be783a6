"""Gaussian simulation of optimal N -> M coherent-state cloners built from
beam splitters and a phase-insensitive amplifier."""

from .gaussian import (
    VACUUM_VARIANCE,
    ComplexModeUnitary,
    GaussianState,
    RejectedTransformError,
    SymplecticTransform,
    apply,
    coherent_state,
    fidelity_vs_coherent,
    fidelity_vs_pure,
    omega,
    optimal_added_variance,
    optimal_fidelity,
    quadrature_variance,
    reduced_state,
    squeezed_vacuum,
    symplectic_eigenvalues,
    tensor,
    vacuum_state,
)
from .elements import (
    Amplifier,
    BeamSplitter,
    DFTBlock,
    Permutation,
    PhaseShift,
    UnitaryBlock,
    amplifier,
    beam_splitter,
    dft,
    inverse_n_splitter,
    m_splitter,
    symplectic_from_unitary,
)
from .cloner import (
    VARIANTS,
    Circuit,
    ClonerLayout,
    CloneReport,
    anticlone_report,
    build_cloner,
    build_cloner_dft,
    build_cloner_percopy,
    build_duplicator,
    circuit_from_json,
    report,
    run,
)

__version__ = "0.1.0"
