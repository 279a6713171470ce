"""Bell-pair engineering on invariant stratification spin networks."""

from .bell import (
    BellDesign,
    FeasibleRow,
    concurrence_pair,
    concurrence_stratum,
    design_couplings,
    entanglement_bound,
    evolve_dense,
    evolve_spectral,
    hamiltonian_matrix,
    scan_feasible_rows,
    verify_design,
)
from .graph import (
    Graph,
    IsgVerdict,
    Stratification,
    SzegoJacobi,
    build_graph,
    distance_matrices,
    is_antipodal,
    is_reflective,
    isg_check,
    stratify,
    szego_jacobi,
)
from .kernels import BACKEND
from .spectral import (
    JacobiMatrix,
    SpectralData,
    eigenvalues,
    expectation,
    jacobi_matrix,
    orthogonality_residual,
    p_matrix,
    reflective_spectrum_check,
    spectral_data,
    weights,
)

__version__ = "0.1.0"
