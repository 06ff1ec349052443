"""Two-qubit operators, states and gates in the Dirac gamma-matrix basis."""
from .bell import (
    BellLabel,
    PhaseAction,
    SpinLabel,
    SymmetryLabel,
    apply_to_bell,
    bell_state,
    derive_symmetry_table,
    gamma2_spin_form,
    gamma_from_bell_outer,
    spin_state,
    symmetry_operator,
)
from .density import (
    DensityMatrix,
    DensityParams,
    bell_projector,
    correlation_residual,
    density_dirac_coeffs,
    density_from_params,
    embed,
    embed_dirac_coeffs,
    entanglement_signature,
    marginal_mixedness,
    one_qubit_density,
    params_of,
    product_density,
    purity,
)
from .dirac import (
    BASIS,
    DiracCoefficients,
    DiracLabel,
    TensorRank,
    decompose,
    dirac_matrix,
    rank_of,
    reconstruct,
    verify_clifford,
)
from .gates import (
    AMUnitaryLabel,
    EvenOddKind,
    EvenOddVerdict,
    GateLabel,
    am_unitary,
    classify_even_odd,
    even_odd_template,
    gate,
    gate_dirac_form,
    swap_bell_decomposition,
)
from .linalg import (
    DEFAULT_TOL,
    adjoint,
    approx_equal,
    hermitian_eigenvalues,
    kron,
    kron_factor,
    matmul,
    partial_trace,
    trace,
)

__version__ = "0.1.0"
