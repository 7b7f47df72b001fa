"""Graded trigonometric and quantum R matrices of U_q[gl(m|1)], m = 1..4.

Component tables ship as auditable text files; this package evaluates them
at numeric points, recovers the spectral projectors, and verifies the
Yang-Baxter identities they satisfy.
"""

from .build import (
    SparseTensor4,
    eigenvalues,
    identity_tensor,
    instantiate,
    nonzero_stats,
    spectral_limit_error,
    strip_grading,
    tensor_diff_maxabs,
    to_R_form,
    xi_quantum,
    xi_trig,
)
from .grading import grading, state_index, states
from .params import (
    EPS_SING,
    BranchError,
    ParamPoint,
    SingularParameterError,
    qbracket_limit_check,
)
from .projectors import (
    EigenvalueCollision,
    eigen_equation_residual,
    projector_axioms,
    projector_counts,
    projector_traces,
    reconstruct,
    reconstruction_residual,
    recover_projectors,
    u_independence,
)
from .tables import (
    available_tables,
    boldface_strip,
    format_table,
    load_table,
    parse_table,
    validate,
)
from .ybe import (
    CheckReport,
    embed,
    perturb,
    residual_alt_tybe,
    residual_gybe,
    residual_qybe,
    residual_tybe,
    run_checks,
    sample_points,
)

__version__ = "0.1.0"
