"""Nonadditive (Tsallis) conditional entropy and entropic separability tests."""

from .classical import (
    QIndex,
    conditional_table,
    conditional_tsallis,
    escort,
    marginal,
    pseudoadditivity_residual,
    shannon_entropy,
    tsallis_entropy,
)
from .criteria import (
    CriterionReport,
    alpha_entropic_criterion,
    asymptotic_threshold_check,
    entropic_criterion,
    ppt_test,
    renyi_entropy,
    threshold_curve,
    werner_conditional_closed_form,
    werner_state,
    werner_threshold,
)
from .errors import EntropyError
from .matcore import hermitian_eigen, kron, partial_trace, partial_transpose
from .quantum import (
    DensityMatrix,
    SeparableSpec,
    assemble_separable,
    from_pure,
    quantum_conditional_tsallis,
    quantum_pseudoadditivity_residual,
    quantum_tsallis,
    von_neumann_entropy,
)

__version__ = "0.1.0"
