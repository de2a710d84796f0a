"""Exact computations with Artinian Gorenstein algebras and their Lefschetz properties."""

__version__ = "0.1.0"

from .apolarity import (
    ArtinAlgebra,
    DualGenerator,
    GradedIdealSlice,
    ann_slice,
    annihilating_scheme_probe,
    catalecticant,
    colon_by_maximal_slice,
    colon_dual,
    grow_ideal_slices,
    hilbert_function,
    quotient_by_linear_hf,
)
from .fields import QQ, DenseMatrix, FieldSpec, det_eval, kernel_basis, rank
from .lefschetz import (
    LefschetzVerdict,
    generic_verdict,
    hessian_det_at,
    hessian_matrix_at,
    is_cone,
    jordan_type,
    mult_rank,
    pairing_matrix,
    quotient_basis,
    verdict_at,
)
from .polyring import (
    LinearForm,
    Polynomial,
    contract,
    monomial_basis,
    multiply,
    parse_linear_form,
    parse_polynomial,
    power,
)
from .sequences import (
    conjugate_partition,
    enumerate_gorenstein_sequences,
    invariants,
    is_codim3_gorenstein_sequence,
    is_O_sequence,
    is_SI_sequence,
    macaulay_bound,
    theorem_coverage,
)
