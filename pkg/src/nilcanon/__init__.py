"""Certified canonical representatives for nilpotent orbits and unipotent
classes of the classical groups, computed in exact arithmetic.

The top-level namespace re-exports the working surface; see README.md for
a tour and the CLI entry point ``nilcanon``.
"""

from .canon import (
    CanonicalForm,
    StructureForm,
    asymmetric_nilpotent,
    canonical_classical,
    canonical_gl,
    canonical_unitary_nilpotent,
    generic_representative,
    structure_matrix,
    symmetrize,
    symmetrize_with_script,
    unitary_alpha,
)
from .exactfield import (
    field_make,
    format_scalar,
    frobenius_q,
    galois_field,
    parse_scalar,
    prime_field,
    quadratic_ext,
    rationals,
    scalar_arith,
    trace_to_base,
)
from .matrixcore import (
    ElementaryOp,
    Mat,
    antidiag_transpose,
    elementary_conjugate,
    mat_add,
    mat_inverse,
    mat_mul,
    mat_pow,
    mat_rank,
    mat_scale,
    mat_transpose,
)
from .orbitstruct import (
    Block,
    BlockLayout,
    LieType,
    Partition,
    WeightedDiagram,
    bad_block_criterion,
    block_layout,
    classify_orbits,
    enumerate_partitions,
    is_bad,
    is_very_even,
    lk_sequences,
    weighted_dynkin,
)
from .springer import (
    FrobeniusSpec,
    GroupTarget,
    cayley,
    cayley_inv,
    frobenius_apply,
    is_group_fixed,
    springer_gl,
    springer_gl_inv,
    standard_frobenius,
    unipotent_representative,
    unitary_frobenius,
    unitary_springer,
    unitary_springer_inv,
)
from .verify import (
    Certificate,
    certify,
    in_dense_orbit,
    is_F_stable,
    is_f_symmetric,
    jordan_type,
    satisfies_lie_condition,
    supported_on,
)

__version__ = "0.1.0"
