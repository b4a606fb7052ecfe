"""Submodular integer rank functions on hypercuboids.

The central object is the matricube: a monotone, submodular, unit-step
integer table on a box of integer points, reducing to matroid rank
functions when every direction has width one.  The package covers
validation, the flat/circuit/independent cryptomorphisms, duality and
minors, Tutte-style invariants, linear representations by vector flags,
the bridges to matroid theory (local matroids, coherent complexes,
natural polymatroids, flag matroid unions), permutation arrays, and
exhaustive enumeration on small boxes.
"""

from .core import (
    AxiomError,
    GuardError,
    Hypercuboid,
    Matricube,
    MatricubeError,
    Violation,
    add_unit,
    check_diamond,
    check_dominated_by_uniform,
    check_multidirectional,
    check_submodular_bruteforce,
    complement,
    diamond_violation,
    is_simple,
    is_valid,
    join,
    join_all,
    l1,
    leq,
    meet,
    meet_all,
    multidirectional_violation,
    rank,
    rank_of,
    require_valid,
    submodular_violation,
    uniform,
    validate_rank_axioms,
)
from .cryptomorph import (
    CircuitSet,
    FlatSet,
    IndependentSet,
    ccir_of,
    check_circuits_simple,
    check_flats_simple,
    check_independents_simple,
    circuits_of,
    flats_of,
    independents_of,
    is_orderable,
    matricube_from_circuits,
    matricube_from_flats,
    matricube_from_independents,
    removal,
    size,
    validate_circuit_axioms,
    validate_flat_axioms,
    validate_independent_axioms,
)
from .enumeration import bruteforce_matricubes, enumerate_matricubes
from .jsonio import FormatError
from .matroids import (
    CoherentComplex,
    FlagMatroid,
    Matroid,
    Polymatroid,
    coherent_complex_of,
    local_matroid,
    matricube_from_coherent,
    matricube_from_flag_matroids,
    matroid_union_rank,
    natural_matroid,
    natural_polymatroid,
    validate_coherent,
    validate_flag_matroid,
    validate_matroid_axioms,
    validate_polymatroid_axioms,
)
from .permarray import (
    DotArray,
    is_permutation_array,
    is_totally_rankable,
    matricube_from_permarray,
    permarray_from_matricube,
    rank_along,
    rank_of_array,
    redundant_positions,
)
from .represent import (
    CubicalMatrix,
    FieldSpec,
    exact_rank,
    general_position_flags,
    matricube_from_flags,
    prime_field,
)
from .transforms import (
    BasisCandidateKind,
    TwoVarPolynomial,
    basis_candidates,
    contract,
    delete,
    direct_sum,
    dual,
    is_coloop,
    is_loop,
    minor,
    tutte,
)

__all__ = [name for name in dir() if not name.startswith("_")]
