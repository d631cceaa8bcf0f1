"""Finite-monoid toolkit: Ramsey decompositions, witnesses, Green's
relations, regular D-length, and idempotent Boolean-matrix structure."""

from .core import (
    Element,
    FiniteMonoid,
    KDecomposition,
    ResourceLimitError,
    Word,
    common_idempotent,
    find_ramsey_decomposition,
    find_ramsey_decomposition_brute,
    is_ramsey,
    parse_monoid_file,
    parse_word_file,
)
from .families import (
    generated_submonoid,
    make_boolmat_monoid,
    make_cyclic,
    make_max,
    make_transformation,
)
from .green import (
    GreenStructure,
    MaxEmbedding,
    chain_to_embedding,
    green_structure,
    largest_max_embedding,
    longest_regular_chain,
    regular_d_length,
    validate_embedding,
)
from .ramsey import (
    PositionMap,
    absorbing_decomposition,
    decompose_in_group,
    decompose_in_max,
    decompose_or_embed,
    embedding_witness,
    group_witness,
    max_monoid_witness,
    ramsey_bounds,
    ramsey_oracle,
)
from .boolmat import (
    ArrowRelation,
    BoolMatrix,
    arrow_relation,
    check_count_descent,
    check_equal_counts_force_equality,
    check_free_pair_containment,
    check_positive_set_containment,
    count_signature,
    free_pairs,
    fuzz_suite,
    idempotent_power,
    is_idempotent,
    is_max_embedding_chain,
    is_stable,
    positive_sets,
    standard_idempotent_chain,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
