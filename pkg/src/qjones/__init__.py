"""Exact colored Jones polynomials of braid closures.

The invariant is computed as a quantum trace of the braid action on weight
blocks of tensor powers of a generic highest-weight module, over
Z[q^{±1}, s^{±1}], and decomposed into per-degree abelianized Lefschetz
numbers and dual-basis pairings. A brute-force Kauffman bracket oracle
cross-checks the color-2 case.
"""

from .braid import (
    BraidWord,
    ClosureClass,
    closure_class,
    conjugate,
    free_reduce,
    inverse,
    markov_moves,
    mirror,
    parse,
    random_knot_word,
    stabilize,
    writhe,
)
from .errors import (
    BraidSyntaxError,
    ConventionError,
    LetterRangeError,
    NonKnotClosureError,
)
from .homology import (
    Barcode,
    CodeSequence,
    dual_pairing,
    pairing_jones,
    pairing_table,
    trefoil_pairing_closed_form,
    two_strand_pairings,
)
from .invariants import (
    InvariantReport,
    NielsenEntry,
    PerDegreeData,
    colored_jones,
    lefschetz_numbers,
    nielsen_data,
)
from .ring import (
    CLASSICAL,
    LaurentPoly,
    SET_T,
    Specialization,
    aug,
    quantum_binomial,
    quantum_factorial,
    quantum_int,
    specialize,
)
from .skein import jones_from_bracket, kauffman_bracket
from .verma import (
    BlockMatrix,
    LocalRMatrix,
    WeightBasis,
    evaluate_word,
    f_divided_action,
    generator_block,
    local_r_matrix,
    simple_module_trace,
    weight_basis,
)

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "ClosureClass",
    "closure_class",
    "conjugate",
    "free_reduce",
    "inverse",
    "markov_moves",
    "mirror",
    "parse",
    "random_knot_word",
    "stabilize",
    "writhe",
    "BraidSyntaxError",
    "ConventionError",
    "LetterRangeError",
    "NonKnotClosureError",
    "Barcode",
    "CodeSequence",
    "dual_pairing",
    "pairing_jones",
    "pairing_table",
    "trefoil_pairing_closed_form",
    "two_strand_pairings",
    "InvariantReport",
    "NielsenEntry",
    "PerDegreeData",
    "colored_jones",
    "lefschetz_numbers",
    "nielsen_data",
    "CLASSICAL",
    "LaurentPoly",
    "SET_T",
    "Specialization",
    "aug",
    "quantum_binomial",
    "quantum_factorial",
    "quantum_int",
    "specialize",
    "jones_from_bracket",
    "kauffman_bracket",
    "BlockMatrix",
    "LocalRMatrix",
    "WeightBasis",
    "evaluate_word",
    "f_divided_action",
    "generator_block",
    "local_r_matrix",
    "simple_module_trace",
    "weight_basis",
    "__version__",
]
