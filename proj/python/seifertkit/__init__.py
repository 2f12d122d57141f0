"""Python bindings for the seifertkit C++ library.

Matrices are lists of rows of Python ints; results that are reports come
back as plain dicts with the same fields as the CLI's JSON output.
"""

from ._core import (
    InputError,
    alexander,
    analyze,
    brute_force_congruence,
    chain_certificate,
    congruence_classifier,
    det,
    h1_double_cover,
    isotropic_vector,
    knot_determinant,
    metabolizer_form,
    sequiv_pair,
    signature,
    smith_diagonal,
    table_screen,
    verify_certificate,
)

__all__ = [
    "InputError",
    "alexander",
    "analyze",
    "brute_force_congruence",
    "chain_certificate",
    "congruence_classifier",
    "det",
    "h1_double_cover",
    "isotropic_vector",
    "knot_determinant",
    "metabolizer_form",
    "sequiv_pair",
    "signature",
    "smith_diagonal",
    "table_screen",
    "verify_certificate",
]
