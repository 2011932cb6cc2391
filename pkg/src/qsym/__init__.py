"""Exact arithmetic for quasisymmetric functions in the monomial basis."""

from .algebra import (
    QSymElement,
    TensorElement,
    contract_product,
    coproduct_first,
    coproduct_second,
    counit_first,
    counit_second,
    map_slot,
    monomial,
    tensor,
    triple_tensor,
)
from .chow import (
    BetaElement,
    deep_stratum_class,
    gluing_matches_coproduct,
    gluing_pullback,
    marked_point_involution,
    truncate_tensor,
)
from .compositions import (
    Composition,
    compare_lex,
    enumerate_compositions,
    enumerate_lyndon,
    lyndon_count,
    mobius,
)
from .expansion import (
    SparsePolynomial,
    expand,
    face_map,
    from_polynomial,
    is_quasisymmetric,
    lyndon_generation_matrix,
    lyndon_monomial_multisets,
    rational_rank,
    verify_lyndon_free_generation,
    zero_insertion_holds,
)
from .syntax import (
    ParseError,
    format_beta,
    format_composition,
    format_polynomial,
    format_qsym,
    format_tensor,
    parse_beta,
    parse_composition,
    parse_qsym,
    parse_tensor,
)
from .verification import Check, SUITES, run_all, run_suite

__all__ = [
    "BetaElement",
    "Check",
    "Composition",
    "ParseError",
    "QSymElement",
    "SUITES",
    "SparsePolynomial",
    "TensorElement",
    "compare_lex",
    "contract_product",
    "coproduct_first",
    "coproduct_second",
    "counit_first",
    "counit_second",
    "deep_stratum_class",
    "enumerate_compositions",
    "enumerate_lyndon",
    "expand",
    "face_map",
    "format_beta",
    "format_composition",
    "format_polynomial",
    "format_qsym",
    "format_tensor",
    "from_polynomial",
    "gluing_matches_coproduct",
    "gluing_pullback",
    "is_quasisymmetric",
    "lyndon_count",
    "lyndon_generation_matrix",
    "lyndon_monomial_multisets",
    "map_slot",
    "marked_point_involution",
    "mobius",
    "monomial",
    "parse_beta",
    "parse_composition",
    "parse_qsym",
    "parse_tensor",
    "rational_rank",
    "run_all",
    "run_suite",
    "tensor",
    "triple_tensor",
    "truncate_tensor",
    "verify_lyndon_free_generation",
    "zero_insertion_holds",
]

__version__ = "0.1.0"
