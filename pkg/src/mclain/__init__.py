"""Exact arithmetic and structure theory for groups built from finite relations.

A finite relation satisfying two structural axioms indexes a sparse
algebra of nilpotent coefficient maps over a coefficient ring; the
units 1 + x of that algebra form the group this package computes in.
The public surface covers the coefficient rings, the relation calculus,
group element arithmetic, central series and quotients, factorization
into generator products, and a command line front end.
"""

from .elements import (
    Comm,
    Gen,
    GeneratorWord,
    GroupElement,
    Inv,
    McLainGroup,
    One,
    format_word,
)
from .factorization import (
    NgonReport,
    OrderedForm,
    demonstrate_ngon_obstruction,
    minimal_closed_support,
    ordered_factorization,
    word_factorization,
)
from .parsing import (
    parse_element_expression,
    parse_normal_form,
    parse_order_file,
    parse_order_text,
)
from .relations import (
    AxiomReport,
    ExchangeViolation,
    Pair,
    ParseError,
    ReflexiveViolation,
    Relation,
    SubsetChain,
    bracket,
    chain,
    check_axioms,
    closure,
    difference,
    format_relation,
    from_pairs,
    gamma_series,
    has_maximal,
    has_minimal,
    is_closed,
    is_normal,
    isolated,
    ngon,
    ngon_diagonals,
    ngon_edges,
    normal_closure,
    parse_relation_file,
    parse_relation_text,
    random_pruned_order,
    random_relation,
    require_valid,
    spanned_nodes,
)
from .rings import (
    Integers,
    IntegersMod,
    Matrices2x2Mod,
    Ring,
    RingError,
    RingValue,
    parse_ring_spec,
)
from .series import (
    FactorReport,
    center_support,
    coset_representative,
    format_chain_lines,
    lower_central_series,
    nilpotency_class,
    quotient_project,
    upper_central_series,
)

__all__ = [
    "AxiomReport",
    "Comm",
    "ExchangeViolation",
    "FactorReport",
    "Gen",
    "GeneratorWord",
    "GroupElement",
    "Integers",
    "IntegersMod",
    "Inv",
    "Matrices2x2Mod",
    "McLainGroup",
    "NgonReport",
    "One",
    "OrderedForm",
    "Pair",
    "ParseError",
    "ReflexiveViolation",
    "Relation",
    "Ring",
    "RingError",
    "RingValue",
    "SubsetChain",
    "bracket",
    "center_support",
    "chain",
    "check_axioms",
    "closure",
    "coset_representative",
    "demonstrate_ngon_obstruction",
    "difference",
    "format_chain_lines",
    "format_relation",
    "format_word",
    "from_pairs",
    "gamma_series",
    "has_maximal",
    "has_minimal",
    "is_closed",
    "is_normal",
    "isolated",
    "lower_central_series",
    "minimal_closed_support",
    "ngon",
    "ngon_diagonals",
    "ngon_edges",
    "nilpotency_class",
    "normal_closure",
    "ordered_factorization",
    "parse_element_expression",
    "parse_normal_form",
    "parse_order_file",
    "parse_order_text",
    "parse_relation_file",
    "parse_relation_text",
    "parse_ring_spec",
    "quotient_project",
    "random_pruned_order",
    "random_relation",
    "require_valid",
    "spanned_nodes",
    "upper_central_series",
    "word_factorization",
]
