from ._hypercover import (
    ThreeGraph,
    audit_theorem,
    build_construction,
    canonical_form,
    find_witness,
    format,
    has_covering,
    is_isomorphic,
    parse,
    random_threegraph,
    threshold_exact,
    vertex_covered,
)

__all__ = [
    "ThreeGraph",
    "audit_theorem",
    "build_construction",
    "canonical_form",
    "find_witness",
    "format",
    "has_covering",
    "is_isomorphic",
    "parse",
    "random_threegraph",
    "threshold_exact",
    "vertex_covered",
]
