"""Exact f-vectors and primitive f-vectors of flow polytopes Flow_n(a)."""

from ._flowface import (
    cry_edge_count,
    cry_face_series,
    cry_fvector,
    cry_primitive_fvector,
    cry_vertex_count,
    fishburn_count,
    fishburn_matrices,
    fishburn_series,
    flow_vertex_count,
    fvector,
    low_codim_face_count,
    oracle_fvector,
    oracle_primitive_fvector,
    primitive_fvector,
    product_identity_alt_check,
    product_identity_check,
    vertex_tuples,
)

__all__ = [
    "cry_edge_count",
    "cry_face_series",
    "cry_fvector",
    "cry_primitive_fvector",
    "cry_vertex_count",
    "fishburn_count",
    "fishburn_matrices",
    "fishburn_series",
    "flow_vertex_count",
    "fvector",
    "low_codim_face_count",
    "oracle_fvector",
    "oracle_primitive_fvector",
    "primitive_fvector",
    "product_identity_alt_check",
    "product_identity_check",
    "vertex_tuples",
]
