"""Blocking sets and projective systems of subspaces in small finite projective geometries."""

from .errors import (
    CapabilityError,
    ConstructionUnavailable,
    DimensionError,
    DomainError,
    GeometryError,
    IncompleteSearchError,
    InfeasibleError,
    LimitError,
    ParseError,
)
from .geometry import Subspace, build_index, canonical_form, enumerate_subspaces, gbin
from .gf import field_of_order, make_field
from .systems import (
    SpaceMultiset,
    complement,
    emit_certificate,
    multiset_sum,
    parse_certificate,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "CapabilityError",
    "ConstructionUnavailable",
    "DimensionError",
    "DomainError",
    "GeometryError",
    "IncompleteSearchError",
    "InfeasibleError",
    "LimitError",
    "ParseError",
    "SpaceMultiset",
    "Subspace",
    "build_index",
    "canonical_form",
    "complement",
    "emit_certificate",
    "enumerate_subspaces",
    "field_of_order",
    "gbin",
    "make_field",
    "multiset_sum",
    "parse_certificate",
    "verify",
]
