"""Graph representation toolkit: conversions, expressivity ordering, verification.

Graphs travel as canonical document text (the ``graphex 1`` format); witness
chains travel as chain text. See the C++ library for the full API.
"""

from _graphex import (
    GraphexError,
    GraphexParseError,
    InvalidGraphError,
    NoPathError,
    NotInImageError,
    canonicalize,
    convert,
    families,
    invert,
    kind_of,
    order,
    parse_kind,
    plan,
    subkind,
    verify,
)

__all__ = [
    "GraphexError",
    "GraphexParseError",
    "InvalidGraphError",
    "NoPathError",
    "NotInImageError",
    "canonicalize",
    "convert",
    "families",
    "invert",
    "kind_of",
    "order",
    "parse_kind",
    "plan",
    "subkind",
    "verify",
]
