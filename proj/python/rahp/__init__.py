"""Right-angled hyperbolic polyhedra: combinatorics, volumes and volume bounds."""

from ._core import (
    ErrBoundedValue,
    InvalidPolytope,
    ParseError,
    Polytope,
    antiprism,
    bounds,
    classify,
    double_along_face,
    loebell,
    lobachevsky,
    octahedron_chain,
    parse,
    prism,
    tetrahedron,
    v3,
    v8,
    verify,
    vol_antiprism,
    vol_loebell,
)

__all__ = [
    "ErrBoundedValue",
    "InvalidPolytope",
    "ParseError",
    "Polytope",
    "antiprism",
    "bounds",
    "classify",
    "double_along_face",
    "loebell",
    "lobachevsky",
    "octahedron_chain",
    "parse",
    "prism",
    "tetrahedron",
    "v3",
    "v8",
    "verify",
    "vol_antiprism",
    "vol_loebell",
]
