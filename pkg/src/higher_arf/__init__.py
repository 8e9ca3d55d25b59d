"""m-Arf functions, lifts of Fuchsian groups to G_m and moduli components of
hyperbolic Gorenstein quasi-homogeneous surface singularities."""

from .signature import (
    ArfType,
    Signature,
    admissible_types,
    count_arf_functions,
    elliptic_level,
    is_hyperbolic,
    liftable,
)
from .arf import ArfFunction, arf_invariant, enumerate_all, new_arf
from .mcg import TwistMove, apply_twist, classify_orbits, normal_form, orbit
from .moebius import MoebiusTransformation, classify, rotation_about
from .covering import LiftedElement, canonical_lift, level
from .fuchsian import (
    SequentialSet,
    is_sequential,
    lift_with_levels,
    make_genus1,
    make_signature,
    make_triple,
    verify_arf_axioms,
)
from .moduli import ComponentReport, components

__version__ = "0.1.0"

__all__ = [
    "ArfType",
    "Signature",
    "admissible_types",
    "count_arf_functions",
    "elliptic_level",
    "is_hyperbolic",
    "liftable",
    "SequentialSet",
    "is_sequential",
    "lift_with_levels",
    "make_genus1",
    "make_signature",
    "make_triple",
    "verify_arf_axioms",
    "ArfFunction",
    "arf_invariant",
    "enumerate_all",
    "new_arf",
    "TwistMove",
    "apply_twist",
    "classify_orbits",
    "normal_form",
    "orbit",
    "MoebiusTransformation",
    "classify",
    "rotation_about",
    "LiftedElement",
    "canonical_lift",
    "level",
    "ComponentReport",
    "components",
]
