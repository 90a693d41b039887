"""Equivariant objects and their (hyper)cohomology."""

from .objects import (
    EquivariantObject,
    GrassmannianSpace,
    ResolutionSpace,
    SchurBundle,
    SpaceMismatch,
    Term,
    parse_space,
    sequence_sum,
)
from .engine import (
    ExtAnswer,
    GradedRep,
    InexactCohomology,
    bundle_cohomology,
    cohomology,
    cohomology_gr,
    cohomology_ty,
    convention_self_test,
    euler_characteristic,
    ext,
    ext_gr,
    ext_ty,
    fiber_pushforward,
    projbundle_pushforward,
    push_to_base,
    serre_check,
)
