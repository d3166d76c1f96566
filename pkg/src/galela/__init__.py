"""Exact finite geometry over small fields.

Field towers GF(p^h) with canonical subfield embeddings, projective spaces
PG(s-1, q) with exact subspace enumeration, cyclic point-regular collineation
groups and their orbit censuses, scalar classification of elation subgroups,
and the star representation of PG(r-1, p^h) over a subfield.  Everything is
integer-exact; every closed-form count ships with a brute-force cross-check.
"""

from .bruckbose import (
    StarFrame,
    common_intersection_check,
    incidence_check,
    orbit_image,
    star_infinite,
    star_point,
    star_point_inverse,
    verify_star_model,
)
from .combinat import divisors, gaussian_binomial, moebius, prime_power, theta
from .elation import (
    ElationGroup,
    conjugator,
    count_classes,
    dimension_profile,
    elation_matrix,
    enumerate_subgroups,
    equivalence_classes,
    group_from_elements,
    group_from_subspace,
    no_conjugation_witness,
    scalar_equivalent,
    subgroup_count,
    subspace_of_center,
    verify_correspondence,
)
from .errors import CapExceeded, VerificationError
from .gf import FieldTower, format_field_spec, make_field, parse_field_spec
from .pspace import (
    Subspace,
    SubspaceFamily,
    enumerate_points,
    enumerate_subspaces,
    is_cover,
    is_spread,
    span,
    subspace_intersection,
    subspace_points,
    subspace_sum,
)
from .singer import (
    OrbitCensus,
    OrbitRecord,
    SingerGroup,
    act,
    orbit,
    orbit_census,
    predicted_free_orbit_count,
    predicted_orbit_count,
    singer_generator,
    spread_orbit,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "ElationGroup",
    "FieldTower",
    "OrbitCensus",
    "OrbitRecord",
    "SingerGroup",
    "StarFrame",
    "Subspace",
    "SubspaceFamily",
    "VerificationError",
    "act",
    "common_intersection_check",
    "conjugator",
    "count_classes",
    "dimension_profile",
    "divisors",
    "elation_matrix",
    "enumerate_points",
    "enumerate_subgroups",
    "enumerate_subspaces",
    "equivalence_classes",
    "format_field_spec",
    "gaussian_binomial",
    "group_from_elements",
    "group_from_subspace",
    "incidence_check",
    "is_cover",
    "is_spread",
    "make_field",
    "moebius",
    "no_conjugation_witness",
    "orbit",
    "orbit_census",
    "orbit_image",
    "parse_field_spec",
    "predicted_free_orbit_count",
    "predicted_orbit_count",
    "prime_power",
    "scalar_equivalent",
    "singer_generator",
    "span",
    "spread_orbit",
    "star_infinite",
    "star_point",
    "star_point_inverse",
    "subgroup_count",
    "subspace_intersection",
    "subspace_of_center",
    "subspace_points",
    "subspace_sum",
    "theta",
    "verify_correspondence",
    "verify_star_model",
]
