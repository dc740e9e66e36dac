"""Workbench for constant-displacement isometries, deck groups, and
homogeneity certification on spheres and compact group manifolds."""

from .compact_lie import (
    CompactGroupSpec,
    TwoSidedIsometry,
    algebra_basis,
    biinvariant_distance,
    group_displacement_profile,
    group_exp,
    group_log,
    haar_sample,
    is_constant_displacement_translation,
    min_displacement,
    random_algebra_element,
)
from .constant_curvature import (
    EuclideanMotion,
    HyperbolicMotion,
    euclidean_bounded,
    hyperbolic_bounded_probe,
    invariant_geodesic_check,
    is_clifford_sphere,
    is_free_on_sphere,
    lens_group,
    sphere_displacement_profile,
)
from .errors import HomoglabError
from .finite_groups import (
    FiniteQuaternionGroup,
    GroupType,
    Quaternion,
    check_space_form_constraints,
    classify,
    is_sl25,
    named_binary_group,
)
from .homogeneous import (
    NOT_EQUAL_RANK,
    HomogeneousSpaceSpec,
    berger_right_isometry_algebra,
    catalog_load,
    catalog_verify,
    euler_characteristic,
    group_space,
    hopf_sphere_space,
    killing_length_profile,
    so5_so3_space,
    u1_centralizer_direction,
    weyl_group_order,
)
from .profiles import DisplacementProfile
from .verifier import (
    DeckGroup,
    GroupManifoldModel,
    HomogeneityReport,
    SphereModel,
    VerifyConfig,
    centralizer_algebra,
    sphere_deck,
    sphere_deck_from_quaternions,
    transitivity_rank,
    verify_instance,
)

__version__ = "0.1.0"

__all__ = [
    "CompactGroupSpec",
    "TwoSidedIsometry",
    "algebra_basis",
    "biinvariant_distance",
    "group_displacement_profile",
    "group_exp",
    "group_log",
    "haar_sample",
    "is_constant_displacement_translation",
    "min_displacement",
    "random_algebra_element",
    "EuclideanMotion",
    "HyperbolicMotion",
    "euclidean_bounded",
    "hyperbolic_bounded_probe",
    "invariant_geodesic_check",
    "is_clifford_sphere",
    "is_free_on_sphere",
    "lens_group",
    "sphere_displacement_profile",
    "HomoglabError",
    "FiniteQuaternionGroup",
    "GroupType",
    "Quaternion",
    "check_space_form_constraints",
    "classify",
    "is_sl25",
    "named_binary_group",
    "NOT_EQUAL_RANK",
    "HomogeneousSpaceSpec",
    "berger_right_isometry_algebra",
    "catalog_load",
    "catalog_verify",
    "euler_characteristic",
    "group_space",
    "hopf_sphere_space",
    "killing_length_profile",
    "so5_so3_space",
    "u1_centralizer_direction",
    "weyl_group_order",
    "DisplacementProfile",
    "DeckGroup",
    "GroupManifoldModel",
    "HomogeneityReport",
    "SphereModel",
    "VerifyConfig",
    "centralizer_algebra",
    "sphere_deck",
    "sphere_deck_from_quaternions",
    "transitivity_rank",
    "verify_instance",
]
