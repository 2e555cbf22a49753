"""Rotation-geometry toolkit for untangling the double-twist loop in SO(3)."""

from .errors import (
    DoubleTwistError,
    EdgeDegenerateError,
    HingeDegeneracyError,
    InvalidInputError,
    ResourceLimitError,
    SearchFailureError,
    UndefinedAxisError,
)
from .quaternions import (
    AxisAngle,
    BallPoint,
    Quaternion,
    RotationMatrix,
    UnitQuaternion,
    conj,
    from_axis_angle,
    qmul,
    rotate,
    rotation_distance,
    same_rotation,
    to_axis_angle,
    to_ball_point,
    to_matrix,
)
from .homotopy import (
    HomotopyKind,
    HomotopyParams,
    HomotopySample,
    axial_angle,
    concat_vs_product_check,
    double_tip_factors,
    double_tip_lift,
    double_tip_rotation,
    fk_lift,
    lift,
    rotation_angle,
    sample,
    single_twist,
    tipped_single_twist,
)
from .analysis import (
    Contrail,
    GridSpec,
    HingeFiberSample,
    LANDMARKS,
    VerificationReport,
    antipode_visits,
    contrail,
    evaluate,
    hemisphere_views,
    hinge,
    hinge_fiber,
    invert_double_tip,
    preimage_clusters,
    solve_every_which_way,
    verify_degree,
    verify_every_which_way,
    verify_in_p,
    verify_injectivity,
    verify_surjectivity,
)

__version__ = "0.1.0"

__all__ = [
    "AxisAngle",
    "BallPoint",
    "Contrail",
    "DoubleTwistError",
    "EdgeDegenerateError",
    "GridSpec",
    "HingeDegeneracyError",
    "HingeFiberSample",
    "HomotopyKind",
    "HomotopyParams",
    "HomotopySample",
    "InvalidInputError",
    "LANDMARKS",
    "Quaternion",
    "ResourceLimitError",
    "RotationMatrix",
    "SearchFailureError",
    "UndefinedAxisError",
    "UnitQuaternion",
    "VerificationReport",
    "antipode_visits",
    "axial_angle",
    "concat_vs_product_check",
    "conj",
    "contrail",
    "double_tip_factors",
    "double_tip_lift",
    "double_tip_rotation",
    "evaluate",
    "fk_lift",
    "from_axis_angle",
    "hemisphere_views",
    "hinge",
    "hinge_fiber",
    "invert_double_tip",
    "lift",
    "preimage_clusters",
    "qmul",
    "rotate",
    "rotation_angle",
    "rotation_distance",
    "same_rotation",
    "sample",
    "single_twist",
    "solve_every_which_way",
    "tipped_single_twist",
    "to_axis_angle",
    "to_ball_point",
    "to_matrix",
    "verify_degree",
    "verify_every_which_way",
    "verify_in_p",
    "verify_injectivity",
    "verify_surjectivity",
]
