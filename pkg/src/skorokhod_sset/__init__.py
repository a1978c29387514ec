"""Simplicial sets over exact rationals, their geometric realization as step
functions, Skorokhod neighborhoods and metrics."""

from .delta import MonotoneMap, compose, edgewise_map, identity, shift_map
from .filters import (
    closed_form_member,
    hom_path_member,
    subdivision_member_representable,
    theta_skorokhod_member,
    u_neighborhood_member,
)
from .metrics import d_mu, d_prime, dist_F_A, sup_dist, v1_dist, v2_dist, v3_dist
from .realization import (
    PathSimplex,
    PLHomeo,
    RealizationPoint,
    StepFunction,
    eval_point,
    from_step,
    homeo_apply,
    normalize,
    product_merge,
    product_split,
    refine,
    to_step,
)
from .sset import FinSSet, SimplexInstance, load_sset, precompose_edgewise, product, std_simplex, validate

__all__ = [
    "MonotoneMap", "compose", "edgewise_map", "identity", "shift_map",
    "closed_form_member", "hom_path_member", "subdivision_member_representable",
    "theta_skorokhod_member", "u_neighborhood_member",
    "d_mu", "d_prime", "dist_F_A", "sup_dist", "v1_dist", "v2_dist", "v3_dist",
    "PathSimplex", "PLHomeo", "RealizationPoint", "StepFunction", "eval_point", "from_step",
    "homeo_apply", "normalize", "product_merge", "product_split", "refine", "to_step",
    "FinSSet", "SimplexInstance", "load_sset", "precompose_edgewise", "product", "std_simplex",
    "validate",
]
