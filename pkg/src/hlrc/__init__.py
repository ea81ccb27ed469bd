"""Optimal hierarchical locally recoverable codes from nested polynomial pairs."""

from .bounds import HlrcParams, build_deficient_set, hlrc_bound, is_optimal, rho, singleton_certificate
from .code import CodeInstance, CodePlan, build_code, encode, enumerate_basis, make_plan, message_poly
from .gf import FieldSpec, field_new
from .nests import NestSystem, build_nest_system, chebotarev_estimate, split_values
from .oracle import exact_distance, verify_instance
from .poly import Poly, distinct_roots, interpolate
from .repair import plan_repair, repair, tolerance_check
from .simfail import Scenario, simulate

__all__ = [
    "CodeInstance",
    "CodePlan",
    "FieldSpec",
    "HlrcParams",
    "NestSystem",
    "Poly",
    "Scenario",
    "build_code",
    "build_deficient_set",
    "build_nest_system",
    "chebotarev_estimate",
    "distinct_roots",
    "encode",
    "enumerate_basis",
    "exact_distance",
    "field_new",
    "hlrc_bound",
    "interpolate",
    "is_optimal",
    "make_plan",
    "message_poly",
    "plan_repair",
    "repair",
    "rho",
    "simulate",
    "singleton_certificate",
    "split_values",
    "tolerance_check",
    "verify_instance",
]
