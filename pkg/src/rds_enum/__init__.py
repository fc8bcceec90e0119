"""Exact enumeration of restrained dominating sets of cycles."""
from __future__ import annotations

from .errors import (
    BudgetExceeded,
    InvalidOrder,
    InvalidRange,
    InvalidVertex,
    NotExpanded,
    OrderTooLarge,
    RdsError,
)
from .genfunc import SeriesTable, coefficient, expand
from .graph_core import (
    CoefficientRow,
    GraphSpec,
    complement_component_sizes,
    count_rds_by_cardinality,
    enumerate_rds,
    is_restrained_dominating,
    make_cycle,
    make_path,
)
from .identities import CheckReport, run_suite
from .rdp_recurrence import (
    RdPolynomial,
    gamma_r,
    is_empty_class,
    rdp_polynomial,
    rdp_row,
    term_count,
    total_rds_count,
)
from .rds_construct import RdsFamily, base_family, construct_family

__all__ = [
    "BudgetExceeded",
    "CheckReport",
    "CoefficientRow",
    "GraphSpec",
    "InvalidOrder",
    "InvalidRange",
    "InvalidVertex",
    "NotExpanded",
    "OrderTooLarge",
    "RdPolynomial",
    "RdsError",
    "RdsFamily",
    "SeriesTable",
    "base_family",
    "coefficient",
    "complement_component_sizes",
    "construct_family",
    "count_rds_by_cardinality",
    "enumerate_rds",
    "expand",
    "gamma_r",
    "is_empty_class",
    "is_restrained_dominating",
    "make_cycle",
    "make_path",
    "rdp_polynomial",
    "rdp_row",
    "run_suite",
    "term_count",
    "total_rds_count",
]
