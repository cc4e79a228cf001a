"""Disjoint fault-free paths between source and sink sets in faulty hypercubes."""

from .campaign import CampaignSummary, enumerate_check, random_instance
from .errors import (
    BudgetExceeded,
    ConstructionFailure,
    CubePathsError,
    ExceptionCase,
    PreconditionViolation,
)
from .faults import Instance, choose_split_dimension, is_conditionally_fault_free
from .hypercube import Parity, SplitContext, neighbors, parity, split
from .edge_avoiding import spanning_disjoint_paths_avoiding_edge
from .router import CaseTag, RouteTrace, route
from .solvers import SolverBudget, disjoint_paths_small, long_path, spanning_path_avoiding_edge
from .verify import VerifyReport, brute_force_best, verify

__all__ = [
    "BudgetExceeded",
    "CampaignSummary",
    "CaseTag",
    "ConstructionFailure",
    "CubePathsError",
    "ExceptionCase",
    "Instance",
    "Parity",
    "PreconditionViolation",
    "RouteTrace",
    "SolverBudget",
    "SplitContext",
    "VerifyReport",
    "brute_force_best",
    "choose_split_dimension",
    "disjoint_paths_small",
    "enumerate_check",
    "is_conditionally_fault_free",
    "long_path",
    "neighbors",
    "parity",
    "random_instance",
    "route",
    "spanning_disjoint_paths_avoiding_edge",
    "spanning_path_avoiding_edge",
    "split",
    "verify",
]
