"""Reflexive stabilizer codes built from graphs over finite fields.

The package covers finite-field arithmetic, generalized Pauli operators,
error avoidance and LUC graphs, the reflexive codeword construction, symbolic
and numeric correctability checks, a heuristic code search and the qubit map
to CSS form.
"""

from __future__ import annotations

from .cssbridge import asymptotic_rate, phi_map, phi_on_stabilizer, symplectic_preserved, t_bound
from .errors import ReflexError
from .galois import FieldElement, FieldSpec, LinearSubspace, subspace_from_generators
from .graphs import LucSpec, QeccGraph, build_avoidance_graph, build_luc_graph, count_components, export_dot
from .kernels import BACKEND
from .pauli import ErrorOp, ErrorSet, conjugate_set, gen_fully_correlated, gen_single_qudit
from .reflexive import ReflexiveCode, ReflexiveStabilizer, build_codewords
from .search import SearchConfig, SearchResult, heuristic_search, minimal_physical_qudits
from .verify import (
    Verdict,
    check_corollary,
    check_general_theorem,
    check_knill_symbolic,
    check_main_theorem,
    check_single_qudit_corollary,
    kl_numeric,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ErrorOp",
    "ErrorSet",
    "FieldElement",
    "FieldSpec",
    "LinearSubspace",
    "LucSpec",
    "QeccGraph",
    "ReflexError",
    "ReflexiveCode",
    "ReflexiveStabilizer",
    "SearchConfig",
    "SearchResult",
    "Verdict",
    "asymptotic_rate",
    "build_avoidance_graph",
    "build_codewords",
    "build_luc_graph",
    "check_corollary",
    "check_general_theorem",
    "check_knill_symbolic",
    "check_main_theorem",
    "check_single_qudit_corollary",
    "conjugate_set",
    "count_components",
    "export_dot",
    "gen_fully_correlated",
    "gen_single_qudit",
    "heuristic_search",
    "kl_numeric",
    "minimal_physical_qudits",
    "phi_map",
    "phi_on_stabilizer",
    "subspace_from_generators",
    "symplectic_preserved",
    "t_bound",
]
