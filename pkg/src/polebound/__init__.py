"""Symbolic Rankin-Selberg pole bookkeeping and Dirichlet density bounds.

The package decomposes multi-fold products of GL(2) adjoint lifts into
irreducible constituents, computes pole orders of the associated
L-functions at s = 1 case by case (branching where the answer depends on
undetermined character identifications), derives exact lower bounds on
the Dirichlet densities of the Hecke-eigenvalue comparison sets, and
checks the sharpness examples by exact finite-group enumeration.
"""

from .algebra import (CaseSpec, Scenario, SideSpec, Branch, branch_consistent,
                      char_is_trivial, char_reduce, scenario_build, rep_dual,
                      rep_equiv)
from .algnum import AlgNum
from .bounds import BoundReport, case_bound, strategy_eval
from .chebotarev import (build_group, density, fibered_subgroup, model_oracle,
                         verify_property_P_Z4)
from .decompose import (adjoint_of, pair_decompose, pairing_order,
                        product_normalize, square_decompose)
from .poles import CTable, MomentKey, PoleOutcome, ctable, moment
from .tables import lemma_table, theorem_table, verify_all

__all__ = [
    "AlgNum", "BoundReport", "Branch", "CTable", "CaseSpec", "MomentKey",
    "PoleOutcome", "Scenario", "SideSpec", "adjoint_of", "branch_consistent",
    "build_group", "case_bound", "char_is_trivial", "char_reduce", "ctable",
    "density", "fibered_subgroup", "lemma_table", "model_oracle", "moment",
    "pair_decompose", "pairing_order", "product_normalize", "rep_dual",
    "rep_equiv", "scenario_build", "square_decompose", "strategy_eval",
    "theorem_table", "verify_all", "verify_property_P_Z4",
]
