"""Density lower bounds from resolved pole-order tables.

Six strategies, each an inequality between the logarithmic asymptotics of
L-function products at s = 1+:

  S1  Cauchy-Schwarz on (A-B)(A+1):       N^2 / D1          for S>*
  S2  Cauchy-Schwarz + triangle split:    N^2/(rtA + rtB)^2 for S>*
  S3  Cauchy-Schwarz on (A-B)^2:          M^2 / D3          for S*
  S4  Ramanujan bound |(A-B)(A+1)| <= 16: N / 16            for S>*
  S5  Ramanujan bound (A-B)^2 <= 16:      M / 16            for S*
  S6  superadditivity of liminf:          bound(>) + bound(swapped >)

with N = c20 - c11 + c10 - c01 and M = c20 - 2 c11 + c02.  Bounds are
evaluated per consistent branch on jointly resolved tables; the uniform
bound for a case is the minimum over branches (every branch is a possible
world, so only the worst is certain).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .algebra import CaseSpec, NSP, scenario_build
from .algnum import (AlgNum, FieldOverflow, ZERO_A, sqrt_rational,
                     sqrt_upper)
from .poles import resolved_tables

STRATEGIES = ("S1", "S2", "S3", "S4", "S5", "S6")
GT, GT_SWAPPED, STAR = "gt", "gt-swapped", "star"
TARGETS = (GT, GT_SWAPPED, STAR)

_GT_STRATEGIES = ("S1", "S2", "S4")
_STAR_STRATEGIES = ("S3", "S5", "S6")


def _get(table: dict, j: int, k: int) -> Optional[int]:
    return table.get((j, k))


def _numerator_n(t: dict) -> Optional[int]:
    vals = [_get(t, 2, 0), _get(t, 1, 1), _get(t, 1, 0), _get(t, 0, 1)]
    if any(v is None for v in vals):
        return None
    return vals[0] - vals[1] + vals[2] - vals[3]


def _numerator_m(t: dict) -> Optional[int]:
    vals = [_get(t, 2, 0), _get(t, 1, 1), _get(t, 0, 2)]
    if any(v is None for v in vals):
        return None
    return vals[0] - 2 * vals[1] + vals[2]


@dataclass(frozen=True)
class StrategyValue:
    value: AlgNum
    exact: bool = True
    note: str = ""


def strategy_eval(sid: str, t: dict, ramanujan: bool) -> Optional[StrategyValue]:
    """One strategy on one branch-resolved table; None when inapplicable."""
    if sid == "S1":
        need = [(4, 0), (3, 1), (2, 2), (3, 0), (2, 1), (1, 2),
                (2, 0), (1, 1), (0, 2)]
        if any(_get(t, *jk) is None for jk in need):
            return None
        n = _numerator_n(t)
        if n is None or n <= 0:
            return None
        d = (t[(4, 0)] - 2 * t[(3, 1)] + t[(2, 2)] + 2 * t[(3, 0)]
             - 4 * t[(2, 1)] + 2 * t[(1, 2)] + t[(2, 0)] - 2 * t[(1, 1)]
             + t[(0, 2)])
        if d <= 0:
            return None
        return StrategyValue(AlgNum.rational(Fraction(n * n, d)))
    if sid == "S2":
        need = [(4, 0), (2, 1), (0, 2), (2, 0), (2, 2)]
        if any(_get(t, *jk) is None for jk in need):
            return None
        n = _numerator_n(t)
        if n is None or n <= 0:
            return None
        ra = t[(4, 0)] - 2 * t[(2, 1)] + t[(0, 2)]
        rb = t[(2, 0)] - 2 * t[(2, 1)] + t[(2, 2)]
        if ra < 0 or rb < 0:
            return None
        try:
            root = sqrt_rational(ra) + sqrt_rational(rb)
            return StrategyValue(AlgNum.rational(n * n) / (root * root))
        except FieldOverflow:
            root_hi = sqrt_upper(ra) + sqrt_upper(rb)
            val = AlgNum.rational(Fraction(n * n) / (root_hi * root_hi))
            return StrategyValue(val, exact=False,
                                 note="radical outside Q(sqrt2,sqrt3); "
                                      "certified rational lower bound")
    if sid == "S3":
        need = [(4, 0), (3, 1), (2, 2), (1, 3), (0, 4)]
        if any(_get(t, *jk) is None for jk in need):
            return None
        m = _numerator_m(t)
        if m is None or m <= 0:
            return None
        d = (t[(4, 0)] - 4 * t[(3, 1)] + 6 * t[(2, 2)] - 4 * t[(1, 3)]
             + t[(0, 4)])
        if d <= 0:
            return None
        return StrategyValue(AlgNum.rational(Fraction(m * m, d)))
    if sid == "S4":
        if not ramanujan:
            return None
        n = _numerator_n(t)
        if n is None or n <= 0:
            return None
        return StrategyValue(AlgNum.rational(Fraction(n, 16)),
                             note="|A-B| <= 4 and A+1 <= 4 under Ramanujan")
    if sid == "S5":
        if not ramanujan:
            return None
        m = _numerator_m(t)
        if m is None or m <= 0:
            return None
        return StrategyValue(AlgNum.rational(Fraction(m, 16)),
                             note="(A-B)^2 <= 16 under Ramanujan")
    if sid == "S6":
        return None  # assembled in case_bound from the two S> bounds
    raise ValueError(f"unknown strategy {sid!r}")


def _swap_table(t: dict) -> dict:
    return {(k, j): v for (j, k), v in t.items()}


def ramanujan_available(spec: CaseSpec) -> bool:
    return spec.side1.cls != NSP and spec.side2.cls != NSP


@dataclass
class BranchBound:
    assignment: tuple
    ctable: dict
    values: dict
    chosen: Optional[str]
    value: Optional[StrategyValue]


@dataclass
class BoundReport:
    spec: CaseSpec
    target: str
    mode: str
    pinned: Optional[str]
    branches: list
    uniform: AlgNum
    uniform_exact: bool
    diagnostics: list = field(default_factory=list)

    @property
    def approx(self) -> float:
        return float(self.uniform)


_S6_CACHE: dict = {}
_TABLES_CACHE: dict = {}


def _resolved(spec: CaseSpec):
    key = spec.label()
    if key not in _TABLES_CACHE:
        _TABLES_CACHE[key] = resolved_tables(scenario_build(spec))
    return _TABLES_CACHE[key]


def _s6_value(spec: CaseSpec) -> StrategyValue:
    key = spec.label()
    if key not in _S6_CACHE:
        fwd = case_bound(spec, GT, "best")
        swp = case_bound(spec, GT_SWAPPED, "best")
        _S6_CACHE[key] = StrategyValue(
            fwd.uniform + swp.uniform,
            exact=fwd.uniform_exact and swp.uniform_exact,
            note="superadditivity: S>* forward + S>* swapped")
    return _S6_CACHE[key]


def case_bound(spec: CaseSpec, target: str, mode: str = "best",
               pinned: Optional[str] = None) -> BoundReport:
    """Per-branch strategy evaluation; uniform bound = min over branches.

    mode='pinned' evaluates only the pinned strategy (the published
    derivation); mode='best' takes the best applicable strategy in each
    branch, so best >= pinned row by row.
    """
    if target not in TARGETS:
        raise ValueError(f"target must be one of {TARGETS}")
    if mode == "pinned" and pinned not in STRATEGIES:
        raise ValueError("pinned mode needs a strategy id")
    leaves = _resolved(spec)
    ram = ramanujan_available(spec)
    sids = _GT_STRATEGIES if target in (GT, GT_SWAPPED) else _STAR_STRATEGIES
    if mode == "pinned":
        sids = (pinned,)
    s6 = _s6_value(spec) if (target == STAR and "S6" in sids) else None

    rows: list[BranchBound] = []
    diagnostics: list[str] = []
    uniform: Optional[StrategyValue] = None
    for br, table in leaves:
        t = _swap_table(table) if target == GT_SWAPPED else table
        values = {}
        for sid in sids:
            v = _s6_for_branch(s6) if sid == "S6" else strategy_eval(sid, t, ram)
            values[sid] = v
        applicable = [(sid, v) for sid, v in values.items() if v is not None]
        if not applicable:
            chosen, val = None, StrategyValue(ZERO_A, note="no strategy applicable")
            diagnostics.append(
                f"branch {br.log}: no applicable strategy, bound 0")
        else:
            chosen, val = max(applicable, key=lambda sv: sv[1].value)
        rows.append(BranchBound(br.log, t, values, chosen, val))
        if uniform is None or val.value < uniform.value:
            uniform = val
    if uniform is None:  # pragma: no cover
        uniform = StrategyValue(ZERO_A, note="no consistent branch")
    return BoundReport(spec, target, mode, pinned, rows,
                       uniform.value, uniform.exact, diagnostics)


def _s6_for_branch(s6: Optional[StrategyValue]) -> Optional[StrategyValue]:
    return s6


def best_of_cases(specs: list[CaseSpec], target: str, mode: str = "best",
                  pinned: Optional[str] = None) -> tuple[AlgNum, bool]:
    """Uniform bound across a family of scenarios (minimum over cases)."""
    worst: Optional[tuple[AlgNum, bool]] = None
    for spec in specs:
        rep = case_bound(spec, target, mode, pinned)
        cand = (rep.uniform, rep.uniform_exact)
        if worst is None or cand[0] < worst[0]:
            worst = cand
    assert worst is not None
    return worst
