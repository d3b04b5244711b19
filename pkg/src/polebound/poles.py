"""Pole orders c_{j,k} = -ord_{s=1} L^T(s, Pi_1^{x j} x Pi_2^{x k}).

Each moment is evaluated by splitting the j+k adjoint factors into two
halves, decomposing both halves into irreducible constituents, and
counting dual-matching constituent pairs.  Splits are tried balanced
first; the first split that resolves with no undetermined question wins,
otherwise the split needing the fewest questions is branch-enumerated at
query granularity, with lattice-consistency pruning.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import (
    Branch, CaseSpec, EMPTY_BRANCH, Query, Scenario, UnresolvableProduct,
    assign, scenario_build,
)
from .decompose import EvalCtx, NeedQuery, pairing_order, side_multiset

ALL_KEYS = tuple(sorted(
    (j, k) for j in range(5) for k in range(5) if j + k <= 4))


@dataclass(frozen=True)
class MomentKey:
    j: int
    k: int

    def __post_init__(self):
        if not (0 <= self.j and 0 <= self.k and self.j + self.k <= 4):
            raise ValueError("moment keys need j, k >= 0 and j + k <= 4")

    def swapped(self) -> "MomentKey":
        return MomentKey(self.k, self.j)


@dataclass
class PoleOutcome:
    """Achievable orders across consistent branches, with witnesses."""

    outcomes: frozenset
    witnesses: dict            # order -> Branch
    known: bool = True         # False: unresolvable in some/all branches

    def single(self) -> Optional[int]:
        if self.known and len(self.outcomes) == 1:
            return next(iter(self.outcomes))
        return None


def bipartitions(j: int, k: int) -> list[tuple[tuple, tuple]]:
    """Splits of the factor multiset, most informative order first.

    Balanced splits come first, and within equal balance the splits that
    keep each side on one factor type (the groupings the case analyses
    use) precede the mixed ones.  Single factors are paired against the
    trivial representation (side id 0).
    """
    factors = (1,) * j + (2,) * k
    if not factors:
        return [((0,), (0,))]
    if len(factors) == 1:
        return [(factors, (0,))]
    seen = set()
    splits = []
    for a in range(j + 1):
        for b in range(k + 1):
            if (a, b) in ((0, 0), (j, k)):
                continue
            left = (1,) * a + (2,) * b
            right = (1,) * (j - a) + (2,) * (k - b)
            pair = tuple(sorted((left, right)))
            if pair in seen:
                continue
            seen.add(pair)
            splits.append(pair)

    def sort_key(pair):
        l, r = pair
        balance = abs(len(l) - len(r))
        mixed = len(set(l)) + len(set(r))
        return (balance, mixed, pair)

    return sorted(splits, key=sort_key)


def _evaluate_split(split, sc: Scenario, br: Branch, strict: bool):
    ctx = EvalCtx(sc, br, strict=strict)
    left = side_multiset(split[0], ctx)
    right = side_multiset(split[1], ctx)
    count = pairing_order(left, right, ctx)
    return count, ctx


class _Blocked(Exception):
    pass


def _evaluate_key(key: MomentKey, sc: Scenario, br: Branch) -> int:
    """Value of one moment under a branch; raises NeedQuery or _Blocked."""
    splits = bipartitions(key.j, key.k)
    ranked = []
    for idx, split in enumerate(splits):
        count, ctx = _evaluate_split(split, sc, br, strict=False)
        if ctx.blocked:
            continue
        if not ctx.queries:
            return count
        ranked.append((len(ctx.queries), idx, split))
    if not ranked:
        raise _Blocked
    _, _, split = min(ranked)
    try:
        count, _ = _evaluate_split(split, sc, br, strict=True)
    except UnresolvableProduct:
        raise _Blocked from None
    return count


def moment(key: MomentKey, sc: Scenario) -> PoleOutcome:
    """Branch-enumerated outcome set of one moment."""
    outcomes: dict[int, Branch] = {}
    known = True

    def walk(br: Branch) -> None:
        nonlocal known
        try:
            count = _evaluate_key(key, sc, br)
        except _Blocked:
            known = False
            return
        except NeedQuery as nq:
            for value in (True, False):
                for nb in assign(sc, br, nq.query, value):
                    walk(nb)
            return
        outcomes.setdefault(count, br)

    walk(EMPTY_BRANCH)
    return PoleOutcome(frozenset(outcomes), outcomes, known=known)


@dataclass
class CTable:
    """All moments of one scenario, plus per-branch resolved tables."""

    scenario: Scenario
    entries: dict  # (j, k) -> PoleOutcome

    def outcome(self, j: int, k: int) -> PoleOutcome:
        return self.entries[(j, k)]

    def sets(self) -> dict:
        return {jk: (sorted(o.outcomes) if o.known else None)
                for jk, o in self.entries.items()}


def ctable(sc: Scenario) -> CTable:
    return CTable(sc, {(j, k): moment(MomentKey(j, k), sc)
                       for j, k in ALL_KEYS})


def resolved_tables(sc: Scenario) -> list[tuple[Branch, dict]]:
    """Jointly consistent single-valued tables, one per leaf branch.

    All moments are evaluated under one shared assignment so that values
    coupled through a common question (e.g. a c_22 and a c_13 that hinge
    on the same character identification) stay linked.
    """
    leaves: list[tuple[Branch, dict]] = []

    def walk(br: Branch, idx: int, acc: dict) -> None:
        if idx == len(ALL_KEYS):
            leaves.append((br, acc))
            return
        jk = ALL_KEYS[idx]
        try:
            val = _evaluate_key(MomentKey(*jk), sc, br)
        except _Blocked:
            walk(br, idx + 1, {**acc, jk: None})
            return
        except NeedQuery as nq:
            for value in (True, False):
                for nb in assign(sc, br, nq.query, value):
                    walk(nb, idx, acc)
            return
        walk(br, idx + 1, {**acc, jk: val})

    walk(EMPTY_BRANCH, 0, {})
    return leaves


def moment_for_spec(spec: CaseSpec, j: int, k: int) -> PoleOutcome:
    return moment(MomentKey(j, k), scenario_build(spec))


def outcome_union(specs: list[CaseSpec], j: int, k: int) -> Optional[frozenset]:
    """Union of outcome sets over a family of scenarios (one table row)."""
    acc: set[int] = set()
    for spec in specs:
        o = moment_for_spec(spec, j, k)
        if not o.known:
            return None
        acc |= o.outcomes
    return frozenset(acc)
