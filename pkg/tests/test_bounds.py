from fractions import Fraction

import pytest

from polebound.algebra import CaseSpec, SideSpec
from polebound.algnum import AlgNum
from polebound.bounds import (case_bound, ramanujan_available, strategy_eval)
from polebound.expected import theorem_rows

D, T, O, N = "dihedral", "tetrahedral", "octahedral", "nsp"


def table_from(entries):
    t = {(j, k): None for j in range(5) for k in range(5) if j + k <= 4}
    t.update(entries)
    return t


NSP_NSP_WORST = table_from({
    (0, 0): 1, (1, 0): 0, (0, 1): 0, (2, 0): 1, (1, 1): 0, (0, 2): 1,
    (3, 0): 1, (2, 1): 0, (1, 2): 0, (0, 3): 1, (4, 0): 3, (2, 2): 2,
    (0, 4): 3, (3, 1): None, (1, 3): None,
})


def test_s2_nsp_worst_branch():
    v = strategy_eval("S2", NSP_NSP_WORST, ramanujan=False)
    assert (v.value - AlgNum.of(7, 0, -4)).is_zero()  # 1/(2+sqrt3)^2
    assert v.exact


def test_s1_blocked_by_unknown_entry():
    assert strategy_eval("S1", NSP_NSP_WORST, ramanujan=False) is None


def test_s4_s5_need_ramanujan():
    t = table_from({(2, 0): 3, (1, 1): 1, (1, 0): 0, (0, 1): 0, (0, 2): 3})
    assert strategy_eval("S4", t, ramanujan=False) is None
    v = strategy_eval("S4", t, ramanujan=True)
    assert (v.value - AlgNum.rational(Fraction(2, 16))).is_zero()
    v5 = strategy_eval("S5", t, ramanujan=True)
    assert (v5.value - AlgNum.rational(Fraction(4, 16))).is_zero()


def test_s2_overflow_gives_certified_rational():
    t = table_from({(2, 0): 1, (1, 1): 0, (1, 0): 0, (0, 1): 0,
                    (4, 0): 5, (2, 1): 0, (0, 2): 0, (2, 2): 0})
    v = strategy_eval("S2", t, ramanujan=False)
    assert not v.exact and v.value.is_rational()
    assert v.value.a <= Fraction(1, 5)  # true value 1/5, bound from below


def test_strategy_monotonicity_in_denominator_terms():
    base = table_from({(0, 0): 1, (1, 0): 0, (0, 1): 0, (2, 0): 1,
                       (1, 1): 0, (0, 2): 1, (3, 0): 2, (2, 1): 0,
                       (1, 2): 0, (0, 3): 2, (4, 0): 7, (3, 1): 0,
                       (2, 2): 1, (1, 3): 0, (0, 4): 7})
    for sid in ("S1", "S3"):
        v0 = strategy_eval(sid, base, ramanujan=True).value
        for key in ((2, 2), (4, 0)):
            bumped = dict(base)
            bumped[key] = base[key] + 1
            v1 = strategy_eval(sid, bumped, ramanujan=True).value
            assert v1 <= v0


def test_ramanujan_flag():
    assert ramanujan_available(CaseSpec(SideSpec(D, "P"), SideSpec(O)))
    assert not ramanujan_available(CaseSpec(SideSpec(D, "P"), SideSpec(N)))


ALL_ROWS = [row for thm in ("3.2", "3.3", "4.2", "4.4", "5.1", "5.2")
            for row in theorem_rows(thm)]


@pytest.mark.parametrize("row", ALL_ROWS, ids=lambda r: f"{r.theorem}:{r.label}")
def test_best_dominates_pinned_and_bounds_in_range(row):
    half = AlgNum.rational(Fraction(1, 2))
    for spec in row.specs:
        pinned = case_bound(spec, row.target, "pinned", row.pinned)
        best = case_bound(spec, row.target, "best")
        assert best.uniform >= pinned.uniform
        assert AlgNum.of(0) <= best.uniform <= half
        assert AlgNum.of(0) <= pinned.uniform <= half


def test_s6_coherence():
    # the S* bound is at least the forward S> bound in every scenario
    for spec in (CaseSpec(SideSpec(T), SideSpec(N)),
                 CaseSpec(SideSpec(N), SideSpec(N)),
                 CaseSpec(SideSpec(D, "Q"), SideSpec(O))):
        star = case_bound(spec, "star", "best")
        fwd = case_bound(spec, "gt", "best")
        assert star.uniform >= fwd.uniform


def test_no_strategy_branch_reports_zero():
    # pinned S4 on an nsp pair: Ramanujan unavailable, bound 0 + diagnostic
    rep = case_bound(CaseSpec(SideSpec(N), SideSpec(N)), "gt", "pinned", "S4")
    assert rep.uniform.is_zero()
    assert rep.diagnostics
