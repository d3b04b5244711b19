"""Case tables and the verification harness over the embedded expectations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algnum import AlgNum
from .bounds import best_of_cases
from .chebotarev import (example_dihedral1, example_dihedral2,
                         example_tetrahedral, verify_property_P_Z4)
from .expected import (CHEB_EXPECTED, GLOBAL_GT, GLOBAL_STAR, LemmaRow,
                       TheoremRow, THM11_MIN, THM11_NSP_NSP, THM12_MIN,
                       THM12_NSP_NSP, lemma_rows, theorem_rows)
from .poles import outcome_union

LEMMA_IDS = ("3.1", "4.1", "4.3")
THEOREM_IDS = ("3.2", "3.3", "4.2", "4.4", "5.1", "5.2")
TABLE_IDS = tuple(f"lemma{x}" for x in LEMMA_IDS) + \
    tuple(f"thm{x}" for x in THEOREM_IDS) + ("thm1.1", "thm1.2")


@dataclass
class LemmaCell:
    row: LemmaRow
    computed: Optional[frozenset]
    ok: bool


@dataclass
class TheoremCell:
    row: TheoremRow
    pinned: AlgNum
    pinned_exact: bool
    best: AlgNum
    ok: bool          # pinned equals the published value
    dominated: bool   # best >= published
    improved: bool    # best > published (reported, not a failure)


def lemma_table(lemma: str) -> list[LemmaCell]:
    cells = []
    for row in lemma_rows(lemma):
        computed = outcome_union(list(row.specs), *row.key)
        cells.append(LemmaCell(row, computed, computed == row.expected))
    return cells


def theorem_table(theorem: str) -> list[TheoremCell]:
    cells = []
    for row in theorem_rows(theorem):
        pinned, exact = best_of_cases(list(row.specs), row.target,
                                      "pinned", row.pinned)
        best, _ = best_of_cases(list(row.specs), row.target, "best")
        ok = (pinned - row.expected).is_zero()
        cells.append(TheoremCell(row, pinned, exact, best, ok,
                                 best >= row.expected, best > row.expected))
    return cells


@dataclass
class GlobalCell:
    label: str
    computed: AlgNum
    expected: AlgNum
    ok: bool


def global_table(which: str) -> list[GlobalCell]:
    """Theorem 1.1 / 1.2: minima over every case of the detailed tables."""
    if which == "1.1":
        ids, target, exp_min, exp_nsp = GLOBAL_GT, "gt", THM11_MIN, THM11_NSP_NSP
    else:
        ids, target, exp_min, exp_nsp = (GLOBAL_STAR, "star", THM12_MIN,
                                         THM12_NSP_NSP)
    overall: Optional[AlgNum] = None
    nsp_row: Optional[AlgNum] = None
    for tid in ids:
        for row in theorem_rows(tid):
            val, _ = best_of_cases(list(row.specs), row.target,
                                   "pinned", row.pinned)
            if overall is None or val < overall:
                overall = val
            if tid in ("3.2", "3.3") and row.label == "nsp, nsp":
                nsp_row = val
    assert overall is not None and nsp_row is not None
    return [
        GlobalCell("minimum over all cases", overall, exp_min,
                   (overall - exp_min).is_zero()),
        GlobalCell("nsp, nsp", nsp_row, exp_nsp,
                   (nsp_row - exp_nsp).is_zero()),
    ]


CHEB_EXAMPLES = {
    "tetrahedral": example_tetrahedral,
    "dihedral1": example_dihedral1,
    "dihedral2": example_dihedral2,
}


@dataclass
class VerifyItem:
    section: str
    label: str
    computed: str
    expected: str
    ok: bool
    note: str = ""


KNOWN_DISCREPANCIES = {
    ("lemma 4.3", "(iv) not P, neither I(nu) P"):
        "value 10 requires all three character identifications at once, "
        "which forces a twist equivalence excluded by hypothesis; "
        "finite-model search agrees with the computed set",
    ("lemma 4.3", "(v) P, pi2 Q"):
        "the chi-multiplicity is pinned to 5 by nu2^3 = 1; values 4 and 6 "
        "are unreachable in every consistent branch and in every finite "
        "model, and value 4 would contradict the published same-field "
        "bound 1/4",
}


def verify_all() -> list[VerifyItem]:
    items: list[VerifyItem] = []
    for lemma in LEMMA_IDS:
        for cell in lemma_table(lemma):
            exp = "not stated" if cell.row.expected is None \
                else str(sorted(cell.row.expected))
            got = "unresolvable" if cell.computed is None \
                else str(sorted(cell.computed))
            key = (f"lemma {lemma}", f"{cell.row.item} {cell.row.label}")
            items.append(VerifyItem(
                key[0], f"{cell.row.item} {cell.row.label} "
                        f"c{cell.row.key[0]}{cell.row.key[1]}",
                got, exp, cell.ok,
                KNOWN_DISCREPANCIES.get(key, "")))
    for thm in THEOREM_IDS:
        for cell in theorem_table(thm):
            items.append(VerifyItem(
                f"theorem {thm}", cell.row.label, str(cell.pinned),
                str(cell.row.expected), cell.ok and cell.dominated,
                "best mode improves on the published value: "
                f"{cell.best}" if cell.improved else ""))
    for which in ("1.1", "1.2"):
        for cell in global_table(which):
            items.append(VerifyItem(f"theorem {which}", cell.label,
                                    str(cell.computed), str(cell.expected),
                                    cell.ok))
    for name, fn in CHEB_EXAMPLES.items():
        got = fn()
        exp = CHEB_EXPECTED[name]
        ok = (got["size"] == exp["size"] and got["gt"] == exp["gt"]
              and got["neq"] == exp["neq"])
        items.append(VerifyItem("chebotarev", name,
                                f"|H|={got['size']} gt={got['gt']} "
                                f"neq={got['neq']}",
                                f"|H|={exp['size']} gt={exp['gt']} "
                                f"neq={exp['neq']}", ok))
    z4 = verify_property_P_Z4()
    items.append(VerifyItem("chebotarev", "z4-check",
                            str(z4), "all True", all(z4.values())))
    return items
