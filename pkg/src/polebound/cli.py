"""Command-line front end: case tables, bounds, examples, verification.

Case specs use the grammar  class1[:subflag],class2[:subflag][,sameK|diffK]
with classes dihedral / tetrahedral / octahedral / nsp and dihedral
subflags P (nu quadratic), IP (not P but I(nu) satisfies P), Q, R.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import (CaseSpec, InvalidCaseSpec, SideSpec, scenario_build,
                      validate_spec)
from .algnum import AlgNum
from .bounds import STRATEGIES, TARGETS, case_bound
from .chebotarev import verify_property_P_Z4
from .poles import ALL_KEYS, ctable
from .tables import (CHEB_EXAMPLES, TABLE_IDS, global_table, lemma_table,
                     theorem_table, verify_all)

_CLASS_ALIASES = {
    "dihedral": "dihedral", "tetrahedral": "tetrahedral",
    "octahedral": "octahedral", "nsp": "nsp",
    "non-solvable-polyhedral": "nsp", "icosahedral": "nsp",
}
_FLAG_ALIASES = {"p": "P", "ip": "IP", "q": "Q", "r": "R"}


def parse_case(text: str) -> CaseSpec:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    same = None
    if parts and parts[-1].lower() in ("samek", "diffk"):
        same = parts.pop().lower() == "samek"
    if len(parts) != 2:
        raise InvalidCaseSpec(f"expected two classes in {text!r}")

    def side(tok: str) -> SideSpec:
        cls, _, flag = tok.partition(":")
        cls = _CLASS_ALIASES.get(cls.strip().lower())
        if cls is None:
            raise InvalidCaseSpec(f"unknown class in {tok!r}")
        if flag:
            f = _FLAG_ALIASES.get(flag.strip().lower())
            if f is None:
                raise InvalidCaseSpec(f"unknown subflag in {tok!r}")
            return SideSpec(cls, f)
        return SideSpec(cls)

    spec = CaseSpec(side(parts[0]), side(parts[1]), same)
    validate_spec(spec)
    return spec


# ---------------------------------------------------------------------------
# rendering

def _alg_json(x: AlgNum) -> dict:
    return {"exact": x.as_dict(), "expr": str(x),
            "approx": float(x), "approx_note": "decimal rendering only"}


def render(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, sort_keys=True, indent=2,
                          separators=(",", ": "))
    if not rows:
        return ""
    cols = list(rows[0])
    flat = [{c: _flat(r.get(c)) for c in cols} for r in rows]
    if fmt == "csv":
        out = [",".join(cols)]
        for r in flat:
            out.append(",".join(_csv_quote(r[c]) for c in cols))
        return "\n".join(out)
    widths = {c: max(len(c), *(len(r[c]) for r in flat)) for c in cols}
    lines = [" | ".join(c.ljust(widths[c]) for c in cols),
             "-|-".join("-" * widths[c] for c in cols)]
    for r in flat:
        lines.append(" | ".join(r[c].ljust(widths[c]) for c in cols))
    return "\n".join(lines)


def _flat(v) -> str:
    if isinstance(v, dict) and "expr" in v:
        return v["expr"]
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return ""
    return str(v)


def _csv_quote(s: str) -> str:
    if "," in s or '"' in s:
        return '"' + s.replace('"', '""') + '"'
    return s


# ---------------------------------------------------------------------------
# subcommands

def cmd_poles(args) -> int:
    spec = parse_case(args.case)
    table = ctable(scenario_build(spec))
    rows = []
    for j, k in ALL_KEYS:
        o = table.outcome(j, k)
        rows.append({
            "moment": f"c{j}{k}",
            "outcomes": sorted(o.outcomes) if o.known else "unresolvable",
            "branches": {str(v): list(map(list, b.log))
                         for v, b in o.witnesses.items()} if o.known else {},
        })
    print(render(rows, args.format))
    return 0


def cmd_bounds(args) -> int:
    spec = parse_case(args.case)
    mode = args.mode
    if args.strategy and mode != "pinned":
        mode = "pinned"
    if mode == "pinned" and not args.strategy:
        raise InvalidCaseSpec("pinned mode needs --strategy")
    rep = case_bound(spec, args.target, mode, args.strategy)
    branches = []
    for b in rep.branches:
        branches.append({
            "assignment": [list(x) for x in b.assignment],
            "ctable": {f"c{j}{k}": v for (j, k), v in sorted(b.ctable.items())},
            "bounds": {sid: (_alg_json(v.value) if v else None)
                       for sid, v in b.values.items()},
            "chosen": b.chosen,
        })
    doc = [{
        "scenario": spec.label(),
        "target": args.target,
        "mode": mode,
        "strategy": args.strategy,
        "branches": branches,
        "uniform_bound": _alg_json(rep.uniform),
        "exact": rep.uniform_exact,
        "diagnostics": rep.diagnostics,
    }]
    print(render(doc if args.format == "json" else [{
        "scenario": spec.label(), "target": args.target, "mode": mode,
        "uniform_bound": _alg_json(rep.uniform),
        "branches": len(rep.branches), "exact": rep.uniform_exact,
    }], args.format))
    return 0


def cmd_table(args) -> int:
    tid = args.id
    rows = []
    if tid.startswith("lemma"):
        for cell in lemma_table(tid[len("lemma"):]):
            rows.append({
                "item": cell.row.item,
                "case": cell.row.label,
                "moment": f"c{cell.row.key[0]}{cell.row.key[1]}",
                "computed": (sorted(cell.computed)
                             if cell.computed is not None else "unresolvable"),
                "expected": (sorted(cell.row.expected)
                             if cell.row.expected is not None
                             else "not stated"),
                "match": cell.ok,
            })
    elif tid in ("thm1.1", "thm1.2"):
        for cell in global_table(tid[len("thm"):]):
            rows.append({"case": cell.label,
                         "bound": _alg_json(cell.computed),
                         "expected": _alg_json(cell.expected),
                         "match": cell.ok})
    else:
        for cell in theorem_table(tid[len("thm"):]):
            rows.append({
                "case": cell.row.label,
                "strategy": cell.row.pinned,
                "bound": _alg_json(cell.pinned),
                "expected": _alg_json(cell.row.expected),
                "match": cell.ok,
                "best": _alg_json(cell.best),
                "best_improves": cell.improved,
            })
    print(render(rows, args.format))
    return 0


def cmd_chebotarev(args) -> int:
    if args.example == "z4-check":
        checks = verify_property_P_Z4()
        rows = [{"check": k, "holds": v} for k, v in checks.items()]
        print(render(rows, args.format))
        return 0 if all(checks.values()) else 1
    got = CHEB_EXAMPLES[args.example]()
    rows = [{"example": args.example, "group_order": got["size"],
             "density_gt": str(got["gt"]), "density_neq": str(got["neq"])}]
    print(render(rows, args.format))
    return 0


def cmd_verify_all(args) -> int:
    items = verify_all()
    rows = [{"section": i.section, "case": i.label, "computed": i.computed,
             "expected": i.expected, "match": i.ok, "note": i.note}
            for i in items]
    print(render(rows, args.format))
    bad = [i for i in items if not i.ok]
    if bad:
        print(f"\n{len(bad)} mismatch(es):", file=sys.stderr)
        for i in bad:
            print(f"  [{i.section}] {i.label}: computed {i.computed}, "
                  f"expected {i.expected}", file=sys.stderr)
            if i.note:
                print(f"    analysis: {i.note}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("md", "csv", "json"),
                        default=None, help="output format (default md)")
    p = argparse.ArgumentParser(
        prog="polebound",
        parents=[common],
        description="Symbolic Rankin-Selberg pole orders and Dirichlet "
                    "density bounds for adjoint-lift comparisons.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("poles", parents=[common],
                        help="print the pole-order table of a case")
    sp.add_argument("--case", required=True)
    sp.set_defaults(fn=cmd_poles)

    sb = sub.add_parser("bounds", parents=[common],
                        help="density bound for a case")
    sb.add_argument("--case", required=True)
    sb.add_argument("--target", choices=TARGETS, default="gt")
    sb.add_argument("--strategy", choices=STRATEGIES)
    sb.add_argument("--mode", choices=("best", "pinned"), default="best")
    sb.set_defaults(fn=cmd_bounds)

    st = sub.add_parser("table", parents=[common],
                        help="emit a full lemma/theorem table")
    st.add_argument("--id", choices=TABLE_IDS, required=True)
    st.set_defaults(fn=cmd_table)

    sch = sub.add_parser("chebotarev", parents=[common],
                         help="finite-group examples")
    sch.add_argument("--example", required=True,
                     choices=tuple(CHEB_EXAMPLES) + ("z4-check",))
    sch.set_defaults(fn=cmd_chebotarev)

    sv = sub.add_parser("verify-all", parents=[common],
                        help="verify everything against the published values")
    sv.set_defaults(fn=cmd_verify_all)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = "md"
    try:
        return args.fn(args)
    except InvalidCaseSpec as e:
        parser.error(str(e))  # exits 2
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
