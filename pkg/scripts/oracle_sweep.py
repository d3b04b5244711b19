#!/usr/bin/env python3
"""Sweep finite-model instantiations of every dihedral scenario and compare
each model pole order with the symbolic outcome set.

Prints, per scenario and moment, the set of values the models realize
next to the symbolic set.  A model value outside the symbolic set would
be an engine bug; a symbolic value no abelian model realizes is reported
too (that is how the two disputed rows of the published same-field table
were confirmed)."""

import argparse
from collections import defaultdict

from polebound.algebra import CaseSpec, SideSpec
from polebound.chebotarev import instantiations_for, model_oracle
from polebound.poles import ALL_KEYS, ctable, scenario_build

FLAGS = ("P", "IP", "Q", "R")


def run(max_order: int, per_scenario: int) -> int:
    bad = 0
    for f1 in FLAGS:
        for f2 in ("IP", "Q", "R"):
            for same in (True, False):
                spec = CaseSpec(SideSpec("dihedral", f1),
                                SideSpec("dihedral", f2), same)
                insts = instantiations_for(spec, max_order)
                if per_scenario and len(insts) > per_scenario:
                    step = len(insts) // per_scenario
                    insts = insts[::step][:per_scenario]
                table = ctable(scenario_build(spec))
                seen = defaultdict(set)
                for inst in insts:
                    for jk in ALL_KEYS:
                        if table.outcome(*jk).known:
                            seen[jk].add(model_oracle(inst, jk, spec))
                print(f"== {spec.label()} ({len(insts)} models)")
                for jk in ALL_KEYS:
                    o = table.outcome(*jk)
                    if not o.known:
                        continue
                    extra = seen[jk] - o.outcomes
                    unrealized = o.outcomes - seen[jk]
                    line = (f"  c{jk[0]}{jk[1]}: models {sorted(seen[jk])} "
                            f"symbolic {sorted(o.outcomes)}")
                    if extra:
                        line += f"  VIOLATION {sorted(extra)}"
                        bad += 1
                    elif unrealized:
                        line += f"  (unrealized: {sorted(unrealized)})"
                    print(line)
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-order", type=int, default=16)
    ap.add_argument("--per-scenario", type=int, default=40)
    args = ap.parse_args()
    raise SystemExit(run(args.max_order, args.per_scenario))
