"""Run every verification suite over the built-in corpus and print a summary table."""
import argparse
import time

from partialhopf import corpus
from partialhopf.globalize import check_globalization, check_ideal_iff_symmetric, check_minimality, standard_globalization
from partialhopf.morita import build_M_N, check_context_associativity, check_morita_surjectivity
from partialhopf.paction import (
    algebra_to_groupoid_action, classify_ground_field, classify_ground_field_oracle, groupoid_to_algebra_action,
)
from partialhopf.smash import build_partial_smash, build_smash, check_unit_iff_global
from partialhopf.wha import check_weak_hopf, lemma_suite


def mark(ok):
    return "ok" if ok else "FAIL"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--skip-morita", action="store_true", help="skip the slowest stage")
    args = ap.parse_args()
    t0 = time.perf_counter()
    failures = 0

    print("weak Hopf algebras")
    for name, H in corpus.weak_hopf_algebras(include_duals=True).items():
        rep = check_weak_hopf(H)
        rep.extend(lemma_suite(H))
        failures += not rep.ok
        print(f"  {name:14} dim={H.dim:3}  checks={rep.total:6}  {mark(rep.ok)}")

    print("ground-field classification")
    for name, G in corpus.groupoids().items():
        found = sorted(ga.lam for ga in classify_ground_field(G))
        ok = found == classify_ground_field_oracle(G)
        failures += not ok
        print(f"  {name:14} actions={len(found):2}  oracle {mark(ok)}")

    print("symmetric partial actions")
    for name, p in corpus.symmetric_actions().items():
        s = build_smash(p)
        right, glob = check_unit_iff_global(p, s)
        g = standard_globalization(p)
        row = {
            "corr": groupoid_to_algebra_action(algebra_to_groupoid_action(p)) == p,
            "smash": s.report.ok and build_partial_smash(s).report.ok and right == glob,
            "glob": check_globalization(g).ok and check_ideal_iff_symmetric(g) == (True, True) and check_minimality(g),
        }
        if not args.skip_morita:
            ctx = build_M_N(p)
            row["morita"] = check_morita_surjectivity(ctx) == (True, True) and check_context_associativity(ctx)
        failures += not all(row.values())
        cells = "  ".join(f"{k}={mark(v)}" for k, v in row.items())
        print(f"  {name:30} global={str(glob):5}  dim_smash={s.dim:3}  dim_B={g.B.dim:3}  {cells}")

    print(f"failures: {failures}  ({time.perf_counter() - t0:.1f}s)")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
