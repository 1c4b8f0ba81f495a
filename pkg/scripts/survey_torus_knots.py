"""Survey the tau chain over positive torus knots T(p,q) with 2 <= p < q <= N.

    python3 scripts/survey_torus_knots.py --max-q 9 --csv survey.csv

For each coprime pair prints genus, signature, tau, the signature bound on g4,
the isotropic search radius, the tau-difference lower bound and the
conclusion.  Knots with definite symmetrized form (T(2,q), T(3,4), T(3,5))
have no isotropic vector and come out INCONCLUSIVE.
"""

import argparse
import csv
import sys
import time
from dataclasses import asdict, dataclass
from math import gcd

from algslice.concordance import tau_chain_report
from algslice.qform import SearchBudget


@dataclass(frozen=True)
class SurveyRow:
    p: int
    q: int
    genus: int
    signature: int
    tau: int
    g4_signature_bound: int
    radius: int | None
    g4_star_bound: int
    lower_bound: int
    conclusion: str
    seconds: float


def survey(max_q: int, budget: SearchBudget):
    for q in range(3, max_q + 1):
        for p in range(2, q):
            if gcd(p, q) != 1:
                continue
            t0 = time.perf_counter()
            r = tau_chain_report(p, q, budget)
            yield SurveyRow(p, q, r.genus_T, r.signature_T, r.tau_T, r.g4_signature_bound,
                            r.derived.iso.search_radius_used if r.derived else None,
                            r.g4_star_bound, r.tau_difference_lower_bound, r.conclusion.value,
                            round(time.perf_counter() - t0, 4))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-q", type=int, default=8)
    ap.add_argument("--max-norm", type=int, default=8)
    ap.add_argument("--time-budget", type=float, default=60.0)
    ap.add_argument("--csv", help="also write the table to this CSV file")
    args = ap.parse_args(argv)

    rows = list(survey(args.max_q, SearchBudget(args.max_norm, args.time_budget)))
    head = f"{'p':>3} {'q':>3} {'g':>3} {'sig':>4} {'tau':>4} {'g4>=':>5} {'r':>3} {'g4*<=':>6} {'lb':>3}  conclusion"
    print(head)
    for row in rows:
        print(f"{row.p:>3} {row.q:>3} {row.genus:>3} {row.signature:>4} {row.tau:>4} "
              f"{row.g4_signature_bound:>5} {row.radius if row.radius is not None else '-':>3} "
              f"{row.g4_star_bound:>6} {row.lower_bound:>3}  {row.conclusion}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(asdict(rows[0])))
            w.writeheader()
            w.writerows(asdict(r) for r in rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
