"""Run the tau inequality chain on a torus knot and write every certificate.

    python3 scripts/reproduce_tau_chain.py --p 4 --q 5 --outdir results/T4_5

Writes V.mat, V_star.mat, P.mat, metabolizer.mat, derived.json, slice.json and
tau_chain.json, re-verifies each JSON certificate from disk, and prints the
headline numbers.  Exit status 0 only if the summand conclusion is reached.
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from algslice import report
from algslice.concordance import Conclusion, tau_chain_report
from algslice.matrixio import write_matrix
from algslice.qform import SearchBudget


@dataclass(frozen=True)
class RunConfig:
    p: int = 4
    q: int = 5
    outdir: Path = Path("results/T4_5")
    max_norm: int = 8
    time_budget: float = 120.0


def parse_args(argv=None) -> RunConfig:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=RunConfig.p)
    ap.add_argument("--q", type=int, default=RunConfig.q)
    ap.add_argument("--outdir", type=Path, default=RunConfig.outdir)
    ap.add_argument("--max-norm", type=int, default=RunConfig.max_norm)
    ap.add_argument("--time-budget", type=float, default=RunConfig.time_budget)
    a = ap.parse_args(argv)
    return RunConfig(a.p, a.q, a.outdir, a.max_norm, a.time_budget)


def main(argv=None) -> int:
    cfg = parse_args(argv)
    cfg.outdir.mkdir(parents=True, exist_ok=True)
    t0 = time.perf_counter()
    r = tau_chain_report(cfg.p, cfg.q, SearchBudget(cfg.max_norm, cfg.time_budget))
    elapsed = time.perf_counter() - t0

    docs = {"tau_chain.json": report.tau_chain_to_json(r)}
    if r.derived is not None:
        docs["derived.json"] = report.derived_to_json(r.derived)
        docs["slice.json"] = report.slice_to_json(r.slice)
        write_matrix(cfg.outdir / "V.mat", r.derived.original.matrix)
        write_matrix(cfg.outdir / "P.mat", r.derived.change.matrix)
        write_matrix(cfg.outdir / "V_star.mat", r.derived.derived.matrix)
        write_matrix(cfg.outdir / "metabolizer.mat", r.slice.metabolizer)
    for name, doc in docs.items():
        (cfg.outdir / name).write_text(json.dumps(doc, indent=2) + "\n")

    print(f"T({r.p},{r.q}): genus {r.genus_T}, signature {r.signature_T}, tau {r.tau_T}")
    if r.derived is not None:
        print(f"  isotropic z = {list(r.derived.iso.z)} (sup-norm {r.derived.iso.search_radius_used})")
        print(f"  V*[0,0] = {r.derived.corner}  =>  g4(T*) <= {r.g4_star_bound}")
    print(f"  tau(T # -T*) >= {r.tau_T} - {r.g4_star_bound} = {r.tau_difference_lower_bound}")
    print(f"  conclusion: {r.conclusion.value}{'' if not r.reason else ' (' + r.reason + ')'}")
    for name in docs:
        failed = report.verify_certificate(json.loads((cfg.outdir / name).read_text()))
        print(f"  re-verify {name}: {'ok' if not failed else 'FAILED ' + ', '.join(failed)}")
        if failed:
            return 2
    print(f"  wall time {elapsed:.3f} s; certificates in {cfg.outdir}")
    return 0 if r.conclusion is Conclusion.SUMMAND_ESTABLISHED else 3


if __name__ == "__main__":
    sys.exit(main())
