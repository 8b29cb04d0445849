"""Block error rate of the Golay matrix with and without appended rows.

    python scripts/bler_sweep.py --trials 100000 --out runs/golay
writes runs/golay_original.csv, runs/golay_plus40.csv and runs/golay_plus100.csv.
"""

import argparse
from pathlib import Path

from fraccut import load_bundled
from fraccut.bscsim import sweep
from fraccut.codecio import write_sim_csv
from fraccut.cutplane import GreedyConfig, greedy_improve


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--crossover", default="0.01,0.02,0.03,0.05,0.07,0.1")
    ap.add_argument("--trials", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--budgets", default="40,100")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", type=Path, default=Path("golay"))
    args = ap.parse_args()

    H = load_bundled("golay.alist")
    ps = [float(x) for x in args.crossover.split(",")]
    mats = {"original": H}
    for b in (int(x) for x in args.budgets.split(",")):
        mats[f"plus{b}"] = greedy_improve(H, GreedyConfig(max_rows=b, engine="float")).final
    args.out.parent.mkdir(parents=True, exist_ok=True)
    for name, M in mats.items():
        pts = sweep(M, ps, args.trials, args.seed, jobs=args.jobs)  # same seeds: common random numbers
        path = Path(f"{args.out}_{name}.csv")
        path.write_text(write_sim_csv(pts))
        print(f"{name:9} ({M.m} rows): " + "  ".join(f"{p.crossover}:{p.bler:.3g}" for p in pts))


if __name__ == "__main__":
    main()
