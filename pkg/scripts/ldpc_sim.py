"""LDPC experiment on a seeded random (3,6)-regular stand-in code.

The archive matrices "96.33.964" and "204.33.484" are not bundled. When one
is available locally pass it with --matrix; otherwise a random (3,6)-regular
204-column matrix built with the configuration model (seeded, no repeated
edges) stands in for it. Results on the stand-in are only comparable in
direction, not in value.

    python scripts/ldpc_sim.py --rows 9 --trials 20000 --crossover 0.03,0.04,0.05
"""

import argparse
from pathlib import Path

import numpy as np

from fraccut.bscsim import paired_comparison
from fraccut.codecio import load_matrix, write_sim_csv
from fraccut.bscsim import sweep
from fraccut.cutplane import GreedyConfig, greedy_improve
from fraccut.fracdist import CONE, fractional_distance
from fraccut.gf2 import BitMatrix


def regular_ldpc(n: int, wc: int, wr: int, seed: int) -> BitMatrix:
    """Random (wc, wr)-regular parity-check matrix via configuration-model sampling."""
    if (n * wc) % wr:
        raise ValueError("n * wc must be divisible by wr")
    m = n * wc // wr
    rng = np.random.default_rng(seed)
    while True:
        sockets = rng.permutation(np.repeat(np.arange(n), wc))
        M = np.zeros((m, n), dtype=int)
        ok = True
        for i in range(m):
            cols = sockets[i * wr:(i + 1) * wr]
            if len(set(cols.tolist())) < wr:
                ok = False
                break
            M[i, cols] = 1
        if ok:
            return BitMatrix.from_numpy(M)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--matrix", type=Path, default=None, help="alist file, e.g. the 204.33.484 archive file")
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--rows", type=int, default=9)
    ap.add_argument("--trials", type=int, default=10_000)
    ap.add_argument("--crossover", default="0.03,0.04,0.05")
    ap.add_argument("--out", type=Path, default=None, help="CSV prefix")
    args = ap.parse_args()

    H = load_matrix(args.matrix, "alist") if args.matrix else regular_ldpc(204, 3, 6, args.seed)
    label = args.matrix.name if args.matrix else f"random (3,6)-regular stand-in, seed {args.seed}"
    print(f"matrix: {label}, {H.m} x {H.n}")
    rep = fractional_distance(H, CONE, "float", prune=True)
    print(f"d_frac = {rep.d_frac} ({float(rep.d_frac):.3f}), |gamma| = {len(rep.gamma)}")
    res = greedy_improve(H, GreedyConfig(max_rows=args.rows, engine="float"))
    print(f"after {len(res.log)} rows: d_frac = {res.report.d_frac} ({float(res.report.d_frac):.3f})")

    ps = [float(x) for x in args.crossover.split(",")]
    for i, p in enumerate(ps):
        c = paired_comparison(H, res.final, p, args.trials, args.seed + i)
        print(f"p={p}: BLER {c.errors_a / c.trials:.3g} -> {c.errors_b / c.trials:.3g}, "
              f"discordant {c.only_a_fails}/{c.only_b_fails}, one-sided p = {c.p_value:.3g}")
    if args.out:
        Path(f"{args.out}_original.csv").write_text(write_sim_csv(sweep(H, ps, args.trials, args.seed)))
        Path(f"{args.out}_plus.csv").write_text(write_sim_csv(sweep(res.final, ps, args.trials, args.seed)))


if __name__ == "__main__":
    main()
