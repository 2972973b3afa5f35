#!/usr/bin/env python3
"""Write two-user region boundary CSVs: one family sweeping the secret
fraction at fixed eavesdropper gain, one sweeping the gain at fixed secret
fraction, for both constraint styles.  Output files are plain R1,R2 vertex
lists ready for plotting."""

import argparse
from pathlib import Path

from macwiretap.channel import StandardChannel
from macwiretap.regions import region_boundary_2d

DELTAS = (0.25, 0.5, 0.75, 1.0)
GAINS = (0.1, 0.3, 0.5, 0.7, 0.9)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pmax", type=float, default=10.0, help="per-user power limit")
    parser.add_argument("--gain", type=float, default=0.5, help="gain for the delta sweep")
    parser.add_argument("--delta", type=float, default=0.5, help="fraction for the gain sweep")
    parser.add_argument("--res", type=int, default=101)
    parser.add_argument("--outdir", default="region_csv")
    args = parser.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for kind in ("INDIVIDUAL", "COLLECTIVE"):
        std = StandardChannel(2, (args.gain, args.gain), (args.pmax, args.pmax))
        for delta in DELTAS:
            boundary = region_boundary_2d(std, kind, delta=delta, power_grid_res=args.res)
            path = outdir / f"{kind.lower()}_h{args.gain:g}_delta{delta:g}.csv"
            path.write_text(boundary.to_csv_string(), encoding="utf-8")
            written.append(path)
        for gain in GAINS:
            std = StandardChannel(2, (gain, gain), (args.pmax, args.pmax))
            boundary = region_boundary_2d(std, kind, delta=args.delta, power_grid_res=args.res)
            path = outdir / f"{kind.lower()}_delta{args.delta:g}_h{gain:g}.csv"
            path.write_text(boundary.to_csv_string(), encoding="utf-8")
            written.append(path)
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
