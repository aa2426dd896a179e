"""Distribution of mu(b) over primitive elements, for a grid of small parameters.

For b = r the value never moves; for b < r it can, which this script makes
visible.  Output is one JSON line per (p, e, r, b).
"""

import argparse
import json

from bsymbol import build_tower, mu_scan, validate_params

GRID = [(3, 1, 2), (3, 1, 4), (5, 1, 2), (5, 1, 4), (7, 1, 2), (3, 2, 2), (3, 1, 6)]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=None, help="cap on primitive elements per case")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--threads", type=int, default=1)
    args = parser.parse_args()

    for p, e, r in GRID:
        params = validate_params(build_tower(p, e, r), 2)
        for b in range(2, r + 1):
            scan = mu_scan(params, b, samples=args.samples, seed=args.seed, threads=args.threads)
            print(json.dumps({"p": p, "e": e, "r": r, "N": 2, **scan.to_dict()}, sort_keys=True))


if __name__ == "__main__":
    main()
