"""Print w_b of a square and a non-square codeword for every b, next to the closed forms."""

import argparse

from bsymbol import QuadraticClass, build_tower, mu, theorem31, theorem33, validate_params
from bsymbol.theorems import brute_weight


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p", type=int, default=3)
    parser.add_argument("--e", type=int, default=1)
    parser.add_argument("--r", type=int, default=4)
    parser.add_argument("--N", type=int, default=2)
    parser.add_argument("--b-max", type=int, default=None)
    args = parser.parse_args()

    params = validate_params(build_tower(args.p, args.e, args.r), args.N)
    t = params.tower
    b_max = min(args.b_max or t.r + 2, params.n - 1)
    print(f"n = {params.n}, modulus {t.provenance()['modulus']}")
    print(f"{'b':>3} {'w_b(sq)':>9} {'closed':>9} {'w_b(nsq)':>9} {'closed':>9}")
    for b in range(1, b_max + 1):
        sq, nsq = brute_weight(params, t.one, b), brute_weight(params, t.eta, b)
        if 2 <= b < t.r:
            m = mu(params, b).mu
            c_sq = theorem31(params, b, QuadraticClass.SQUARE, m).as_integer
            c_nsq = theorem31(params, b, QuadraticClass.NONSQUARE, m).as_integer
        elif b >= t.r:
            c_sq = c_nsq = theorem33(params, b)
        else:
            c_sq = c_nsq = "-"
        print(f"{b:>3} {sq:>9} {c_sq:>9} {nsq:>9} {c_nsq:>9}")


if __name__ == "__main__":
    main()
