"""Tabulate fpd for Q(n, m) over a grid of loop counts and compare with the closed form."""
import argparse

from quiverfpd import FamilySpec, fpd_family


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=5, help="largest loop count on either vertex")
    args = parser.parse_args()

    print(f"{'n':>3} {'m':>3} {'fpd':>16}  {'exact':<24} {'delta':>9}")
    for n in range(args.max + 1):
        for m in range(args.max + 1):
            r = fpd_family(FamilySpec.qnm(n, m))
            cf = r.closed_form
            print(f"{n:>3} {m:>3} {r.fpd_value:>16.12f}  {str(r.fpd_exact):<24} {cf.delta:>9.1e}" + ("" if cf.match else "  MISMATCH"))


if __name__ == "__main__":
    main()
