"""Run the acceptance battery and write the results as JSON."""
import argparse
import json
import sys

from quiverfpd.verify import run_battery


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true")
    parser.add_argument("--no-oracle", action="store_true", help="skip the slow oracle equivalence criterion")
    parser.add_argument("-o", "--output", help="write JSON results here")
    args = parser.parse_args()

    results = run_battery(quick=args.quick, oracle=not args.no_oracle)
    for r in results:
        print(r.line())
    if args.output:
        with open(args.output, "w") as fh:
            json.dump([r.as_dict() for r in results], fh, indent=2)
            fh.write("\n")
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
