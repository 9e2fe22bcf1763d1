#!/usr/bin/env python3
"""Run every bundled NTN project fixture and print a one-line verdict per
derived quantity, plus a closing tally of inconsistencies found."""

import argparse

from satlink import scenario


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--only", nargs="*", help="subset of fixture names")
    args = parser.parse_args()

    names = args.only or [s.name for s in scenario.builtin_fixtures()]
    flagged = []
    for name in names:
        report = scenario.run_scenario(scenario.fixture(name))
        print(f"== {name}")
        for f in report.findings:
            where = "/".join(x for x in (f.direction, f.label) if x)
            computed = "" if f.computed is None else f" computed={f.computed:g}" if isinstance(f.computed, float) else f" computed={f.computed}"
            reported = "" if f.reported is None else f" reported={f.reported:g}" if isinstance(f.reported, float) else f" reported={f.reported}"
            missing = f" missing={','.join(f.missing)}" if f.missing else ""
            print(f"  {f.quantity:<16} {where:<22} {f.status:<14}{computed}{reported}{missing}")
            if f.status == scenario.INCONSISTENT:
                flagged.append((name, f.quantity, where))
        print()
    print(f"{len(flagged)} inconsistent figure(s):")
    for name, quantity, where in flagged:
        print(f"  {name}: {quantity} {where}")


if __name__ == "__main__":
    main()
