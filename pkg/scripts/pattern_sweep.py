#!/usr/bin/env python3
"""Generate radiation-pattern CSV cuts for a sweep of linear array sizes and
print the beamwidth/sidelobe summary. The CSVs plot directly in any tool
(theta_deg on x, power_db on y)."""

import argparse
from pathlib import Path

from satlink import antenna


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--elements", type=int, nargs="+", default=[2, 3, 5, 7, 10])
    parser.add_argument("--spacing", type=float, default=0.5, help="element spacing in wavelengths")
    parser.add_argument("--resolution-deg", type=float, default=0.1)
    parser.add_argument("--out-dir", default="patterns")
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    print(f"{'N':>4} {'hpbw_deg':>9} {'sll':>7} {'sll_db_20log':>13} {'sll_db_10log':>13}")
    for n in args.elements:
        spec = antenna.ArraySpec.linear(n, spacing_wavelengths=args.spacing)
        path = out_dir / f"pattern_n{n}.csv"
        path.write_text(antenna.pattern_csv(spec, args.resolution_deg))
        hpbw = antenna.hpbw_numeric(spec)
        if n >= 3:
            sll = antenna.sidelobe_level(spec)
            print(
                f"{n:>4} {hpbw:>9.2f} {sll:>7.4f} "
                f"{antenna.amplitude_db_field(sll):>13.2f} {antenna.amplitude_db_power(sll):>13.2f}"
            )
        else:
            print(f"{n:>4} {hpbw:>9.2f} {'-':>7} {'-':>13} {'-':>13}")
    print(f"pattern CSVs in {out_dir}/")


if __name__ == "__main__":
    main()
