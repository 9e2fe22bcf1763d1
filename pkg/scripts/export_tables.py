#!/usr/bin/env python3
"""Dump the embedded data tables (band chart, MODCOD catalog, array catalog,
constellation shells) as CSV files for external tooling or plotting."""

import argparse
import csv
import io
from pathlib import Path

from satlink import antenna, capacity, constellation, quantities


def array_catalog_csv() -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["antenna", "directivity_linear", "directivity_dbi", "hpbw_deg"])
    for spec in antenna.ARRAY_CATALOG:
        d = antenna.directivity(spec)
        hpbw = "" if spec.elements == 1 else f"{antenna.hpbw_from_directivity(d.linear):.4g}"
        writer.writerow([spec.label, f"{d.linear:.6g}", f"{d.dbi:.4f}", hpbw])
    return out.getvalue()


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="tables", help="output directory (default: ./tables)")
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    exports = {
        "bands.csv": quantities.band_catalog_csv(),
        "modcods.csv": capacity.modcod_catalog_csv(),
        "arrays.csv": array_catalog_csv(),
        "shells.csv": constellation.shell_catalog_csv(),
    }
    for name, text in exports.items():
        path = out_dir / name
        path.write_text(text)
        print(f"wrote {path} ({len(text.splitlines())} lines)")


if __name__ == "__main__":
    main()
