"""Command-line front end: every module surfaced as a subcommand.

Output formats: human table (hand-calculation rounding unless --precise),
json and csv (both at 6 significant digits). Exit codes are a stable
contract: 0 success, 1 domain error, 2 usage/missing input, 3 infeasible
MODCOD selection, 4 file I/O failure.

The environment variable SATLINK_CONSTANTS may point to a JSON document
overriding physical constants (keys of PhysicalConstants, e.g. c_m_per_s,
boltzmann_j_per_k, earth_radius_km).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from . import antenna, capacity, constellation, geometry, linkbudget, quantities, scenario
from .errors import (
    DomainError,
    NoFeasibleModcodError,
    NotFoundError,
    ParseError,
    SatlinkError,
    ValidationError,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3
EXIT_IO = 4


class _UsageError(SatlinkError):
    """Missing or contradictory command input (exit code 2)."""


# --- value formatting -------------------------------------------------------


def _sig6(value):
    if isinstance(value, float) and math.isfinite(value):
        return float(f"{value:.6g}")
    return value


def _json_ready(obj):
    if isinstance(obj, dict):
        return {k: _json_ready(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_ready(v) for v in obj]
    return _sig6(obj)


def _fmt_rate(bps: float) -> str:
    for scale, unit in ((1e9, "Gb/s"), (1e6, "Mb/s"), (1e3, "kb/s")):
        if abs(bps) >= scale:
            return f"{bps / scale:.2g} {unit}"
    return f"{bps:.2g} b/s"


_DB_SUFFIXES = ("_db", "_dbw", "_dbk", "_dbi", "_dbm", "_dbhz", "_dbw_per_k_hz")


def _fmt_human(key: str, value) -> str:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        return "" if value is None else str(value)
    if isinstance(value, int):
        return str(value)
    if not math.isfinite(value):
        return str(value)
    if key.endswith(_DB_SUFFIXES):
        return f"{value:.1f}"
    if key.endswith("_bps"):
        return _fmt_rate(value)
    if key.endswith("_w"):
        return f"{value:.3g}"
    if key.endswith(("_km", "_deg")):
        return f"{value:.1f}"
    if key.endswith("_fraction"):
        return f"{value:.3g}"
    return f"{value:.6g}"


def _fmt_precise(value) -> str:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        return "" if value is None else str(value)
    if isinstance(value, int):
        return str(value)
    return f"{value:.6g}"


def _emit_record(args, record: dict) -> None:
    fmt = getattr(args, "format", "table")
    if fmt == "json":
        print(json.dumps(_json_ready(record), indent=2))
        return
    if fmt == "csv":
        keys = list(record)
        print(",".join(keys))
        print(",".join(_fmt_precise(record[k]) for k in keys))
        return
    width = max(len(k) for k in record)
    precise = getattr(args, "precise", False)
    for k, v in record.items():
        text = _fmt_precise(v) if precise else _fmt_human(k, v)
        print(f"{k:<{width}}  {text}")


def _emit_rows(args, rows: list[dict]) -> None:
    fmt = getattr(args, "format", "table")
    if fmt == "json":
        print(json.dumps(_json_ready(rows), indent=2))
        return
    keys = list(rows[0]) if rows else []
    if fmt == "csv":
        print(",".join(keys))
        for row in rows:
            print(",".join(_fmt_precise(row.get(k)) for k in keys))
        return
    precise = getattr(args, "precise", False)
    rendered = [
        {k: (_fmt_precise(r.get(k)) if precise else _fmt_human(k, r.get(k))) for k in keys}
        for r in rows
    ]
    widths = {k: max(len(k), *(len(r[k]) for r in rendered)) if rendered else len(k) for k in keys}
    print("  ".join(f"{k:<{widths[k]}}" for k in keys))
    for r in rendered:
        print("  ".join(f"{r[k]:<{widths[k]}}" for k in keys))


# --- shared flag helpers ------------------------------------------------------


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--precise", action="store_true", help="full 6-significant-digit tables")


def _add_bw_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--bw-hz", type=float)
    g.add_argument("--bw-khz", type=float)
    g.add_argument("--bw-mhz", type=float)
    g.add_argument("--bw-ghz", type=float)


def _bw_hz(ns) -> float | None:
    for attr, scale in (("bw_hz", 1.0), ("bw_khz", 1e3), ("bw_mhz", 1e6), ("bw_ghz", 1e9)):
        v = getattr(ns, attr, None)
        if v is not None:
            return v * scale
    return None


def _freq_hz(ns) -> float | None:
    for attr, scale in (("freq_hz", 1.0), ("freq_mhz", 1e6), ("freq_ghz", 1e9)):
        v = getattr(ns, attr, None)
        if v is not None:
            return v * scale
    return None


def _constants_from_env() -> quantities.PhysicalConstants:
    path = os.environ.get("SATLINK_CONSTANTS")
    if not path:
        return quantities.DEFAULT_CONSTANTS
    return quantities.PhysicalConstants.from_file(path)


# --- convert ------------------------------------------------------------------


def _cmd_convert_db(args, constants) -> int:
    _emit_record(args, {"linear": args.linear, "db": quantities.db_from_linear(args.linear)})
    return EXIT_OK


def _cmd_convert_linear(args, constants) -> int:
    _emit_record(args, {"db": args.db, "linear": quantities.linear_from_db(args.db)})
    return EXIT_OK


def _cmd_convert_power(args, constants) -> int:
    given = [v for v in (args.watts, args.dbw, args.dbm) if v is not None]
    if len(given) != 1:
        raise _UsageError("exactly one of --watts, --dbw, --dbm")
    if args.watts is not None:
        p = quantities.Power(args.watts)
    elif args.dbw is not None:
        p = quantities.Power.from_dbw(args.dbw)
    else:
        p = quantities.Power.from_dbm(args.dbm)
    _emit_record(args, {"watts": p.watts, "power_dbw": p.dbw, "power_dbm": p.dbm})
    return EXIT_OK


def _cmd_convert_noise_temp(args, constants) -> int:
    t_ref = args.t_ref_k if args.t_ref_k is not None else constants.t_ref_k
    t = quantities.noise_temperature_from_nf(args.nf_db, t_ref)
    _emit_record(args, {"nf_db": args.nf_db, "t_ref_k": t_ref, "noise_temp_k": t})
    return EXIT_OK


def _cmd_convert_wavelength(args, constants) -> int:
    f = _freq_hz(args)
    if f is None:
        raise _UsageError("freq_ghz (or --freq-mhz / --freq-hz)")
    _emit_record(args, {"freq_hz": f, "wavelength_m": quantities.wavelength(f, constants)})
    return EXIT_OK


def _cmd_convert_band(args, constants) -> int:
    f = _freq_hz(args)
    if f is None:
        raise _UsageError("freq_mhz (or --freq-ghz / --freq-hz)")
    band = quantities.band_lookup(f, args.direction, args.orbit)
    rows = [
        {
            "band": a.band,
            "orbit": a.orbit,
            "direction": a.direction,
            "intervals_mhz": "; ".join(f"{lo:g}-{hi:g}" for lo, hi in a.intervals_mhz),
        }
        for a in quantities.matching_allocations(f, args.direction, args.orbit)
    ]
    if args.format == "table":
        print(f"band  {band}")
    _emit_rows(args, rows)
    return EXIT_OK


def _cmd_convert_bands(args, constants) -> int:
    text = quantities.band_catalog_csv()
    if args.out:
        _write_file(args.out, text)
    else:
        print(text, end="")
    return EXIT_OK


# --- geometry -------------------------------------------------------------------


def _cmd_geometry_slant(args, constants) -> int:
    elev_rad = math.radians(args.elevation_deg)
    record = {
        "altitude_km": args.altitude_km,
        "elevation_deg": args.elevation_deg,
        "slant_range_km": geometry.slant_range_exact(args.altitude_km, elev_rad, constants),
    }
    if elev_rad < math.pi / 2:
        record["slant_range_altitude_approx_km"] = geometry.slant_range_altitude_approx(
            args.altitude_km, elev_rad
        )
    _emit_record(args, record)
    return EXIT_OK


def _cmd_geometry_footprint(args, constants) -> int:
    fp = geometry.satellite_footprint(args.sats_per_orbit, args.coverage_sats, constants)
    _emit_record(
        args,
        {
            "sats_per_orbit": args.sats_per_orbit,
            "coverage_sats": args.coverage_sats or args.sats_per_orbit,
            "footprint_diameter_km": fp.diameter_km,
            "footprint_area_km2": fp.area_km2,
            "coverage_fraction": fp.coverage_fraction,
        },
    )
    return EXIT_OK


def _cmd_geometry_cell(args, constants) -> int:
    r = geometry.cell_radius_from_split(args.parent_radius_km, args.beams)
    record = {
        "parent_radius_km": args.parent_radius_km,
        "beams": args.beams,
        "cell_radius_km": r,
    }
    if args.altitude_km is not None:
        hpbw = geometry.required_hpbw(r, args.altitude_km)
        record["required_hpbw_rad"] = hpbw
        record["required_hpbw_deg"] = math.degrees(hpbw)
    _emit_record(args, record)
    return EXIT_OK


# --- linkbudget -------------------------------------------------------------------


_CONFIG_KEYS = {
    "distance_km",
    "altitude_km",
    "elevation_deg",
    "freq_ghz",
    "freq_mhz",
    "eirp_dbw",
    "power_w",
    "gain_dbi",
    "terminal",
    "rx_gain_dbi",
    "nf_db",
    "noise_temp_k",
    "g_over_t_dbk",
    "bw_hz",
    "bw_khz",
    "bw_mhz",
    "bw_ghz",
    "atm_loss_db",
    "ad_loss_db",
    "margin_db",
}


def _load_budget_config(path: str) -> dict:
    try:
        doc = json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise _UsageError(f"config file {path!r} not found")
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg}", line=exc.lineno, column=exc.colno)
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: link budget config must be a JSON object")
    unknown = set(doc) - _CONFIG_KEYS
    if unknown:
        raise ValidationError(sorted(unknown)[0], f"unknown config keys: {sorted(unknown)}")
    return doc


def _cmd_linkbudget(args, constants) -> int:
    cfg = _load_budget_config(args.config) if args.config else {}
    for key in _CONFIG_KEYS:
        v = getattr(args, key, None)
        if v is not None:
            cfg[key] = v

    if "distance_km" in cfg:
        distance_m = float(cfg["distance_km"]) * 1e3
    elif "altitude_km" in cfg and "elevation_deg" in cfg:
        distance_m = 1e3 * geometry.slant_range_exact(
            float(cfg["altitude_km"]), math.radians(float(cfg["elevation_deg"])), constants
        )
    else:
        raise _UsageError("distance_km (or altitude_km + elevation_deg)")

    if "freq_ghz" in cfg:
        freq_hz = float(cfg["freq_ghz"]) * 1e9
    elif "freq_mhz" in cfg:
        freq_hz = float(cfg["freq_mhz"]) * 1e6
    else:
        raise _UsageError("freq_ghz")

    bw_hz = _bw_hz(args) or next(
        (float(cfg[k]) * s for k, s in (("bw_hz", 1.0), ("bw_khz", 1e3), ("bw_mhz", 1e6), ("bw_ghz", 1e9)) if k in cfg),
        None,
    )
    if bw_hz is None:
        raise _UsageError("bw_khz (or --bw-hz / --bw-mhz / --bw-ghz)")

    atm = float(cfg.get("atm_loss_db", 0.0))
    ad = float(cfg.get("ad_loss_db", 0.0))
    margin = float(cfg.get("margin_db", 0.0))

    if "eirp_dbw" in cfg:
        tx = linkbudget.Transmitter(
            power_w=quantities.linear_from_db(float(cfg["eirp_dbw"])), gain_dbi=0.0
        )
    elif "power_w" in cfg and "gain_dbi" in cfg:
        tx = linkbudget.Transmitter(power_w=float(cfg["power_w"]), gain_dbi=float(cfg["gain_dbi"]))
    else:
        raise _UsageError("eirp_dbw (or power_w + gain_dbi)")

    if "g_over_t_dbk" in cfg:
        result = linkbudget.snr_db(
            tx.eirp_dbw,
            float(cfg["g_over_t_dbk"]),
            linkbudget.fspl(distance_m, freq_hz, constants),
            atm,
            ad,
            margin,
            quantities.db_from_linear(bw_hz),
            constants,
        )
    else:
        if "terminal" in cfg:
            profile = scenario.terminal_profile(cfg["terminal"])
            rx = linkbudget.Receiver(
                gain_dbi=profile.gain_dbi,
                nf_db=profile.nf_db,
                noise_temp_k=profile.noise_temp_k,
                t_ref_k=constants.t_ref_k,
            )
        elif "rx_gain_dbi" in cfg and ("nf_db" in cfg or "noise_temp_k" in cfg):
            rx = linkbudget.Receiver(
                gain_dbi=float(cfg["rx_gain_dbi"]),
                nf_db=float(cfg["nf_db"]) if "nf_db" in cfg else None,
                noise_temp_k=float(cfg["noise_temp_k"]) if "noise_temp_k" in cfg else None,
                t_ref_k=constants.t_ref_k,
            )
        else:
            raise _UsageError("g_over_t_dbk, terminal, or rx_gain_dbi + nf_db/noise_temp_k")
        result = linkbudget.link_budget(
            tx, rx, distance_m, freq_hz, bw_hz, atm, ad, margin, constants
        )
    _emit_record(args, result.to_dict())
    return EXIT_OK


# --- capacity family ---------------------------------------------------------------


def _cmd_capacity(args, constants) -> int:
    bw = _bw_hz(args)
    if bw is None:
        raise _UsageError("bw_khz (or --bw-hz / --bw-mhz / --bw-ghz)")
    if (args.snr_db is None) == (args.snr_linear is None):
        raise _UsageError("exactly one of --snr-db, --snr-linear")
    snr = args.snr_linear if args.snr_linear is not None else quantities.linear_from_db(args.snr_db)
    _emit_record(
        args,
        {
            "bw_hz": bw,
            "snr_linear": snr,
            "snr_db": quantities.db_from_linear(snr) if snr > 0 else -math.inf,
            "se_max_bps_hz": capacity.max_spectral_efficiency(snr),
            "capacity_bps": capacity.shannon_capacity(bw, snr),
        },
    )
    return EXIT_OK


def _cmd_modcod(args, constants) -> int:
    catalog = capacity.load_modcod_catalog(Path(args.catalog)) if args.catalog else capacity.MODCOD_TABLE
    chosen, margin = capacity.select_modcod(args.snr_db, catalog)
    record = {
        "snr_db": args.snr_db,
        "modcod": chosen.name,
        "se_bps_hz": chosen.se_bps_hz,
        "snr_qef_db": chosen.snr_qef_db,
        "margin_db": margin,
    }
    bw = _bw_hz(args)
    if bw is not None:
        record["bitrate_bps"] = capacity.effective_bitrate(chosen.se_bps_hz, bw)
    _emit_record(args, record)
    return EXIT_OK


def _cmd_multibeam(args, constants) -> int:
    cfg = capacity.MultiBeamConfig(
        se_bps_hz=args.se,
        bandwidth_hz=args.bw_ghz * 1e9,
        polarizations=args.pol,
        beams=args.beams,
        colors=args.colors,
        guard_fraction=args.guard,
    )
    _emit_record(
        args,
        {
            "se_bps_hz": cfg.se_bps_hz,
            "bw_hz": cfg.bandwidth_hz,
            "polarizations": cfg.polarizations,
            "beams": cfg.beams,
            "colors": cfg.colors,
            "guard_fraction": cfg.guard_fraction,
            "capacity_bps": capacity.multibeam_capacity(cfg),
        },
    )
    return EXIT_OK


def _cmd_cost(args, constants) -> int:
    _emit_record(
        args,
        {"rtot_gbps": args.rtot_gbps, "cost_per_gbps": capacity.satellite_cost_per_gbps(args.rtot_gbps)},
    )
    return EXIT_OK


def _cmd_tcp(args, constants) -> int:
    model = capacity.TcpLinkModel(
        mss_bytes=args.mss,
        rtt_s=args.rtt_ms * 1e-3,
        loss_probability=args.ploss,
        c_constant=args.c,
    )
    _emit_record(
        args,
        {
            "mss_bytes": model.mss_bytes,
            "rtt_ms": args.rtt_ms,
            "loss_probability": model.loss_probability,
            "c_constant": model.c_constant,
            "throughput_bps": capacity.tcp_throughput_bound(model),
        },
    )
    return EXIT_OK


# --- antenna -------------------------------------------------------------------------


def _write_file(path: str, text: str) -> None:
    # OSError propagates to main() and maps to the I/O exit code
    Path(path).write_text(text)


def _cmd_antenna_pattern(args, constants) -> int:
    spec = antenna.ArraySpec.linear(args.elements, spacing_wavelengths=args.spacing)
    text = antenna.pattern_csv(spec, args.resolution_deg)
    if args.out:
        _write_file(args.out, text)
    else:
        print(text, end="")
    return EXIT_OK


def _cmd_antenna_select(args, constants) -> int:
    if args.hpbw_deg is not None:
        required = args.hpbw_deg
        extra = {}
    elif args.cell_radius_km is not None and args.altitude_km is not None:
        required = math.degrees(geometry.required_hpbw(args.cell_radius_km, args.altitude_km))
        extra = {"cell_radius_km": args.cell_radius_km, "altitude_km": args.altitude_km}
    else:
        raise _UsageError("hpbw_deg (or cell_radius_km + altitude_km)")
    spec, peak_dbi, edge_dbi = antenna.select_array(required)
    record = {
        **extra,
        "required_hpbw_deg": required,
        "array": spec.label,
        "elements": spec.elements,
        "hpbw_deg": antenna.hpbw_from_directivity(antenna.directivity(spec).linear),
        "peak_gain_dbi": peak_dbi,
        "edge_gain_dbi": edge_dbi,
    }
    _emit_record(args, record)
    return EXIT_OK


def _cmd_antenna_table(args, constants) -> int:
    rows = []
    for spec in antenna.ARRAY_CATALOG:
        d = antenna.directivity(spec)
        rows.append(
            {
                "antenna": spec.label,
                "directivity_linear": d.linear,
                "directivity_dbi": d.dbi,
                "hpbw_deg": None if spec.elements == 1 else antenna.hpbw_from_directivity(d.linear),
            }
        )
    _emit_rows(args, rows)
    return EXIT_OK


# --- constellation ----------------------------------------------------------------------


def _cmd_constellation_list(args, constants) -> int:
    rows = [
        {
            "constellation": s.constellation,
            "shell": s.shell_id,
            "altitude_km": s.altitude_km,
            "orbits": s.orbits,
            "sats_per_orbit": s.sats_per_orbit,
            "inclination_deg": s.inclination_deg,
            "total_satellites": s.total_satellites,
        }
        for s in constellation.list_shells()
    ]
    _emit_rows(args, rows)
    return EXIT_OK


def _cmd_constellation_stats(args, constants) -> int:
    stats = constellation.shell_stats(args.shell, constants)
    shell = constellation.get_shell(args.shell)
    _emit_record(
        args,
        {
            "shell": stats.shell_id,
            "constellation": shell.constellation,
            "altitude_km": shell.altitude_km,
            "footprint_diameter_km": stats.footprint_diameter_km,
            "footprint_area_km2": stats.footprint_area_km2,
            "orbit_coverage_fraction": stats.orbit_coverage_fraction,
            "shell_coverage_fraction": stats.shell_coverage_fraction,
            "total_satellites": stats.total_satellites,
        },
    )
    return EXIT_OK


# --- scenario -------------------------------------------------------------------------------


def _report_rows(report: scenario.ScenarioReport) -> list[dict]:
    return [
        {
            "quantity": f.quantity,
            "direction": f.direction,
            "label": f.label,
            "status": f.status,
            "computed": f.computed,
            "reported": f.reported,
            "delta": f.delta,
            "missing": ";".join(f.missing) if f.missing else None,
        }
        for f in report.findings
    ]


def _cmd_scenario_run(args, constants) -> int:
    name = args.scenario
    try:
        s = scenario.fixture(name)
    except NotFoundError as exc:
        if Path(name).is_file():
            s = scenario.load_scenario(Path(name))
        elif name.endswith(".json"):
            print(f"error: scenario file {name!r} not found", file=sys.stderr)
            return EXIT_USAGE
        else:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    report = scenario.run_scenario(s)
    if args.format == "json":
        print(json.dumps(_json_ready(report.to_doc()), indent=2))
        return EXIT_OK
    if args.format == "table":
        print(f"scenario  {s.name} ({s.orbit})")
        if s.description:
            print(f"about     {s.description}")
        if report.slant_range_km is not None:
            print(f"slant_range_km  {report.slant_range_km:.1f}")
        for note in s.annotations:
            print(f"note      {note}")
        print()
    _emit_rows(args, _report_rows(report))
    return EXIT_OK


def _cmd_scenario_list(args, constants) -> int:
    rows = [
        {
            "name": s.name,
            "orbit": s.orbit,
            "band": s.band,
            "altitude_km": s.altitude_km,
            "description": s.description,
        }
        for s in scenario.builtin_fixtures()
    ]
    _emit_rows(args, rows)
    return EXIT_OK


# --- parser ------------------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="satlink",
        description="Satellite-link engineering toolkit",
    )
    sub = parser.add_subparsers(dest="command")

    # convert
    convert = sub.add_parser("convert", help="unit conversions and the band chart")
    csub = convert.add_subparsers(dest="subcommand")
    p = csub.add_parser("db", help="linear ratio to dB")
    p.add_argument("--linear", type=float, required=True)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_convert_db)
    p = csub.add_parser("linear", help="dB to linear ratio")
    p.add_argument("--db", type=float, required=True)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_convert_linear)
    p = csub.add_parser("power", help="watts / dBW / dBm views")
    p.add_argument("--watts", type=float)
    p.add_argument("--dbw", type=float)
    p.add_argument("--dbm", type=float)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_convert_power)
    p = csub.add_parser("noise-temp", help="noise figure to noise temperature")
    p.add_argument("--nf-db", type=float, required=True)
    p.add_argument("--t-ref-k", type=float)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_convert_noise_temp)
    p = csub.add_parser("wavelength", help="carrier frequency to wavelength")
    p.add_argument("--freq-ghz", type=float)
    p.add_argument("--freq-mhz", type=float)
    p.add_argument("--freq-hz", type=float)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_convert_wavelength)
    p = csub.add_parser("band", help="resolve a frequency to its ITU band")
    p.add_argument("--freq-mhz", type=float)
    p.add_argument("--freq-ghz", type=float)
    p.add_argument("--freq-hz", type=float)
    p.add_argument("--direction", choices=(quantities.DOWNLINK, quantities.UPLINK), required=True)
    p.add_argument("--orbit", choices=(quantities.GEO, quantities.NON_GEO, quantities.ANY_ORBIT),
                   default=quantities.ANY_ORBIT)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_convert_band)
    p = csub.add_parser("bands", help="export the band allocation chart as CSV")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_convert_bands)

    # geometry
    geo = sub.add_parser("geometry", help="slant range, footprints, beam cells")
    gsub = geo.add_subparsers(dest="subcommand")
    p = gsub.add_parser("slant", help="slant range from altitude and elevation")
    p.add_argument("--altitude-km", type=float, required=True)
    p.add_argument("--elevation-deg", type=float, required=True)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_geometry_slant)
    p = gsub.add_parser("footprint", help="per-satellite footprint and coverage")
    p.add_argument("--sats-per-orbit", type=int, required=True)
    p.add_argument("--coverage-sats", type=int)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_geometry_footprint)
    p = gsub.add_parser("cell", help="cell radius after an equal-area beam split")
    p.add_argument("--parent-radius-km", type=float, required=True)
    p.add_argument("--beams", type=int, required=True)
    p.add_argument("--altitude-km", type=float)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_geometry_cell)

    # linkbudget
    p = sub.add_parser("linkbudget", help="itemized dB ledger and SNR")
    p.add_argument("--config", help="JSON file with the same keys as the flags")
    p.add_argument("--distance-km", type=float)
    p.add_argument("--altitude-km", type=float)
    p.add_argument("--elevation-deg", type=float)
    p.add_argument("--freq-ghz", type=float)
    p.add_argument("--freq-mhz", type=float)
    p.add_argument("--eirp-dbw", type=float)
    p.add_argument("--power-w", type=float)
    p.add_argument("--gain-dbi", type=float)
    p.add_argument("--terminal", help="receiver terminal preset (class3-ue, vsat, iot)")
    p.add_argument("--rx-gain-dbi", type=float)
    p.add_argument("--nf-db", type=float)
    p.add_argument("--noise-temp-k", type=float)
    p.add_argument("--g-over-t-dbk", type=float)
    _add_bw_flags(p)
    p.add_argument("--atm-loss-db", type=float)
    p.add_argument("--ad-loss-db", type=float)
    p.add_argument("--margin-db", type=float)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_linkbudget)

    # capacity
    p = sub.add_parser("capacity", help="Shannon capacity and spectral efficiency")
    p.add_argument("--snr-db", type=float)
    p.add_argument("--snr-linear", type=float)
    _add_bw_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_capacity)

    # modcod
    p = sub.add_parser("modcod", help="highest-rate scheme the SNR supports")
    p.add_argument("--snr-db", type=float, required=True)
    p.add_argument("--catalog", help="CSV catalog (name, se_bps_hz, snr_qef_db)")
    _add_bw_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_modcod)

    # multibeam
    p = sub.add_parser("multibeam", help="total multi-beam satellite capacity")
    p.add_argument("--se", type=float, required=True)
    p.add_argument("--bw-ghz", type=float, required=True)
    p.add_argument("--pol", type=int, default=1)
    p.add_argument("--beams", type=int, required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--guard", type=float, default=0.0)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_multibeam)

    # cost
    p = sub.add_parser("cost", help="cost per Gb/s power law")
    p.add_argument("--rtot-gbps", type=float, required=True)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_cost)

    # tcp
    p = sub.add_parser("tcp", help="loss-bounded TCP throughput")
    p.add_argument("--mss", type=float, required=True, help="maximum segment size in bytes")
    p.add_argument("--rtt-ms", type=float, required=True)
    p.add_argument("--ploss", type=float, required=True)
    p.add_argument("--c", type=float, default=1.0)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_tcp)

    # antenna
    ant = sub.add_parser("antenna", help="phased-array patterns and selection")
    asub = ant.add_subparsers(dest="subcommand")
    p = asub.add_parser("pattern", help="radiation-pattern cut as CSV")
    p.add_argument("--elements", type=int, required=True)
    p.add_argument("--spacing", type=float, default=0.5, help="element spacing in wavelengths")
    p.add_argument("--resolution-deg", type=float, default=0.1)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_antenna_pattern)
    p = asub.add_parser("select", help="pick the catalog array nearest a target beamwidth")
    p.add_argument("--hpbw-deg", type=float)
    p.add_argument("--cell-radius-km", type=float)
    p.add_argument("--altitude-km", type=float)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_antenna_select)
    p = asub.add_parser("table", help="reference array catalog")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_antenna_table)

    # constellation
    con = sub.add_parser("constellation", help="LEO shell catalog and footprints")
    consub = con.add_subparsers(dest="subcommand")
    p = consub.add_parser("list", help="all catalog shells")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_constellation_list)
    p = consub.add_parser("stats", help="footprint statistics for one shell")
    p.add_argument("shell")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_constellation_stats)

    # scenario
    sce = sub.add_parser("scenario", help="NTN project consistency reports")
    ssub = sce.add_subparsers(dest="subcommand")
    p = ssub.add_parser("run", help="run a bundled fixture or a scenario file")
    p.add_argument("scenario", help="fixture name or JSON file path")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_scenario_run)
    p = ssub.add_parser("list", help="bundled fixtures")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_scenario_list)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "func"):
        parser.print_help(file=sys.stderr)
        return EXIT_USAGE
    try:
        constants = _constants_from_env()
        return args.func(args, constants)
    except _UsageError as exc:
        print(f"error: missing parameter: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NoFeasibleModcodError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except NotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
