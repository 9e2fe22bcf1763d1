"""Data model, ingestion and consistency pipeline for NTN project scenarios.

A scenario is a structured JSON document with unit-suffixed keys describing
one satellite/HAP connectivity project: orbit, band, bandwidths, terminal
class and the SINR / spectral-efficiency / bitrate figures its operator
reports. Running a scenario derives everything the inputs permit (slant
range, Shannon bound, bitrate from SE x BW, beam cell size, band-chart
check) and flags each reported figure as consistent, inconsistent or not
computable - absent inputs are never defaulted.

Scenario records keep the document's units verbatim (km, GHz, MHz, Mb/s);
conversion to SI happens only inside the computations.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

from .errors import NotFoundError, OutOfBandError, ParseError, ValidationError
from .capacity import effective_bitrate, max_spectral_efficiency
from .geometry import cell_radius_from_split, slant_range_exact
from .quantities import (
    ANY_ORBIT,
    DOWNLINK,
    GEO,
    NON_GEO,
    UPLINK,
    band_lookup,
    linear_from_db,
)

DL = "dl"
UL = "ul"

CONSISTENT = "consistent"
INCONSISTENT = "inconsistent"
NOT_COMPUTABLE = "not_computable"
COMPUTED = "computed"  # derived value with no reported counterpart to check

# relative tolerance on bitrate figures, which are typically reported with
# two significant digits
BITRATE_TOLERANCE = 0.05
SE_BOUND_SLACK = 1e-9


@dataclass(frozen=True)
class TerminalProfile:
    """A ground terminal class: antenna gain, noise (figure or temperature,
    exactly one) and transmit EIRP."""

    name: str
    gain_dbi: float
    nf_db: float | None = None
    noise_temp_k: float | None = None
    eirp_dbm: float | None = None

    def __post_init__(self):
        if not math.isfinite(self.gain_dbi):
            raise ValidationError("gain_dbi", f"terminal gain must be finite dBi, got {self.gain_dbi!r}")
        given = [v for v in (self.nf_db, self.noise_temp_k) if v is not None]
        if len(given) != 1:
            raise ValidationError(
                "nf_db/noise_temp_k", "terminal needs exactly one of noise figure or noise temperature"
            )

    def to_doc(self) -> dict:
        doc = {"name": self.name, "gain_dbi": self.gain_dbi}
        if self.nf_db is not None:
            doc["nf_db"] = self.nf_db
        if self.noise_temp_k is not None:
            doc["noise_temp_k"] = self.noise_temp_k
        if self.eirp_dbm is not None:
            doc["eirp_dbm"] = self.eirp_dbm
        return doc


# Reference terminal classes. The handset class defaults to the lower of its
# two quoted noise figures; fixtures override it where a project states 9 dB.
TERMINALS: dict[str, TerminalProfile] = {
    "class3-ue": TerminalProfile("class3-ue", gain_dbi=0.0, nf_db=7.0, eirp_dbm=23.0),
    # 2 W through the same 12 dBi aperture
    "vsat": TerminalProfile("vsat", gain_dbi=12.0, nf_db=5.0, eirp_dbm=45.0),
    "iot": TerminalProfile("iot", gain_dbi=0.0, noise_temp_k=290.0, eirp_dbm=23.0),
}


def terminal_profile(spec) -> TerminalProfile:
    """Resolve a terminal from a preset name or a (possibly partial) mapping."""
    if isinstance(spec, TerminalProfile):
        return spec
    if isinstance(spec, str):
        if spec not in TERMINALS:
            raise NotFoundError(
                f"unknown terminal {spec!r}; presets: {', '.join(sorted(TERMINALS))}",
                valid_ids=sorted(TERMINALS),
            )
        return TERMINALS[spec]
    if isinstance(spec, dict):
        doc = dict(spec)
        name = doc.pop("name", None)
        if not isinstance(name, str) or not name:
            raise ValidationError("terminal.name", "terminal mapping needs a name")
        base = TERMINALS.get(name)
        merged = base.to_doc() if base is not None else {}
        merged.pop("name", None)
        # an override of one noise representation displaces the other
        if "nf_db" in doc:
            merged.pop("noise_temp_k", None)
        if "noise_temp_k" in doc:
            merged.pop("nf_db", None)
        merged.update(doc)
        allowed = {"gain_dbi", "nf_db", "noise_temp_k", "eirp_dbm"}
        unknown = set(merged) - allowed
        if unknown:
            raise ValidationError(f"terminal.{sorted(unknown)[0]}", f"unknown terminal keys: {sorted(unknown)}")
        if "gain_dbi" not in merged:
            raise ValidationError("terminal.gain_dbi", "terminal mapping needs gain_dbi")
        return TerminalProfile(name, **{k: float(v) for k, v in merged.items()})
    raise ValidationError("terminal", f"terminal must be a preset name or mapping, got {type(spec).__name__}")


@dataclass(frozen=True)
class LinkCase:
    """One reported operating point of a link direction."""

    direction: str
    label: str = "nominal"
    sinr_db: float | None = None
    se_bps_hz: float | None = None
    bitrate_mbps: float | None = None
    bw_mhz: float | None = None  # overrides the scenario-level bandwidth

    def __post_init__(self):
        if self.direction not in (DL, UL):
            raise ValidationError("direction", f"case direction must be '{DL}' or '{UL}', got {self.direction!r}")

    def to_doc(self) -> dict:
        doc = {"direction": self.direction, "label": self.label}
        for key in ("sinr_db", "se_bps_hz", "bitrate_mbps", "bw_mhz"):
            v = getattr(self, key)
            if v is not None:
                doc[key] = v
        return doc


@dataclass(frozen=True)
class Scenario:
    """One NTN project, mirroring its source document field by field.

    Absent figures stay None; they are reported as not-computable findings
    rather than silently defaulted.
    """

    name: str
    orbit: str
    description: str | None = None
    altitude_km: float | None = None
    elevation_deg: float | None = None
    band: str | None = None
    freq_dl_ghz: float | None = None
    freq_ul_ghz: float | None = None
    bw_dl_mhz: float | None = None
    bw_ul_mhz: float | None = None
    terminal: TerminalProfile | None = None
    reuse: int | None = None
    margin_db: float | None = None
    beams: int | None = None
    footprint_radius_km: float | None = None
    cases: tuple[LinkCase, ...] = ()
    annotations: tuple[str, ...] = ()

    def bw_mhz_for(self, case: LinkCase) -> float | None:
        if case.bw_mhz is not None:
            return case.bw_mhz
        return self.bw_dl_mhz if case.direction == DL else self.bw_ul_mhz


@dataclass(frozen=True)
class Finding:
    """Verdict for one derivable quantity of a scenario."""

    quantity: str
    status: str
    direction: str | None = None
    label: str | None = None
    computed: float | str | None = None
    reported: float | str | None = None
    delta: float | None = None
    missing: tuple[str, ...] = ()

    def to_doc(self) -> dict:
        doc = {"quantity": self.quantity, "status": self.status}
        for key in ("direction", "label", "computed", "reported", "delta"):
            v = getattr(self, key)
            if v is not None:
                doc[key] = v
        if self.missing:
            doc["missing"] = list(self.missing)
        return doc

    @classmethod
    def from_doc(cls, doc: dict) -> "Finding":
        return cls(
            quantity=doc["quantity"],
            status=doc["status"],
            direction=doc.get("direction"),
            label=doc.get("label"),
            computed=doc.get("computed"),
            reported=doc.get("reported"),
            delta=doc.get("delta"),
            missing=tuple(doc.get("missing", ())),
        )


# --- document loading ------------------------------------------------------

_SCALAR_FIELDS: dict[str, tuple[str, ...]] = {
    # key -> (kind,) where kind constrains the value
    "altitude_km": ("positive",),
    "elevation_deg": ("elevation",),
    "freq_dl_ghz": ("positive",),
    "freq_ul_ghz": ("positive",),
    "bw_dl_mhz": ("positive",),
    "bw_ul_mhz": ("positive",),
    "sinr_dl_db": ("finite",),
    "sinr_ul_db": ("finite",),
    "se_dl_bps_hz": ("positive",),
    "se_ul_bps_hz": ("positive",),
    "bitrate_dl_mbps": ("positive",),
    "bitrate_ul_mbps": ("positive",),
    "margin_db": ("nonnegative",),
    "footprint_radius_km": ("positive",),
}

_COUNT_FIELDS = ("reuse", "beams")

_TOP_LEVEL_KEYS = (
    {"name", "orbit", "description", "band", "terminal", "annotations", "cases"}
    | set(_SCALAR_FIELDS)
    | set(_COUNT_FIELDS)
)

_CASE_KEYS = {"direction", "label", "sinr_db", "se_bps_hz", "bitrate_mbps", "bitrate_bps", "bw_mhz", "bw_hz"}


def _checked_number(key: str, value, kind: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(key, f"{key} must be a number, got {value!r}")
    v = float(value)
    if not math.isfinite(v):
        raise ValidationError(key, f"{key} must be finite, got {value!r}")
    if kind == "positive" and v <= 0:
        raise ValidationError(key, f"{key} must be > 0, got {value!r}")
    if kind == "nonnegative" and v < 0:
        raise ValidationError(key, f"{key} must be >= 0, got {value!r}")
    if kind == "elevation" and not 0.0 <= v <= 90.0:
        raise ValidationError(key, f"{key} must lie in [0, 90] degrees, got {value!r}")
    return v


def _parse_case(doc: dict, index: int) -> LinkCase:
    if not isinstance(doc, dict):
        raise ValidationError(f"cases[{index}]", "each case must be a mapping")
    unknown = set(doc) - _CASE_KEYS
    if unknown:
        raise ValidationError(f"cases[{index}].{sorted(unknown)[0]}", f"unknown case keys: {sorted(unknown)}")
    if "direction" not in doc:
        raise ValidationError(f"cases[{index}].direction", "case needs a direction")
    kwargs: dict = {"direction": doc["direction"], "label": doc.get("label", "nominal")}
    for key, target, scale in (
        ("sinr_db", "sinr_db", None),
        ("se_bps_hz", "se_bps_hz", None),
        ("bitrate_mbps", "bitrate_mbps", None),
        ("bw_mhz", "bw_mhz", None),
        ("bitrate_bps", "bitrate_mbps", 1e-6),
        ("bw_hz", "bw_mhz", 1e-6),
    ):
        if key in doc:
            kind = "finite" if key == "sinr_db" else "positive"
            v = _checked_number(f"cases[{index}].{key}", doc[key], kind)
            kwargs[target] = v * scale if scale else v
    return LinkCase(**kwargs)


def _scenario_from_doc(doc: dict) -> Scenario:
    if not isinstance(doc, dict):
        raise ParseError("scenario document must be a JSON object")
    unknown = set(doc) - _TOP_LEVEL_KEYS
    if unknown:
        raise ValidationError(sorted(unknown)[0], f"unknown scenario keys: {sorted(unknown)}")
    for required in ("name", "orbit"):
        if not isinstance(doc.get(required), str) or not doc.get(required):
            raise ValidationError(required, f"scenario needs a non-empty '{required}'")

    values: dict = {"name": doc["name"], "orbit": doc["orbit"], "description": doc.get("description")}
    if values["description"] is not None and not isinstance(values["description"], str):
        raise ValidationError("description", "description must be a string")
    band = doc.get("band")
    if band is not None and not isinstance(band, str):
        raise ValidationError("band", "band must be a string")
    values["band"] = band

    for key, (kind,) in _SCALAR_FIELDS.items():
        if key in doc:
            values[key] = _checked_number(key, doc[key], kind)
    for key in _COUNT_FIELDS:
        if key in doc:
            v = doc[key]
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise ValidationError(key, f"{key} must be an integer >= 1, got {v!r}")
            values[key] = v

    if "terminal" in doc and doc["terminal"] is not None:
        values["terminal"] = terminal_profile(doc["terminal"])

    annotations = doc.get("annotations", [])
    if not isinstance(annotations, list) or not all(isinstance(a, str) for a in annotations):
        raise ValidationError("annotations", "annotations must be a list of strings")
    values["annotations"] = tuple(annotations)

    cases: list[LinkCase] = []
    for direction in (DL, UL):
        point = {}
        for short, key in (
            ("sinr_db", f"sinr_{direction}_db"),
            ("se_bps_hz", f"se_{direction}_bps_hz"),
            ("bitrate_mbps", f"bitrate_{direction}_mbps"),
        ):
            if key in values:
                point[short] = values.pop(key)
        if point:
            cases.append(LinkCase(direction=direction, **point))
    raw_cases = doc.get("cases", [])
    if not isinstance(raw_cases, list):
        raise ValidationError("cases", "cases must be a list")
    cases.extend(_parse_case(c, i) for i, c in enumerate(raw_cases))
    values["cases"] = tuple(cases)
    return Scenario(**values)


def load_scenario(source) -> Scenario:
    """Load and validate a scenario from a mapping, JSON text or a file path.

    Malformed JSON raises ParseError with the location; invariant violations
    raise ValidationError naming the offending field.
    """
    if isinstance(source, dict):
        return _scenario_from_doc(source)
    if isinstance(source, Path) or (isinstance(source, str) and "\n" not in source and Path(source).is_file()):
        text = Path(source).read_text()
    else:
        text = str(source)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"scenario document: {exc.msg} (line {exc.lineno}, column {exc.colno})",
                         line=exc.lineno, column=exc.colno) from exc
    return _scenario_from_doc(doc)


def scenario_to_doc(s: Scenario) -> dict:
    """Canonical document form; load_scenario(scenario_to_doc(s)) == s."""
    doc: dict = {"name": s.name, "orbit": s.orbit}
    if s.description is not None:
        doc["description"] = s.description
    for key in (
        "altitude_km",
        "elevation_deg",
        "band",
        "freq_dl_ghz",
        "freq_ul_ghz",
        "bw_dl_mhz",
        "bw_ul_mhz",
        "reuse",
        "margin_db",
        "beams",
        "footprint_radius_km",
    ):
        v = getattr(s, key)
        if v is not None:
            doc[key] = v
    if s.terminal is not None:
        doc["terminal"] = s.terminal.to_doc()
    if s.cases:
        doc["cases"] = [c.to_doc() for c in s.cases]
    if s.annotations:
        doc["annotations"] = list(s.annotations)
    return doc


# --- the consistency pipeline ----------------------------------------------

_ORBIT_CLASS_TO_CHART = {"GEO": GEO, "LEO": NON_GEO, "MEO": NON_GEO}


def _band_finding(s: Scenario, direction: str) -> Finding | None:
    freq_ghz = s.freq_dl_ghz if direction == DL else s.freq_ul_ghz
    if freq_ghz is None:
        return None
    chart_direction = DOWNLINK if direction == DL else UPLINK
    orbit = _ORBIT_CLASS_TO_CHART.get(s.orbit.upper(), ANY_ORBIT)
    try:
        computed = band_lookup(freq_ghz * 1e9, chart_direction, orbit)
    except OutOfBandError as exc:
        computed = f"out-of-band ({exc.nearest.band} nearest)"
        if s.band is None:
            return Finding("band", COMPUTED, direction=direction, computed=computed)
        return Finding("band", INCONSISTENT, direction=direction, computed=computed, reported=s.band)
    if s.band is None:
        return Finding("band", COMPUTED, direction=direction, computed=computed)
    declared = [b.strip() for b in s.band.split("/")]
    status = CONSISTENT if computed in declared else INCONSISTENT
    return Finding("band", status, direction=direction, computed=computed, reported=s.band)


def _case_findings(s: Scenario, case: LinkCase) -> list[Finding]:
    out: list[Finding] = []
    d, l = case.direction, case.label

    # Shannon feasibility of the reported spectral efficiency
    if case.sinr_db is None:
        out.append(
            Finding("se_vs_shannon", NOT_COMPUTABLE, direction=d, label=l,
                    reported=case.se_bps_hz, missing=("sinr_db",))
        )
    else:
        bound = max_spectral_efficiency(linear_from_db(case.sinr_db))
        if case.se_bps_hz is None:
            out.append(Finding("se_vs_shannon", COMPUTED, direction=d, label=l, computed=bound))
        else:
            excess = case.se_bps_hz - bound
            status = INCONSISTENT if excess > SE_BOUND_SLACK else CONSISTENT
            out.append(
                Finding("se_vs_shannon", status, direction=d, label=l,
                        computed=bound, reported=case.se_bps_hz, delta=excess)
            )

    # bitrate from SE x bandwidth against the reported figure
    bw_mhz = s.bw_mhz_for(case)
    reported_bps = case.bitrate_mbps * 1e6 if case.bitrate_mbps is not None else None
    missing = tuple(
        key for key, v in (("se_bps_hz", case.se_bps_hz), ("bw_mhz", bw_mhz)) if v is None
    )
    if missing:
        out.append(
            Finding("bitrate_bps", NOT_COMPUTABLE, direction=d, label=l,
                    reported=reported_bps, missing=missing)
        )
    else:
        computed = effective_bitrate(case.se_bps_hz, bw_mhz * 1e6)
        if reported_bps is None:
            out.append(Finding("bitrate_bps", COMPUTED, direction=d, label=l, computed=computed))
        else:
            rel = abs(computed - reported_bps) / reported_bps
            status = CONSISTENT if rel <= BITRATE_TOLERANCE else INCONSISTENT
            out.append(
                Finding("bitrate_bps", status, direction=d, label=l,
                        computed=computed, reported=reported_bps, delta=rel)
            )
    return out


@dataclass(frozen=True)
class ScenarioReport:
    """Echo of a scenario plus every derived quantity and its verdict."""

    scenario: Scenario
    slant_range_km: float | None
    findings: tuple[Finding, ...]

    def to_doc(self) -> dict:
        doc = {"scenario": scenario_to_doc(self.scenario)}
        if self.slant_range_km is not None:
            doc["slant_range_km"] = self.slant_range_km
        doc["findings"] = [f.to_doc() for f in self.findings]
        return doc

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_doc(), indent=indent)

    @classmethod
    def from_doc(cls, doc: dict) -> "ScenarioReport":
        return cls(
            scenario=load_scenario(doc["scenario"]),
            slant_range_km=doc.get("slant_range_km"),
            findings=tuple(Finding.from_doc(f) for f in doc.get("findings", [])),
        )

    @classmethod
    def from_json(cls, text: str) -> "ScenarioReport":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"report document: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
        return cls.from_doc(doc)

    def finding(self, quantity: str, direction: str | None = None, label: str | None = None) -> Finding:
        for f in self.findings:
            if f.quantity == quantity and (direction is None or f.direction == direction) and (
                label is None or f.label == label
            ):
                return f
        raise NotFoundError(f"no finding for {quantity!r} (direction={direction}, label={label})")


def run_scenario(s: Scenario) -> ScenarioReport:
    """Derive everything the scenario's inputs permit and grade consistency.

    Missing inputs produce not-computable findings listing what was absent;
    they never become failures or fabricated defaults.
    """
    findings: list[Finding] = []

    slant = None
    missing = tuple(
        key
        for key, v in (("altitude_km", s.altitude_km), ("elevation_deg", s.elevation_deg))
        if v is None
    )
    if missing:
        findings.append(Finding("slant_range_km", NOT_COMPUTABLE, missing=missing))
    else:
        slant = slant_range_exact(s.altitude_km, math.radians(s.elevation_deg))
        findings.append(Finding("slant_range_km", COMPUTED, computed=slant))

    for direction in (DL, UL):
        f = _band_finding(s, direction)
        if f is not None:
            findings.append(f)

    if s.beams is not None or s.footprint_radius_km is not None:
        missing = tuple(
            key
            for key, v in (("footprint_radius_km", s.footprint_radius_km), ("beams", s.beams))
            if v is None
        )
        if missing:
            findings.append(Finding("cell_radius_km", NOT_COMPUTABLE, missing=missing))
        else:
            findings.append(
                Finding(
                    "cell_radius_km",
                    COMPUTED,
                    computed=cell_radius_from_split(s.footprint_radius_km, s.beams),
                )
            )

    for case in s.cases:
        findings.extend(_case_findings(s, case))

    return ScenarioReport(scenario=s, slant_range_km=slant, findings=tuple(findings))


# --- built-in project fixtures ----------------------------------------------
# Field values follow each project's published parameter list; where the
# summary table of the same source disagrees, the subsection values win and
# the divergence is kept as an annotation.

_FIXTURE_DOCS: tuple[dict, ...] = (
    {
        "name": "thales",
        "description": "Thales Alenia Space LEO constellation for land-mobile users",
        "orbit": "LEO",
        "altitude_km": 600.0,
        "elevation_deg": 30.0,
        "reuse": 3,
        "band": "S",
        "freq_dl_ghz": 2.0,
        "freq_ul_ghz": 2.0,
        "bw_dl_mhz": 10.0,
        "bw_ul_mhz": 0.36,
        "sinr_dl_db": 5.5,
        "sinr_ul_db": 2.5,
        "se_dl_bps_hz": 1.35,
        "se_ul_bps_hz": 1.0,
        "bitrate_dl_mbps": 13.5,
        "bitrate_ul_mbps": 0.36,
        "terminal": "class3-ue",
        "annotations": [
            "satellite EIRP density 34 dBW/MHz, satellite G/T 1.1 dB/K",
            "pedestrian users (3 km/h) in North America",
            "declared 2 GHz downlink sits outside the ITU S-band downlink "
            "allocations (2160-2200 / 2483.5-2500 MHz); reported honestly by the band check",
        ],
    },
    {
        "name": "intelsat-haps",
        "description": "Intelsat HAP coverage of deep rural Nigeria",
        "orbit": "HAP",
        "altitude_km": 20.0,
        "band": "S",
        "freq_dl_ghz": 1.8,
        "freq_ul_ghz": 1.8,
        "bw_dl_mhz": 13.0,
        "bw_ul_mhz": 13.0,
        "margin_db": 4.0,
        "beams": 16,
        "footprint_radius_km": 50.0,
        "terminal": {"name": "class3-ue", "nf_db": 9.0},
        "cases": [
            {"direction": "dl", "label": "cell-center", "sinr_db": 21.0, "se_bps_hz": 5.555, "bitrate_mbps": 72.0},
            {"direction": "ul", "label": "cell-border-low", "sinr_db": 2.0, "se_bps_hz": 0.8, "bitrate_mbps": 10.0},
            {"direction": "ul", "label": "cell-border-high", "sinr_db": 7.9, "se_bps_hz": 1.4, "bitrate_mbps": 18.0},
        ],
        "annotations": [
            "nominal platform altitude 20 +/- 2 km",
            "4 dB link margin budgeted for rain fade",
            "summary table instead lists SINR 13 dB and SE 2.2/2.4 bps/Hz",
        ],
    },
    {
        "name": "inmarsat-geo-iot",
        "description": "Inmarsat GEO narrowband-IoT service in Algeria",
        "orbit": "GEO",
        "altitude_km": 38000.0,
        "band": "L",
        "freq_dl_ghz": 1.5,
        "freq_ul_ghz": 1.5,
        "bw_dl_mhz": 0.2,
        "bw_ul_mhz": 0.015,
        "se_dl_bps_hz": 0.67,
        "se_ul_bps_hz": 0.67,
        "bitrate_dl_mbps": 0.112,
        "bitrate_ul_mbps": 0.00933,
        "annotations": [
            "SINR not reported",
            "narrowband-IoT user terminals",
            "uplink figures imply a spectral efficiency of 0.622 bps/Hz, not the reported 0.67",
            "project quotes a 38,000 km GEO altitude; the geostationary altitude is 35,786 km",
            "summary table instead lists 200 kHz both ways and SE 0.6-1.33 bps/Hz",
        ],
    },
    {
        "name": "echostar-geo",
        "description": "EchoStar GEO land-mobile and rural broadband, Africa and America",
        "orbit": "GEO",
        "altitude_km": 38000.0,
        "band": "S",
        "freq_dl_ghz": 2.0,
        "freq_ul_ghz": 2.0,
        "reuse": 3,
        "cases": [
            {"direction": "dl", "label": "vsat", "sinr_db": 15.4, "se_bps_hz": 4.0},
            {"direction": "ul", "label": "vsat", "sinr_db": 11.0, "se_bps_hz": 2.5},
            {"direction": "dl", "label": "class3-ue", "sinr_db": 3.0, "se_bps_hz": 1.2},
            {"direction": "ul", "label": "class3-ue", "sinr_db": 0.7, "se_bps_hz": 1.0},
        ],
        "annotations": [
            "two terminal classes: VSAT and handheld Class 3 UE",
            "bandwidth and bitrate not reported",
            "project quotes a 38,000 km GEO altitude; the geostationary altitude is 35,786 km",
        ],
    },
    {
        "name": "oneweb-leo",
        "description": "OneWeb LEO broadband with terrestrial integration",
        "orbit": "LEO",
        "altitude_km": 1200.0,
        "band": "Ku",
        "freq_dl_ghz": 11.7,
        "freq_ul_ghz": 14.5,
        "margin_db": 2.0,
        "cases": [
            {"direction": "dl", "label": "best", "bitrate_mbps": 830.0},
            {"direction": "ul", "label": "best", "bitrate_mbps": 830.0},
            {"direction": "dl", "label": "worst", "bitrate_mbps": 140.0},
            {"direction": "ul", "label": "worst", "bitrate_mbps": 140.0},
        ],
        "annotations": [
            "2 dB margin for atmospheric loss",
            "flat-panel ground antennas, G/T 7 to 9 dB/K",
            "bitrate symmetrical: 830 Mb/s best case, 140 Mb/s worst case",
            "SINR, SE and bandwidth not reported; summary table misplaces the "
            "bitrate range in its SINR column and lists SE 4/1.2 bps/Hz",
        ],
    },
    {
        "name": "intelsat-geo-hts",
        "description": "Intelsat GEO high-throughput satellite for Mediterranean maritime broadband",
        "orbit": "GEO",
        "altitude_km": 38000.0,
        "band": "Ku",
        "terminal": "vsat",
        "cases": [
            {"direction": "dl", "label": "best", "se_bps_hz": 1.0},
            {"direction": "dl", "label": "worst", "se_bps_hz": 0.6},
            {"direction": "ul", "label": "best", "se_bps_hz": 1.6},
            {"direction": "ul", "label": "worst", "se_bps_hz": 1.6},
        ],
        "annotations": [
            "hundreds to thousands of beams",
            "worst case is the beam edge",
            "SINR, bandwidth and bitrate not reported; summary table SINR entry is garbled",
            "project quotes a 38,000 km GEO altitude; the geostationary altitude is 35,786 km",
        ],
    },
    {
        "name": "avanti-geo-hts",
        "description": "Avanti GEO high-throughput satellite for connected cars",
        "orbit": "GEO",
        "altitude_km": 38000.0,
        "band": "Ka",
        "sinr_dl_db": 2.3,
        "sinr_ul_db": 4.4,
        "se_dl_bps_hz": 0.9,
        "se_ul_bps_hz": 1.3,
        "annotations": [
            "car-mounted antenna with G/T 7.4 dB/K",
            "SINR under clear-sky conditions; SE figures are best case",
            "bandwidth and bitrate not reported",
            "project quotes a 38,000 km GEO altitude; the geostationary altitude is 35,786 km",
        ],
    },
    {
        "name": "hispasat-amazonas-3",
        "description": "Hispasat Amazonas 3 GEO rural and maritime connectivity",
        "orbit": "GEO",
        "altitude_km": 35786.0,
        "band": "Ka/Ku/C",
        "cases": [
            {"direction": "dl", "label": "best", "bitrate_mbps": 60.0},
            {"direction": "dl", "label": "worst", "bitrate_mbps": 30.0},
        ],
        "annotations": [
            "63 transponders: 9 user and 4 gateway in Ka, 33 in Ku, 19 in C",
            "transponder bandwidths of 54 MHz and 36 MHz",
            "reported bitrate 30-60 Mb/s; link direction unspecified, recorded as downlink",
        ],
    },
)


def builtin_fixtures() -> tuple[Scenario, ...]:
    """The bundled NTN project scenarios, validated through the loader."""
    return tuple(load_scenario(doc) for doc in _FIXTURE_DOCS)


def fixture(name: str) -> Scenario:
    for doc in _FIXTURE_DOCS:
        if doc["name"] == name:
            return load_scenario(doc)
    names = [doc["name"] for doc in _FIXTURE_DOCS]
    raise NotFoundError(f"unknown fixture {name!r}; available: {', '.join(names)}", valid_ids=names)
