"""dB/linear algebra, dimension-tagged scalars, physical constants and the
ITU satellite band chart.

Everything downstream (geometry, link budgets, capacity, antennas) builds on
this module. Internal computation is always in SI linear units; decibels
appear only at construction and display boundaries.
"""

from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass, fields
from pathlib import Path

from .errors import DomainError, OutOfBandError, ParseError, ValidationError

_LN10 = math.log(10.0)


def db_from_linear(x: float) -> float:
    """Convert a positive linear ratio to decibels (10*log10)."""
    if not (isinstance(x, (int, float)) and math.isfinite(x) and x > 0):
        raise DomainError(f"dB conversion needs a finite positive ratio, got {x!r}")
    return 10.0 * math.log10(x)


def linear_from_db(x: float) -> float:
    """Convert decibels to a linear ratio (10**(x/10))."""
    if not (isinstance(x, (int, float)) and math.isfinite(x)):
        raise DomainError(f"dB value must be finite, got {x!r}")
    return 10.0 ** (x / 10.0)


@dataclass(frozen=True)
class PowerRatio:
    """Dimensionless power ratio (SNR, SIR, SINR, ...) stored in linear form."""

    linear: float

    def __post_init__(self):
        if not (math.isfinite(self.linear) and self.linear >= 0):
            raise DomainError(f"power ratio must be finite and >= 0, got {self.linear!r}")

    @classmethod
    def from_db(cls, value_db: float) -> "PowerRatio":
        return cls(linear_from_db(value_db))

    @property
    def db(self) -> float:
        return db_from_linear(self.linear)


@dataclass(frozen=True)
class Power:
    """A power level in watts with dBW and dBm views."""

    watts: float

    def __post_init__(self):
        if not (math.isfinite(self.watts) and self.watts >= 0):
            raise DomainError(f"power must be finite and >= 0 W, got {self.watts!r}")

    @classmethod
    def from_dbw(cls, dbw: float) -> "Power":
        return cls(linear_from_db(dbw))

    @classmethod
    def from_dbm(cls, dbm: float) -> "Power":
        return cls(linear_from_db(dbm) * 1e-3)

    @property
    def dbw(self) -> float:
        return db_from_linear(self.watts)

    @property
    def dbm(self) -> float:
        # exact +30 offset by construction
        return self.dbw + 30.0


@dataclass(frozen=True)
class AntennaGain:
    """Antenna gain relative to isotropic, stored linear, viewed in dBi."""

    linear: float

    def __post_init__(self):
        if not (math.isfinite(self.linear) and self.linear > 0):
            raise DomainError(f"antenna gain must be finite and > 0, got {self.linear!r}")

    @classmethod
    def from_dbi(cls, dbi: float) -> "AntennaGain":
        return cls(linear_from_db(dbi))

    @property
    def dbi(self) -> float:
        return db_from_linear(self.linear)


ISOTROPIC = AntennaGain(1.0)


@dataclass(frozen=True)
class PhysicalConstants:
    """Physical and Earth constants used throughout the toolkit.

    The speed of light defaults to the round engineering value 3.0e8 m/s so
    wavelengths and path losses match classical hand calculations; override
    with the CODATA value when exactness matters.
    """

    c_m_per_s: float = 3.0e8
    boltzmann_j_per_k: float = 1.380649e-23
    earth_radius_km: float = 6371.0
    earth_perimeter_km: float = 40075.0
    earth_surface_km2: float = 510.1e6
    t_ref_k: float = 290.0

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise ValidationError(f.name, f"constant {f.name} must be finite and > 0, got {v!r}")

    @property
    def boltzmann_dbw_per_k_hz(self) -> float:
        return db_from_linear(self.boltzmann_j_per_k)

    @classmethod
    def from_mapping(cls, overrides) -> "PhysicalConstants":
        known = {f.name for f in fields(cls)}
        unknown = set(overrides) - known
        if unknown:
            raise ValidationError(sorted(unknown)[0], f"unknown constant keys: {sorted(unknown)}")
        return cls(**{k: float(v) for k, v in overrides.items()})

    @classmethod
    def from_file(cls, path) -> "PhysicalConstants":
        text = Path(path).read_text()
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
        if not isinstance(doc, dict):
            raise ParseError(f"{path}: constants document must be a JSON object")
        return cls.from_mapping(doc)


DEFAULT_CONSTANTS = PhysicalConstants()


def noise_temperature_from_nf(nf_db: float, t_ref_k: float = DEFAULT_CONSTANTS.t_ref_k) -> float:
    """Noise temperature in K implied by a noise figure: T = Tref*(10^(NF/10) - 1)."""
    if not (math.isfinite(nf_db) and nf_db >= 0):
        raise DomainError(f"noise figure must be >= 0 dB, got {nf_db!r}")
    if not (math.isfinite(t_ref_k) and t_ref_k > 0):
        raise DomainError(f"reference temperature must be > 0 K, got {t_ref_k!r}")
    return t_ref_k * math.expm1(nf_db / 10.0 * _LN10)


def noise_figure_from_temperature(t_k: float, t_ref_k: float = DEFAULT_CONSTANTS.t_ref_k) -> float:
    """Inverse of noise_temperature_from_nf: NF = 10*log10(1 + T/Tref)."""
    if not (math.isfinite(t_k) and t_k >= 0):
        raise DomainError(f"noise temperature must be >= 0 K, got {t_k!r}")
    if not (math.isfinite(t_ref_k) and t_ref_k > 0):
        raise DomainError(f"reference temperature must be > 0 K, got {t_ref_k!r}")
    return 10.0 * math.log1p(t_k / t_ref_k) / _LN10


def wavelength(freq_hz: float, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Free-space wavelength in meters for a carrier frequency in Hz."""
    if not (math.isfinite(freq_hz) and freq_hz > 0):
        raise DomainError(f"frequency must be finite and > 0 Hz, got {freq_hz!r}")
    return constants.c_m_per_s / freq_hz


# --- ITU band allocations -------------------------------------------------

DOWNLINK = "downlink"
UPLINK = "uplink"
GEO = "geo"
NON_GEO = "non-geo"
ANY_ORBIT = "any"

_DIRECTIONS = (DOWNLINK, UPLINK)
_ORBITS = (GEO, NON_GEO, ANY_ORBIT)


@dataclass(frozen=True)
class BandAllocation:
    """One band/direction row of the ITU satellite allocation chart.

    `orbit` qualifies rows that differ between geostationary and
    non-geostationary service; unqualified rows use "any".
    """

    band: str
    orbit: str
    direction: str
    intervals_mhz: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if self.direction not in _DIRECTIONS:
            raise ValidationError("direction", f"direction must be one of {_DIRECTIONS}, got {self.direction!r}")
        if self.orbit not in _ORBITS:
            raise ValidationError("orbit", f"orbit must be one of {_ORBITS}, got {self.orbit!r}")
        if not self.intervals_mhz:
            raise ValidationError("intervals_mhz", "allocation needs at least one interval")
        for lo, hi in self.intervals_mhz:
            if not (lo < hi):
                raise ValidationError("intervals_mhz", f"interval bounds must satisfy low < high, got ({lo}, {hi})")
        ordered = sorted(self.intervals_mhz)
        for (alo, ahi), (blo, bhi) in zip(ordered, ordered[1:]):
            if blo < ahi:
                raise ValidationError("intervals_mhz", f"intervals overlap: ({alo}, {ahi}) and ({blo}, {bhi})")

    def contains(self, freq_mhz: float) -> bool:
        return any(lo <= freq_mhz <= hi for lo, hi in self.intervals_mhz)

    def distance_mhz(self, freq_mhz: float) -> float:
        return min(
            0.0 if lo <= freq_mhz <= hi else min(abs(freq_mhz - lo), abs(freq_mhz - hi))
            for lo, hi in self.intervals_mhz
        )


BAND_CATALOG: tuple[BandAllocation, ...] = (
    BandAllocation("L", GEO, DOWNLINK, ((1518.0, 1559.0),)),
    BandAllocation("L", GEO, UPLINK, ((1626.5, 1660.5), (1668.0, 1675.0))),
    BandAllocation("L", NON_GEO, DOWNLINK, ((1613.8, 1626.5),)),
    BandAllocation("L", NON_GEO, UPLINK, ((1610.0, 1626.5),)),
    BandAllocation("S", ANY_ORBIT, DOWNLINK, ((2160.0, 2200.0), (2483.5, 2500.0))),
    BandAllocation("S", ANY_ORBIT, UPLINK, ((1980.0, 2025.0),)),
    BandAllocation("C", ANY_ORBIT, DOWNLINK, ((3400.0, 4200.0), (4500.0, 4800.0))),
    BandAllocation("C", ANY_ORBIT, UPLINK, ((5725.0, 7025.0),)),
    BandAllocation("Ku", ANY_ORBIT, DOWNLINK, ((10700.0, 12750.0),)),
    BandAllocation("Ku", ANY_ORBIT, UPLINK, ((12750.0, 13250.0), (13750.0, 14500.0))),
    BandAllocation("Ka", GEO, DOWNLINK, ((17300.0, 20200.0),)),
    BandAllocation("Ka", GEO, UPLINK, ((27000.0, 30000.0),)),
    BandAllocation("Ka", NON_GEO, DOWNLINK, ((17700.0, 20200.0),)),
    BandAllocation("Ka", NON_GEO, UPLINK, ((27000.0, 29100.0), (29500.0, 30000.0))),
    BandAllocation(
        "Q/V", ANY_ORBIT, DOWNLINK,
        ((37500.0, 42500.0), (47500.0, 47900.0), (48200.0, 48540.0), (49440.0, 50200.0)),
    ),
    BandAllocation("Q/V", ANY_ORBIT, UPLINK, ((42500.0, 43500.0), (47200.0, 50200.0), (50400.0, 51400.0))),
)


def _check_query(freq_hz: float, direction: str, orbit: str) -> float:
    if not (math.isfinite(freq_hz) and freq_hz > 0):
        raise DomainError(f"frequency must be finite and > 0 Hz, got {freq_hz!r}")
    if direction not in _DIRECTIONS:
        raise DomainError(f"direction must be one of {_DIRECTIONS}, got {direction!r}")
    if orbit not in _ORBITS:
        raise DomainError(f"orbit must be one of {_ORBITS}, got {orbit!r}")
    return freq_hz / 1e6


def matching_allocations(freq_hz: float, direction: str, orbit: str = ANY_ORBIT) -> list[BandAllocation]:
    """All catalog rows containing the frequency for the direction/orbit."""
    freq_mhz = _check_query(freq_hz, direction, orbit)
    return [
        a
        for a in BAND_CATALOG
        if a.direction == direction
        and (orbit == ANY_ORBIT or a.orbit == ANY_ORBIT or a.orbit == orbit)
        and a.contains(freq_mhz)
    ]


def band_lookup(freq_hz: float, direction: str, orbit: str = ANY_ORBIT) -> str:
    """Resolve a frequency to its ITU satellite band name.

    Raises OutOfBandError (naming the nearest allocation) when no interval
    for the given direction/orbit contains the frequency.
    """
    matches = matching_allocations(freq_hz, direction, orbit)
    if matches:
        names = {a.band for a in matches}
        # the chart never maps one frequency to two band names for a fixed query
        assert len(names) == 1, f"ambiguous band chart at {freq_hz} Hz: {sorted(names)}"
        return matches[0].band
    freq_mhz = freq_hz / 1e6
    candidates = [
        a
        for a in BAND_CATALOG
        if a.direction == direction and (orbit == ANY_ORBIT or a.orbit == ANY_ORBIT or a.orbit == orbit)
    ]
    nearest = min(candidates, key=lambda a: a.distance_mhz(freq_mhz))
    raise OutOfBandError(
        f"{freq_mhz:g} MHz ({direction}, orbit={orbit}) is outside every allocation; "
        f"nearest is {nearest.band} band ({nearest.orbit}) at {nearest.intervals_mhz} MHz",
        nearest=nearest,
    )


def band_catalog_csv() -> str:
    """The allocation chart as CSV, one row per interval."""
    out = io.StringIO()
    out.write("band,orbit,direction,low_MHz,high_MHz\n")
    for a in BAND_CATALOG:
        for lo, hi in a.intervals_mhz:
            out.write(f"{a.band},{a.orbit},{a.direction},{lo:g},{hi:g}\n")
    return out.getvalue()
