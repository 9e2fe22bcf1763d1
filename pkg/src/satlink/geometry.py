"""Orbit-to-ground geometry: slant range, footprints, coverage, beam cells."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .quantities import DEFAULT_CONSTANTS, PhysicalConstants


def slant_range_exact(
    altitude_km: float,
    elevation_rad: float,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> float:
    """Line-of-sight distance (km) from ground to spacecraft.

    Law-of-cosines solution on the spherical Earth:
        d = -Re*sin(a) + sqrt(Re^2*sin(a)^2 + h^2 + 2*Re*h)
    It collapses to the altitude at zenith (a = 90 deg) and to the horizon
    radical at a = 0.
    """
    if not (math.isfinite(altitude_km) and altitude_km > 0):
        raise DomainError(f"altitude must be > 0 km, got {altitude_km!r}")
    if not (math.isfinite(elevation_rad) and 0.0 <= elevation_rad <= math.pi / 2):
        raise DomainError(f"elevation must lie in [0, pi/2] rad, got {elevation_rad!r}")
    re = constants.earth_radius_km
    s = math.sin(elevation_rad)
    return -re * s + math.sqrt(re * re * s * s + altitude_km * (altitude_km + 2.0 * re))


def slant_range_altitude_approx(altitude_km: float, elevation_rad: float) -> float:
    """Altitude-only slant-range estimate d = sqrt(h^2 + (h*tan(a))^2) = h/cos(a).

    Classical quick estimate for MEO/GEO links where d is close to the orbit
    altitude. Note that it grows with elevation, which is geometrically
    inverted relative to the exact formula; it is kept verbatim for
    compatibility with the worked examples that use it at small angles.
    """
    if not (math.isfinite(altitude_km) and altitude_km > 0):
        raise DomainError(f"altitude must be > 0 km, got {altitude_km!r}")
    if not (math.isfinite(elevation_rad) and 0.0 <= elevation_rad < math.pi / 2):
        raise DomainError(f"elevation must lie in [0, pi/2) rad, got {elevation_rad!r}")
    t = math.tan(elevation_rad)
    return altitude_km * math.sqrt(1.0 + t * t)


@dataclass(frozen=True)
class LinkGeometry:
    """Ground-to-spacecraft geometry: altitude, elevation, slant range."""

    altitude_km: float
    elevation_rad: float

    def __post_init__(self):
        # reuse the slant-range validation
        slant_range_exact(self.altitude_km, self.elevation_rad)

    @classmethod
    def from_degrees(cls, altitude_km: float, elevation_deg: float) -> "LinkGeometry":
        return cls(altitude_km, math.radians(elevation_deg))

    @property
    def elevation_deg(self) -> float:
        return math.degrees(self.elevation_rad)

    def slant_range_km(self, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
        return slant_range_exact(self.altitude_km, self.elevation_rad, constants)


def footprint_diameter(
    sats_per_orbit: float, constants: PhysicalConstants = DEFAULT_CONSTANTS
) -> float:
    """Per-satellite footprint diameter (km): Earth perimeter split across one orbit."""
    if not (math.isfinite(sats_per_orbit) and sats_per_orbit >= 1):
        raise DomainError(f"satellites per orbit must be >= 1, got {sats_per_orbit!r}")
    return constants.earth_perimeter_km / sats_per_orbit


def footprint_area(diameter_km: float) -> float:
    """Disk area (km^2) of a footprint diameter."""
    if not (math.isfinite(diameter_km) and diameter_km > 0):
        raise DomainError(f"diameter must be > 0 km, got {diameter_km!r}")
    return math.pi * (diameter_km / 2.0) ** 2


def earth_coverage_fraction(
    sats: float, area_per_sat_km2: float, constants: PhysicalConstants = DEFAULT_CONSTANTS
) -> float:
    """Fraction of the Earth surface covered by `sats` disjoint footprints.

    Overlap and polar geometry are deliberately ignored; this is the flat
    first-order estimate, capped at 1.
    """
    if not (math.isfinite(sats) and sats >= 1):
        raise DomainError(f"satellite count must be >= 1, got {sats!r}")
    if not (math.isfinite(area_per_sat_km2) and area_per_sat_km2 > 0):
        raise DomainError(f"area must be > 0 km^2, got {area_per_sat_km2!r}")
    return min(1.0, sats * area_per_sat_km2 / constants.earth_surface_km2)


@dataclass(frozen=True)
class Footprint:
    """Per-satellite footprint with the coverage fraction of a satellite group."""

    diameter_km: float
    area_km2: float
    coverage_fraction: float

    def __post_init__(self):
        expected = footprint_area(self.diameter_km)
        if abs(self.area_km2 - expected) > 1e-9 * expected:
            raise DomainError(f"area {self.area_km2} km^2 does not match diameter {self.diameter_km} km")
        if not (0.0 < self.coverage_fraction <= 1.0):
            raise DomainError(f"coverage fraction must lie in (0, 1], got {self.coverage_fraction!r}")


def satellite_footprint(
    sats_per_orbit: float,
    coverage_sats: float | None = None,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> Footprint:
    """Footprint record for one satellite of an orbit with `sats_per_orbit`.

    `coverage_sats` selects how many satellites contribute to the coverage
    fraction (defaults to the same orbit's count).
    """
    d = footprint_diameter(sats_per_orbit, constants)
    a = footprint_area(d)
    n = sats_per_orbit if coverage_sats is None else coverage_sats
    return Footprint(d, a, earth_coverage_fraction(n, a, constants))


def cell_radius_from_split(parent_radius_km: float, n_beams: float) -> float:
    """Radius of each cell when a coverage disk is split across n equal beams.

    Area-conserving: n * area(child) == area(parent).
    """
    if not (math.isfinite(parent_radius_km) and parent_radius_km > 0):
        raise DomainError(f"parent radius must be > 0 km, got {parent_radius_km!r}")
    if not (math.isfinite(n_beams) and n_beams >= 1):
        raise DomainError(f"beam count must be >= 1, got {n_beams!r}")
    return parent_radius_km / math.sqrt(n_beams)


def required_hpbw(cell_radius_km: float, altitude_km: float) -> float:
    """Half-power beamwidth (radians) needed to illuminate a cell from altitude.

    Full opening angle of the cone subtending the cell: 2*atan(R/h).
    """
    if not (math.isfinite(cell_radius_km) and cell_radius_km >= 0):
        raise DomainError(f"cell radius must be >= 0 km, got {cell_radius_km!r}")
    if not (math.isfinite(altitude_km) and altitude_km > 0):
        raise DomainError(f"altitude must be > 0 km, got {altitude_km!r}")
    return 2.0 * math.atan(cell_radius_km / altitude_km)
