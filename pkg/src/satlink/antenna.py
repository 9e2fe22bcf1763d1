"""Phased-array radiation math.

Linear equally-spaced arrays get a full pattern treatment (array factor,
numeric half-power beamwidth, sidelobe scan); planar rectangular arrays are
characterized by their maximum directivity N*pi and the symmetric-beam
HPBW approximation, which is how the reference catalog below is generated.
All arrays are untapered (uniformly weighted).
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import DomainError, NoSidelobeError
from .quantities import AntennaGain

LINEAR = "linear"
PLANAR = "planar"

# Coefficient of the directivity ~ beam-solid-angle approximation
# D = 32400 / (hpbw_az_deg * hpbw_el_deg).
HPBW_APPROX_COEFFICIENT = 32400.0


@dataclass(frozen=True)
class ArraySpec:
    """A phased-array configuration: topology, element count, spacing
    (in wavelengths) and radiation efficiency."""

    topology: str
    elements: int
    rows: int | None = None
    cols: int | None = None
    spacing_wavelengths: float = 0.5
    efficiency: float = 1.0

    def __post_init__(self):
        if self.topology not in (LINEAR, PLANAR):
            raise DomainError(f"topology must be '{LINEAR}' or '{PLANAR}', got {self.topology!r}")
        if not (isinstance(self.elements, int) and self.elements >= 1):
            raise DomainError(f"element count must be an integer >= 1, got {self.elements!r}")
        if self.topology == PLANAR:
            if self.rows is None or self.cols is None:
                raise DomainError("planar arrays need rows and cols")
            if self.rows * self.cols != self.elements:
                raise DomainError(
                    f"rows*cols ({self.rows}x{self.cols}) must equal element count {self.elements}"
                )
        if not (math.isfinite(self.spacing_wavelengths) and self.spacing_wavelengths > 0):
            raise DomainError(f"spacing must be > 0 wavelengths, got {self.spacing_wavelengths!r}")
        if not (math.isfinite(self.efficiency) and 0.0 < self.efficiency <= 1.0):
            raise DomainError(f"efficiency must lie in (0, 1], got {self.efficiency!r}")

    @classmethod
    def linear(cls, n: int, spacing_wavelengths: float = 0.5, efficiency: float = 1.0) -> "ArraySpec":
        return cls(LINEAR, n, spacing_wavelengths=spacing_wavelengths, efficiency=efficiency)

    @classmethod
    def planar(
        cls, rows: int, cols: int, spacing_wavelengths: float = 0.5, efficiency: float = 1.0
    ) -> "ArraySpec":
        return cls(PLANAR, rows * cols, rows=rows, cols=cols,
                   spacing_wavelengths=spacing_wavelengths, efficiency=efficiency)

    @property
    def label(self) -> str:
        if self.topology == LINEAR:
            return "isotropic" if self.elements == 1 else f"linear-{self.elements}"
        return f"planar-{self.rows}x{self.cols}"


def array_factor_magnitude(n: int, psi_rad: float) -> float:
    """Un-normalized array-factor magnitude |sin(N*psi/2) / sin(psi/2)|.

    The removable singularity at psi = 0 (mod 2*pi) evaluates to N.
    """
    if not (isinstance(n, int) and n >= 1):
        raise DomainError(f"element count must be an integer >= 1, got {n!r}")
    if not math.isfinite(psi_rad):
        raise DomainError(f"psi must be finite, got {psi_rad!r}")
    den = math.sin(psi_rad / 2.0)
    if den == 0.0:
        return float(n)
    return abs(math.sin(n * psi_rad / 2.0) / den)


def normalized_array_factor(n: int, psi_rad: float) -> float:
    """Pattern amplitude |sin(N*psi/2) / (N*sin(psi/2))|, peak 1 at psi = 0."""
    return min(1.0, array_factor_magnitude(n, psi_rad) / n)


def _normalized_af_vec(n: int, psi: np.ndarray) -> np.ndarray:
    den = n * np.sin(psi / 2.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        vals = np.abs(np.where(den == 0.0, 1.0, np.sin(n * psi / 2.0) / den))
    return np.minimum(vals, 1.0)


def psi_from_incidence(spacing_wavelengths: float, theta_rad: float) -> float:
    """Inter-element phase for a plane wave at incidence angle theta to the
    array axis: psi = 2*pi*spacing*cos(theta)."""
    if not (math.isfinite(spacing_wavelengths) and spacing_wavelengths > 0):
        raise DomainError(f"spacing must be > 0 wavelengths, got {spacing_wavelengths!r}")
    if not math.isfinite(theta_rad):
        raise DomainError(f"theta must be finite, got {theta_rad!r}")
    return 2.0 * math.pi * spacing_wavelengths * math.cos(theta_rad)


def directivity(spec: ArraySpec) -> AntennaGain:
    """Maximum directivity: N for a linear array, N*pi for a planar one."""
    if spec.topology == LINEAR:
        return AntennaGain(float(spec.elements))
    return AntennaGain(spec.elements * math.pi)


def gain_from_directivity(directivity_linear: float, efficiency: float) -> AntennaGain:
    """Realized gain: directivity scaled by the radiation efficiency."""
    if not (math.isfinite(directivity_linear) and directivity_linear > 0):
        raise DomainError(f"directivity must be > 0, got {directivity_linear!r}")
    if not (math.isfinite(efficiency) and 0.0 < efficiency <= 1.0):
        raise DomainError(f"efficiency must lie in (0, 1], got {efficiency!r}")
    return AntennaGain(efficiency * directivity_linear)


def effective_aperture(wavelength_m: float, gain_linear: float) -> float:
    """Effective capture area in m^2: wavelength^2 * gain / (4*pi)."""
    if not (math.isfinite(wavelength_m) and wavelength_m > 0):
        raise DomainError(f"wavelength must be > 0 m, got {wavelength_m!r}")
    if not (math.isfinite(gain_linear) and gain_linear > 0):
        raise DomainError(f"gain must be > 0, got {gain_linear!r}")
    return wavelength_m**2 * gain_linear / (4.0 * math.pi)


def hpbw_from_directivity(directivity_linear: float) -> float:
    """Half-power beamwidth in degrees under the symmetric-beam approximation
    D = 32400 / hpbw^2, i.e. hpbw = sqrt(32400 / D)."""
    if not (math.isfinite(directivity_linear) and directivity_linear > 0):
        raise DomainError(f"directivity must be > 0, got {directivity_linear!r}")
    return math.sqrt(HPBW_APPROX_COEFFICIENT / directivity_linear)


def hpbw_numeric(spec: ArraySpec, tol_rad: float = 1e-9) -> float:
    """Broadside half-power beamwidth (degrees) of a linear array, located by
    bisection on |f(psi(theta))|^2 = 0.5 around the main lobe.

    Only linear topologies have a pattern model here; planar arrays use
    hpbw_from_directivity.
    """
    if spec.topology != LINEAR:
        raise DomainError("numeric beamwidth is defined for linear arrays only")
    n = spec.elements
    if n < 2:
        raise DomainError("a single element forms no beam")
    sp = spec.spacing_wavelengths

    def power(theta: float) -> float:
        a = normalized_array_factor(n, psi_from_incidence(sp, theta))
        return a * a

    # theta of the first pattern null (psi = 2*pi/N), if visible
    cos_null = 1.0 / (n * sp)
    lo = math.acos(cos_null) if cos_null < 1.0 else 0.0
    hi = math.pi / 2.0
    if power(lo) >= 0.5:
        raise DomainError(
            f"main lobe never drops to half power over the visible range "
            f"(N={n}, spacing={sp} wavelengths)"
        )
    # power rises monotonically from the first null to the broadside peak
    while hi - lo > tol_rad:
        mid = 0.5 * (lo + hi)
        if power(mid) < 0.5:
            lo = mid
        else:
            hi = mid
    theta_half = 0.5 * (lo + hi)
    return math.degrees(2.0 * (math.pi / 2.0 - theta_half))


def sidelobe_level(spec: ArraySpec, scan_samples: int = 20001) -> float:
    """Peak pattern amplitude outside the main lobe of a linear array.

    Scans psi over (first null, 2*pi - first null), excluding the grating
    lobe at psi = 2*pi, then polishes the best sample with a bounded local
    search. Returns the amplitude ratio (1.0 = main-lobe peak).
    """
    if spec.topology != LINEAR:
        raise DomainError("sidelobe scan is defined for linear arrays only")
    n = spec.elements
    if n < 3:
        raise NoSidelobeError(f"an N={n} array has no sidelobe between its null and the grating lobe")
    if scan_samples < 10_000:
        raise DomainError(f"scan needs at least 10^4 samples, got {scan_samples}")
    null1 = 2.0 * math.pi / n
    psi = np.linspace(null1, 2.0 * math.pi - null1, scan_samples)[1:-1]
    vals = _normalized_af_vec(n, psi)
    i = int(np.argmax(vals))
    lo = psi[max(0, i - 1)]
    hi = psi[min(len(psi) - 1, i + 1)]
    res = minimize_scalar(
        lambda p: -normalized_array_factor(n, float(p)),
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": 1e-12},
    )
    return max(float(vals[i]), float(-res.fun))


def amplitude_db_field(amplitude: float) -> float:
    """Amplitude ratio in dB under the field convention, 20*log10."""
    if not (math.isfinite(amplitude) and amplitude > 0):
        raise DomainError(f"amplitude must be > 0, got {amplitude!r}")
    return 20.0 * math.log10(amplitude)


def amplitude_db_power(amplitude: float) -> float:
    """Amplitude ratio through 10*log10.

    Not the field convention, but some published sidelobe figures quote
    exactly this of the amplitude ratio; exposed so both readings are
    available, neither endorsed.
    """
    if not (math.isfinite(amplitude) and amplitude > 0):
        raise DomainError(f"amplitude must be > 0, got {amplitude!r}")
    return 10.0 * math.log10(amplitude)


@dataclass(frozen=True)
class RadiationSample:
    """One point of a radiation pattern cut."""

    theta_rad: float
    psi_rad: float
    amplitude: float
    power_db: float

    def __post_init__(self):
        if not 0.0 <= self.amplitude <= 1.0:
            raise DomainError(f"normalized amplitude must lie in [0, 1], got {self.amplitude!r}")


def pattern_samples(spec: ArraySpec, resolution_deg: float = 0.1) -> list[RadiationSample]:
    """Pattern cut of a linear array for theta in [0, 180] degrees.

    power_db is the field level 20*log10(amplitude); exact nulls map to -inf.
    """
    if spec.topology != LINEAR:
        raise DomainError("pattern cuts are defined for linear arrays only")
    if not (math.isfinite(resolution_deg) and 0.0 < resolution_deg <= 90.0):
        raise DomainError(f"resolution must lie in (0, 90] degrees, got {resolution_deg!r}")
    steps = int(round(180.0 / resolution_deg))
    thetas = np.linspace(0.0, math.pi, steps + 1)
    psis = 2.0 * math.pi * spec.spacing_wavelengths * np.cos(thetas)
    amps = _normalized_af_vec(spec.elements, psis)
    with np.errstate(divide="ignore"):
        power_db = 20.0 * np.log10(amps)
    return [
        RadiationSample(float(t), float(p), float(a), float(pdb))
        for t, p, a, pdb in zip(thetas, psis, amps, power_db)
    ]


def pattern_csv(spec: ArraySpec, resolution_deg: float = 0.1) -> str:
    """Pattern cut as CSV (theta_deg, psi_rad, amplitude, power_db)."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["theta_deg", "psi_rad", "amplitude", "power_db"])
    for s in pattern_samples(spec, resolution_deg):
        writer.writerow(
            [
                f"{math.degrees(s.theta_rad):.4f}",
                f"{s.psi_rad:.9g}",
                f"{s.amplitude:.9g}",
                f"{s.power_db:.6g}" if math.isfinite(s.power_db) else "-inf",
            ]
        )
    return out.getvalue()


# Reference catalog of untapered array configurations.
ARRAY_CATALOG: tuple[ArraySpec, ...] = (
    ArraySpec.linear(1),
    ArraySpec.linear(3),
    ArraySpec.linear(7),
    ArraySpec.linear(11),
    ArraySpec.planar(4, 4),
    ArraySpec.planar(8, 8),
    ArraySpec.planar(16, 16),
    ArraySpec.planar(32, 32),
)

_EDGE_DROP_DB = 10.0 * math.log10(2.0)  # half power at the cell border


def select_array(
    required_hpbw_deg: float, catalog=ARRAY_CATALOG
) -> tuple[ArraySpec, float, float]:
    """Choose the catalog array whose approximate HPBW is nearest the target.

    Returns (spec, peak gain dBi, edge gain dBi); the edge of the illuminated
    cell sits at the half-power contour, 3 dB below the peak. Isotropic
    radiators (single elements) have no beam and are skipped.
    """
    if not (math.isfinite(required_hpbw_deg) and required_hpbw_deg > 0):
        raise DomainError(f"required beamwidth must be > 0 degrees, got {required_hpbw_deg!r}")
    candidates = [s for s in catalog if not (s.topology == LINEAR and s.elements == 1)]
    if not candidates:
        raise DomainError("array catalog has no directive entries")
    best = min(
        candidates,
        key=lambda s: abs(hpbw_from_directivity(directivity(s).linear) - required_hpbw_deg),
    )
    peak_dbi = directivity(best).dbi
    return best, peak_dbi, peak_dbi - _EDGE_DROP_DB
