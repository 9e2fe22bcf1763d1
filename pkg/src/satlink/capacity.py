"""From SNR to bits: Shannon limit, MODCOD selection, multi-beam totals,
the satellite cost power-law and the classic TCP throughput bound."""

from __future__ import annotations

import csv
import io
import math
import warnings
from dataclasses import dataclass
from pathlib import Path

from .errors import DomainError, NoFeasibleModcodError, ParseError, ValidationError
from .quantities import linear_from_db

_LN2 = math.log(2.0)


def shannon_capacity(bw_hz: float, snr_linear: float) -> float:
    """Maximum achievable bitrate in bps: B * log2(1 + snr)."""
    if not (math.isfinite(bw_hz) and bw_hz > 0):
        raise DomainError(f"bandwidth must be > 0 Hz, got {bw_hz!r}")
    return bw_hz * max_spectral_efficiency(snr_linear)


def max_spectral_efficiency(snr_linear: float) -> float:
    """Shannon bound on spectral efficiency in bps/Hz: log2(1 + snr)."""
    if not (math.isfinite(snr_linear) and snr_linear >= 0):
        raise DomainError(f"snr must be a finite ratio >= 0, got {snr_linear!r}")
    return math.log1p(snr_linear) / _LN2


def required_snr(se_bps_hz: float) -> float:
    """Minimum linear SNR supporting a spectral efficiency: 2^se - 1.

    Exact inverse of max_spectral_efficiency.
    """
    if not (math.isfinite(se_bps_hz) and se_bps_hz >= 0):
        raise DomainError(f"spectral efficiency must be >= 0, got {se_bps_hz!r}")
    return math.expm1(se_bps_hz * _LN2)


def effective_bitrate(se_bps_hz: float, bw_hz: float) -> float:
    """Delivered bitrate in bps for a spectral efficiency over a bandwidth."""
    for name, v in (("se_bps_hz", se_bps_hz), ("bw_hz", bw_hz)):
        if not (math.isfinite(v) and v >= 0):
            raise DomainError(f"{name} must be >= 0, got {v!r}")
    return se_bps_hz * bw_hz


@dataclass(frozen=True)
class ModCod:
    """One modulation-and-coding scheme: spectral efficiency plus the SNR it
    needs for quasi-error-free operation (2 residual errors per 10^4 bits)."""

    name: str
    se_bps_hz: float
    snr_qef_db: float

    def __post_init__(self):
        if not (math.isfinite(self.se_bps_hz) and self.se_bps_hz > 0):
            raise DomainError(f"{self.name}: spectral efficiency must be > 0, got {self.se_bps_hz!r}")
        if not math.isfinite(self.snr_qef_db):
            raise DomainError(f"{self.name}: required SNR must be finite dB, got {self.snr_qef_db!r}")
        shannon = max_spectral_efficiency(linear_from_db(self.snr_qef_db))
        if not self.se_bps_hz < shannon:
            raise DomainError(
                f"{self.name}: {self.se_bps_hz} bps/Hz at {self.snr_qef_db} dB beats the "
                f"Shannon bound of {shannon:.4f} bps/Hz"
            )


# Reference catalog for a theoretical DVB-class modem.
MODCOD_TABLE: tuple[ModCod, ...] = (
    ModCod("APSK 1/2", 0.4, -2.0),
    ModCod("CPSK 1/4", 0.5, 0.0),
    ModCod("CPSK 1/2", 0.6, 1.0),
    ModCod("CPSK 3/4", 0.65, 2.0),
    ModCod("DPSK 1/4", 0.75, 3.0),
    ModCod("DPSK 1/2", 0.9, 4.0),
    ModCod("DPSK 3/4", 1.05, 6.0),
    ModCod("DPSK 5/6", 1.25, 7.0),
    ModCod("DPSK 7/8", 1.5, 9.0),
)


def validate_catalog(catalog) -> tuple[ModCod, ...]:
    """Check a MODCOD catalog: non-empty, and increasing spectral efficiency
    must never come with a decreasing SNR requirement."""
    entries = tuple(catalog)
    if not entries:
        raise DomainError("MODCOD catalog is empty")
    by_se = sorted(entries, key=lambda m: m.se_bps_hz)
    for a, b in zip(by_se, by_se[1:]):
        if b.se_bps_hz > a.se_bps_hz and b.snr_qef_db < a.snr_qef_db:
            raise DomainError(
                f"catalog not monotone: {b.name} offers more throughput than {a.name} "
                f"at a lower SNR requirement"
            )
    return entries


def select_modcod(snr_db: float, catalog=MODCOD_TABLE) -> tuple[ModCod, float]:
    """Pick the highest-rate scheme the SNR supports.

    Returns the chosen entry and the margin (dB) above its requirement.
    Ties on spectral efficiency resolve toward the lower SNR requirement.
    Raises NoFeasibleModcodError when the SNR is below every entry.
    """
    if not math.isfinite(snr_db):
        raise DomainError(f"snr must be finite dB, got {snr_db!r}")
    entries = validate_catalog(catalog)
    eligible = [m for m in entries if m.snr_qef_db <= snr_db]
    if not eligible:
        floor = min(entries, key=lambda m: m.snr_qef_db)
        raise NoFeasibleModcodError(
            f"snr {snr_db:g} dB is below the catalog floor "
            f"({floor.name} needs {floor.snr_qef_db:g} dB)",
            floor=floor,
        )
    best = max(eligible, key=lambda m: (m.se_bps_hz, -m.snr_qef_db))
    return best, snr_db - best.snr_qef_db


def modcod_catalog_csv(catalog=MODCOD_TABLE) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["name", "se_bps_hz", "snr_qef_db"])
    for m in catalog:
        writer.writerow([m.name, f"{m.se_bps_hz:g}", f"{m.snr_qef_db:g}"])
    return out.getvalue()


def load_modcod_catalog(source) -> tuple[ModCod, ...]:
    """Load a MODCOD catalog from CSV text or a file path.

    Expected columns: name, se_bps_hz, snr_qef_db. The catalog is validated
    before being returned.
    """
    if isinstance(source, Path) or (isinstance(source, str) and Path(source).is_file()):
        text = Path(source).read_text()
    else:
        text = str(source)
    reader = csv.DictReader(io.StringIO(text))
    required = {"name", "se_bps_hz", "snr_qef_db"}
    if reader.fieldnames is None or not required.issubset(reader.fieldnames):
        raise ParseError(f"MODCOD CSV must have columns {sorted(required)}, got {reader.fieldnames}")
    entries = []
    for i, row in enumerate(reader, start=2):
        try:
            entries.append(ModCod(row["name"], float(row["se_bps_hz"]), float(row["snr_qef_db"])))
        except (TypeError, ValueError) as exc:
            if isinstance(exc, DomainError):
                raise
            raise ParseError(f"bad MODCOD row: {row}", line=i) from exc
    return validate_catalog(entries)


@dataclass(frozen=True)
class MultiBeamConfig:
    """Multi-beam payload: polarizations, spot beams, frequency colors,
    guard-band overhead, per-color bandwidth and spectral efficiency."""

    se_bps_hz: float
    bandwidth_hz: float
    polarizations: int = 1
    beams: int = 1
    colors: int = 1
    guard_fraction: float = 0.0

    def __post_init__(self):
        if self.polarizations not in (1, 2):
            raise DomainError(f"polarizations must be 1 or 2, got {self.polarizations!r}")
        if not (isinstance(self.beams, int) and self.beams >= 1):
            raise DomainError(f"beams must be an integer >= 1, got {self.beams!r}")
        if not (isinstance(self.colors, int) and self.colors >= 1):
            raise DomainError(f"colors must be an integer >= 1, got {self.colors!r}")
        if not (math.isfinite(self.guard_fraction) and 0.0 <= self.guard_fraction <= 1.0):
            raise DomainError(f"guard fraction must lie in [0, 1], got {self.guard_fraction!r}")
        if not (math.isfinite(self.se_bps_hz) and self.se_bps_hz >= 0):
            raise DomainError(f"spectral efficiency must be >= 0, got {self.se_bps_hz!r}")
        if not (math.isfinite(self.bandwidth_hz) and self.bandwidth_hz > 0):
            raise DomainError(f"bandwidth must be > 0 Hz, got {self.bandwidth_hz!r}")


def multibeam_capacity(cfg: MultiBeamConfig) -> float:
    """Total satellite throughput in bps across all beams and polarizations.

    R = se * B * (N_pol * N_beams / N_colors) * (1 - guard).
    """
    return (
        cfg.se_bps_hz
        * cfg.bandwidth_hz
        * (cfg.polarizations * cfg.beams / cfg.colors)
        * (1.0 - cfg.guard_fraction)
    )


# Empirical cost-per-Gb/s power law for high-throughput satellites.
COST_COEFFICIENT = 167.3
COST_EXPONENT = -0.886


def satellite_cost_per_gbps(r_tot_gbps: float) -> float:
    """Empirical cost per Gb/s of capacity; drops as a power law with total
    throughput, which is what makes very-high-throughput payloads pay off."""
    if not (math.isfinite(r_tot_gbps) and r_tot_gbps > 0):
        raise DomainError(f"total rate must be > 0 Gb/s, got {r_tot_gbps!r}")
    return COST_COEFFICIENT * r_tot_gbps**COST_EXPONENT


@dataclass(frozen=True)
class TcpLinkModel:
    """Inputs of the classic loss-bounded TCP throughput formula."""

    mss_bytes: float
    rtt_s: float
    loss_probability: float
    c_constant: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.mss_bytes) and self.mss_bytes > 0):
            raise DomainError(f"MSS must be > 0 bytes, got {self.mss_bytes!r}")
        if not (math.isfinite(self.rtt_s) and self.rtt_s > 0):
            raise DomainError(f"RTT must be > 0 s, got {self.rtt_s!r}")
        if not (math.isfinite(self.loss_probability) and 0.0 < self.loss_probability <= 1.0):
            raise DomainError(
                f"loss probability must lie in (0, 1]; the bound diverges at 0 "
                f"(supply a loss floor), got {self.loss_probability!r}"
            )
        if not (math.isfinite(self.c_constant) and 0.0 < self.c_constant <= 2.0):
            raise DomainError(f"C must lie in (0, 2], got {self.c_constant!r}")
        if not 1.0 <= self.c_constant <= 1.5:
            warnings.warn(
                f"C={self.c_constant:g} is outside the typical 1-1.5 range",
                stacklevel=2,
            )


def tcp_throughput_bound(model: TcpLinkModel) -> float:
    """Upper bound on TCP throughput in bps: (MSS*8/RTT) * C/sqrt(p_loss)."""
    return (model.mss_bytes * 8.0 / model.rtt_s) * model.c_constant / math.sqrt(model.loss_probability)
