"""RF power accounting from transmitter to receiver.

Covers the free-space propagation equation, thermal noise, EIRP, the G/T
figure of merit, free-space path loss and the additive dB link-budget ledger
that turns them into an SNR. The dB ledger and the watts path are two views
of the same algebra and are kept mutually consistent.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, replace

from .errors import DomainError, ValidationError
from .quantities import (
    DEFAULT_CONSTANTS,
    PhysicalConstants,
    Power,
    PowerRatio,
    db_from_linear,
    linear_from_db,
    noise_figure_from_temperature,
    noise_temperature_from_nf,
    wavelength,
)


def friis_received_power(
    p_t_w: float, g_t: float, g_r: float, wavelength_m: float, distance_m: float
) -> float:
    """Received signal power in watts over a free-space path.

    Args:
        p_t_w: transmit power in W
        g_t: transmit antenna gain, linear
        g_r: receive antenna gain, linear
        wavelength_m: carrier wavelength in m
        distance_m: transmitter-receiver separation in m

    Returns:
        p_t * g_t * g_r * wavelength^2 / ((4*pi)^2 * distance^2)
    """
    for name, v in (
        ("p_t_w", p_t_w),
        ("g_t", g_t),
        ("g_r", g_r),
        ("wavelength_m", wavelength_m),
        ("distance_m", distance_m),
    ):
        if not (math.isfinite(v) and v > 0):
            raise DomainError(f"{name} must be finite and > 0, got {v!r}")
    return p_t_w * g_t * g_r * wavelength_m**2 / ((4.0 * math.pi) ** 2 * distance_m**2)


def noise_power(
    t_k: float, bw_hz: float, constants: PhysicalConstants = DEFAULT_CONSTANTS
) -> float:
    """Thermal noise power in watts collected over a bandwidth: N = k*T*B."""
    if not (math.isfinite(t_k) and t_k >= 0):
        raise DomainError(f"noise temperature must be >= 0 K, got {t_k!r}")
    if not (math.isfinite(bw_hz) and bw_hz > 0):
        raise DomainError(f"bandwidth must be > 0 Hz, got {bw_hz!r}")
    return constants.boltzmann_j_per_k * t_k * bw_hz


def fspl(
    distance_m: float, freq_hz: float, constants: PhysicalConstants = DEFAULT_CONSTANTS
) -> float:
    """Free-space path loss in dB: 20*log10(4*pi*d*f/c)."""
    if not (math.isfinite(distance_m) and distance_m > 0):
        raise DomainError(f"distance must be > 0 m, got {distance_m!r}")
    if not (math.isfinite(freq_hz) and freq_hz > 0):
        raise DomainError(f"frequency must be > 0 Hz, got {freq_hz!r}")
    return 20.0 * math.log10(4.0 * math.pi * distance_m * freq_hz / constants.c_m_per_s)


def g_over_t(g_r_dbi: float, t_k: float) -> float:
    """Receiver figure of merit in dB/K: antenna gain minus 10*log10(T)."""
    if not (math.isfinite(t_k) and t_k > 0):
        raise DomainError(f"system noise temperature must be > 0 K, got {t_k!r}")
    if not math.isfinite(g_r_dbi):
        raise DomainError(f"receive gain must be finite dBi, got {g_r_dbi!r}")
    return g_r_dbi - 10.0 * math.log10(t_k)


def combine_snr_sir(snr: float, sir: float) -> float:
    """Combine noise-only and interference-only ratios into an SINR.

    Both inputs are linear ratios; an infinite SIR denotes an
    interference-free link. SINR = 1 / (1/SNR + 1/SIR).
    """
    for name, v in (("snr", snr), ("sir", sir)):
        if math.isnan(v) or v <= 0:
            raise DomainError(f"{name} must be a positive linear ratio, got {v!r}")
    # an infinite term drops out of the sum exactly
    if math.isinf(sir):
        return snr
    if math.isinf(snr):
        return sir
    return 1.0 / (1.0 / snr + 1.0 / sir)


@dataclass(frozen=True)
class Transmitter:
    """Transmit chain: RF power into an antenna of a given gain."""

    power_w: float
    gain_dbi: float

    def __post_init__(self):
        if not (math.isfinite(self.power_w) and self.power_w > 0):
            raise DomainError(f"transmit power must be > 0 W, got {self.power_w!r}")
        if not math.isfinite(self.gain_dbi):
            raise DomainError(f"transmit gain must be finite dBi, got {self.gain_dbi!r}")

    @property
    def gain_linear(self) -> float:
        return linear_from_db(self.gain_dbi)

    @property
    def eirp_dbw(self) -> float:
        return Power(self.power_w).dbw + self.gain_dbi

    @property
    def eirp_w(self) -> float:
        return self.power_w * self.gain_linear


@dataclass(frozen=True)
class Receiver:
    """Receive chain: antenna gain plus exactly one of noise figure or
    noise temperature (the other is derived against t_ref_k)."""

    gain_dbi: float
    nf_db: float | None = None
    noise_temp_k: float | None = None
    t_ref_k: float = DEFAULT_CONSTANTS.t_ref_k

    def __post_init__(self):
        if not math.isfinite(self.gain_dbi):
            raise DomainError(f"receive gain must be finite dBi, got {self.gain_dbi!r}")
        given = [v for v in (self.nf_db, self.noise_temp_k) if v is not None]
        if len(given) != 1:
            raise ValidationError(
                "nf_db/noise_temp_k",
                "specify exactly one of noise figure or noise temperature",
            )
        if self.nf_db is not None and not (math.isfinite(self.nf_db) and self.nf_db >= 0):
            raise DomainError(f"noise figure must be >= 0 dB, got {self.nf_db!r}")
        if self.noise_temp_k is not None and not (
            math.isfinite(self.noise_temp_k) and self.noise_temp_k >= 0
        ):
            raise DomainError(f"noise temperature must be >= 0 K, got {self.noise_temp_k!r}")

    @property
    def gain_linear(self) -> float:
        return linear_from_db(self.gain_dbi)

    @property
    def noise_temperature_k(self) -> float:
        if self.noise_temp_k is not None:
            return self.noise_temp_k
        return noise_temperature_from_nf(self.nf_db, self.t_ref_k)

    @property
    def noise_figure_db(self) -> float:
        if self.nf_db is not None:
            return self.nf_db
        return noise_figure_from_temperature(self.noise_temp_k, self.t_ref_k)

    @property
    def g_over_t_dbk(self) -> float:
        return g_over_t(self.gain_dbi, self.noise_temperature_k)


@dataclass(frozen=True)
class LossLedger:
    """Loss lines of a link budget, all in dB.

    The rain-fade margin defaults to 0 dB; 2-10 dB is the usual
    recommendation when clear-sky figures must survive weather.
    """

    fspl_db: float
    atm_loss_db: float = 0.0
    ad_loss_db: float = 0.0
    margin_db: float = 0.0

    def __post_init__(self):
        for name in ("fspl_db", "atm_loss_db", "ad_loss_db", "margin_db"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0):
                raise DomainError(f"{name} must be >= 0 dB, got {v!r}")

    @property
    def total_db(self) -> float:
        return self.fspl_db + self.atm_loss_db + self.ad_loss_db + self.margin_db


_RESULT_KEYS = (
    "eirp_dbw",
    "g_over_t_dbk",
    "fspl_db",
    "atm_loss_db",
    "ad_loss_db",
    "margin_db",
    "bw_dbhz",
    "boltzmann_dbw_per_k_hz",
    "snr_db",
)


@dataclass(frozen=True)
class LinkBudgetResult:
    """Itemized dB ledger of a link budget and the resulting SNR.

    `received_power_w`/`noise_power_w` are populated only when the budget
    was derived from a full transmitter/receiver description; a bare G/T
    figure cannot be split back into gain and temperature.
    """

    eirp_dbw: float
    g_over_t_dbk: float
    fspl_db: float
    atm_loss_db: float
    ad_loss_db: float
    margin_db: float
    bw_dbhz: float
    boltzmann_dbw_per_k_hz: float
    snr_db: float
    received_power_w: float | None = None
    noise_power_w: float | None = None

    @property
    def snr(self) -> PowerRatio:
        return PowerRatio.from_db(self.snr_db)

    def breakdown(self) -> list[tuple[str, float]]:
        """Signed ledger items; their sum is the SNR in dB."""
        return [
            ("eirp_dbw", self.eirp_dbw),
            ("g_over_t_dbk", self.g_over_t_dbk),
            ("fspl_db", -self.fspl_db),
            ("atm_loss_db", -self.atm_loss_db),
            ("ad_loss_db", -self.ad_loss_db),
            ("margin_db", -self.margin_db),
            ("bw_dbhz", -self.bw_dbhz),
            ("boltzmann_dbw_per_k_hz", -self.boltzmann_dbw_per_k_hz),
        ]

    def to_dict(self) -> dict:
        d = {k: getattr(self, k) for k in _RESULT_KEYS}
        if self.received_power_w is not None:
            d["received_power_w"] = self.received_power_w
        if self.noise_power_w is not None:
            d["noise_power_w"] = self.noise_power_w
        return d

    def render_table(self) -> str:
        """Two-column text ledger with signs as applied in the dB sum."""
        rows = [(k, f"{v:+.3f}") for k, v in self.breakdown()]
        rows.append(("snr_db", f"{self.snr_db:+.3f}"))
        width = max(len(k) for k, _ in rows)
        out = io.StringIO()
        for k, v in rows:
            out.write(f"{k:<{width}}  {v}\n")
        return out.getvalue()


def snr_db(
    eirp_dbw: float,
    g_over_t_dbk: float,
    fspl_db: float,
    atm_loss_db: float = 0.0,
    ad_loss_db: float = 0.0,
    margin_db: float = 0.0,
    bw_dbhz: float = 0.0,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> LinkBudgetResult:
    """Aggregate the additive dB link budget into an SNR.

    SNR = EIRP + G/T - FSPL - AtmLoss - AdLoss - margin - B_w - k_B,
    with EIRP in dBW, G/T in dB/K, losses in dB, bandwidth in dBHz and the
    Boltzmann constant in dBW/K/Hz. Returns the full itemized ledger.
    """
    for name, v in (
        ("eirp_dbw", eirp_dbw),
        ("g_over_t_dbk", g_over_t_dbk),
        ("bw_dbhz", bw_dbhz),
    ):
        if not math.isfinite(v):
            raise DomainError(f"{name} must be finite, got {v!r}")
    for name, v in (
        ("fspl_db", fspl_db),
        ("atm_loss_db", atm_loss_db),
        ("ad_loss_db", ad_loss_db),
        ("margin_db", margin_db),
    ):
        if not (math.isfinite(v) and v >= 0):
            raise DomainError(f"{name} must be >= 0 dB, got {v!r}")
    k_db = constants.boltzmann_dbw_per_k_hz
    snr = eirp_dbw + g_over_t_dbk - fspl_db - atm_loss_db - ad_loss_db - margin_db - bw_dbhz - k_db
    return LinkBudgetResult(
        eirp_dbw=eirp_dbw,
        g_over_t_dbk=g_over_t_dbk,
        fspl_db=fspl_db,
        atm_loss_db=atm_loss_db,
        ad_loss_db=ad_loss_db,
        margin_db=margin_db,
        bw_dbhz=bw_dbhz,
        boltzmann_dbw_per_k_hz=k_db,
        snr_db=snr,
    )


def link_budget(
    transmitter: Transmitter,
    receiver: Receiver,
    distance_m: float,
    freq_hz: float,
    bandwidth_hz: float,
    atm_loss_db: float = 0.0,
    ad_loss_db: float = 0.0,
    margin_db: float = 0.0,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> LinkBudgetResult:
    """End-to-end link budget from full transmitter/receiver descriptions.

    Computes FSPL from distance and frequency, aggregates the dB ledger and
    additionally fills the received/noise power in watts (signal attenuated
    by the linear equivalent of every loss line).
    """
    if not (math.isfinite(bandwidth_hz) and bandwidth_hz > 0):
        raise DomainError(f"bandwidth must be > 0 Hz, got {bandwidth_hz!r}")
    lam = wavelength(freq_hz, constants)
    path_db = fspl(distance_m, freq_hz, constants)
    result = snr_db(
        transmitter.eirp_dbw,
        receiver.g_over_t_dbk,
        path_db,
        atm_loss_db,
        ad_loss_db,
        margin_db,
        db_from_linear(bandwidth_hz),
        constants,
    )
    extra_loss = linear_from_db(atm_loss_db + ad_loss_db + margin_db)
    rx_w = (
        friis_received_power(
            transmitter.power_w, transmitter.gain_linear, receiver.gain_linear, lam, distance_m
        )
        / extra_loss
    )
    n_w = noise_power(receiver.noise_temperature_k, bandwidth_hz, constants)
    return replace(result, received_power_w=rx_w, noise_power_w=n_w)
