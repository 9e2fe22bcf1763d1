"""Satellite-link engineering toolkit.

Orbit geometry, RF link budgets, Shannon/MODCOD capacity, multi-beam
throughput, phased-array figures, constellation footprints and NTN project
scenario checks, with a CLI front end (`satlink`).
"""

from . import antenna, capacity, constellation, geometry, linkbudget, quantities, scenario
from .errors import (
    DomainError,
    NoFeasibleModcodError,
    NoSidelobeError,
    NotFoundError,
    OutOfBandError,
    ParseError,
    SatlinkError,
    ValidationError,
)
from .quantities import (
    DEFAULT_CONSTANTS,
    AntennaGain,
    PhysicalConstants,
    Power,
    PowerRatio,
    band_lookup,
    db_from_linear,
    linear_from_db,
)

__version__ = "0.1.0"

__all__ = [
    "antenna",
    "capacity",
    "constellation",
    "geometry",
    "linkbudget",
    "quantities",
    "scenario",
    "AntennaGain",
    "DEFAULT_CONSTANTS",
    "DomainError",
    "NoFeasibleModcodError",
    "NoSidelobeError",
    "NotFoundError",
    "OutOfBandError",
    "ParseError",
    "PhysicalConstants",
    "Power",
    "PowerRatio",
    "SatlinkError",
    "ValidationError",
    "band_lookup",
    "db_from_linear",
    "linear_from_db",
    "__version__",
]
