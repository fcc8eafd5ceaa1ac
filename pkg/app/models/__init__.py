from .lattice import DiscGroup, Lattice, MukaiVector, Sublattice
from .isometry import Isometry
from .orbit import HILBERT, KUMMER, OrbitClass, normalize_kind
from .period import PeriodData, Perturbation, RealPlane, Realization, SaturationCertificate


__all__ = [
    "Lattice",
    "Sublattice",
    "DiscGroup",
    "MukaiVector",
    "Isometry",
    "OrbitClass",
    "HILBERT",
    "KUMMER",
    "normalize_kind",
    "PeriodData",
    "RealPlane",
    "SaturationCertificate",
    "Perturbation",
    "Realization",
]
