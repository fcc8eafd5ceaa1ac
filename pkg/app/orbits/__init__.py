from app.orbits.classes import enumerate_classes, orbit_count_formula, sigma_check, sigma_reasons
from app.orbits.invariant import (
    f_invariant,
    f_invariant_trace,
    hyperbolic_basis,
    split_hyperbolic_plane,
    witness_delta,
)
