from app.wedge.square import (
    ALPHA,
    BETA,
    GAMMA,
    WEDGE_BASIS,
    WEDGE_PAIRS,
    WedgeSquareLattice,
    form_units,
    phi,
    prime_power_unit_check,
    psi,
    tau,
    tau_lattice,
    tau_report,
    verify_psi_decomposition,
    wedge_gram,
    wedge_sq_of,
)
