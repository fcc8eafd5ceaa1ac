from app.density.experiment import density_experiment, run_trial, write_csv
from app.density.perturb import perturb_to_saturated
from app.density.planes import (
    condition_number,
    principal_angle,
    principal_angle_eig,
    principal_angle_svd,
    rational_round,
    sample_plane,
    validate_period,
)
from app.density.realize import (
    ANCHORED,
    GENERIC,
    brute_delta_search,
    period_from_basis,
    realize_orbit,
    realize_orbit_with_stage,
    standard_period,
)
