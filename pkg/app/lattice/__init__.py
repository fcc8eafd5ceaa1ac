from app.lattice.core import (
    disc_group,
    divisibility,
    inner,
    is_primitive,
    is_saturated,
    orth_complement,
    saturate,
    saturation_index,
    span,
)
from app.lattice.mukai import (
    PeriodModel,
    mukai_coordinates,
    mukai_dual,
    mukai_pairing,
    mukai_vector,
    mukai_vperp_structure,
    period_model,
)
from app.lattice.standard import STANDARD_NAMES, make_standard
