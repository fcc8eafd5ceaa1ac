from app.isometry.group import (
    NEGATIVE,
    POSITIVE,
    adjust_to_N,
    chi,
    compose,
    det_char,
    disc_action,
    hyperbolic_blocks,
    in_N,
    in_W,
    orientation_char,
    reference_frame,
    reflection,
)
