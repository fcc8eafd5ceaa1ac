from app.linalg.matrix import (
    IntMatrix,
    IntVector,
    add,
    as_integral,
    block_diag,
    content,
    det,
    dot,
    identity,
    inverse_rational,
    matmul,
    matvec,
    rank,
    scale,
    shape,
    to_matrix,
    transpose,
    xgcd,
    zeros,
)
from app.linalg.normal_forms import (
    complete_basis,
    hnf,
    invariant_factors,
    kernel_basis,
    lll_reduce,
    reduce_modulo,
    snf,
    solve_integer,
)
from app.linalg.enumeration import box, small_vectors
