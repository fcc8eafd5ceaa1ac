import pytest

from app.core.errors import PreconditionError
from app.embed.search import (
    embed_into_window,
    extend_isometry,
    find_primitive_embedding,
    restrict_to_window,
    window_complement,
)
from app.lattice.core import is_saturated
from app.lattice.standard import hyperbolic, kummer_tilde, make_standard, mukai
from app.models.lattice import Lattice, Sublattice


def test_embed_diag22_into_H2():
    image = find_primitive_embedding(Lattice([[2, 0], [0, 2]]), make_standard("Hpow", 2), 1)
    assert image.basis == [[1, 1, 0, 0], [0, 0, 1, 1]]
    assert is_saturated(image)


def test_embed_H_into_H3():
    image = find_primitive_embedding(hyperbolic(), make_standard("Hpow", 3), 1)
    assert image.basis == [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0]]


def test_embed_rank_one():
    image = find_primitive_embedding(make_standard("rank1", 2), hyperbolic(), 1)
    assert image.basis == [[1, 1]]


def test_embedding_absent_within_bound():
    four = make_standard("rank1", 4)
    assert find_primitive_embedding(four, hyperbolic(), 1) is None
    image = find_primitive_embedding(four, hyperbolic(), 2)
    assert image is not None
    assert image.gram == [[4]]
    assert is_saturated(image)


def test_embedding_preconditions():
    with pytest.raises(PreconditionError):
        find_primitive_embedding(make_standard("Hpow", 2), hyperbolic(), 1)
    with pytest.raises(PreconditionError):
        find_primitive_embedding(hyperbolic(), hyperbolic(), 0)


def test_embedding_on_a_window():
    L = mukai()
    window = list(range(16, 24))
    image = find_primitive_embedding(Lattice([[2, 0], [0, 2]]), L, 1, window=window)
    assert all(a == 0 for row in image.basis for a in row[:16])
    assert image.gram == [[2, 0], [0, 2]]


def test_extend_identity():
    L = kummer_tilde()
    S = Sublattice(L, [L.unit(0), L.unit(1)])
    g = extend_isometry(L, S, S)
    assert g.matrix == [[int(i == j) for j in range(8)] for i in range(8)]


def test_extend_swaps_summands():
    L = kummer_tilde()
    S1 = Sublattice(L, [L.unit(0), L.unit(1)])
    S2 = Sublattice(L, [L.unit(2), L.unit(3)])
    g = extend_isometry(L, S1, S2, [L.unit(2), L.unit(3)])
    assert g is not None
    assert g.preserves_form()
    assert g(L.unit(0)) == L.unit(2)
    assert g(L.unit(1)) == L.unit(3)
    assert abs(g.det) == 1


def test_extend_rank_one_positive_vector():
    L = make_standard("Hpow", 2)
    S1 = Sublattice(L, [[1, 1, 0, 0]])
    S2 = Sublattice(L, [[0, 0, 1, 1]])
    g = extend_isometry(L, S1, S2)
    assert g(S1.basis[0]) == S2.basis[0]


def test_extend_rejects_mismatched_gram():
    L = kummer_tilde()
    S1 = Sublattice(L, [L.unit(0), L.unit(1)])
    S2 = Sublattice(L, [[1, 1, 0, 0, 0, 0, 0, 0], L.unit(1)])
    with pytest.raises(PreconditionError):
        extend_isometry(L, S1, S2)


def test_extend_rejects_unsaturated():
    L = make_standard("Hpow", 2)
    S1 = Sublattice(L, [[2, 2, 0, 0]])
    S2 = Sublattice(L, [[0, 0, 2, 2]])
    with pytest.raises(PreconditionError):
        extend_isometry(L, S1, S2)


def test_window_helpers():
    L = mukai()
    window = list(range(16, 24))
    x = [1, 2, 3, 4, 5, 6, 7, 8]
    y = embed_into_window(L, window, x)
    assert restrict_to_window(window, y) == x
    with pytest.raises(PreconditionError):
        restrict_to_window(window, L.unit(0))


def test_window_complement():
    L = kummer_tilde()
    v = [0, 0, 0, 0, 0, 0, 1, 3]
    K = window_complement(L, list(range(8)), [v])
    assert len(K) == 7
    assert all(L.inner(k, v) == 0 for k in K)


def test_window_complement_without_constraints():
    L = mukai()
    window = list(range(16, 24))
    K = window_complement(L, window, [])
    assert K == [L.unit(i) for i in window]


def test_embedding_with_huge_gram_entries():
    n = 10**19
    target = make_standard("KummerLambda", n)
    image = find_primitive_embedding(Lattice([[2]]), target, 1)
    assert image.gram == [[2]]
    w = find_primitive_embedding(Lattice([[-2 - 2 * n]]), target, 1, window=[6])
    assert w.basis == [target.unit(6)]
