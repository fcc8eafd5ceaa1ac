import pytest

from app.core.errors import DegenerateLatticeError, LatticeError, PreconditionError
from app.lattice.core import (
    disc_group,
    divisibility,
    forms_isomorphic,
    is_primitive,
    is_saturated,
    orth_complement,
    saturate,
    saturation_index,
    span,
)
from app.lattice.mukai import (
    mukai_coordinates,
    mukai_dual,
    mukai_pairing,
    mukai_vector,
    mukai_vperp_structure,
    period_model,
)
from app.lattice.standard import (
    STANDARD_NAMES,
    e8_negative,
    hyperbolic,
    kummer_lambda,
    kummer_tilde,
    lambda_k3,
    lambda_n,
    make_standard,
    mukai,
)
from app.models.lattice import Lattice, MukaiVector, Sublattice
from app.models.orbit import HILBERT, KUMMER


def test_lattice_rejects_odd_and_asymmetric_grams():
    with pytest.raises(LatticeError):
        Lattice([[1]])
    with pytest.raises(LatticeError):
        Lattice([[0, 1], [2, 0]])


def test_standard_signatures_and_determinants():
    assert e8_negative().signature == (0, 8)
    assert e8_negative().det == 1
    assert hyperbolic().signature == (1, 1)
    assert lambda_k3().signature == (3, 19)
    assert lambda_k3().is_unimodular
    assert mukai().signature == (4, 20)
    assert kummer_tilde().signature == (4, 4)
    L = lambda_n(7)
    assert L.signature == (3, 20)
    assert abs(L.det) == 12


def test_make_standard_names():
    assert "Lambda" in STANDARD_NAMES and "KummerLambda" in STANDARD_NAMES
    assert make_standard("KummerLambda", 3) == kummer_lambda(3)
    assert make_standard("rank1", -4).gram == [[-4]]
    with pytest.raises(PreconditionError):
        make_standard("Lambda")
    with pytest.raises(PreconditionError):
        make_standard("Lambda", 1)
    with pytest.raises(PreconditionError):
        make_standard("Leech")


@pytest.mark.parametrize("n", [2, 3, 7, 20, 50])
def test_discriminant_groups_are_cyclic(n):
    assert disc_group(lambda_n(n)).invariant_factors == [2 * n - 2]
    assert disc_group(kummer_lambda(n)).invariant_factors == [2 * n + 2]


@pytest.mark.slow
def test_discriminant_groups_full_range():
    for n in range(2, 51):
        assert disc_group(lambda_n(n)).invariant_factors == [2 * n - 2]
        assert disc_group(kummer_lambda(n)).invariant_factors == [2 * n + 2]


def test_disc_group_forms(kummer3):
    D = disc_group(kummer3)
    assert D.invariant_factors == [8]
    assert D.is_cyclic and D.order == 8
    # q of an odd multiple of w/8 is -u^2/8 mod 2
    assert D.qform[0].denominator == 8
    assert D.bform[0][0].denominator == 8


def test_forms_isomorphic_separates_equal_groups():
    six, minus_six = disc_group(Lattice([[6]])), disc_group(Lattice([[-6]]))
    assert six.invariant_factors == minus_six.invariant_factors == [6]
    assert forms_isomorphic(six, disc_group(Lattice([[6]])))
    assert forms_isomorphic(six, minus_six) is False
    # same group (Z/2)^2, but only the diagonal form takes the value 1/2
    assert forms_isomorphic(disc_group(Lattice([[2, 0], [0, 2]])), disc_group(Lattice([[0, 2], [2, 0]]))) is False


def test_forms_isomorphic_on_isometric_lattices():
    diagonal = disc_group(Lattice([[-6, 0], [0, -2]]))
    skew = disc_group(Lattice([[-8, 6], [6, -6]]))
    assert forms_isomorphic(diagonal, skew)
    assert forms_isomorphic(diagonal, skew, limit=4) is None
    cyclic = disc_group(kummer_lambda(2))
    assert forms_isomorphic(cyclic, cyclic)


def test_unimodular_lattice_has_trivial_discriminant():
    D = disc_group(lambda_k3())
    assert D.invariant_factors == []
    assert D.order == 1


def test_degenerate_lattice():
    L = Lattice([[0, 0], [0, 0]])
    with pytest.raises(DegenerateLatticeError):
        L.require_nondegenerate()


def test_saturation():
    H2 = make_standard("Hpow", 2)
    S = span(H2, [2, 0, 0, 0], [0, 1, 0, 0])
    assert not is_saturated(S)
    assert saturation_index(S) == 2
    K = saturate(S)
    assert is_saturated(K)
    assert K.rank == 2
    assert saturation_index(K) == 1


def test_sublattice_rejects_dependent_rows():
    with pytest.raises(DegenerateLatticeError):
        Sublattice(hyperbolic(), [[1, 1], [2, 2]])


def test_orth_complement(lambda7):
    w = lambda7.unit(22)
    K = orth_complement(lambda7, span(lambda7, w))
    assert K.rank == 22
    assert all(lambda7.inner(row, w) == 0 for row in K.basis)
    full = orth_complement(lambda7, Sublattice(lambda7, []))
    assert full.rank == 23


def test_divisibility_and_primitivity(lambda7):
    w = lambda7.unit(22)
    assert divisibility(lambda7, w) == 12
    assert is_primitive(lambda7, w)
    assert not is_primitive(lambda7, [2 * a for a in w])
    with pytest.raises(PreconditionError):
        divisibility(lambda7, lambda7.zero())


def test_mukai_pairing_and_dual():
    a = MukaiVector(1, [0] * 22, 3)
    b = MukaiVector(2, [0] * 22, -1)
    # -(r s' + s r')
    assert mukai_pairing(a, b) == -(1 * -1 + 3 * 2)
    assert mukai_dual(mukai_dual(a)) == a
    assert mukai().inner(mukai_coordinates(a), mukai_coordinates(b)) == mukai_pairing(a, b)


@pytest.mark.parametrize("n", [2, 3, 7])
def test_mukai_vector_and_vperp(n):
    v = mukai_vector(n)
    assert mukai_pairing(v, v) == 2 * n - 2
    delta, verified = mukai_vperp_structure(n)
    assert verified
    assert mukai_pairing(delta, delta) == 2 - 2 * n


@pytest.mark.parametrize("n", [2, 3, 7])
def test_period_model_embedding(n, kind):
    model = period_model(n, kind)
    L, tilde = model.ambient, model.tilde
    assert tilde.norm(model.v) == 2 * model.m
    w = model.w()
    y = model.iota(w)
    assert tilde.norm(y) == L.norm(w) == model.norm_w
    assert tilde.inner(y, model.v) == 0
    assert model.pull_back(y) == w
    with pytest.raises(PreconditionError):
        model.pull_back(model.v)


def test_period_model_kinds():
    assert period_model(7, HILBERT).m == 6
    assert period_model(3, KUMMER).m == 4
    assert period_model(3, "hilb").kind == HILBERT
