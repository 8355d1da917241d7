import pytest
from hypothesis import given
from hypothesis import strategies as st

from weakhopf.exactlin import QQ, Mor, identity, kron
from weakhopf.report import LawFailure
from weakhopf.structures import (Comonoid, UnitalMagma, convolution, is_comonoid_morphism,
                                 is_magma_morphism, tensor_comonoid, tensor_magma, trivial_comonoid,
                                 trivial_magma)

from conftest import cached


def test_unit_law_enforced():
    H = cached("C2")
    bad_unit = Mor.from_rows([[0], [1]], QQ)
    with pytest.raises(LawFailure) as e:
        UnitalMagma(2, bad_unit, H.mul)
    assert e.value.label == "unit-left"
    UnitalMagma(2, bad_unit, H.mul, check=False)


def test_comonoid_laws_enforced():
    with pytest.raises(LawFailure):
        Comonoid(1, Mor.from_rows([[2]], QQ), identity(1))


def test_associator_witness():
    assert cached("S3").magma.associator_witness() is None
    w = cached("chein-S3").magma.associator_witness()
    a, b, c = w
    H = cached("chein-S3")
    n = H.dim
    lhs = H.mul @ kron(H.mul, H.id)
    rhs = H.mul @ kron(H.id, H.mul)
    assert lhs.column(a * n * n + b * n + c) != rhs.column(a * n * n + b * n + c)


def test_trivial_objects():
    assert trivial_magma().is_associative()
    assert trivial_comonoid().is_counital_comagma()


def test_target_and_source_act_as_convolution_units(small):
    P = small.projections
    conv = lambda f, g: convolution(f, g, small.comonoid, small.magma)
    assert conv(P.piL, small.id) == small.id
    assert conv(small.id, P.piR) == small.id


def test_eta_epsilon_is_convolution_unit_when_base_is_trivial():
    H = cached("S3")
    e = H.unit @ H.counit
    assert convolution(e, H.antipode, H.comonoid, H.magma) == H.antipode
    assert convolution(H.antipode, e, H.comonoid, H.magma) == H.antipode


def test_counit_and_comul_are_structure_morphisms_for_groups():
    H = cached("S3")
    triv = trivial_magma()
    assert is_magma_morphism(H.counit, H.magma, triv)
    assert is_comonoid_morphism(H.id, H.comonoid, H.comonoid)


@given(st.sampled_from(["C2", "discrete-3", "pair-2"]), st.sampled_from(["C2", "discrete-2"]))
def test_tensor_of_laws(a, b):
    A, B = cached(a), cached(b)
    M = tensor_magma(A.magma, B.magma)
    D = tensor_comonoid(A.comonoid, B.comonoid)
    assert M.dim == D.dim == A.dim * B.dim
    assert M.is_associative()
    assert all(c.ok for c in D.laws())
