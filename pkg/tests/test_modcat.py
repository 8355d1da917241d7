import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weakhopf.exactlin import Mor, kron, zero
from weakhopf.generators import random_hl_module, random_hopf_module, twisted_module
from weakhopf.hopfmod import check_hopf_module, fundamental_theorem, is_strong, regular_hopf_module
from weakhopf.modcat import (NotEquivariant, NotStrong, RightHLModule, certify_equivalence,
                             check_right_module, coinv_functor, coinv_morphism, default_samples,
                             free_hl_module, hl_module_on_h, induce, induce_morphism,
                             is_hl_morphism, s_iso)
from weakhopf.report import LawFailure

from conftest import SMALL, cached


def test_right_module_examples(small):
    H = small
    N1 = free_hl_module(H, 1)
    assert N1.action == H.left.mul and check_right_module(N1)
    assert check_right_module(free_hl_module(H, 2))
    assert check_right_module(hl_module_on_h(H))


def test_random_actions_are_rarely_modules():
    rng = random.Random(7)
    H = cached("discrete-3")
    d, r = 2, H.left.dim
    valid = 0
    for _ in range(50):
        cols = {j: {i: rng.randint(-2, 2) for i in range(d)} for j in range(d * r)}
        valid += check_right_module(RightHLModule(H, d, Mor(d, d * r, cols), check=False))
    assert valid <= 2


def test_invalid_module_rejected():
    H = cached("discrete-3")
    with pytest.raises(LawFailure):
        RightHLModule(H, 1, Mor(1, 3, {0: {0: 1}, 1: {0: 1}, 2: {0: 1}}))


@pytest.mark.parametrize("name", SMALL)
def test_induce_free_rank_one(name):
    H = cached(name)
    F = induce(free_hl_module(H, 1))
    assert F.dim == H.dim
    assert F.report.all_ok
    assert is_strong(F.module) and check_hopf_module(F.module).all_ok


def test_induce_zero_module():
    H = cached("pair-2")
    F = induce(free_hl_module(H, 0))
    assert F.dim == 0


def test_induced_dimensions_scale():
    H = cached("pair-2")
    assert induce(free_hl_module(H, 2)).dim == 2 * H.dim


def test_induce_morphism_functorial():
    H = cached("pair-2")
    N1, N2 = free_hl_module(H, 1), free_hl_module(H, 2)
    F1, F2 = induce(N1), induce(N2)
    assert induce_morphism(N1.id, F1, F1) == F1.module.id
    assert induce_morphism(zero(N1.dim, N1.dim), F1, F1).is_zero()
    r = H.left.dim
    proj = Mor(r, 2 * r, {j: {j: 1} for j in range(r)})
    Fp = induce_morphism(proj, F2, F1)
    assert Fp @ F2.n == F1.n @ kron(proj, H.id)


def test_induce_morphism_rejects_non_equivariant():
    H = cached("discrete-3")
    N = free_hl_module(H, 1)
    F = induce(N)
    f = Mor(3, 3, {0: {1: 1}, 1: {0: 1}, 2: {2: 1}})
    assert not is_hl_morphism(f, N, N)
    with pytest.raises(NotEquivariant):
        induce_morphism(f, F, F)


def test_coinv_functor_on_regular(small):
    H = small
    G = coinv_functor(regular_hopf_module(H))
    assert G.dim == H.left.dim
    assert check_right_module(G)
    # q_H = Pi^L, so G(H) carries the regular action of H_L
    assert G.action == H.left.mul


def test_coinv_functor_rejects_non_strong():
    with pytest.raises(NotStrong) as e:
        coinv_functor(twisted_module(cached("discrete-3")))
    assert e.value.label == "c1"


def test_coinv_morphism_identity_and_alpha():
    H = cached("pair-2")
    M = regular_hopf_module(H)
    assert coinv_morphism(M.id, M, M) == coinv_functor(M).id
    cx = M.cross
    g = coinv_morphism(cx.alpha, M, cx.module)
    assert g.shape[0] == g.shape[1] == H.left.dim


def test_s_iso_regular(small):
    si = s_iso(regular_hopf_module(small))
    assert si.s.shape == (small.dim, small.dim)
    assert all(c.ok for c in si.evidence)


@pytest.mark.parametrize("name", SMALL)
def test_equivalence_certificate(name):
    H = cached(name)
    hl, hopf, morphisms = default_samples(H)
    assert len(hl) >= 3 and len(hopf) >= 3
    cert = certify_equivalence(H, hl, hopf, morphisms)
    assert cert.ok
    labels = set(cert.report.labels())
    assert {"N0:unit", "N0:mn", "N0:u-x", "N0:x-u", "M0:counit", "N0:triangle-1",
            "M0:triangle-2", "f0:unit-natural"} <= labels


def test_equivalence_rejects_non_strong_sample():
    H = cached("discrete-3")
    hl, hopf, _ = default_samples(H)
    with pytest.raises(NotStrong):
        certify_equivalence(H, hl, hopf + [twisted_module(H)])


@given(st.sampled_from(["C2", "discrete-3", "pair-2"]), st.integers(0, 10 ** 6))
def test_equivalence_on_random_samples(name, seed):
    H = cached(name)
    N = random_hl_module(H, 2, seed)
    M = random_hopf_module(H, seed)
    assert certify_equivalence(H, [N], [M]).ok
    assert fundamental_theorem(induce(N).module).ok
