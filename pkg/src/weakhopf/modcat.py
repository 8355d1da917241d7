"""Right H_L-modules, the induction functor ``N -> N (x)_{H_L} H``, the
coinvariants functor, and certification of the equivalence between strong
Hopf modules and right H_L-modules."""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactlin import (CoequalizerDatum, DimensionError, Mor, chain, coequalizer, direct_sum,
                       identity, is_coequalizer, kron)
from .hopfmod import (HopfModule, ModuleMismatch, certify_iso, check_hopf_module,
                      comodule_check, quasilinear_check, regular_hopf_module, strong_check)
from .report import Check, LawFailure, Report, compare
from .whq import BaseObject, WeakHopfQuasigroup


class NotStrong(LawFailure):
    def __init__(self, witness=None):
        super().__init__("c1", witness, "module is not strong")


class NotEquivariant(LawFailure):
    pass


class NotMorphism(LawFailure):
    pass


class RightHLModule:
    """``(N, psi)`` with ``psi: N (x) H_L -> N`` a unital associative right action."""

    def __init__(self, over: WeakHopfQuasigroup, dim: int, action: Mor, check: bool = True):
        r = over.left.dim
        if action.shape != (dim, dim * r):
            raise DimensionError(f"H_L-action must be {dim}<-{dim * r}, got {action.shape}")
        self.over = over
        self.dim = dim
        self.action = action
        self._induced = None
        if check:
            for c in right_module_checks(self):
                if not c.ok:
                    raise LawFailure(c.label, c.witness)

    def __repr__(self):
        return f"RightHLModule(dim={self.dim}, over={self.over!r})"

    @property
    def base(self) -> BaseObject:
        return self.over.left

    @property
    def id(self) -> Mor:
        return identity(self.dim, self.over.field)


def right_module_checks(N: RightHLModule) -> list[Check]:
    B = N.base
    J, K = N.id, identity(B.dim, N.over.field)
    psi = N.action
    return [
        compare("hl-module-assoc", psi @ kron(J, B.mul), psi @ kron(psi, K)),
        compare("hl-module-unit", psi @ kron(J, B.unit), J),
    ]


def check_right_module(N: RightHLModule) -> bool:
    return all(c.ok for c in right_module_checks(N))


def is_hl_morphism(f: Mor, N: RightHLModule, P: RightHLModule) -> bool:
    if f.shape != (P.dim, N.dim):
        raise DimensionError(f"expected {N.dim}->{P.dim}, got {f.shape}")
    K = identity(N.base.dim, N.over.field)
    return P.action @ kron(f, K) == f @ N.action


def free_hl_module(H: WeakHopfQuasigroup, k: int = 1) -> RightHLModule:
    """``H_L^k`` with the regular right action on each summand."""
    B = H.left
    r = B.dim
    if k == 0:
        return RightHLModule(H, 0, Mor.zero(0, 0, H.field))
    # (H_L^k) (x) H_L = (H_L (x) H_L)^k in the left-major ordering
    psi = direct_sum(*([B.mul] * k))
    return RightHLModule(H, k * r, psi)


def hl_module_on_h(H: WeakHopfQuasigroup) -> RightHLModule:
    """``(H, psi_H = mu o (H (x) i_L))``."""
    return RightHLModule(H, H.dim, H.mul @ kron(H.id, H.left.i))


def conjugate_hl_module(N: RightHLModule, T: Mor, T_inv: Mor) -> RightHLModule:
    K = identity(N.base.dim, N.over.field)
    return RightHLModule(N.over, N.dim, chain(T, N.action, kron(T_inv, K)))


# --------------------------------------------------------------------------
# induction


@dataclass(frozen=True, eq=False)
class InducedModule:
    base: RightHLModule
    coeq: CoequalizerDatum
    module: HopfModule
    report: Report = field(repr=False)

    @property
    def n(self) -> Mor:
        return self.coeq.n

    @property
    def dim(self) -> int:
        return self.coeq.dim


def _phi_H(H: WeakHopfQuasigroup) -> Mor:
    return H.mul @ kron(H.left.i, H.id)


def induce(N: RightHLModule) -> InducedModule:
    """``F(N) = N (x)_{H_L} H`` with its coaction and action (memoized on ``N``)."""
    if N._induced is None:
        N._induced = _induce(N)
    return N._induced


def _induce(N: RightHLModule) -> InducedModule:
    H = N.over
    I, J = H.id, N.id
    mu, delta = H.mul, H.comul
    top, bottom = kron(N.action, I), kron(J, _phi_H(H))
    co = coequalizer(top, bottom)
    n, s = co.n, co.s
    rep = Report("induced module")
    rep.add(Check("coequalizer-1", is_coequalizer(n, top, bottom)))
    rep.add(Check("tensor-preserves-coequalizer",
                  is_coequalizer(kron(n, I), kron(top, I), kron(bottom, I))))

    target_rho = kron(n, I) @ kron(J, delta)
    rho = target_rho @ s
    rep.add(compare("comodule", rho @ n, target_rho))
    target_phi = n @ kron(J, mu)
    phi = target_phi @ kron(s, I)
    rep.add(compare("quasi-module", phi @ kron(n, I), target_phi))
    rep.raise_on_failure()

    M = HopfModule(H, co.dim, phi, rho, check=False)
    mrep = check_hopf_module(M)
    rep.add(Check("hopf-module", mrep.ok, None if mrep.ok else (mrep.first_failure().label,)))
    rep.raise_on_failure()
    rep.add(strong_check(M))
    rep.add(compare("idem-strong", M.coinvariants.q @ n, n @ kron(J, H.projections.piL)))
    rep.add(compare("action-induction", M.phi_alpha, phi))
    rep.raise_on_failure()
    return InducedModule(N, co, M, rep)


def induce_morphism(f: Mor, N: InducedModule, P: InducedModule) -> Mor:
    """``F(f) = f (x)_{H_L} H``, the unique map with ``n_P o (f (x) H) = F(f) o n_N``."""
    if not is_hl_morphism(f, N.base, P.base):
        raise NotEquivariant("hl-morphism", detail="f is not H_L-linear")
    I = N.base.over.id
    target = P.n @ kron(f, I)
    g = N.coeq.factor(target)
    if g @ N.n != target:
        raise LawFailure("mor-induction")
    for chk in (comodule_check(g, N.module, P.module), quasilinear_check(g, N.module, P.module)):
        if not chk.ok:
            raise LawFailure("mor-induction:" + chk.label, chk.witness)
    return g


# --------------------------------------------------------------------------
# coinvariants functor


def coinv_functor(M: HopfModule) -> RightHLModule:
    """``G(M) = (M^coH, psi = p_M o phi_M o (i_M (x) i_L))``; needs a strong module."""
    c1 = strong_check(M)
    if not c1.ok:
        raise NotStrong(c1.witness)
    co = M.coinvariants
    psi = chain(co.p, M.action, kron(co.i, M.over.left.i))
    return RightHLModule(M.over, co.dim, psi)


def coinv_morphism(g: Mor, M: HopfModule, T: HopfModule) -> Mor:
    """``G(g) = g^coH`` with ``i_T o g^coH = g o i_M``."""
    for chk in (comodule_check(g, M, T), quasilinear_check(g, M, T)):
        if not chk.ok:
            raise NotMorphism(chk.label, chk.witness)
    cM, cT = M.coinvariants, T.coinvariants
    gc = chain(cT.p, g, cM.i)
    if cT.i @ gc != g @ cM.i:
        raise LawFailure("coinv-morphism")
    if gc @ cM.p != cT.p @ g:
        raise LawFailure("coinv-morphism-1")
    if not is_hl_morphism(gc, coinv_functor(M), coinv_functor(T)):
        raise LawFailure("coinv-morphism-hl-linear")
    return gc


# --------------------------------------------------------------------------
# s_M


@dataclass(frozen=True, eq=False)
class SIso:
    """``s_M: M^coH (x)_{H_L} H -> M^coH x H`` and the data it was built from."""

    s: Mor
    s_inv: Mor
    coinv: RightHLModule
    induced: InducedModule
    evidence: list[Check]


def s_iso(M: HopfModule) -> SIso:
    H = M.over
    G = coinv_functor(M)
    cx = M.cross
    px, ix = cx.p, cx.i
    I, K = H.id, G.id
    evidence = [compare("iso-aux-coequalizes", px @ kron(G.action, I), px @ kron(K, _phi_H(H)))]
    FG = induce(G)
    s = FG.coeq.factor(px)
    evidence.append(compare("iso-aux", s @ FG.n, px))
    s_inv = FG.n @ ix
    evidence.append(compare("nabla-absorbs", FG.n @ cx.nabla, FG.n))
    evidence += certify_iso(s, s_inv, FG.module, cx.module, "s")
    for c in evidence:
        if not c.ok:
            raise LawFailure(c.label, c.witness)
    return SIso(s, s_inv, G, FG, evidence)


# --------------------------------------------------------------------------
# the equivalence


@dataclass(frozen=True, eq=False)
class UnitData:
    N: RightHLModule
    FN: InducedModule
    GFN: RightHLModule
    u: Mor
    m: Mor
    x: Mor


@dataclass(frozen=True, eq=False)
class CounitData:
    M: HopfModule
    siso: SIso
    v: Mor
    v_inv: Mor


@dataclass
class EquivalenceCertificate:
    units: list[UnitData] = field(default_factory=list)
    counits: list[CounitData] = field(default_factory=list)
    report: Report = field(default_factory=lambda: Report("equivalence certificate"))

    @property
    def ok(self) -> bool:
        return self.report.all_ok


def unit_data(N: RightHLModule, rep: Report, tag: str) -> UnitData:
    H = N.over
    J = N.id
    B = H.left
    FN = induce(N)
    GFN = coinv_functor(FN.module)
    co = FN.module.coinvariants
    target = FN.n @ kron(J, H.unit)
    u = co.p @ target
    rep.add(compare(f"{tag}:unit", co.i @ u, target))
    rep.add(Check(f"{tag}:unit-hl-linear", is_hl_morphism(u, N, GFN)))
    mtarget = N.action @ kron(J, B.p)
    rep.add(compare(f"{tag}:mn-coequalizes", mtarget @ kron(N.action, H.id),
                    mtarget @ kron(J, _phi_H(H))))
    m = FN.coeq.factor(mtarget)
    rep.add(compare(f"{tag}:mn", m @ FN.n, mtarget))
    x = m @ co.i
    rep.add(compare(f"{tag}:u-x", u @ x, GFN.id))
    rep.add(compare(f"{tag}:x-u", x @ u, J))
    return UnitData(N, FN, GFN, u, m, x)


def counit_data(M: HopfModule, rep: Report, tag: str) -> CounitData:
    si = s_iso(M)
    cx = M.cross
    v = cx.alpha_inv @ si.s
    v_inv = si.s_inv @ cx.alpha
    co = M.coinvariants
    rep.add(compare(f"{tag}:counit", v @ si.induced.n, M.action @ kron(co.i, M.over.id)))
    for c in certify_iso(v, v_inv, si.induced.module, M, "v"):
        rep.add(Check(f"{tag}:{c.label}", c.ok, c.witness))
    return CounitData(M, si, v, v_inv)


def certify_equivalence(H: WeakHopfQuasigroup, sample_modules, sample_hopf,
                        morphisms=()) -> EquivalenceCertificate:
    """Build and check unit, counit and triangular identities on finite samples.

    ``morphisms`` holds triples ``(f, N, P)`` of H_L-module maps between
    members of ``sample_modules`` used for naturality of the unit.  Any
    failed display raises ``LawFailure`` naming it.
    """
    cert = EquivalenceCertificate()
    rep = cert.report
    for M in sample_hopf:
        if M.over is not H:
            raise ModuleMismatch("sample Hopf module over a different H")
        c1 = strong_check(M)
        if not c1.ok:
            raise NotStrong(c1.witness)
    for N in sample_modules:
        if N.over is not H:
            raise ModuleMismatch("sample H_L-module over a different H")

    units = {}
    for k, N in enumerate(sample_modules):
        ud = unit_data(N, rep, f"N{k}")
        cert.units.append(ud)
        units[id(N)] = ud
    for k, M in enumerate(sample_hopf):
        cert.counits.append(counit_data(M, rep, f"M{k}"))

    for k, (f, N, P) in enumerate(morphisms):
        uN, uP = units[id(N)], units[id(P)]
        Ff = induce_morphism(f, uN.FN, uP.FN)
        Gf = coinv_morphism(Ff, uN.FN.module, uP.FN.module)
        rep.add(compare(f"f{k}:unit-natural", Gf @ uN.u, uP.u @ f))

    # first triangular identity: v_{F(N)} o F(u_N) = id_{F(N)}
    for k, ud in enumerate(cert.units):
        cd = counit_data(ud.FN.module, rep, f"FN{k}")
        FGF = cd.siso.induced
        Fu = induce_morphism(ud.u, ud.FN, FGF)
        rep.add(compare(f"N{k}:triangle-1", cd.v @ Fu, ud.FN.module.id))
    # second triangular identity: G(v_M) o u_{G(M)} = id_{G(M)}
    for k, cd in enumerate(cert.counits):
        GM = cd.siso.coinv
        ud = unit_data(GM, rep, f"GM{k}")
        Gv = coinv_morphism(cd.v, ud.FN.module, cd.M)
        rep.add(compare(f"M{k}:triangle-2", Gv @ ud.u, GM.id))

    f = rep.first_failure()
    if f is not None:
        raise LawFailure(f.label, f.witness)
    return cert


def default_samples(H: WeakHopfQuasigroup):
    """Three H_L-modules, three strong Hopf modules, and H_L-maps between the former."""
    B = H.left
    r = B.dim
    N1 = free_hl_module(H, 1)
    N2 = free_hl_module(H, 2)
    N3 = hl_module_on_h(H)
    F = H.field
    proj = Mor(r, 2 * r, {j: {j: 1} for j in range(r)}, F)
    morphisms = [(proj, N2, N1), (B.i, N1, N3)]
    regular = regular_hopf_module(H)
    hopf = [regular, induce(N1).module, induce(N3).module, regular.cross.module]
    return [N1, N2, N3], hopf, morphisms
