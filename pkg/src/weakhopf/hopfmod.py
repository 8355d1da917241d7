"""Right-right Hopf modules over a weak Hopf quasigroup, their coinvariants,
the cross object ``M^coH x H`` and the fundamental theorem."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .exactlin import DimensionError, Mor, SplitIdempotent, chain, identity, is_equalizer, kron, \
    split_idempotent, tensor
from .report import Check, LawFailure, Report, compare, compare_all
from .whq import WeakHopfQuasigroup


class ModuleMismatch(ValueError):
    pass


class HopfModule:
    """``(M, phi, rho)`` over a fixed ``H``; ``phi: M(x)H -> M``, ``rho: M -> M(x)H``."""

    def __init__(self, over: WeakHopfQuasigroup, dim: int, action: Mor, coaction: Mor,
                 check: bool = True):
        n = over.dim
        if action.shape != (dim, dim * n):
            raise DimensionError(f"action must be {dim}<-{dim * n}, got {action.shape}")
        if coaction.shape != (dim * n, dim):
            raise DimensionError(f"coaction must be {dim * n}<-{dim}, got {coaction.shape}")
        self.over = over
        self.dim = dim
        self.action = action
        self.coaction = coaction
        if check:
            check_hopf_module(self).raise_on_failure()

    def __repr__(self):
        return f"HopfModule(dim={self.dim}, over={self.over!r})"

    @property
    def field(self):
        return self.over.field

    @cached_property
    def id(self) -> Mor:
        return identity(self.dim, self.field)

    @cached_property
    def coinvariants(self) -> "CoinvariantSplit":
        return coinvariants(self)

    @cached_property
    def cross(self) -> "CrossObject":
        return cross_object(self)

    @cached_property
    def _phi_alpha(self):
        return _phi_alpha(self)

    @property
    def phi_alpha(self) -> Mor:
        return phi_alpha(self)


def regular_hopf_module(H: WeakHopfQuasigroup) -> HopfModule:
    return HopfModule(H, H.dim, H.mul, H.comul)


def _same_base(*mods: HopfModule):
    H = mods[0].over
    for m in mods[1:]:
        if m.over is not H:
            raise ModuleMismatch("Hopf modules over different weak Hopf quasigroups")


# --------------------------------------------------------------------------
# axioms


def check_hopf_module(M: HopfModule) -> Report:
    rep = Report("Hopf module axioms")
    H = M.over
    I, J = H.id, M.id
    eta, mu, eps, delta, lam, c = H.unit, H.mul, H.counit, H.comul, H.antipode, H.c
    phi, rho = M.action, M.coaction
    piL = H.conv(I, lam)
    piR = H.conv(lam, I)

    rep.add(compare("b1-counit", kron(J, eps) @ rho, J))
    rep.add(compare("b1-coassoc", kron(rho, I) @ rho, kron(J, delta) @ rho))
    rep.add(compare("b2-1", phi @ kron(J, eta), J))
    rep.add(compare("b2-2", rho @ phi,
                    chain(kron(phi, mu), tensor(J, c, I), kron(rho, delta))))
    rep.add(compare("b3", chain(phi, kron(phi, lam), kron(J, delta)), phi @ kron(J, piL)))
    rep.add(compare("b4", chain(phi, kron(phi, I), tensor(J, lam, I), kron(J, delta)),
                    phi @ kron(J, piR)))
    rep.add(compare("b5", chain(phi, kron(phi, I), tensor(J, piL, I), kron(J, delta)), phi))
    rep.add(compare("b5-equivalent", chain(phi, kron(phi, piR), kron(J, delta)), phi,
                    kind="derived"))
    rep.add(compare("phi-pi-r-rho", chain(phi, kron(J, piR), rho), J, kind="derived"))
    return rep


# --------------------------------------------------------------------------
# coinvariants


@dataclass(frozen=True, eq=False)
class CoinvariantSplit:
    q: Mor
    split: SplitIdempotent
    report: Report = field(repr=False)

    @property
    def p(self) -> Mor:
        return self.split.p

    @property
    def i(self) -> Mor:
        return self.split.i

    @property
    def dim(self) -> int:
        return self.split.rank


def coinvariants(M: HopfModule) -> CoinvariantSplit:
    H = M.over
    I, J = H.id, M.id
    phi, rho, lam, delta = M.action, M.coaction, H.antipode, H.comul
    P = H.projections
    q = chain(phi, kron(J, lam), rho)
    rep = Report("coinvariants")
    rep.add(compare("coinvariant-image", rho @ q, chain(kron(J, P.piL), rho, q)))
    rep.add(compare("q-idempotent", q @ q, q))
    rep.raise_on_failure()
    sp = split_idempotent(q)
    p, i = sp.p, sp.i
    rep.add(Check("equalizer-pi-l", is_equalizer(i, rho, kron(J, P.piL) @ rho)))
    rep.add(Check("equalizer-pibar-r", is_equalizer(i, rho, kron(J, P.piBarR) @ rho)))
    rep.add(compare("new-c5-2-1", chain(phi, kron(q, I), rho), J))
    rep.add(compare("new-c5-2-2", chain(rho, phi, kron(i, I)), kron(phi, I) @ kron(i, delta)))
    rep.add(compare("new-c5-2-3", chain(p, phi, kron(i, I)), chain(p, phi, kron(i, P.piL))))
    rep.raise_on_failure()
    return CoinvariantSplit(q, sp, rep)


# --------------------------------------------------------------------------
# cross object


@dataclass(frozen=True, eq=False)
class CrossObject:
    nabla: Mor
    split: SplitIdempotent
    omega: Mor
    omega_prime: Mor
    alpha: Mor
    alpha_inv: Mor
    module: HopfModule
    report: Report = field(repr=False)

    @property
    def dim(self) -> int:
        return self.split.rank

    @property
    def p(self) -> Mor:
        return self.split.p

    @property
    def i(self) -> Mor:
        return self.split.i


def cross_object(M: HopfModule) -> CrossObject:
    H = M.over
    I, J = H.id, M.id
    phi, rho, mu, delta = M.action, M.coaction, H.mul, H.comul
    co = M.coinvariants
    p, i = co.p, co.i
    K = identity(co.dim, M.field)

    nabla = chain(kron(p, I), rho, phi, kron(i, I))
    rep = Report("cross object")
    rep.add(compare("nabla-idempotent", nabla @ nabla, nabla))
    rep.add(compare("tensor-idempotent-1", nabla, kron(p @ phi, I) @ kron(i, delta)))
    rep.add(compare("tensor-idempotent-2", kron(K, delta) @ nabla,
                    kron(nabla, I) @ kron(K, delta)))
    rep.raise_on_failure()

    sp = split_idempotent(nabla)
    px, ix = sp.p, sp.i
    omega = phi @ kron(i, I)
    omega_p = kron(p, I) @ rho
    rep.add(compare("omega-retraction", omega @ omega_p, J))
    rep.add(compare("nabla-factorization", nabla, omega_p @ omega))
    alpha = px @ omega_p
    alpha_inv = omega @ ix
    X = identity(sp.rank, M.field)
    rep.add(compare_all("alpha-inverse", [J, alpha_inv @ alpha]))
    rep.add(compare_all("alpha-inverse", [X, alpha @ alpha_inv]))
    rho_x = chain(kron(px, I), kron(K, delta), ix)
    phi_x = chain(px, kron(K, mu), kron(ix, I))
    rep.add(compare("alpha-comodule", rho_x @ alpha, kron(alpha, I) @ rho))
    rep.raise_on_failure()

    mod = HopfModule(H, sp.rank, phi_x, rho_x, check=False)
    mrep = check_hopf_module(mod)
    rep.add(Check("cross-hopf-module", mrep.ok,
                  None if mrep.ok else (mrep.first_failure().label,)))
    rep.raise_on_failure()
    return CrossObject(nabla, sp, omega, omega_p, alpha, alpha_inv, mod, rep)


# --------------------------------------------------------------------------
# twisted action


def _phi_alpha(M: HopfModule):
    H = M.over
    I, J = H.id, M.id
    phi, rho, mu, lam = M.action, M.coaction, H.mul, H.antipode
    co = M.coinvariants
    q, p, i = co.q, co.p, co.i
    phia = chain(phi, kron(q, mu), kron(rho, I))
    cx = M.cross
    rep = Report("phi^alpha")
    rep.add(compare("phi-alpha-definition", phia,
                    chain(cx.alpha_inv, cx.module.action, kron(cx.alpha, I))))
    qa = chain(phia, kron(J, lam), rho)
    rep.add(compare("idemp-m-alfa", qa, q))
    rep.add(compare("nabla-alpha", chain(kron(p, I), rho, phia, kron(i, I)), cx.nabla))
    rep.add(compare("phi-alpha-idempotent", chain(phia, kron(qa, mu), kron(rho, I)), phia))
    rep.add(compare("coinv-morphism-2", phi @ kron(i, I), phia @ kron(i, I)))
    return phia, rep


def phi_alpha(M: HopfModule) -> Mor:
    """``phi^alpha = phi o (q (x) mu) o (rho (x) H)``, the action transported along ``alpha``."""
    phia, rep = M._phi_alpha
    rep.raise_on_failure()
    return phia


def phi_alpha_report(M: HopfModule) -> Report:
    return M._phi_alpha[1]


# --------------------------------------------------------------------------
# strongness and the (c2) identity


def strong_check(M: HopfModule) -> Check:
    H = M.over
    I, J = H.id, M.id
    phi, mu = M.action, H.mul
    iL = H.left.i
    return compare("c1", phi @ kron(phi @ kron(J, iL), I), phi @ kron(J, mu @ kron(iL, I)))


def is_strong(M: HopfModule) -> bool:
    return strong_check(M).ok


def c2_check(M: HopfModule) -> Check:
    H = M.over
    phi, mu = M.action, H.mul
    i = M.coinvariants.i
    lhs = phi @ kron(i, mu)
    return compare("c2", lhs, lhs @ kron(M.cross.nabla, H.id))


def check_c2(M: HopfModule) -> bool:
    return c2_check(M).ok


# --------------------------------------------------------------------------
# morphisms


def _check_shape(f: Mor, M: HopfModule, N: HopfModule):
    _same_base(M, N)
    if f.shape != (N.dim, M.dim):
        raise DimensionError(f"expected {M.dim}->{N.dim}, got {f.shape}")


def comodule_check(f: Mor, M: HopfModule, N: HopfModule) -> Check:
    _check_shape(f, M, N)
    return compare("comodule-morphism", N.coaction @ f, kron(f, M.over.id) @ M.coaction)


def quasilinear_check(f: Mor, M: HopfModule, N: HopfModule) -> Check:
    _check_shape(f, M, N)
    return compare("quasilineal", N.phi_alpha @ kron(f, M.over.id), f @ M.phi_alpha)


def is_comodule_morphism(f: Mor, M: HopfModule, N: HopfModule) -> bool:
    return comodule_check(f, M, N).ok


def is_quasilinear(f: Mor, M: HopfModule, N: HopfModule) -> bool:
    return quasilinear_check(f, M, N).ok


def is_hopf_module_morphism(f: Mor, M: HopfModule, N: HopfModule) -> bool:
    return is_comodule_morphism(f, M, N) and is_quasilinear(f, M, N)


# --------------------------------------------------------------------------
# fundamental theorem


@dataclass(frozen=True, eq=False)
class CertifiedIso:
    """An isomorphism of Hopf modules together with the checks that certify it."""

    mor: Mor
    inverse: Mor
    source: HopfModule
    target: HopfModule
    evidence: list[Check]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.evidence)

    def text(self) -> str:
        return "\n".join("  " + c.line() for c in self.evidence)


def certify_iso(f: Mor, f_inv: Mor, M: HopfModule, N: HopfModule, tag: str = "") -> list[Check]:
    pre = f"{tag}:" if tag else ""
    checks = {
        "left-inverse": compare("", f_inv @ f, M.id),
        "right-inverse": compare("", f @ f_inv, N.id),
        "comodule-morphism": comodule_check(f, M, N),
        "quasilineal": quasilinear_check(f, M, N),
        "inverse-comodule-morphism": comodule_check(f_inv, N, M),
        "inverse-quasilineal": quasilinear_check(f_inv, N, M),
    }
    return [Check(pre + lab, c.ok, c.witness) for lab, c in checks.items()]


def fundamental_theorem(M: HopfModule) -> CertifiedIso:
    """``alpha_M: M -> M^coH x H`` certified as an isomorphism of Hopf modules."""
    cx = M.cross
    evidence = [Check(c.label, c.ok, c.witness) for c in M.coinvariants.report.checks]
    evidence += [Check(c.label, c.ok, c.witness) for c in cx.report.checks]
    evidence += phi_alpha_report(M).checks
    evidence += phi_alpha_report(cx.module).checks
    evidence.append(compare("quasilineal-1", cx.module.phi_alpha, cx.module.action))
    evidence += certify_iso(cx.alpha, cx.alpha_inv, M, cx.module, "alpha")
    iso = CertifiedIso(cx.alpha, cx.alpha_inv, M, cx.module, evidence)
    for c in evidence:
        if not c.ok:
            raise LawFailure(c.label, c.witness)
    return iso


def conjugate_module(M: HopfModule, T: Mor, T_inv: Mor) -> HopfModule:
    """Transport ``M`` along an invertible ``T``: an isomorphic Hopf module on a new basis."""
    I = M.over.id
    return HopfModule(M.over, M.dim, chain(T, M.action, kron(T_inv, I)),
                      chain(kron(T, I), M.coaction, T_inv))
