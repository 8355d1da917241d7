"""Weak Hopf quasigroups: axioms, target/source projections, derived identities,
and the Frobenius-separable base monoids H_L and H_R."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .exactlin import (DimensionError, Mor, NotIdempotent, SplitIdempotent, chain,
                       identity, is_coequalizer, is_equalizer, kron, split_idempotent,
                       swap, tensor)
from .report import Check, LawFailure, Report, compare, compare_all
from .structures import Comonoid, UnitalMagma, convolution


class AxiomViolation(LawFailure):
    pass


class SplitFailure(LawFailure):
    pass


AXIOM_LABELS = ("a1", "a2", "a3", "a4-1", "a4-2", "a4-3", "a4-4", "a4-5", "a4-6", "a4-7")


class WeakHopfQuasigroup:
    """``(H, eta, mu, epsilon, delta, lambda)`` with a braiding pair on ``H (x) H``.

    The braiding defaults to the flip.  With ``check=True`` (the default) the
    axioms are verified at construction and ``AxiomViolation`` names the
    first failing one.
    """

    def __init__(self, magma: UnitalMagma, comonoid: Comonoid, antipode: Mor,
                 braiding: Mor | None = None, braiding_inv: Mor | None = None,
                 check: bool = True):
        n = magma.dim
        if comonoid.dim != n or antipode.shape != (n, n):
            raise DimensionError("magma, comonoid and antipode dimensions disagree")
        F = magma.field
        if braiding is None:
            braiding = swap(n, n, F)
        if braiding_inv is None:
            braiding_inv = swap(n, n, F) if braiding == swap(n, n, F) else None
            if braiding_inv is None:
                raise ValueError("a non-flip braiding needs an explicit inverse")
        if braiding.shape != (n * n, n * n) or braiding_inv.shape != (n * n, n * n):
            raise DimensionError("braiding must be an automorphism of H (x) H")
        if braiding @ braiding_inv != identity(n * n, F):
            raise ValueError("braiding_inv is not inverse to braiding")
        self.magma = magma
        self.comonoid = comonoid
        self.antipode = antipode
        self.c = braiding
        self.c_inv = braiding_inv
        if check:
            rep = check_axioms(self)
            f = rep.first_failure()
            if f is not None:
                raise AxiomViolation(f.label, f.witness)

    @classmethod
    def unchecked(cls, magma, comonoid, antipode, braiding=None, braiding_inv=None):
        return cls(magma, comonoid, antipode, braiding, braiding_inv, check=False)

    def __repr__(self):
        return f"WeakHopfQuasigroup(dim={self.dim}, field={self.field!r})"

    @property
    def dim(self) -> int:
        return self.magma.dim

    @property
    def field(self):
        return self.magma.field

    @property
    def unit(self) -> Mor:
        return self.magma.unit

    @property
    def mul(self) -> Mor:
        return self.magma.mul

    @property
    def counit(self) -> Mor:
        return self.comonoid.counit

    @property
    def comul(self) -> Mor:
        return self.comonoid.comul

    @cached_property
    def id(self) -> Mor:
        return identity(self.dim, self.field)

    @property
    def braiding_is_flip(self) -> bool:
        return self.c == swap(self.dim, self.dim, self.field)

    def conv(self, f: Mor, g: Mor) -> Mor:
        return convolution(f, g, self.comonoid, self.magma)

    @cached_property
    def projections(self) -> "ProjectionSet":
        return projections(self)

    @cached_property
    def left(self) -> "BaseObject":
        return base_object(self, "L")

    @cached_property
    def right(self) -> "BaseObject":
        return base_object(self, "R")

    def is_associative(self) -> bool:
        return self.magma.is_associative()


# --------------------------------------------------------------------------
# projections


@dataclass(frozen=True)
class ProjectionSet:
    piL: Mor
    piR: Mor
    piBarL: Mor
    piBarR: Mor


def _closed_forms(H: WeakHopfQuasigroup):
    I, c = H.id, H.c
    em = H.counit @ H.mul
    d1 = H.comul @ H.unit
    piL = chain(kron(em, I), kron(I, c), kron(d1, I))
    piR = chain(kron(I, em), kron(c, I), kron(I, d1))
    piBarL = kron(I, em) @ kron(d1, I)
    piBarR = kron(em, I) @ kron(I, d1)
    return piL, piR, piBarL, piBarR


def projections(H: WeakHopfQuasigroup) -> ProjectionSet:
    """Target and source morphisms and their barred variants.

    The convolution forms ``id * lambda`` and ``lambda * id`` must agree
    with the closed forms, else ``AxiomViolation`` for (a4-1) / (a4-2).
    """
    piL, piR, piBarL, piBarR = _closed_forms(H)
    convL = H.conv(H.id, H.antipode)
    convR = H.conv(H.antipode, H.id)
    for label, a, b in (("a4-1", convL, piL), ("a4-2", convR, piR)):
        w = a.first_difference(b)
        if w is not None:
            raise AxiomViolation(label, w)
    return ProjectionSet(piL, piR, piBarL, piBarR)


# --------------------------------------------------------------------------
# axioms


def check_axioms(H: WeakHopfQuasigroup) -> Report:
    """Verdicts for (a1)-(a4-7), plus the magma unit and comonoid laws."""
    rep = Report("weak Hopf quasigroup axioms")
    I, eta, mu, eps, delta, lam = H.id, H.unit, H.mul, H.counit, H.comul, H.antipode
    c, ci = H.c, H.c_inv

    u = H.magma.unit_law()
    rep.add(Check("unital-magma", u.ok, u.witness))
    for chk in H.comonoid.laws():
        rep.add(Check("comonoid:" + chk.label, chk.ok, chk.witness))

    delta2 = tensor(I, c, I) @ kron(delta, delta)
    rep.add(compare("a1", delta @ mu, kron(mu, mu) @ delta2))

    em = eps @ mu
    rep.add(compare_all("a2", [
        em @ kron(mu, I),
        em @ kron(I, mu),
        kron(em, em) @ tensor(I, delta, I),
        kron(em, em) @ tensor(I, ci @ delta, I),
    ]))

    d1 = delta @ eta
    rep.add(compare_all("a3", [
        kron(delta, I) @ d1,
        tensor(I, mu, I) @ kron(d1, d1),
        tensor(I, mu @ ci, I) @ kron(d1, d1),
    ]))

    piL_closed, piR_closed, _, _ = _closed_forms(H)
    piL = H.conv(I, lam)
    piR = H.conv(lam, I)
    rep.add(compare("a4-1", piL, piL_closed))
    rep.add(compare("a4-2", piR, piR_closed))
    rep.add(compare_all("a4-3", [lam, H.conv(lam, piL), H.conv(piR, lam)]))
    rep.add(compare("a4-4", chain(mu, kron(lam, mu), kron(delta, I)), mu @ kron(piR, I)))
    rep.add(compare("a4-5", chain(mu, kron(I, mu), tensor(I, lam, I), kron(delta, I)),
                    mu @ kron(piL, I)))
    rep.add(compare("a4-6", chain(mu, kron(mu, lam), kron(I, delta)), mu @ kron(I, piL)))
    rep.add(compare("a4-7", chain(mu, kron(mu, I), tensor(I, lam, I), kron(I, delta)),
                    mu @ kron(I, piR)))
    return rep


def coassociator_witness(H: WeakHopfQuasigroup):
    d, I = H.comul, H.id
    return (kron(d, I) @ d).first_difference(kron(I, d) @ d)


# --------------------------------------------------------------------------
# derived identities


def _safe_split(e: Mor):
    try:
        return split_idempotent(e)
    except NotIdempotent:
        return None


def identity_suite(H: WeakHopfQuasigroup) -> Report:
    """Every derived identity of a weak Hopf quasigroup, checked exactly.

    Entries whose statement needs ``i_L`` or ``i_R`` fail outright when the
    corresponding projection is not idempotent.
    """
    rep = Report("derived identities")
    I, eta, mu, eps, delta, lam, c = (H.id, H.unit, H.mul, H.counit, H.comul,
                                       H.antipode, H.c)
    em = eps @ mu
    d1 = delta @ eta
    piL = H.conv(I, lam)
    piR = H.conv(lam, I)
    _, _, pbL, pbR = _closed_forms(H)

    rep.add(compare_all("pi-l", [I, H.conv(piL, I), H.conv(I, piR)]))
    rep.add(compare("antipode-unit", lam @ eta, eta))
    rep.add(compare("antipode-counit", eps @ lam, eps))
    rep.add(compare("antimultiplicative", lam @ mu, chain(mu, kron(lam, lam), c)))
    rep.add(compare("anticomultiplicative", delta @ lam, chain(c, kron(lam, lam), delta)))

    rep.add(compare("mu-pi-l", mu @ kron(I, piL), chain(kron(em, I), kron(I, c), kron(delta, I))))
    rep.add(compare("mu-pi-r", mu @ kron(piR, I), chain(kron(I, em), kron(c, I), kron(I, delta))))
    rep.add(compare("mu-pi-l-var", mu @ kron(I, pbL), kron(I, em) @ kron(delta, I)))
    rep.add(compare("mu-pi-r-var", mu @ kron(pbR, I), kron(em, I) @ kron(I, delta)))
    rep.add(compare("delta-pi-l", kron(I, piL) @ delta, chain(kron(mu, I), kron(I, c), kron(d1, I))))
    rep.add(compare("delta-pi-r", kron(piR, I) @ delta, chain(kron(I, mu), kron(c, I), kron(I, d1))))
    rep.add(compare("delta-pi-l-var", kron(pbL, I) @ delta, kron(I, mu) @ kron(d1, I)))
    rep.add(compare("delta-pi-r-var", kron(I, pbR) @ delta, kron(mu, I) @ kron(I, d1)))

    for name, e in (("L", piL), ("R", piR), ("barL", pbL), ("barR", pbR)):
        rep.add(compare(f"pi-idempotent-{name}", e @ e, e))

    rep.add(_all_pairs("pi-composition-1", [
        (piL @ pbL, piL), (piL @ pbR, pbR), (pbL @ piL, pbL), (pbR @ piL, piL)]))
    rep.add(_all_pairs("pi-composition-3", [
        (piR @ pbL, pbL), (piR @ pbR, piR), (pbL @ piR, piR), (pbR @ piR, pbR)]))
    rep.add(_all_pairs("pi-antipode-composition-1", [
        (piL @ lam, piL @ piR), (piL @ piR, lam @ piR),
        (piR @ lam, piR @ piL), (piR @ piL, lam @ piL)]))
    rep.add(_all_pairs("pi-antipode-composition-3", [
        (piL, pbR @ lam), (piL, lam @ pbL), (piR, pbL @ lam), (piR, lam @ pbR)]))

    rep.add(compare_all("mu-assoc-1", [
        mu,
        chain(mu, kron(mu, I), kron(I, kron(piL, I) @ delta)),
        chain(mu, kron(mu, piR), kron(I, delta)),
    ]))
    rep.add(compare_all("mu-assoc-2", [
        mu,
        chain(mu, kron(piL, mu), kron(delta, I)),
        chain(mu, kron(I, mu @ kron(piR, I)), kron(delta, I)),
    ]))

    sL = _safe_split(piL)
    if sL is None:
        for lab in ("aux-1-monoid-hl", "aux-2-monoid-hl", "hl-closed",
                    "monoid-hl-1", "monoid-hl-2", "monoid-hl-3"):
            rep.add(Check(lab, False, ("pi-L not idempotent",)))
    else:
        iL = sL.i
        rep.add(compare("aux-1-monoid-hl", chain(delta, mu, kron(iL, I)),
                        kron(mu, I) @ kron(iL, delta)))
        rep.add(compare("aux-2-monoid-hl", chain(delta, mu, kron(I, iL)),
                        chain(kron(mu, I), kron(I, c), kron(delta, iL))))
        rep.add(compare("hl-closed", chain(piL, mu, kron(piL, piL)), mu @ kron(piL, piL)))
        rep.extend(_monoid_side_checks("hl", H, iL))
    sR = _safe_split(piR)
    if sR is None:
        for lab in ("monoid-hr-1", "monoid-hr-2", "monoid-hr-3"):
            rep.add(Check(lab, False, ("pi-R not idempotent",)))
    else:
        rep.extend(_monoid_side_checks("hr", H, sR.i))
    return rep


def _all_pairs(label, pairs) -> Check:
    for a, b in pairs:
        chk = compare(label, a, b)
        if not chk.ok:
            return chk
    return Check(label, True)


def _monoid_side_checks(tag: str, H: WeakHopfQuasigroup, i: Mor):
    I, mu = H.id, H.mul
    return [
        compare(f"monoid-{tag}-1", mu @ kron(mu @ kron(i, I), I), mu @ kron(i, mu)),
        compare(f"monoid-{tag}-2", mu @ kron(I, mu @ kron(i, I)), mu @ kron(mu @ kron(I, i), I)),
        compare(f"monoid-{tag}-3", mu @ kron(I, mu @ kron(I, i)), mu @ kron(mu, i)),
    ]


# --------------------------------------------------------------------------
# base objects


@dataclass(frozen=True, eq=False)
class BaseObject:
    """``H_L`` or ``H_R``: the split image of the target (source) morphism."""

    side: str
    split: SplitIdempotent
    monoid: UnitalMagma
    comonoid: Comonoid
    casimir: Mor
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

    @property
    def unit(self) -> Mor:
        return self.monoid.unit

    @property
    def mul(self) -> Mor:
        return self.monoid.mul

    @property
    def counit(self) -> Mor:
        return self.comonoid.counit

    @property
    def comul(self) -> Mor:
        return self.comonoid.comul


def base_object(H: WeakHopfQuasigroup, side: str = "L") -> BaseObject:
    if side not in ("L", "R"):
        raise ValueError(f"side must be 'L' or 'R', got {side!r}")
    I, mu, delta, lam = H.id, H.mul, H.comul, H.antipode
    pi = H.conv(I, lam) if side == "L" else H.conv(lam, I)
    try:
        sp = split_idempotent(pi)
    except NotIdempotent as exc:
        raise SplitFailure(f"pi-{side} idempotent", detail=str(exc)) from None
    p, i = sp.p, sp.i
    rep = Report(f"base object H_{side}")

    if side == "L":
        other = kron(I, pi) @ delta
        rep.add(Check("equalizer-hl", is_equalizer(i, delta, other)))
        rep.add(Check("coequalizer-hl", is_coequalizer(p, mu, mu @ kron(I, pi))))
    else:
        other = kron(pi, I) @ delta
        rep.add(Check("equalizer-hr", is_equalizer(i, delta, other)))
        rep.add(Check("coequalizer-hr", is_coequalizer(p, mu, mu @ kron(pi, I))))

    magma = UnitalMagma(sp.rank, p @ H.unit, chain(p, mu, kron(i, i)), check=False)
    comon = Comonoid(sp.rank, H.counit @ i, chain(kron(p, p), delta, i), check=False)
    if side == "L":
        q = chain(kron(p @ lam, p), delta, H.unit)
    else:
        q = chain(kron(p, p @ lam), delta, H.unit)

    u = magma.unit_law()
    rep.add(Check(f"monoid-unit-h{side.lower()}", u.ok, u.witness))
    w = magma.associator_witness()
    rep.add(Check(f"monoid-assoc-h{side.lower()}", w is None, w))
    for chk in comon.laws():
        rep.add(Check(f"comonoid-h{side.lower()}:" + chk.label, chk.ok, chk.witness))
    rep.extend(_casimir_checks(magma, comon, q))

    f = rep.first_failure()
    if f is not None:
        raise LawFailure(f.label, f.witness)
    return BaseObject(side, sp, magma, comon, q, rep)


def _casimir_checks(B: UnitalMagma, C: Comonoid, q: Mor) -> list[Check]:
    J = identity(B.dim, B.field)
    mu = B.mul
    return [
        compare_all("casimir-delta", [kron(mu, J) @ kron(J, q), C.comul, kron(J, mu) @ kron(q, J)]),
        compare("casimir-unit", mu @ q, B.unit),
        compare_all("frobenius", [B.unit, kron(J, C.counit) @ q, kron(C.counit, J) @ q]),
    ]


def casimir_check(B: BaseObject, q: Mor | None = None) -> bool:
    """Separability and Frobenius identities for ``B`` (optionally with a substitute ``q``)."""
    q = B.casimir if q is None else q
    return all(c.ok for c in _casimir_checks(B.monoid, B.comonoid, q))
