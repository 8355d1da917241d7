"""Unital magmas, comonoids and convolution."""

from __future__ import annotations

from dataclasses import InitVar, dataclass

from .exactlin import QQ, DimensionError, Mor, identity, kron, swap, tensor
from .report import LawFailure, compare


@dataclass(frozen=True, eq=False)
class UnitalMagma:
    """``(A, eta, mu)``; the unit law is checked unless ``check=False``."""

    dim: int
    unit: Mor
    mul: Mor
    check: InitVar[bool] = True

    def __post_init__(self, check):
        n = self.dim
        if self.unit.shape != (n, 1) or self.mul.shape != (n, n * n):
            raise DimensionError(f"magma of dim {n}: unit {self.unit.shape}, mul {self.mul.shape}")
        if check:
            c = self.unit_law()
            if not c.ok:
                raise LawFailure(c.label, c.witness)

    @property
    def field(self):
        return self.mul.field

    def unit_law(self):
        I = identity(self.dim, self.field)
        left = compare("unit-left", self.mul @ kron(self.unit, I), I)
        if not left.ok:
            return left
        return compare("unit-right", self.mul @ kron(I, self.unit), I)

    def associator_witness(self):
        """First basis triple ``(a, b, c)`` with ``(ab)c != a(bc)``, or None."""
        n, mu = self.dim, self.mul
        lhs = mu @ kron(mu, identity(n, self.field))
        rhs = mu @ kron(identity(n, self.field), mu)
        w = lhs.first_difference(rhs)
        if w is None:
            return None
        col = w[1]
        return (col // (n * n), (col // n) % n, col % n)

    def is_associative(self) -> bool:
        return self.associator_witness() is None


@dataclass(frozen=True, eq=False)
class Comonoid:
    """``(D, epsilon, delta)``; counit and coassociativity checked unless ``check=False``."""

    dim: int
    counit: Mor
    comul: Mor
    check: InitVar[bool] = True

    def __post_init__(self, check):
        n = self.dim
        if self.counit.shape != (1, n) or self.comul.shape != (n * n, n):
            raise DimensionError(
                f"comonoid of dim {n}: counit {self.counit.shape}, comul {self.comul.shape}")
        if check:
            for c in self.laws():
                if not c.ok:
                    raise LawFailure(c.label, c.witness)

    @property
    def field(self):
        return self.comul.field

    def laws(self):
        I = identity(self.dim, self.field)
        e, d = self.counit, self.comul
        return [
            compare("counit-left", kron(e, I) @ d, I),
            compare("counit-right", kron(I, e) @ d, I),
            compare("coassociativity", kron(d, I) @ d, kron(I, d) @ d),
        ]

    def is_counital_comagma(self) -> bool:
        return all(c.ok for c in self.laws()[:2])


def trivial_magma(field=QQ) -> UnitalMagma:
    return UnitalMagma(1, identity(1, field), identity(1, field))


def trivial_comonoid(field=QQ) -> Comonoid:
    return Comonoid(1, identity(1, field), identity(1, field))


def convolution(f: Mor, g: Mor, src: Comonoid, dst: UnitalMagma) -> Mor:
    """``f * g = mu o (f (x) g) o delta``."""
    for h in (f, g):
        if h.shape != (dst.dim, src.dim):
            raise DimensionError(f"convolution needs {src.dim}->{dst.dim}, got {h.shape}")
    return dst.mul @ kron(f, g) @ src.comul


def is_magma_morphism(f: Mor, A: UnitalMagma, B: UnitalMagma) -> bool:
    if f.shape != (B.dim, A.dim):
        raise DimensionError(f"expected {A.dim}->{B.dim}, got {f.shape}")
    return B.mul @ kron(f, f) == f @ A.mul and f @ A.unit == B.unit


def is_comonoid_morphism(f: Mor, D: Comonoid, E: Comonoid) -> bool:
    if f.shape != (E.dim, D.dim):
        raise DimensionError(f"expected {D.dim}->{E.dim}, got {f.shape}")
    return kron(f, f) @ D.comul == E.comul @ f and E.counit @ f == D.counit


def tensor_magma(A: UnitalMagma, B: UnitalMagma) -> UnitalMagma:
    """``mu_{A(x)B} = (mu_A (x) mu_B) o (A (x) c_{B,A} (x) B)``."""
    F = A.field
    mul = kron(A.mul, B.mul) @ tensor(identity(A.dim, F), swap(B.dim, A.dim, F), identity(B.dim, F))
    return UnitalMagma(A.dim * B.dim, kron(A.unit, B.unit), mul)


def tensor_comonoid(D: Comonoid, E: Comonoid) -> Comonoid:
    """``delta_{D(x)E} = (D (x) c_{D,E} (x) E) o (delta_D (x) delta_E)``."""
    F = D.field
    comul = tensor(identity(D.dim, F), swap(D.dim, E.dim, F), identity(E.dim, F)) @ kron(D.comul, E.comul)
    return Comonoid(D.dim * E.dim, kron(D.counit, E.counit), comul)
