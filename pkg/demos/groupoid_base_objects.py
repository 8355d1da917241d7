"""
Weak examples and their base objects
====================================

Groupoid algebras are associative but genuinely weak: delta(1) is not 1 (x) 1
and H_L is larger than the ground field.  H_L is a separable Frobenius
monoid, witnessed by its Casimir element.
"""

from weakhopf import fixture
from weakhopf.exactlin import identity, kron

for name in ["discrete-3", "pair-2"]:
    H = fixture(name)
    B = H.left
    print(f"{name}: dim H = {H.dim}, dim H_L = {B.dim}, dim H_R = {H.right.dim}")

    # i o p recovers the target morphism, p o i is the identity
    print("  i o p == Pi^L:", B.i @ B.p == H.projections.piL)

    # mu o q = eta, and the Frobenius law
    q = B.casimir
    I = identity(B.dim, H.field)
    print("  mu o q == eta:", B.mul @ q == B.unit)
    print("  Frobenius:", kron(I, B.counit) @ q == B.unit == kron(B.counit, I) @ q)
