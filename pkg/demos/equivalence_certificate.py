"""
Strong Hopf modules versus right H_L-modules
============================================

Induction N -> N (x)_{H_L} H and coinvariants M -> M^coH are inverse
equivalences.  On a finite sample we build the unit u and counit v, check
that each component is an isomorphism, and check both triangle identities.
The flagship structure is weak and nonassociative at the same time.
"""

import sys
import time

from weakhopf import certify_equivalence, default_samples, fixture, induce, free_hl_module

name = sys.argv[1] if len(sys.argv) > 1 else "chein-S3"
H = fixture(name)
print(f"{name}: dim {H.dim}, associative={H.is_associative()}, dim H_L={H.left.dim}")

# F(H_L^2) has twice the dimension of H
F = induce(free_hl_module(H, 2))
print("dim F(H_L^2) =", F.dim)

t = time.perf_counter()
hl, hopf, morphisms = default_samples(H)
cert = certify_equivalence(H, hl, hopf, morphisms)
print(f"{len(cert.report.checks)} checks, ok={cert.ok} ({time.perf_counter() - t:.1f}s)")
for c in cert.report.checks:
    if "triangle" in c.label:
        print(" ", c.line())
