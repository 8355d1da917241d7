"""
The fundamental theorem of Hopf modules
=======================================

Every Hopf module M is isomorphic to M^coH x H, the image of an idempotent
on M^coH (x) H.  Here the isomorphism alpha is built and certified on a
Hopf module written in a random basis.
"""

from weakhopf import fixture, fundamental_theorem
from weakhopf.generators import random_hopf_module

H = fixture("pair-2")
M = random_hopf_module(H, seed=42)

co = M.coinvariants
print("dim M =", M.dim, " dim M^coH =", co.dim)

iso = fundamental_theorem(M)
print(iso.text())

# alpha is quasilinear for the twisted action phi^alpha, which equals phi here
print("phi^alpha == phi:", M.phi_alpha == M.action)
