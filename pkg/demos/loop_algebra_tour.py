"""
A nonassociative Hopf quasigroup
================================

The Chein double of S3 is a Moufang loop of order 12.  Its loop algebra
satisfies every weak Hopf quasigroup axiom even though the product is not
associative, and the base object H_L collapses to the scalars.
"""

from weakhopf import check_axioms, fixture, identity_suite

H = fixture("chein-S3")
print(H)

# every axiom holds exactly
print(check_axioms(H).text())

# ... yet associativity fails on some basis triple
print("associator witness:", H.magma.associator_witness())

# target and source morphisms are both eta o epsilon here
P = H.projections
print("Pi^L == eta o epsilon:", P.piL == H.unit @ H.counit)
print("dim H_L =", H.left.dim)

# the derived identities follow from the axioms; none fail
suite = identity_suite(H)
print(len(suite.checks), "derived identities, failures:", suite.failures)
