"""Weak Hopf quasigroups and their Hopf modules, checked with exact linear algebra."""

from .exactlin import GF, QQ, Mor, PrimeField, coequalizer, equalizer, split_idempotent
from .generators import (chein_double, cyclic_group, discrete_groupoid, fixture, group_algebra,
                         groupoid_algebra, loop_algebra, pair_groupoid, symmetric_group,
                         tensor_whq)
from .hopfmod import (HopfModule, check_hopf_module, fundamental_theorem, is_strong,
                      regular_hopf_module)
from .modcat import (RightHLModule, certify_equivalence, coinv_functor, default_samples,
                     free_hl_module, induce)
from .report import LawFailure, Report
from .structures import Comonoid, UnitalMagma
from .whq import AxiomViolation, WeakHopfQuasigroup, check_axioms, identity_suite

__all__ = [
    "GF", "QQ", "Mor", "PrimeField", "coequalizer", "equalizer", "split_idempotent",
    "chein_double", "cyclic_group", "discrete_groupoid", "fixture", "group_algebra",
    "groupoid_algebra", "loop_algebra", "pair_groupoid", "symmetric_group", "tensor_whq",
    "HopfModule", "check_hopf_module", "fundamental_theorem", "is_strong", "regular_hopf_module",
    "RightHLModule", "certify_equivalence", "coinv_functor", "default_samples", "free_hl_module",
    "induce", "LawFailure", "Report", "Comonoid", "UnitalMagma", "AxiomViolation",
    "WeakHopfQuasigroup", "check_axioms", "identity_suite",
]
