"""Exact arithmetic for three families of CM newform coefficients, the
binomial-sum sequences congruent to them at prime powers, and a verification
harness tying the two together.

Everything is integer-exact: coefficients come from quadratic-ring power
sums, checked against independent ideal-sum and eta-product constructions,
and every congruence check returns a serializable pass/fail report.
"""

from .apery import (
    IntegerSequence,
    MonicTriple,
    RecurrenceTriple,
    apery_a,
    apery_b,
    fit_monic_triple,
    fit_triple,
    monic_recurrence_check,
    recurrence_check,
    seq_c,
    seq_d,
    sequence,
    sequence_value_mod,
    u_m,
    u_m_mod,
)
from .coeffs import (
    Family,
    FamilyTag,
    alpha_prime,
    beta_prime,
    extend_coefficients,
    gamma_prime,
    nebentypus,
)
from .congruence import THEOREM_IDS, CongruenceReport
from .etaser import PowerSeries, alpha_from_eta, eta_product_h
from .hecke import (
    ConductorCase,
    HeckeCharSpec,
    QExpansion,
    enumerate_ideals,
    phi_eval,
    q_expansion_ideal_sum,
)
from .primerep import NotRepresentable, PrimeRep, rep_m1, rep_m2, rep_m3
from .quadint import QuadInt, Ring, canonical_associate, units

__all__ = [
    "CongruenceReport",
    "ConductorCase",
    "Family",
    "FamilyTag",
    "HeckeCharSpec",
    "IntegerSequence",
    "MonicTriple",
    "NotRepresentable",
    "PowerSeries",
    "PrimeRep",
    "QExpansion",
    "QuadInt",
    "RecurrenceTriple",
    "Ring",
    "THEOREM_IDS",
    "alpha_from_eta",
    "alpha_prime",
    "apery_a",
    "apery_b",
    "beta_prime",
    "canonical_associate",
    "enumerate_ideals",
    "eta_product_h",
    "extend_coefficients",
    "fit_monic_triple",
    "fit_triple",
    "gamma_prime",
    "monic_recurrence_check",
    "nebentypus",
    "phi_eval",
    "q_expansion_ideal_sum",
    "recurrence_check",
    "rep_m1",
    "rep_m2",
    "rep_m3",
    "seq_c",
    "seq_d",
    "sequence",
    "sequence_value_mod",
    "u_m",
    "u_m_mod",
    "units",
]

__version__ = "0.1.0"
