"""Exact regularized values of divergent alternating series."""

from divsum.boson import (
    NormalOrderedPoly,
    diagonal_part,
    expectation_poly,
    monomial_to_binomial_basis,
    normal_order_power,
    weyl_to_normal,
)
from divsum.classical import (
    TermStream,
    VerificationReport,
    abel_exact_poly,
    abel_limit_exact,
    abel_numeric,
    cesaro_numeric,
    euler_exact_poly,
)
from divsum.exact import bernoulli, binomial, falling_factorial_poly, stirling2
from divsum.npoly import NPoly
from divsum.resum import (
    Method,
    RegularizedValue,
    TSequence,
    alt_poly_sum,
    alt_power_sum,
    eta_oracle,
    moment_identity,
    t_sequence,
    wigner_vanishing_check,
)

__all__ = [
    "Method",
    "NPoly",
    "NormalOrderedPoly",
    "RegularizedValue",
    "TSequence",
    "TermStream",
    "VerificationReport",
    "abel_exact_poly",
    "abel_limit_exact",
    "abel_numeric",
    "alt_poly_sum",
    "alt_power_sum",
    "bernoulli",
    "binomial",
    "cesaro_numeric",
    "diagonal_part",
    "eta_oracle",
    "euler_exact_poly",
    "expectation_poly",
    "falling_factorial_poly",
    "moment_identity",
    "monomial_to_binomial_basis",
    "normal_order_power",
    "stirling2",
    "t_sequence",
    "weyl_to_normal",
    "wigner_vanishing_check",
]
