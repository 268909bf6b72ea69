"""Regularized alternating sums ``sum_{n>=0} (-1)^n P(n)``.

Everything is driven by ``T(m)``, the regularized value of
``sum (-1)^n C(n, m)``. ``T(0) = 1/2`` is the normalization; the rest follows
from the vanishing of the alternating diagonal sum of ``(a + a†)^(2s)``,
which in the binomial basis reads

    sum_{l=0}^{s} C(s, l) 2^-l T(s - l) = 0,   s >= 1.

Power sums are recovered through ``n^p = sum_m S(p, m) m! C(n, m)``.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Literal, Union

from divsum.boson import (
    NormalOrderedPoly,
    diagonal_part,
    expectation_poly,
    normal_order_power,
    weyl_to_normal,
)
from divsum.exact import bernoulli, stirling2
from divsum.npoly import NPoly

DEFAULT_CAP = 1000


class Method(str, enum.Enum):
    WIGNER = "wigner"
    ABEL_EXACT = "abel-exact"
    EULER = "euler"
    ETA_ORACLE = "eta-oracle"


@dataclass(frozen=True)
class RegularizedValue:
    value: Fraction
    method: Method
    descriptor: Union[int, NPoly]

    def __post_init__(self) -> None:
        if not isinstance(self.value, Fraction):
            raise TypeError("regularized values must be exact Fractions")


@dataclass(frozen=True)
class TSequence:
    values: tuple[Fraction, ...]

    def __getitem__(self, m: int) -> Fraction:
        return self.values[m]

    def __len__(self) -> int:
        return len(self.values)


_t_lock = threading.Lock()
# U(m) = 2^(m+1) T(m); the recursion becomes U(s) = -sum_{l>=1} C(s, l) U(s - l)
_u_values: list[int] = [1]
_pascal_row: list[int] = [1]  # C(len(_u_values) - 1, l)


def _scaled_t(max_m: int) -> list[int]:
    if len(_u_values) <= max_m:
        with _t_lock:
            while len(_u_values) <= max_m:
                s = len(_u_values)
                row = [1] + [a + b for a, b in zip(_pascal_row, _pascal_row[1:])] + [1]
                _pascal_row[:] = row
                _u_values.append(-sum(row[l] * _u_values[s - l] for l in range(1, s + 1)))
    return _u_values[: max_m + 1]


def t_sequence(max_m: int) -> TSequence:
    """``T(0..max_m)`` from the recursion, seeded with ``T(0) = 1/2``."""
    if max_m < 0:
        raise ValueError("max_m must be non-negative")
    return TSequence(tuple(Fraction(u, 2 ** (m + 1)) for m, u in enumerate(_scaled_t(max_m))))


def alt_power_sum(p: int) -> RegularizedValue:
    """Regularized ``sum_{n>=0} (-1)^n n^p`` (with ``0^0 = 1``)."""
    if p < 0:
        raise ValueError("p must be non-negative")
    u = _scaled_t(p)
    numer = sum(stirling2(p, m) * factorial(m) * u[m] * 2 ** (p - m) for m in range(p + 1))
    return RegularizedValue(Fraction(numer, 2 ** (p + 1)), Method.WIGNER, p)


def alt_poly_sum(poly: NPoly) -> RegularizedValue:
    """Regularized ``sum_{n>=0} (-1)^n P(n)``; linear in P."""
    d = poly.to_binomial().coeffs
    u = _scaled_t(max(len(d) - 1, 0))
    top = len(d)
    value = sum((dm * u[m] * 2 ** (top - 1 - m) for m, dm in enumerate(d)), Fraction(0))
    return RegularizedValue(value / 2**top, Method.WIGNER, poly)


def wigner_vanishing_check(
    s: int, path: Literal["commutator", "weyl"] = "commutator"
) -> RegularizedValue:
    """Regularized ``sum (-1)^n <n|(a + a†)^(2s)|n>``, which must be 0.

    ``path="commutator"`` expands the power by brute-force reordering;
    ``path="weyl"`` uses ``C(2s, s)`` times the Weyl-to-normal closed form.
    """
    if s < 1:
        raise ValueError("s must be positive")
    op = diagonal_operator(s, path)
    return alt_poly_sum(expectation_poly(op))


def diagonal_operator(s: int, path: Literal["commutator", "weyl"]) -> NormalOrderedPoly:
    if path == "commutator":
        return diagonal_part(normal_order_power(2 * s))
    if path == "weyl":
        return weyl_to_normal(s).scale(comb(2 * s, s))
    raise ValueError(f"unknown path {path!r}")


def moment_identity(k: int, q: Fraction | int) -> tuple[Fraction, Fraction]:
    """Both sides of ``q^k / 2 = sum_n (-1)^n <n|(q̂ + q)^k|n>``.

    Returns ``(lhs, rhs)`` where lhs is the binomially expanded, regularized
    alternating sum and rhs is ``q^k / 2``. Odd powers of ``a + a†`` have no
    diagonal, so only even s contribute and ``2^(-s/2)`` stays rational.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    q = Fraction(q)
    lhs = Fraction(0)
    for s in range(0, k + 1, 2):
        inner = alt_poly_sum(expectation_poly(normal_order_power(s))).value
        lhs += comb(k, s) * q ** (k - s) * inner / 2 ** (s // 2)
    return lhs, q**k / 2


def eta_oracle(p: int) -> RegularizedValue:
    """``sum_{n>=0} (-1)^n n^p`` from Bernoulli numbers (Dirichlet eta at -p)."""
    if p < 0:
        raise ValueError("p must be non-negative")
    if p == 0:
        value = Fraction(1, 2)
    else:
        value = (2 ** (p + 1) - 1) * (-1) ** p * bernoulli(p + 1) / (p + 1)
    return RegularizedValue(value, Method.ETA_ORACLE, p)
