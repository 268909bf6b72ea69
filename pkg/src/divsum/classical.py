"""Abel, Euler and Cesàro summation, exact where the summand is a polynomial."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

import numpy as np

from divsum.npoly import NPoly, forward_differences, scaled_values
from divsum.resum import Method, RegularizedValue


@dataclass(frozen=True)
class TermStream:
    generator: Callable[[int], float]
    description: str = ""
    # polynomial growth degree of |a_n|; used to size Abel truncations
    growth: int = 0

    def __call__(self, n: int) -> float:
        return float(self.generator(n))

    def terms(self, n_max: int) -> np.ndarray:
        return np.fromiter((self(n) for n in range(n_max + 1)), dtype=float, count=n_max + 1)


@dataclass(frozen=True)
class VerificationReport:
    method: str
    parameters: dict[str, Any] = field(default_factory=dict)
    target: float = 0.0
    computed: float = 0.0
    tolerance: float = 0.0

    @property
    def passed(self) -> bool:
        return abs(self.computed - self.target) <= self.tolerance


def _alt(n: int) -> int:
    return -1 if n % 2 else 1


# name -> (stream, regularized value of the full series)
SERIES: dict[str, tuple[TermStream, Fraction]] = {
    "alternating-ones": (TermStream(_alt, "1 - 1 + 1 - 1 + ...", 0), Fraction(1, 2)),
    "alternating-n": (TermStream(lambda n: _alt(n) * n, "0 - 1 + 2 - 3 + ...", 1), Fraction(-1, 4)),
    "alternating-n-plus-1": (
        TermStream(lambda n: _alt(n) * (n + 1), "1 - 2 + 3 - 4 + ...", 1),
        Fraction(1, 4),
    ),
    "alternating-squares": (TermStream(lambda n: _alt(n) * n * n, "0 - 1 + 4 - 9 + ...", 2), Fraction(0)),
    "geometric-half": (TermStream(lambda n: 0.5**n, "1 + 1/2 + 1/4 + ...", 0), Fraction(2)),
    "unit": (TermStream(lambda n: 1.0 if n == 0 else 0.0, "1 + 0 + 0 + ...", 0), Fraction(1)),
}


def abel_exact_poly(poly: NPoly, x: Fraction | int) -> Fraction:
    """Exact ``sum_{n>=0} (-x)^n P(n)`` for ``0 <= x < 1``."""
    x = Fraction(x)
    if not 0 <= x < 1:
        raise ValueError("x must satisfy 0 <= x < 1")
    total = Fraction(0)
    for m, d in enumerate(poly.to_binomial().coeffs):
        if d:
            total += d * (-x) ** m / (1 + x) ** (m + 1)
    return total


def abel_limit_exact(poly: NPoly) -> RegularizedValue:
    """The ``x -> 1`` limit of :func:`abel_exact_poly`."""
    d = poly.to_binomial().coeffs
    top = len(d)
    numer = sum(((-1) ** m * dm * 2 ** (top - 1 - m) for m, dm in enumerate(d)), Fraction(0))
    return RegularizedValue(numer / 2**top, Method.ABEL_EXACT, poly)


def euler_exact_poly(poly: NPoly) -> RegularizedValue:
    """Euler transform ``sum_k (-1)^k (Δ^k P)(0) / 2^(k+1)``.

    Differences come from a table of sampled values, so the sum terminates
    after ``deg P + 1`` terms.
    """
    mono = poly.to_monomial()
    values, scale = scaled_values(mono.coeffs, mono.degree + 1)
    diffs = forward_differences(values)
    # common denominator 2^(d+1)
    top = len(diffs)
    numer = sum((-1) ** k * dk * 2 ** (top - 1 - k) for k, dk in enumerate(diffs))
    return RegularizedValue(Fraction(numer, scale * 2**top), Method.EULER, poly)


def abel_numeric(ts: TermStream, x: float, n_max: int) -> float:
    """``sum_{n=0}^{n_max} a_n x^n`` in double precision."""
    if not 0 < x < 1:
        raise ValueError("x must lie in (0, 1)")
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    weights = x ** np.arange(n_max + 1, dtype=float)
    return math.fsum(ts.terms(n_max) * weights)


def cesaro_numeric(ts: TermStream, order: int, n_max: int) -> float:
    """Iterated arithmetic means of the partial sums, ``order`` times."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    h = np.cumsum(ts.terms(n_max))
    counts = np.arange(1, n_max + 2, dtype=float)
    for _ in range(order):
        h = np.cumsum(h) / counts
    return float(h[-1])


def abel_terms_needed(x: float, growth: int, tolerance: float) -> int:
    """Smallest ``N`` with ``x^N (N+1)^growth / (1-x) < tolerance / 10``."""
    if not 0 < x < 1:
        raise ValueError("x must lie in (0, 1)")
    bound = tolerance / 10
    n = 1
    while x**n * (n + 1) ** growth / (1 - x) >= bound:
        n *= 2
    lo, hi = n // 2, n
    while lo < hi:
        mid = (lo + hi) // 2
        if x**mid * (mid + 1) ** growth / (1 - x) < bound:
            hi = mid
        else:
            lo = mid + 1
    return hi
