"""Polynomials in the Fock index ``n`` with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm
from typing import Iterable, Literal, Union

Basis = Literal["monomial", "binomial"]
Scalar = Union[int, Fraction]


def _trim(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def scaled_values(coeffs: tuple[Fraction, ...], count: int) -> tuple[list[int], int]:
    """Values of a monomial-basis polynomial at ``n = 0..count-1``, times a
    common denominator ``L``. Returns ``(values, L)``; integer arithmetic only."""
    scale = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    ints = [c.numerator * (scale // c.denominator) for c in coeffs]
    terms = [(i, c) for i, c in enumerate(ints) if c]
    if len(terms) * 3 < len(ints):
        values = [sum(c * n**i for i, c in terms) for n in range(count)]
        return values, scale
    values = []
    for n in range(count):
        acc = 0
        for c in reversed(ints):
            acc = acc * n + c
        values.append(acc)
    return values, scale


def forward_differences(values: list[int]) -> list[int]:
    """``[Δ^0 v(0), Δ^1 v(0), ...]``."""
    row = list(values)
    out = []
    while row:
        out.append(row[0])
        for i in range(len(row) - 1):
            row[i] = row[i + 1] - row[i]
        row.pop()
    return out


def _falling_coeffs(m: int) -> list[int]:
    # monomial coefficients of n(n-1)...(n-m+1)
    coeffs = [1]
    for i in range(m):
        nxt = [0] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            nxt[j + 1] += c
            nxt[j] -= i * c
        coeffs = nxt
    return coeffs


@dataclass(frozen=True)
class NPoly:
    """A polynomial ``P(n)``.

    In the ``monomial`` basis ``coeffs[i]`` multiplies ``n**i``; in the
    ``binomial`` basis it multiplies ``C(n, i)``. Trailing zeros are stripped,
    so the zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple[Fraction, ...] = ()
    basis: Basis = "monomial"

    def __post_init__(self) -> None:
        if self.basis not in ("monomial", "binomial"):
            raise ValueError(f"unknown basis {self.basis!r}")
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def monomial(cls, p: int, coeff: Scalar = 1) -> NPoly:
        """``coeff * n**p``."""
        if p < 0:
            raise ValueError("power must be non-negative")
        return cls((0,) * p + (coeff,))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar], basis: Basis = "monomial") -> NPoly:
        return cls(tuple(Fraction(c) for c in coeffs), basis)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, n: Scalar) -> Fraction:
        if self.basis == "monomial":
            acc = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * n + c
            return acc
        if isinstance(n, int) and n >= 0:
            return sum((c * comb(n, m) for m, c in enumerate(self.coeffs)), Fraction(0))
        return self.to_monomial()(n)

    def to_binomial(self) -> NPoly:
        """Re-express as ``sum_m d_m C(n, m)`` with ``d_m`` the m-th forward difference at 0."""
        if self.basis == "binomial":
            return self
        values, scale = scaled_values(self.coeffs, len(self.coeffs))
        return NPoly(tuple(Fraction(d, scale) for d in forward_differences(values)), "binomial")

    def to_monomial(self) -> NPoly:
        if self.basis == "monomial":
            return self
        out = [Fraction(0)] * len(self.coeffs)
        fact = 1
        for m, d in enumerate(self.coeffs):
            if m:
                fact *= m
            if d:
                for i, c in enumerate(_falling_coeffs(m)):
                    out[i] += d * c / fact
        return NPoly(tuple(out), "monomial")

    def _aligned(self, other: NPoly) -> NPoly:
        return other.to_binomial() if self.basis == "binomial" else other.to_monomial()

    def __add__(self, other: NPoly) -> NPoly:
        if not isinstance(other, NPoly):
            return NotImplemented
        other = self._aligned(other)
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (size - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (size - len(other.coeffs))
        return NPoly(tuple(x + y for x, y in zip(a, b)), self.basis)

    def __neg__(self) -> NPoly:
        return NPoly(tuple(-c for c in self.coeffs), self.basis)

    def __sub__(self, other: NPoly) -> NPoly:
        if not isinstance(other, NPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Scalar) -> NPoly:
        return NPoly(tuple(c * factor for c in self.coeffs), self.basis)

    def __eq__(self, other: object) -> bool:
        # equality is basis-independent
        if not isinstance(other, NPoly):
            return NotImplemented
        return self.to_monomial().coeffs == other.to_monomial().coeffs

    def __hash__(self) -> int:
        return hash(self.to_monomial().coeffs)

    def describe(self) -> str:
        """Short human-readable form, e.g. ``2n + 1``."""
        mono = self.to_monomial()
        if mono.is_zero():
            return "0"
        parts = []
        for i in range(mono.degree, -1, -1):
            c = mono.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            var = "" if i == 0 else ("n" if i == 1 else f"n^{i}")
            body = str(mag) if (mag != 1 or not var) else ""
            if body and var and mag.denominator != 1:
                body = f"({body})"
            parts.append((sign, body + var))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text
