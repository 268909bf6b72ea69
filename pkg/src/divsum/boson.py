"""Single-mode boson algebra in normal-ordered form.

An operator is stored as ``{(j, k): c}`` meaning ``sum c * a†^j a^k``. Normal
ordering is a normal form for ``[a, a†] = 1``, so two operators are equal iff
their term maps are equal.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from types import MappingProxyType
from typing import Mapping

from divsum.exact import falling_factorial_poly
from divsum.npoly import NPoly

Term = tuple[int, int]


@dataclass(frozen=True)
class NormalOrderedPoly:
    terms: Mapping[Term, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for (j, k), c in self.terms.items():
            if j < 0 or k < 0:
                raise ValueError(f"negative power in term {(j, k)}")
            c = Fraction(c)
            if c:
                clean[(j, k)] = c
        object.__setattr__(self, "terms", MappingProxyType(dict(sorted(clean.items()))))

    @classmethod
    def identity(cls) -> NormalOrderedPoly:
        return cls({(0, 0): 1})

    @classmethod
    def creation(cls) -> NormalOrderedPoly:
        return cls({(1, 0): 1})

    @classmethod
    def annihilation(cls) -> NormalOrderedPoly:
        return cls({(0, 1): 1})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NormalOrderedPoly):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __add__(self, other: NormalOrderedPoly) -> NormalOrderedPoly:
        out: dict[Term, Fraction] = defaultdict(Fraction, self.terms)
        for t, c in other.terms.items():
            out[t] += c
        return NormalOrderedPoly(out)

    def scale(self, factor: int | Fraction) -> NormalOrderedPoly:
        return NormalOrderedPoly({t: c * factor for t, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def left_mul_ladder_sum(self) -> NormalOrderedPoly:
        """``(a + a†) * self``, using ``a a†^j = a†^j a + j a†^(j-1)``."""
        out: dict[Term, Fraction] = defaultdict(Fraction)
        for (j, k), c in self.terms.items():
            out[(j + 1, k)] += c
            out[(j, k + 1)] += c
            if j:
                out[(j - 1, k)] += j * c
        return NormalOrderedPoly(out)

    def __repr__(self) -> str:
        body = ", ".join(f"{t}: {c}" for t, c in self.terms.items())
        return f"NormalOrderedPoly({{{body}}})"


def normal_order_power(m: int) -> NormalOrderedPoly:
    """Normal-ordered expansion of ``(a + a†)^m``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    op = NormalOrderedPoly.identity()
    for _ in range(m):
        op = op.left_mul_ladder_sum()
    return op


def weyl_to_normal(m: int) -> NormalOrderedPoly:
    """Normal form of the Weyl-symmetrized ``(a† a)^m``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return NormalOrderedPoly(
        {
            (m - l, m - l): Fraction(factorial(l) * comb(m, l) ** 2, 2**l)
            for l in range(m + 1)
        }
    )


def diagonal_part(p: NormalOrderedPoly) -> NormalOrderedPoly:
    """Keep only the number-conserving terms ``a†^m a^m``."""
    return NormalOrderedPoly({(j, k): c for (j, k), c in p.terms.items() if j == k})


def expectation_poly(p: NormalOrderedPoly) -> NPoly:
    """``<n|p|n>`` as a monomial-basis polynomial in n."""
    acc = NPoly()
    for (j, k), c in p.terms.items():
        if j == k:
            acc = acc + falling_factorial_poly(j).scale(c)
    return acc


def monomial_to_binomial_basis(p: NPoly) -> NPoly:
    if p.basis != "monomial":
        raise ValueError("expected a monomial-basis polynomial")
    return p.to_binomial()


def binomial_to_monomial_basis(p: NPoly) -> NPoly:
    if p.basis != "binomial":
        raise ValueError("expected a binomial-basis polynomial")
    return p.to_monomial()
