"""Numeric witnesses on a truncated Fock space.

The ``(N+1)``-dimensional matrix of ``a + a†`` is exact, but its m-th power is
only trusted on indices ``<= N - m``: paths that would leave the truncated
space are cut off. Alternating sums are regulated by ``x^n`` and truncated at
that margin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import numpy as np
import scipy.sparse as sp

from divsum.boson import expectation_poly, normal_order_power
from divsum.classical import VerificationReport, abel_exact_poly
from divsum.npoly import NPoly

# above this dimension powers are taken in sparse banded form
DENSE_LIMIT = 1500


@dataclass(frozen=True)
class TruncatedOperator:
    entries: Union[np.ndarray, sp.csr_matrix]

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]

    @property
    def is_sparse(self) -> bool:
        return sp.issparse(self.entries)

    def dense(self) -> np.ndarray:
        return self.entries.toarray() if self.is_sparse else np.asarray(self.entries)

    def power(self, m: int) -> TruncatedOperator:
        if m < 0:
            raise ValueError("power must be non-negative")
        if not self.is_sparse:
            return TruncatedOperator(np.linalg.matrix_power(self.entries, m))
        out = sp.identity(self.dimension, format="csr")
        for _ in range(m):
            out = (self.entries @ out).tocsr()
        return TruncatedOperator(out)

    def shifted(self, q: float) -> TruncatedOperator:
        """``self + q * I``."""
        if self.is_sparse:
            return TruncatedOperator((self.entries + q * sp.identity(self.dimension)).tocsr())
        return TruncatedOperator(self.entries + q * np.eye(self.dimension))

    def scaled(self, factor: float) -> TruncatedOperator:
        return TruncatedOperator(self.entries * factor)

    def diagonal(self) -> np.ndarray:
        return np.asarray(self.entries.diagonal(), dtype=float)


def build_ladder_sum(N: int, sparse: Optional[bool] = None) -> TruncatedOperator:
    """Matrix of ``a + a†`` on ``|0>, ..., |N>``."""
    if N < 1:
        raise ValueError("N must be >= 1")
    off = np.sqrt(np.arange(1, N + 1, dtype=float))
    if sparse is None:
        sparse = N + 1 > DENSE_LIMIT
    if sparse:
        return TruncatedOperator(sp.diags([off, off], [-1, 1], format="csr"))
    return TruncatedOperator(np.diag(off, 1) + np.diag(off, -1))


def _check_margin(N: int, power: int, cutoff: int) -> None:
    if cutoff < 0:
        raise ValueError("summation cutoff must be non-negative")
    if cutoff > N - power:
        raise ValueError(
            f"truncation N={N} too small: power {power} needs N >= {cutoff + power} "
            f"to sum {cutoff + 1} terms"
        )


def _regulated(diag: np.ndarray, x: float, cutoff: int) -> float:
    n = np.arange(cutoff + 1, dtype=float)
    weights = np.where(n % 2 == 0, 1.0, -1.0) * x**n
    return math.fsum(diag[: cutoff + 1] * weights)


def regulated_vanishing_sum(
    s: int,
    N: int,
    x: float,
    tolerance: float = 0.1,
    cutoff: Optional[int] = None,
) -> VerificationReport:
    """``sum_{n<=cutoff} (-x)^n <n|(a + a†)^(2s)|n>`` from matrix powers.

    ``cutoff`` defaults to the trusted margin ``N - 2s``. The report's
    parameters carry ``abel_exact``, the exact value of the untruncated
    regulated series at the same ``x``.
    """
    if s < 1:
        raise ValueError("s must be positive")
    if not 0 < x < 1:
        raise ValueError("x must lie in (0, 1)")
    if cutoff is None:
        cutoff = N - 2 * s
    _check_margin(N, 2 * s, cutoff)
    diag = build_ladder_sum(N).power(2 * s).diagonal()
    computed = _regulated(diag, x, cutoff)
    exact = abel_exact_poly(expectation_poly(normal_order_power(2 * s)), Fraction(x))
    return VerificationReport(
        method="fock-vanishing",
        parameters={"s": s, "N": N, "x": x, "cutoff": cutoff, "abel_exact": float(exact)},
        target=0.0,
        computed=computed,
        tolerance=tolerance,
    )


@dataclass(frozen=True)
class MomentQuery:
    k: int
    q: float
    x: float
    N: int
    cutoff: Optional[int] = None

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("k must be non-negative")
        if not 0 < self.x < 1:
            raise ValueError("x must lie in (0, 1)")
        if self.N < 1:
            raise ValueError("N must be >= 1")
        _check_margin(self.N, self.k, self.terms_cutoff)

    @property
    def terms_cutoff(self) -> int:
        return self.N - self.k if self.cutoff is None else self.cutoff


def moment_poly(k: int, q: Fraction) -> NPoly:
    """``<n|(q̂ + q)^k|n>`` as a polynomial in n, with ``q̂ = (a + a†)/sqrt 2``."""
    acc = NPoly()
    for s in range(0, k + 1, 2):
        diag = expectation_poly(normal_order_power(s))
        acc = acc + diag.scale(Fraction(math.comb(k, s)) * q ** (k - s) / 2 ** (s // 2))
    return acc


def regulated_moment_sum(mq: MomentQuery, tolerance: float = 0.1) -> VerificationReport:
    """``sum_n (-x)^n <n|(Q + q)^k|n>`` with ``Q = (a + a†)/sqrt 2``; target ``q^k / 2``."""
    op = build_ladder_sum(mq.N).scaled(1 / math.sqrt(2)).shifted(mq.q).power(mq.k)
    cutoff = mq.terms_cutoff
    computed = _regulated(op.diagonal(), mq.x, cutoff)
    exact = abel_exact_poly(moment_poly(mq.k, Fraction(mq.q)), Fraction(mq.x))
    return VerificationReport(
        method="fock-moment",
        parameters={
            "k": mq.k,
            "q": mq.q,
            "N": mq.N,
            "x": mq.x,
            "cutoff": cutoff,
            "abel_exact": float(exact),
        },
        target=mq.q**mq.k / 2,
        computed=computed,
        tolerance=tolerance,
    )
