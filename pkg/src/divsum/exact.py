"""Exact rational helpers and memoized combinatorial tables.

Rationals are plain :class:`fractions.Fraction` values, which are always kept
in lowest terms with a positive denominator.
"""

from __future__ import annotations

import threading
from decimal import Context, Decimal
from fractions import Fraction
from math import comb, lcm

from divsum.npoly import NPoly, _falling_coeffs

Rational = Fraction

_lock = threading.Lock()
_stirling_rows: list[list[int]] = [[1]]
_bernoulli: list[Fraction] = [Fraction(1)]
_bernoulli_den = [1]  # running lcm of the denominators in _bernoulli
_bernoulli_pascal = [1, 1]  # row len(_bernoulli) of Pascal's triangle


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def falling_factorial_poly(m: int) -> NPoly:
    """``n(n-1)...(n-m+1)`` as a polynomial in n (the diagonal of a†^m a^m)."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return NPoly.from_coeffs(_falling_coeffs(m))


def stirling2(p: int, m: int) -> int:
    """Stirling number of the second kind S(p, m)."""
    if p < 0 or m < 0:
        raise ValueError("arguments must be non-negative")
    if m > p:
        return 0
    if p >= len(_stirling_rows):
        with _lock:
            while len(_stirling_rows) <= p:
                prev = _stirling_rows[-1]
                k = len(prev)
                row = [0] * (k + 1)
                for j in range(1, k + 1):
                    row[j] = (j * prev[j] if j < k else 0) + prev[j - 1]
                _stirling_rows.append(row)
    return _stirling_rows[p][m]


def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m with B_1 = -1/2."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if m >= len(_bernoulli):
        with _lock:
            while len(_bernoulli) <= m:
                k = len(_bernoulli)
                den = _bernoulli_den[0]
                # C(k + 1, j) for j = 0..k
                row = _bernoulli_pascal
                row[:] = [1] + [a + b for a, b in zip(row, row[1:])] + [1]
                acc = sum(
                    row[j] * b.numerator * (den // b.denominator)
                    for j, b in enumerate(_bernoulli)
                    if b
                )
                b_k = Fraction(-acc, den * (k + 1))
                _bernoulli_den[0] = lcm(den, b_k.denominator)
                _bernoulli.append(b_k)
    return _bernoulli[m]


def format_rational(r: Fraction) -> str:
    """Lowest-terms ``p/q``, or ``p`` when q = 1."""
    r = Fraction(r)
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``a/b`` or an integer. Decimal notation is rejected to stay exact."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


_DEC = Context(prec=15)


def format_decimal(r: Fraction | float, digits: int = 15) -> str:
    """Deterministic decimal rendering with ``digits`` significant digits.

    Mirrors ``format(x, '.15g')`` but works on rationals far outside the
    double range.
    """
    ctx = _DEC if digits == 15 else Context(prec=digits)
    if isinstance(r, float):
        d = ctx.create_decimal_from_float(r)
    else:
        r = Fraction(r)
        d = ctx.divide(Decimal(r.numerator), Decimal(r.denominator))
    if d.is_zero():
        return "0"
    d = d.normalize(ctx)
    exp = d.adjusted()
    if -4 <= exp < digits:
        return format(d, "f")
    mant, _, e = format(d, "e").partition("e")
    return f"{mant}e{int(e):+03d}"
