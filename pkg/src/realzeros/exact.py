"""Exact scalar helpers and fraction-free determinants.

Everything here works over any exact commutative domain whose elements
support ``+``, ``-``, ``*`` and comparison with ``0``: Python ints,
``fractions.Fraction`` and :class:`realzeros.poly.MultiPoly`.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


def normalize(x):
    """Collapse a Fraction with unit denominator to an int."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def to_exact(value) -> int | Fraction:
    """Parse ``value`` into an int or Fraction.

    Accepts ints, Fractions and strings like ``"-3/4"`` or ``"7"``.
    Floats are refused so nothing inexact sneaks into the core.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not exact scalars")
    if isinstance(value, (int, Fraction)):
        return normalize(Fraction(value))
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE_ "):
            raise ValueError(f"malformed rational: {value!r}")
        return normalize(Fraction(text))
    raise TypeError(f"cannot convert {type(value).__name__} to an exact scalar")


def exact_div(a, b):
    """Divide ``a`` by ``b`` where the quotient is known to exist in the domain."""
    if hasattr(a, "exact_div"):
        return a.exact_div(b)
    if hasattr(b, "exact_div"):
        # scalar numerator over a polynomial divisor: only constants divide
        if b.is_constant():
            return exact_div(a, b.constant_term())
        raise ArithmeticError("scalar is not divisible by a non-constant polynomial")
    if b == 0:
        raise ZeroDivisionError("exact division by zero")
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    return normalize(Fraction(a) / Fraction(b))


def binomial(a: int, b: int) -> int:
    """C(a, b), with 0 for any out-of-range argument."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def falling_factorial(x, j: int):
    """(x)_j = x (x-1) ... (x-j+1); works for scalars and polynomials."""
    if j < 0:
        raise ValueError("falling factorial needs j >= 0")
    out = 1
    for i in range(j):
        out = out * (x - i)
    return out


def _is_zero(x) -> bool:
    return x == 0


def det_cofactor(m):
    """Determinant by Laplace expansion along the first row."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    for j in range(n):
        if _is_zero(m[0][j]):
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _check_square(m):
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ValueError(f"matrix is not square: {n} rows, a row of length {len(row)}")
    return n


def det_fraction_free(m):
    """Exact determinant by Bareiss elimination.

    Every intermediate quotient is exact, so polynomial entries stay
    polynomials and integer entries stay integers. Matrices of size 3 or
    less go through cofactor expansion instead.
    """
    n = _check_square(m)
    if n <= 3:
        return det_cofactor([list(row) for row in m])
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if _is_zero(a[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(a[i][k]):
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * pivot - a[i][k] * a[k][j]
                a[i][j] = num if prev == 1 else exact_div(num, prev)
            a[i][k] = 0
        prev = pivot
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def leading_minors(m) -> list:
    """(Delta_0 = 1, Delta_1, ..., Delta_size) of a square matrix."""
    n = _check_square(m)
    return [1] + [det_fraction_free([row[:k] for row in m[:k]]) for k in range(1, n + 1)]
