"""Symmetric-function constructors in the ring Q[z_1, ..., z_n].

Indices of variables are 1-based throughout this module (z_1 is the first
variable), matching the usual notation for roots of a degree-n polynomial.
"""

from __future__ import annotations

from itertools import combinations, permutations
from math import factorial

from .exact import det_fraction_free
from .poly import MultiPoly


class EmptyDomainError(ValueError):
    """Raised when a sum over tuples of distinct indices has no index set to range over."""


def z(i: int, n: int) -> MultiPoly:
    """The variable z_i of Q[z_1..z_n]."""
    return MultiPoly.var(i - 1, n)


def elementary(k: int, n: int) -> MultiPoly:
    """e_k(z_1..z_n); e_0 = 1 and e_k = 0 outside 0..n."""
    if n < 1:
        raise ValueError("need at least one variable")
    if k < 0 or k > n:
        return MultiPoly(n)
    terms = {}
    for idx in combinations(range(n), k):
        exp = [0] * n
        for i in idx:
            exp[i] = 1
        terms[tuple(exp)] = 1
    return MultiPoly._raw(n, terms)


def power_sum(k: int, n: int) -> MultiPoly:
    """p_k = sum z_i^k; p_0 = n."""
    if n < 1:
        raise ValueError("need at least one variable")
    if k < 0:
        raise ValueError("power sums are defined for k >= 0")
    if k == 0:
        return MultiPoly.constant(n, n)
    return MultiPoly._raw(n, {tuple(k if j == i else 0 for j in range(n)): 1 for i in range(n)})


def _ordered_tuple_sum(d, n, avail) -> MultiPoly:
    terms = {}
    for b in permutations(avail, len(d)):
        exp = [0] * n
        for idx, power in zip(b, d):
            exp[idx - 1] += power
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + 1
    return MultiPoly._raw(n, terms)


def monomial_fn(d, n: int) -> MultiPoly:
    """Sum over ordered tuples b of distinct indices of prod z_{b_i}^{d_i}.

    Zero exponents still consume an index, so ``monomial_fn((2, 0), 3)``
    is 2*p_2, not p_2.
    """
    d = tuple(d)
    if len(d) > n:
        raise EmptyDomainError(f"{len(d)} distinct indices requested from only {n}")
    return _ordered_tuple_sum(d, n, range(1, n + 1))


def monomial2(m2: int, m1: int, n: int) -> MultiPoly:
    """monomial((2,)*m2 + (1,)*m1, n) / (m2! m1!), an exact quotient."""
    if m2 + m1 > n:
        raise EmptyDomainError(f"m2 + m1 = {m2 + m1} exceeds n = {n}")
    return monomial_fn((2,) * m2 + (1,) * m1, n).exact_div(factorial(m2) * factorial(m1))


def elementary_incomplete(k: int, excluded, n: int) -> MultiPoly:
    """e_k with the variables in ``excluded`` set to zero."""
    excluded = tuple(excluded)
    for i in excluded:
        if not 1 <= i <= n:
            raise IndexError(f"index {i} outside 1..{n}")
    return elementary(k, n).zero_vars([i - 1 for i in excluded])


def monomial_incomplete(d, i: int, j: int, n: int) -> MultiPoly:
    """monomial_fn restricted to tuples that avoid the indices i and j."""
    if i == j:
        raise ValueError("the two excluded indices must differ")
    d = tuple(d)
    if len(d) > n - 2:
        raise EmptyDomainError(f"{len(d)} distinct indices requested from only {n - 2}")
    avail = [t for t in range(1, n + 1) if t not in (i, j)]
    return _ordered_tuple_sum(d, n, avail)


def vandermonde_D(xs) -> MultiPoly:
    """prod_{a<b} (x_b - x_a); 1 for a single variable."""
    xs = list(xs)
    if not xs:
        raise ValueError("need at least one variable")
    out = xs[0] * 0 + 1
    for a in range(len(xs)):
        for b in range(a + 1, len(xs)):
            out = out * (xs[b] - xs[a])
    return out


def vandermonde_matrix(xs, lam):
    """Matrix with entry (i, j) = xs[j] ** lam[i]."""
    return [[x ** e for x in xs] for e in lam]


def schur(xs, lam) -> MultiPoly:
    """det V(xs; lam) / D(xs) for strictly increasing lam."""
    xs = list(xs)
    lam = tuple(lam)
    if len(lam) != len(xs):
        raise ValueError("lambda must have one part per variable")
    if any(a >= b for a, b in zip(lam, lam[1:])) or (lam and lam[0] < 0):
        raise ValueError(f"lambda must be strictly increasing and nonnegative: {lam}")
    num = det_fraction_free(vandermonde_matrix(xs, lam))
    return num.exact_div(vandermonde_D(xs))


def f_geom(k: int, x1, x2):
    """sum_{j=0}^{k} x1^(k-j) x2^j."""
    if k < 0:
        raise ValueError("f_k needs k >= 0")
    out = 0
    for j in range(k + 1):
        out = out + x1 ** (k - j) * x2 ** j
    return out


def d_det(indices, n: int) -> MultiPoly:
    """det of the matrix with entry (u, v) = z_{indices[u]}^v, v = 1..k."""
    indices = list(indices)
    if not indices:
        raise ValueError("need at least one index")
    if len(set(indices)) < len(indices):
        return MultiPoly(n)
    k = len(indices)
    rows = [[z(j, n) ** v for v in range(1, k + 1)] for j in indices]
    return det_fraction_free(rows)


def index_subsets(k: int, n: int):
    """C(k, n): k-subsets of 1..n as increasing tuples."""
    return combinations(range(1, n + 1), k)
