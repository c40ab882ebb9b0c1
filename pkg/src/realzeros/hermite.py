"""Hermite matrices and the leading-minor test for all-real zeros."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import leading_minors, normalize, to_exact
from .symfunc import power_sum


@dataclass(frozen=True)
class UniPoly:
    """a_0 + a_1 x + ... + a_n x^n with exact coefficients, constant term first."""

    coeffs: tuple

    def __init__(self, coeffs):
        cs = [to_exact(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs or cs[-1] == 0:
            raise ValueError("polynomial has a zero leading coefficient")
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_roots(cls, roots) -> "UniPoly":
        cs = [Fraction(1)]
        for r in roots:
            r = to_exact(r)
            nxt = [Fraction(0)] * (len(cs) + 1)
            for i, c in enumerate(cs):
                nxt[i + 1] += c
                nxt[i] -= r * c
            cs = nxt
        return cls(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def monic(self) -> "UniPoly":
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return UniPoly([normalize(Fraction(c) / lead) for c in self.coeffs])

    def __call__(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out


def elementary_from_coefficients(coeffs) -> list:
    """e_0..e_n of the roots of a monic polynomial: e_k = (-1)^k a_{n-k}.

    Coefficients may be scalars or polynomials (for symbolic coefficient
    work); the leading one must equal 1.
    """
    coeffs = list(coeffs)
    n = len(coeffs) - 1
    if coeffs[-1] != 1:
        raise ValueError("expected a monic coefficient list")
    return [coeffs[n - k] if k % 2 == 0 else -coeffs[n - k] for k in range(n + 1)]


def coeffs_to_elementary(p: UniPoly) -> list:
    """Elementary symmetric values e_0..e_n of the roots of ``p``.

    Non-monic input is first divided through by its leading coefficient.
    """
    return elementary_from_coefficients(p.monic().coeffs)


def power_sums_from_elementary(e, upto: int) -> list:
    """Newton-Girard: p_0..p_upto from e_0..e_n (e_0 = 1)."""
    n = len(e) - 1
    ps = [n]
    for k in range(1, upto + 1):
        acc = 0
        for i in range(1, min(k, n) + 1):
            term = e[i] * ps[k - i] if i < k else k * e[k]
            acc = acc + term if i % 2 == 1 else acc - term
        ps.append(acc)
    return ps


def newton_girard(p: UniPoly, upto: int) -> list:
    """Power sums p_0..p_upto of the roots of ``p``, without finding the roots."""
    if upto < 0:
        raise ValueError("upto must be >= 0")
    return [normalize(x) for x in power_sums_from_elementary(coeffs_to_elementary(p), upto)]


def symbolic_power_sums(n: int, upto: int) -> list:
    return [power_sum(k, n) for k in range(upto + 1)]


def hermite_matrix(ps, lam=None, size: int | None = None):
    """H(lam; n) with entry (i, j) = p_{lam_i + j - 1}, j counted from 1.

    Without ``lam`` the default exponents (0, 1, ..., size-1) give the
    ordinary Hankel matrix of power sums; ``size`` then defaults to n = p_0.
    """
    if lam is None:
        if size is None:
            p0 = ps[0]
            size = int(p0.constant_term() if hasattr(p0, "constant_term") else p0)
        lam = tuple(range(size))
    k = len(lam)
    need = max(lam) + k - 1
    if need >= len(ps):
        raise ValueError(f"need power sums up to p_{need}, have {len(ps) - 1}")
    return [[ps[lam[i] + j] for j in range(k)] for i in range(k)]


class Verdict(enum.Enum):
    ALL_REAL_DISTINCT = "ALL_REAL_DISTINCT"
    NOT_ALL_REAL = "NOT_ALL_REAL"
    INCONCLUSIVE_DEGENERATE = "INCONCLUSIVE_DEGENERATE"

    @property
    def exit_code(self) -> int:
        return {"ALL_REAL_DISTINCT": 0, "NOT_ALL_REAL": 1, "INCONCLUSIVE_DEGENERATE": 2}[self.value]


@dataclass(frozen=True)
class RootVerdict:
    verdict: Verdict
    minors: tuple = field(default=())
    witness: int | None = None


def verdict_from_minors(minors) -> RootVerdict:
    """Classify from (Delta_0, ..., Delta_n); the witness is the first offending k."""
    minors = tuple(minors)
    for k, d in enumerate(minors[1:], start=1):
        if d < 0:
            return RootVerdict(Verdict.NOT_ALL_REAL, minors, k)
    for k, d in enumerate(minors[1:], start=1):
        if d == 0:
            return RootVerdict(Verdict.INCONCLUSIVE_DEGENERATE, minors, k)
    return RootVerdict(Verdict.ALL_REAL_DISTINCT, minors, None)


def hermite_minors(p: UniPoly) -> list:
    n = p.degree
    ps = newton_girard(p, 2 * n - 2)
    return [normalize(m) for m in leading_minors(hermite_matrix(ps, size=n))]


def classify_real_roots(p: UniPoly) -> RootVerdict:
    """ALL_REAL_DISTINCT iff every Delta_k(H(n)) > 0 for 1 <= k <= n.

    A zero minor with no negative one is reported as degenerate rather
    than refined further.
    """
    if p.degree < 1:
        raise ValueError("degree must be at least 1")
    return verdict_from_minors(hermite_minors(p))


def rational_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"

