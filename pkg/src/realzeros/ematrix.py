"""The functions M(m2, m1, n) and the matrix E(n).

E(n) is symmetric with 1-based entries

    E(n)[r, s] = (r-1)! (s-1)! * sum_{i<j} e_inc(r-1; i,j) e_inc(s-1; i,j) (z_i - z_j)^2

Entries are available in three forms: as polynomials in the roots
(:func:`e_entry_direct`), as quadratic forms in e_0, e_1, ... with
coefficients linear in n (:func:`e_entry_via_M`), and as numbers for a
concrete polynomial or root set (:func:`delta_e`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial

from .exact import binomial, det_fraction_free, exact_div, normalize
from .hermite import UniPoly, coeffs_to_elementary, elementary_from_coefficients
from .poly import MultiPoly
from .symfunc import (
    EmptyDomainError,
    elementary,
    elementary_incomplete,
    monomial_fn,
    monomial_incomplete,
    z,
)


@dataclass(frozen=True)
class MSpec:
    """Index pair of M: ``m2`` exponents equal to 2 and ``m1`` equal to 1."""

    m2: int
    m1: int

    def __post_init__(self):
        if self.m2 < 1 or self.m1 < 0:
            raise ValueError(f"M needs m2 >= 1 and m1 >= 0, got ({self.m2}, {self.m1})")

    @property
    def min_n(self) -> int:
        return self.m1 + self.m2 + 1

    @property
    def d1(self) -> tuple:
        return (2,) * self.m2 + (1,) * self.m1 + (0,)

    @property
    def d2(self) -> tuple:
        return (2,) * (self.m2 - 1) + (1,) * (self.m1 + 2)

    def __str__(self):
        return f"M({self.m2},{self.m1})"


# -- quadratic forms in the elementary symmetric functions ------------------


def _lin_text(c0, c1) -> str:
    """Render c1*n + c0 without the outer sign handling."""
    parts = []
    if c1:
        mag = abs(c1)
        parts.append(("-" if c1 < 0 else "+", "n" if mag == 1 else f"{mag}*n"))
    if c0:
        parts.append(("-" if c0 < 0 else "+", str(abs(c0))))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f"{sign}{body}"
    return out


class EBasisQuadratic:
    """sum over i <= j of (c0 + c1*n) e_i e_j.

    ``terms`` maps (i, j) with i <= j to the pair (c0, c1). The symbol n
    stays formal until :meth:`specialize`.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for (i, j), (c0, c1) in (terms or {}).items():
            key = (i, j) if i <= j else (j, i)
            a0, a1 = clean.get(key, (0, 0))
            clean[key] = (normalize(a0 + c0), normalize(a1 + c1))
        self.terms = {k: v for k, v in clean.items() if v != (0, 0)}

    @classmethod
    def product(cls, i: int, j: int, c0=1, c1=0) -> "EBasisQuadratic":
        return cls({(i, j): (c0, c1)})

    def __add__(self, other):
        merged = dict(self.terms)
        for key, (c0, c1) in other.terms.items():
            a0, a1 = merged.get(key, (0, 0))
            merged[key] = (a0 + c0, a1 + c1)
        return EBasisQuadratic(merged)

    def __neg__(self):
        return EBasisQuadratic({k: (-c0, -c1) for k, (c0, c1) in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "EBasisQuadratic":
        return EBasisQuadratic({k: (c0 * c, c1 * c) for k, (c0, c1) in self.terms.items()})

    __mul__ = __rmul__ = scale

    def times_linear(self, a0, a1) -> "EBasisQuadratic":
        """Multiply by (a0 + a1*n); only defined while no coefficient involves n."""
        if a1 and any(c1 for _, c1 in self.terms.values()):
            raise ValueError("product would be quadratic in n")
        return EBasisQuadratic({k: (c0 * a0, c0 * a1 + c1 * a0) for k, (c0, c1) in self.terms.items()})

    def coefficient(self, i: int, j: int) -> tuple:
        key = (i, j) if i <= j else (j, i)
        return self.terms.get(key, (0, 0))

    def __eq__(self, other):
        if not isinstance(other, EBasisQuadratic):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def specialize(self, n, e):
        """Value after n := ``n`` and e_i := ``e[i]`` (e_i = 0 beyond the list)."""
        total = 0
        for (i, j), (c0, c1) in self.terms.items():
            if i >= len(e) or j >= len(e):
                continue
            total = total + (c0 + c1 * n) * (e[i] * e[j])
        return total

    def to_polynomial(self, n: int) -> MultiPoly:
        """The form written out in z_1..z_n."""
        es = [elementary(k, n) for k in range(n + 1)]
        out = self.specialize(n, es)
        return out if isinstance(out, MultiPoly) else MultiPoly.constant(out, n)

    def ordered_keys(self):
        return sorted(self.terms, key=lambda ij: (-(ij[0] + ij[1]), -ij[0]))

    def to_text(self) -> str:
        """Canonical text, e.g. ``(n-1)*e1^2 - 2*n*e2``; e0 factors are dropped."""
        if not self.terms:
            return "0"
        pieces = []
        for i, j in self.ordered_keys():
            c0, c1 = self.terms[(i, j)]
            factors = [f"e{t}" for t in (i, j) if t]
            if len(factors) == 2 and i == j:
                factors = [f"e{i}^2"]
            mono = "*".join(factors)
            if c0 and c1:
                sign, coef = "+", f"({_lin_text(c0, c1)})"
            else:
                c = c0 or c1
                sign = "-" if c < 0 else "+"
                mag = abs(c)
                if c1:
                    coef = "n" if mag == 1 else f"{mag}*n"
                else:
                    coef = "" if (mag == 1 and mono) else str(mag)
            body = "*".join(x for x in (coef, mono) if x)
            pieces.append((sign, body))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = to_text

    def __repr__(self):
        return f"EBasisQuadratic({self.to_text()!r})"

    _TERM = re.compile(r"([+-]?)((?:\([^()]*\))|(?:\d+(?:/\d+)?)?n?)((?:e_?\d+(?:\^2)?)*)$")
    _FACTOR = re.compile(r"e_?(\d+)(\^2)?")

    @classmethod
    def parse(cls, text: str) -> "EBasisQuadratic":
        """Read canonical text or the compact notation ``(4n-12)e_2e_3 - 6ne_1e_4``."""
        s = text.replace(" ", "").replace("*", "").replace("{", "").replace("}", "")
        raw, depth, cur = [], 0, ""
        for ch in s:
            if ch in "+-" and depth == 0 and cur:
                raw.append(cur)
                cur = ""
            depth += ch == "("
            depth -= ch == ")"
            cur += ch
        if cur:
            raw.append(cur)
        out = cls()
        for tok in raw:
            m = cls._TERM.match(tok)
            if not m:
                raise ValueError(f"cannot parse term {tok!r}")
            sign = -1 if m.group(1) == "-" else 1
            c0, c1 = _parse_linear(m.group(2))
            idx = []
            for num, sq in cls._FACTOR.findall(m.group(3)):
                idx += [int(num)] * (2 if sq else 1)
            if len(idx) > 2:
                raise ValueError(f"term {tok!r} is not quadratic")
            while len(idx) < 2:
                idx.insert(0, 0)
            out = out + cls.product(idx[0], idx[1], sign * c0, sign * c1)
        return out


def _parse_linear(text: str) -> tuple:
    if text.startswith("("):
        c0 = c1 = 0
        for m in re.finditer(r"([+-]?)(\d+(?:/\d+)?)?(n?)", text[1:-1]):
            if not m.group(0):
                continue
            mag = Fraction(m.group(2)) if m.group(2) else 1
            v = -mag if m.group(1) == "-" else mag
            if m.group(3):
                c1 += v
            else:
                c0 += v
        return normalize(Fraction(c0)), normalize(Fraction(c1))
    if not text:
        return 1, 0
    if text.endswith("n"):
        return 0, normalize(Fraction(text[:-1])) if text[:-1] else 1
    return normalize(Fraction(text)), 0


# -- M(m2, m1, n) ---------------------------------------------------------


def m_symbolic(spec: MSpec, n: int) -> MultiPoly:
    """monomial(d1, n) - monomial(d2, n) straight from the definition."""
    if n < spec.min_n:
        raise EmptyDomainError(f"{spec} needs n >= {spec.min_n}, got {n}")
    return monomial_fn(spec.d1, n) - monomial_fn(spec.d2, n)


def m_sum_of_squares(spec: MSpec, n: int) -> MultiPoly:
    """sum_{i<j} monomial_inc(d, i, j) (z_i - z_j)^2 with d = 2^(m2-1) 1^m1."""
    if n < spec.min_n:
        raise EmptyDomainError(f"{spec} needs n >= {spec.min_n}, got {n}")
    d = (2,) * (spec.m2 - 1) + (1,) * spec.m1
    out = MultiPoly(n)
    for i, j in combinations(range(1, n + 1), 2):
        diff = z(i, n) - z(j, n)
        out = out + monomial_incomplete(d, i, j, n) * (diff * diff)
    return out


def ememk_expand(m: int, k: int) -> list:
    """e_m e_{m+k} = sum_i C(k+2i, i) monomial2(m-i, k+2i).

    Returned as a list of (coefficient, (m2, m1)) pairs.
    """
    if m < 0 or k < 0:
        raise ValueError("m and k must be nonnegative")
    return [(binomial(k + 2 * i, i), (m - i, k + 2 * i)) for i in range(m + 1)]


def mono2_in_e(m: int, k: int) -> list:
    """Coefficients c_0..c_m with monomial2(m, k) = sum_i c_i e_{m-i} e_{m+k+i}.

    c_0 = 1 and c_i = (-1)^i (k+2i)/i * C(k+i-1, i-1).
    """
    if m < 0 or k < 0:
        raise ValueError("m and k must be nonnegative")
    cs = [1]
    for i in range(1, m + 1):
        c = exact_div((k + 2 * i) * binomial(k + i - 1, i - 1), i)
        cs.append(c if i % 2 == 0 else -c)
    return cs


def mono2_in_e_solved(m: int, k: int) -> list:
    """Same coefficients as :func:`mono2_in_e`, by back-substitution in ememk_expand."""
    memo = {}

    def c(i, kk):
        if i == 0:
            return 1
        if (i, kk) not in memo:
            memo[(i, kk)] = -sum(binomial(kk + 2 * j, j) * c(i - j, kk + 2 * j) for j in range(1, i + 1))
        return memo[(i, kk)]

    return [c(i, k) for i in range(m + 1)]


def monomial2_in_e(m2: int, m1: int) -> EBasisQuadratic:
    out = EBasisQuadratic()
    for i, c in enumerate(mono2_in_e(m2, m1)):
        out = out + EBasisQuadratic.product(m2 - i, m2 + m1 + i, c)
    return out


def m_in_e_basis(spec: MSpec) -> EBasisQuadratic:
    """M(m2, m1, n) as a quadratic form in the e_i.

    monomial(d1) has a trailing zero exponent, which leaves n - m1 - m2
    free choices for its last index; both monomials are then rescaled to
    monomial2 and converted with :func:`mono2_in_e`.
    """
    m2, m1 = spec.m2, spec.m1
    first = monomial2_in_e(m2, m1).scale(factorial(m2) * factorial(m1)).times_linear(-(m1 + m2), 1)
    second = monomial2_in_e(m2 - 1, m1 + 2).scale(factorial(m2 - 1) * factorial(m1 + 2))
    return first - second


def m_in_e_collapsed(spec: MSpec) -> tuple:
    """The closed-form M-in-e expansion, term by term.

    The i = 0 weight (m1+2i)(m1+i-1)!/(i! m1!) contains (-1)! when
    m1 = 0; it is taken as its limiting value 1. Returns the form and a
    list of notes describing every such substitution.
    """
    m2, m1 = spec.m2, spec.m1
    notes = []

    def weight(i, k):
        if k == 0 and i == 0:
            notes.append(f"{spec}: i=0 weight has (k+i-1)! = (-1)! at k=0; used 1")
            return 1
        return exact_div((k + 2 * i) * factorial(k + i - 1), factorial(i) * factorial(k))

    first = EBasisQuadratic()
    for i in range(m2 + 1):
        w = weight(i, m1) * (-1) ** i
        first = first + EBasisQuadratic.product(m2 - i, m2 + m1 + i, w)
    second = EBasisQuadratic()
    for i in range(m2):
        w = weight(i, m1 + 2) * (-1) ** i
        second = second + EBasisQuadratic.product(m2 - 1 - i, m2 + m1 + 1 + i, w)
    form = first.scale(factorial(m2) * factorial(m1)).times_linear(-(m1 + m2), 1) - second.scale(
        factorial(m2 - 1) * factorial(m1 + 2)
    )
    return form, notes


# -- entries of E(n) -------------------------------------------------------


def e_entry_direct(r: int, s: int, n: int) -> MultiPoly:
    """E(n)[r, s] as a polynomial in z_1..z_n, from the defining pair sum."""
    if r < 1 or s < 1:
        raise ValueError("E(n) is indexed from 1")
    if n < 2:
        raise ValueError("E(n) needs n >= 2")
    out = MultiPoly(n)
    for i, j in combinations(range(1, n + 1), 2):
        diff = z(i, n) - z(j, n)
        a = elementary_incomplete(r - 1, (i, j), n)
        b = a if r == s else elementary_incomplete(s - 1, (i, j), n)
        out = out + a * b * (diff * diff)
    return out * (factorial(r - 1) * factorial(s - 1))


def e_entry_terms(r: int, s: int) -> list:
    """The M-combination for E(n)[r, s] as (weight, MSpec) pairs."""
    if r > s:
        r, s = s, r
    m, k = r - 1, s - r
    return [(exact_div(binomial(m, i) * factorial(m + k), factorial(i + k)), MSpec(m + 1 - i, k + 2 * i)) for i in range(m + 1)]


def e_entry_via_M(r: int, s: int) -> EBasisQuadratic:
    """E(n)[r, s] as an integer combination of the M-functions, in the e-basis."""
    if r < 1 or s < 1:
        raise ValueError("E(n) is indexed from 1")
    out = EBasisQuadratic()
    for w, spec in e_entry_terms(r, s):
        out = out + m_in_e_basis(spec).scale(w)
    return out


@dataclass
class EntryStructure:
    m: int
    k: int
    entry: EBasisQuadratic
    leading: tuple
    leading_coefficient: tuple
    expected_leading: tuple
    A: dict = field(default_factory=dict)
    mismatches: list = field(default_factory=list)
    m_leading_coefficient: tuple | None = None
    m_expected_leading: tuple | None = None
    literal_coefficient: tuple = (0, 0)
    literal_expected: tuple = (0, 0)

    @property
    def holds(self) -> bool:
        return not self.mismatches

    @property
    def literal_holds(self) -> bool:
        return self.literal_coefficient == self.literal_expected


def e_entry_structure(m: int, k: int) -> EntryStructure:
    """Split E(n)[m+1, m+k+1] into its one n-affine term and its n-multiples.

    The entry's e_{m+1} e_{m+k+1} coefficient is (m+1)!(m+k)!(n-m-k-1);
    every other coefficient is a pure multiple of n, reported as A[i] for
    the product e_i e_{2m+k+2-i}. The same shape for M(m, k) itself,
    leading coefficient m!k!(n-m-k) on e_m e_{m+k}, is checked when m >= 1.
    The literal pairing e_m e_{m+k} with m!k!(n-m-k) inside the E entry is
    recorded in ``literal_*`` without affecting ``holds``.
    """
    entry = e_entry_via_M(m + 1, m + k + 1)
    lead = (m + 1, m + k + 1)
    f = factorial(m + 1) * factorial(m + k)
    expected = (-f * (m + k + 1), f)
    rep = EntryStructure(m, k, entry, lead, entry.coefficient(*lead), expected)
    if rep.leading_coefficient != expected:
        rep.mismatches.append(f"e{lead[0]}*e{lead[1]}: got {rep.leading_coefficient}, expected {expected}")
    for (i, j), (c0, c1) in entry.terms.items():
        if (i, j) == lead:
            continue
        if i + j != 2 * m + k + 2:
            rep.mismatches.append(f"e{i}*e{j}: not of total index {2 * m + k + 2}")
        if c0 != 0:
            rep.mismatches.append(f"e{i}*e{j}: constant part {c0} is not a multiple of n")
        rep.A[i] = c1
    if m >= 1:
        mform = m_in_e_basis(MSpec(m, k))
        g = factorial(m) * factorial(k)
        rep.m_expected_leading = (-g * (m + k), g)
        rep.m_leading_coefficient = mform.coefficient(m, m + k)
        if rep.m_leading_coefficient != rep.m_expected_leading:
            rep.mismatches.append(f"M({m},{k}) leading: got {rep.m_leading_coefficient}")
    g = factorial(m) * factorial(k)
    rep.literal_expected = (-g * (m + k), g)
    rep.literal_coefficient = entry.coefficient(m, m + k)
    return rep


# -- leading minors of E(n) --------------------------------------------------


def _elementary_values(xs) -> list:
    """e_0..e_len(xs) of concrete numbers, by expanding prod (1 + x t)."""
    es = [1]
    for x in xs:
        es = [a + x * b for a, b in zip(es + [0], [0] + es)]
    return es


def e_matrix_at_roots(size: int, roots) -> list:
    """Numeric upper-left block of E(n) for a concrete root list."""
    roots = list(roots)
    n = len(roots)
    mat = [[0] * size for _ in range(size)]
    for i, j in combinations(range(n), 2):
        rest = [roots[t] for t in range(n) if t not in (i, j)]
        es = _elementary_values(rest) + [0] * size
        sq = (roots[i] - roots[j]) ** 2
        for r in range(size):
            for s in range(r, size):
                mat[r][s] += es[r] * es[s] * sq
    for r in range(size):
        for s in range(r, size):
            v = normalize(Fraction(mat[r][s]) * factorial(r) * factorial(s))
            mat[r][s] = mat[s][r] = v
    return mat


def e_matrix_from_elementary(size: int, n, e) -> list:
    forms = {}
    mat = []
    for r in range(1, size + 1):
        row = []
        for s in range(1, size + 1):
            key = (min(r, s), max(r, s))
            if key not in forms:
                forms[key] = e_entry_via_M(*key).specialize(n, e)
            row.append(forms[key])
        mat.append(row)
    return mat


def delta_e(k: int, n: int, mode: str = "symbolic", values=None):
    """Delta_k(E(n)) in one of three modes.

    ``symbolic``   polynomial in z_1..z_n from the defining sum;
    ``at-roots``   number, ``values`` a list of n exact roots;
    ``from-poly``  number, ``values`` a UniPoly of degree n (the e_i come
                   from its coefficients, no root finding).
    """
    if k < 1 or n < 2:
        raise ValueError("need k >= 1 and n >= 2")
    if mode == "symbolic":
        mat = [[None] * k for _ in range(k)]
        for r in range(1, k + 1):
            for s in range(r, k + 1):
                mat[r - 1][s - 1] = mat[s - 1][r - 1] = e_entry_direct(r, s, n)
        return det_fraction_free(mat)
    if mode == "at-roots":
        if values is None or len(values) != n:
            raise ValueError(f"at-roots mode needs {n} roots")
        return normalize(det_fraction_free(e_matrix_at_roots(k, values)))
    if mode == "from-poly":
        if not isinstance(values, UniPoly) or values.degree != n:
            raise ValueError(f"from-poly mode needs a UniPoly of degree {n}")
        return normalize(det_fraction_free(e_matrix_from_elementary(k, n, coeffs_to_elementary(values))))
    raise ValueError(f"unknown mode {mode!r}")


def coefficient_ring(n: int) -> list:
    """Generators a_0..a_{n-1} of Q[a_0..a_{n-1}] for a generic monic degree-n polynomial."""
    return MultiPoly.gens(n)


def delta_e_in_coefficients(k: int, n: int) -> MultiPoly:
    """Delta_k(E(n)) as a polynomial in the coefficients a_0..a_{n-1} of a monic p."""
    a = coefficient_ring(n)
    e = elementary_from_coefficients(a + [1])
    e[0] = MultiPoly.constant(1, n)
    return det_fraction_free(e_matrix_from_elementary(k, n, e))


def positive_root_checks(p: UniPoly, specs) -> list:
    """Values of M(spec) at the roots of ``p``, read off its coefficients.

    Each M is nonnegative when all roots are nonnegative, so a negative
    value proves that some root is not positive (or not real). The
    converse does not hold.
    """
    n = p.degree
    e = coeffs_to_elementary(p)
    out = []
    for spec in specs:
        if n < spec.min_n:
            raise ValueError(f"{spec} needs degree >= {spec.min_n}, polynomial has degree {n}")
        out.append(normalize(m_in_e_basis(spec).specialize(n, e)))
    return out
