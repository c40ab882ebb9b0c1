"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

import heapq
from fractions import Fraction
from operator import add, sub

from .exact import exact_div, normalize

_SCALARS = (int, Fraction)


class MultiPoly:
    """Polynomial in a fixed number of variables.

    Terms live in a dict mapping exponent tuples (one entry per variable)
    to nonzero int/Fraction coefficients. Instances are treated as
    immutable; every operation returns a new polynomial.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exp, c in terms.items():
                if len(exp) != nvars:
                    raise ValueError(f"exponent {exp} does not have {nvars} entries")
                if c != 0:
                    clean[tuple(exp)] = normalize(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c, nvars: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, i: int, nvars: int, power: int = 1) -> "MultiPoly":
        """The monomial x_i**power, with i counted from 0."""
        if not 0 <= i < nvars:
            raise IndexError(f"variable {i} out of range for {nvars} variables")
        exp = [0] * nvars
        exp[i] = power
        return cls._raw(nvars, {tuple(exp): 1})

    @classmethod
    def gens(cls, nvars: int) -> list["MultiPoly"]:
        return [cls.var(i, nvars) for i in range(nvars)]

    # -- inspection ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def leading_term(self):
        """Largest (exponent, coefficient) pair in lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    def __len__(self):
        return len(self.terms)

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, _SCALARS):
            return MultiPoly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e, 0) + c
            if v == 0:
                terms.pop(e, None)
            else:
                terms[e] = normalize(v)
        return MultiPoly._raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            if other == 0:
                return MultiPoly._raw(self.nvars, {})
            return MultiPoly._raw(self.nvars, {e: normalize(c * other) for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other.terms) > len(self.terms):
            small, big = self.terms, other.terms
        else:
            small, big = other.terms, self.terms
        terms = {}
        get = terms.get
        for e1, c1 in small.items():
            for e2, c2 in big.items():
                e = tuple(map(add, e1, e2))
                terms[e] = get(e, 0) + c1 * c2
        return MultiPoly._raw(self.nvars, {e: normalize(c) for e, c in terms.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = MultiPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, other) -> "MultiPoly":
        """Quotient of an exact division; raises ArithmeticError on a remainder."""
        if isinstance(other, _SCALARS):
            if other == 0:
                raise ZeroDivisionError("division of a polynomial by zero")
            return MultiPoly._raw(self.nvars, {e: exact_div(c, other) for e, c in self.terms.items()})
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if other.is_constant():
            return self.exact_div(other.constant_term())
        lead_e, lead_c = other.leading_term()
        rem = dict(self.terms)
        heap = [tuple(-x for x in e) for e in rem]
        heapq.heapify(heap)
        quot = {}
        while heap:
            e = tuple(-x for x in heapq.heappop(heap))
            c = rem.get(e, 0)
            if c == 0:
                continue
            shift = tuple(map(sub, e, lead_e))
            if min(shift) < 0:
                raise ArithmeticError("polynomial division leaves a remainder")
            q = exact_div(c, lead_c)
            quot[shift] = q
            for de, dc in other.terms.items():
                t = tuple(map(add, de, shift))
                old = rem.get(t, 0)
                if old == 0:
                    heapq.heappush(heap, tuple(-x for x in t))
                v = old - q * dc
                if v == 0:
                    rem.pop(t, None)
                else:
                    rem[t] = v
        return MultiPoly._raw(self.nvars, quot)

    # -- comparison ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * self.nvars: normalize(Fraction(other))}
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # -- evaluation and substitution ------------------------------------

    def __call__(self, *point):
        return self.evaluate(point)

    def evaluate(self, point):
        """Value at ``point`` (a sequence of nvars exact scalars)."""
        point = list(point)
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(point)}")
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term = term * x ** k
            total = total + term
        return normalize(total) if isinstance(total, _SCALARS) else total

    def substitute(self, values):
        """Replace every variable by the matching entry of ``values``.

        Entries may be scalars or polynomials over a different ring; the
        result lives wherever the arithmetic lands.
        """
        return self.evaluate(values)

    def zero_vars(self, indices) -> "MultiPoly":
        """Set the listed variables (0-based) to zero."""
        idx = tuple(indices)
        return MultiPoly._raw(self.nvars, {e: c for e, c in self.terms.items() if not any(e[i] for i in idx)})

    def permute(self, perm) -> "MultiPoly":
        """Rename variable i to perm[i]."""
        terms = {}
        for e, c in self.terms.items():
            new = [0] * self.nvars
            for i, k in enumerate(e):
                new[perm[i]] = k
            terms[tuple(new)] = c
        return MultiPoly._raw(self.nvars, terms)

    # -- text -----------------------------------------------------------

    def to_text(self, names=None) -> str:
        """Canonical rendering: terms by descending total degree, then lex."""
        if not self.terms:
            return "0"
        if names is None:
            names = [f"z{i + 1}" for i in range(self.nvars)]
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
            c = self.terms[e]
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
            )
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.to_text()!r})"

    __str__ = to_text
