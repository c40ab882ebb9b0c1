"""Verification reports shared by the identity and graph checks."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction


def _canon(value) -> str:
    if value is None:
        return ""
    if hasattr(value, "to_text"):
        return value.to_text()
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def _json_scalar(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int) and not isinstance(value, bool):
        return f"{value}/1"
    return value


@dataclass
class VerificationReport:
    identity: str
    params: dict
    holds: bool
    lhs: object = None
    rhs: object = None
    constant: object = None
    witness: object = None
    notes: list = field(default_factory=list)

    @property
    def lhs_text(self) -> str:
        return _canon(self.lhs)

    @property
    def rhs_text(self) -> str:
        return _canon(self.rhs)

    def to_dict(self) -> dict:
        out = {
            "identity": self.identity,
            "params": {k: (list(v) if isinstance(v, tuple) else v) for k, v in self.params.items()},
            "holds": self.holds,
            "constant": _json_scalar(self.constant) if self.constant is not None else None,
            "lhs_hash": hashlib.sha256(self.lhs_text.encode()).hexdigest()[:16],
            "rhs_hash": hashlib.sha256(self.rhs_text.encode()).hexdigest()[:16],
        }
        if self.notes:
            out["notes"] = list(self.notes)
        if not self.holds:
            out["witness"] = self.witness if self.witness is not None else {
                "params": out["params"],
                "lhs": self.lhs_text,
                "rhs": self.rhs_text,
            }
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, default=str)


def proportionality(lhs, rhs):
    """Return c with lhs == c * rhs exactly, or None when no constant works.

    Both arguments are polynomials (or scalars). Zero over zero gives None.
    """
    if hasattr(rhs, "leading_term"):
        if rhs.is_zero():
            return None
        e, c_rhs = rhs.leading_term()
        if lhs.is_zero():
            return 0
        c_lhs = lhs.terms.get(e)
        if c_lhs is None:
            return None
        c = Fraction(c_lhs) / Fraction(c_rhs)
        c = c.numerator if c.denominator == 1 else c
        return c if lhs == rhs * c else None
    if rhs == 0:
        return None
    c = Fraction(lhs) / Fraction(rhs)
    return c.numerator if c.denominator == 1 else c
