"""Command-line front end.

    realzeros certify 2,-3,1 [--checks "1,0;2,1"] [--json]
    realzeros entry 3 3
    realzeros verify main --k 2 --n 4
    realzeros count --k 5

Data goes to stdout, diagnostics to stderr. ``certify`` exits with the
verdict code (0 all real and distinct, 1 not all real, 2 inconclusive);
any error exits with 3.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .ematrix import MSpec, e_entry_via_M, e_matrix_from_elementary, positive_root_checks
from .exact import leading_minors, normalize, to_exact
from .graphs import count_table
from .hermite import UniPoly, classify_real_roots, coeffs_to_elementary, rational_str
from .identities import SUITES, main_relation_constant, run_suite, shifted_prefactor, stated_prefactor

ERROR_EXIT = 3


def parse_coefficients(text: str) -> list:
    """Either "2,-3,1" (constant term first) or "a0=2,a1=-3,a2=1" in any order."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise ValueError("no coefficients given")
    if all("=" in p for p in parts):
        named = {}
        for p in parts:
            key, val = (s.strip() for s in p.split("=", 1))
            if not (key.startswith("a") and key[1:].isdigit()):
                raise ValueError(f"bad coefficient name {key!r}")
            idx = int(key[1:])
            if idx in named:
                raise ValueError(f"coefficient {key} given twice")
            named[idx] = to_exact(val)
        return [named.get(i, 0) for i in range(max(named) + 1)]
    if any("=" in p for p in parts):
        raise ValueError("mixing named and positional coefficients")
    return [to_exact(p) for p in parts]


def parse_checks(text: str | None) -> list:
    if not text:
        return []
    specs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        m2, m1 = (int(x) for x in chunk.split(","))
        specs.append(MSpec(m2, m1))
    return specs


def e_minors_of(p: UniPoly) -> list:
    """[1, Delta_1(E(n)), ..., Delta_{n-1}(E(n))] at the roots of p, from its coefficients."""
    n = p.degree
    if n < 2:
        return [1]
    mat = e_matrix_from_elementary(n - 1, n, coeffs_to_elementary(p))
    return [normalize(d) for d in leading_minors(mat)]


def run_certify(coeffs, checks=()) -> tuple:
    """Return (response dict, exit code) for one polynomial."""
    p = UniPoly(coeffs)
    if p.degree < 1:
        raise ValueError("degree must be at least 1")
    rv = classify_real_roots(p)
    h = list(rv.minors)
    e = e_minors_of(p)
    n = p.degree
    notes = []
    for k in range(1, len(e)):
        c = main_relation_constant(k)
        expected = normalize(Fraction(c) * n ** (k - 1) * h[k + 1])
        if expected != e[k]:
            notes.append(f"cross-check failed at k={k}: {rational_str(e[k])} != {rational_str(expected)}")
        flag = "matches" if c == stated_prefactor(k) else "differs from"
        notes.append(f"c({k}) = {c} {flag} (prod i!)^2 = {stated_prefactor(k)}; (prod (i-1)!)^2 = {shifted_prefactor(k)}")
    m_values = {}
    if checks:
        for spec, val in zip(checks, positive_root_checks(p, checks)):
            m_values[str(spec)] = rational_str(val)
            if val < 0:
                notes.append(f"{spec} < 0: not all roots are positive reals")
    resp = {
        "verdict": rv.verdict.value,
        "witness": rv.witness,
        "degree": n,
        "hermite_minors": [rational_str(x) for x in h],
        "e_minors": [rational_str(x) for x in e],
        "m_values": m_values,
        "notes": notes,
    }
    return resp, rv.verdict.exit_code


def _print_certify(resp):
    print(f"verdict: {resp['verdict']}")
    if resp["witness"] is not None:
        print(f"first offending minor: k={resp['witness']}")
    print("hermite minors: " + " ".join(resp["hermite_minors"]))
    print("E minors:       " + " ".join(resp["e_minors"]))
    for spec, val in resp["m_values"].items():
        print(f"{spec} = {val}")
    for note in resp["notes"]:
        print(f"note: {note}")


def cmd_certify(args) -> int:
    coeffs = parse_coefficients(args.coefficients)
    resp, code = run_certify(coeffs, parse_checks(args.checks))
    if args.json:
        print(json.dumps(resp, sort_keys=True))
    else:
        _print_certify(resp)
    return code


def cmd_entry(args) -> int:
    if args.r < 1 or args.s < 1:
        raise ValueError("entry indices start at 1")
    form = e_entry_via_M(args.r, args.s).to_text()
    if args.json:
        print(json.dumps({"r": args.r, "s": args.s, "entry": form}))
    else:
        print(form)
    return 0


def cmd_verify(args) -> int:
    suite = args.suite_flag or args.suite
    if suite is None:
        raise ValueError("name a suite: " + ", ".join(SUITES))
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    ok = True
    for rep in run_suite(suite, args.k, args.n):
        print(rep.to_json(), flush=True)
        ok = ok and rep.holds
    return 0 if ok else 1


def cmd_count(args) -> int:
    rows = count_table(args.k)
    cols = ("k", "h", "B", "A0", "A1", "recurrence", "agree")
    if args.json:
        for row in rows:
            print(json.dumps(dict(zip(cols, row))))
        return 0
    print("\t".join(cols))
    for row in rows:
        cells = ["-" if v is None else str(v) for v in row[:-1]]
        cells.append("agree" if row[-1] else "DISAGREE")
        print("\t".join(cells))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="realzeros", description="Exact real-zero certificates and identity checks.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("certify", help="classify the zeros of a polynomial")
    c.add_argument("coefficients", help='"2,-3,1" (constant first) or "a0=2,a1=-3,a2=1"; entries may be num/den')
    c.add_argument("--checks", help='M specs for the positivity screen, e.g. "1,0;2,1"')
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_certify)

    e = sub.add_parser("entry", help="print E(n)[r, s] in the e-basis")
    e.add_argument("r", type=int)
    e.add_argument("s", type=int)
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_entry)

    v = sub.add_parser("verify", help="run an identity suite, one JSON line per case")
    v.add_argument("suite", nargs="?")
    v.add_argument("--suite", dest="suite_flag")
    v.add_argument("--k", type=int, default=2, help="largest k (default 2)")
    v.add_argument("--n", type=int, default=4, help="largest n (default 4)")
    v.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON lines")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("count", help="B(k,h) triangle with forest counts and the recurrence")
    t.add_argument("--k", type=int, default=5, help="largest k (default 5, at most 8)")
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_count)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR_EXIT


if __name__ == "__main__":
    sys.exit(main())
