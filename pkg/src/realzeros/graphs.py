"""Pair multisets, endpoint selections and the forest classes behind the minor equivalence.

Forest classes are counted by brute force over edge sets. Unlabeled
vertices get negative ids; two placements that differ only by renaming
unlabeled vertices are identified through a canonical relabeling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from math import factorial

from .exact import falling_factorial
from .poly import MultiPoly
from .report import VerificationReport
from .symfunc import d_det, z


@dataclass(frozen=True)
class PairMultiset:
    """k unordered pairs (a, b), a < b, drawn from 1..n with repetition."""

    pairs: tuple
    n: int

    def __init__(self, pairs, n: int):
        canon = []
        for a, b in pairs:
            if a == b or not (1 <= a <= n and 1 <= b <= n):
                raise ValueError(f"bad pair {(a, b)} for n = {n}")
            canon.append((min(a, b), max(a, b)))
        object.__setattr__(self, "pairs", tuple(sorted(canon)))
        object.__setattr__(self, "n", n)

    @property
    def k(self) -> int:
        return len(self.pairs)

    @property
    def support(self) -> int:
        """|beta|: number of distinct endpoints."""
        return len({v for p in self.pairs for v in p})

    @property
    def has_repeat(self) -> bool:
        return len(set(self.pairs)) < len(self.pairs)

    def pair_product(self) -> MultiPoly:
        """prod (z_a - z_b) over the pairs in canonical order."""
        out = MultiPoly.constant(1, self.n)
        for a, b in self.pairs:
            out = out * (z(a, self.n) - z(b, self.n))
        return out


def enumerate_pairs(k: int, n: int, distinct: bool = False):
    """Every multiset of k pairs from 1..n exactly once."""
    if n < 2:
        raise ValueError("pairs need n >= 2")
    pool = list(combinations(range(1, n + 1), 2))
    gen = combinations(pool, k) if distinct else combinations_with_replacement(pool, k)
    for chosen in gen:
        yield PairMultiset(chosen, n)


def selections(beta: PairMultiset):
    """All 2^k endpoint choices as (chosen, sign); sign is -1 per larger endpoint picked."""
    for bits in product((0, 1), repeat=beta.k):
        chosen = tuple(p[b] for p, b in zip(beta.pairs, bits))
        yield chosen, (-1) ** sum(bits)


def selection_sign(beta: PairMultiset, chosen) -> int:
    return (-1) ** sum(c == max(p) for p, c in zip(beta.pairs, chosen))


def pair_sign(chosen1, chosen2) -> int:
    """sgn(s1, s2) = (-1)^(number of pairs where the choices differ)."""
    return (-1) ** len(disagreements(chosen1, chosen2))


def disagreements(chosen1, chosen2) -> tuple:
    """I(beta, s1, s2): positions where the two selections differ."""
    return tuple(i for i, (a, b) in enumerate(zip(chosen1, chosen2)) if a != b)


# -- 3-cycles in tournaments ------------------------------------------------


def tournament_property_check(v: int) -> VerificationReport:
    """Every orientation of K_v has a vertex beating all others or a directed 3-cycle."""
    if not 2 <= v <= 6:
        raise ValueError("vertex count must be between 2 and 6")
    edges = list(combinations(range(v), 2))
    checked = 0
    for bits in product((0, 1), repeat=len(edges)):
        beats = [[False] * v for _ in range(v)]
        for (a, b), flip in zip(edges, bits):
            if flip:
                beats[b][a] = True
            else:
                beats[a][b] = True
        checked += 1
        if any(sum(row) == v - 1 for row in beats):
            continue
        if any(
            (beats[a][b] and beats[b][c] and beats[c][a]) or (beats[a][c] and beats[c][b] and beats[b][a])
            for a, b, c in combinations(range(v), 3)
        ):
            continue
        return VerificationReport("tournament", {"v": v}, False, witness={"orientation": list(bits)})
    return VerificationReport("tournament", {"v": v}, True, lhs=checked, rhs=checked)


# -- |I| >= 2 cancellation ---------------------------------------------------


def cancellation_check(k: int, n: int) -> VerificationReport:
    """Sum of sgn(s1,s2) d(s1(beta)) d(s2(beta)) over triples with |I| >= 2 is zero."""
    dcache = {}

    def d(chosen):
        if chosen not in dcache:
            dcache[chosen] = d_det(chosen, n)
        return dcache[chosen]

    total = MultiPoly(n)
    disjoint = MultiPoly(n)
    triples = 0
    for beta in enumerate_pairs(k, n):
        separated = beta.support == 2 * beta.k
        sels = list(selections(beta))
        for c1, _ in sels:
            for c2, _ in sels:
                diff = disagreements(c1, c2)
                if len(diff) < 2:
                    continue
                triples += 1
                term = d(c1) * d(c2) if len(diff) % 2 == 0 else -(d(c1) * d(c2))
                total = total + term
                if separated:
                    disjoint = disjoint + term
    notes = [
        f"{triples} triples",
        f"sum over vertex-disjoint beta only is zero: {disjoint.is_zero()}",
    ]
    return VerificationReport("cancellation", {"k": k, "n": n}, total.is_zero(), lhs=total, rhs=MultiPoly(n), notes=notes)


# -- forest classes --------------------------------------------------------


class _DSU:
    def __init__(self, verts):
        self.parent = {v: v for v in verts}

    def find(self, v):
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def _components(verts, edges):
    """Component lists of an acyclic edge set, or None if it has a cycle."""
    dsu = _DSU(verts)
    for a, b in edges:
        if not dsu.union(a, b):
            return None
    comps = {}
    for v in verts:
        comps.setdefault(dsu.find(v), []).append(v)
    return list(comps.values())


def _canonical(edges, comps):
    rename = {}
    order = sorted((min(x for x in c if x > 0), [x for x in c if x < 0]) for c in comps)
    nxt = -1
    for _, unl in order:
        for u in unl:
            rename[u] = nxt
            nxt -= 1
    return frozenset(frozenset(rename.get(x, x) for x in e) for e in edges)


def _forest_classes(labeled, unlabeled, nedges, accept):
    verts = list(labeled) + list(unlabeled)
    pool = [e for e in combinations(verts, 2) if not (e[0] < 0 and e[1] < 0)]
    seen = set()
    for edges in combinations(pool, nedges):
        touched = {v for e in edges for v in e}
        if len(touched) != len(verts):
            continue
        comps = _components(verts, edges)
        if comps is None or not accept(comps):
            continue
        seen.add(_canonical(edges, comps))
    return seen


@lru_cache(maxsize=None)
def enumerate_A1(k: int, h: int) -> int:
    """|A_1(k, h)| by exhaustive search.

    Forests on labeled 1..k+1 plus h unlabeled vertices with h+1 trees:
    1 and 2 share a tree with no unlabeled vertex, every other tree holds
    exactly one unlabeled vertex.
    """
    if not 0 <= h <= k - 1:
        raise ValueError(f"need 0 <= h <= k-1, got k={k}, h={h}")

    def accept(comps):
        for c in comps:
            unl = sum(1 for v in c if v < 0)
            if 1 in c:
                if 2 not in c or unl:
                    return False
            elif unl != 1:
                return False
        return True

    return len(_forest_classes(range(1, k + 2), range(-1, -h - 1, -1), k, accept))


@lru_cache(maxsize=None)
def enumerate_A0(k: int, h: int) -> int:
    """|A_0(k, h)|: forests on labeled 1..k plus h+1 unlabeled roots, one root per tree."""
    if not 0 <= h <= k - 1:
        raise ValueError(f"need 0 <= h <= k-1, got k={k}, h={h}")

    def accept(comps):
        return all(sum(1 for v in c if v < 0) == 1 for c in comps)

    return len(_forest_classes(range(1, k + 1), range(-1, -h - 2, -1), k, accept))


# -- the B(k, h) triangle -----------------------------------------------------


@lru_cache(maxsize=None)
def b_row(k: int) -> tuple:
    """B(k, 0..k-1): coefficients of x^(k-1) in the basis (x-k-1)_h.

    Evaluating at x = k+1+t kills every (x-k-1)_h with h > t, which makes
    the system lower triangular with diagonal t!.
    """
    if k < 1:
        raise ValueError("rows start at k = 1")
    row = []
    for t in range(k):
        rest = (k + 1 + t) ** (k - 1) - sum(b * falling_factorial(t, h) for h, b in enumerate(row))
        q = Fraction(rest, factorial(t))
        if q.denominator != 1:
            raise ArithmeticError(f"non-integral B({k},{t}) = {q}")
        row.append(q.numerator)
    return tuple(row)


def b_table(k_max: int) -> dict:
    """{k: (B(k,0), ..., B(k,k-1))} for 1 <= k <= k_max."""
    if k_max > 12:
        raise ValueError("k_max above 12 is not supported")
    return {k: b_row(k) for k in range(1, k_max + 1)}


def b_recurrence_row(k: int, prev) -> tuple:
    """One step of B(k,h) = B(k-1,h-1) + (1+2h+k)B(k-1,h) + (1+h)(1+h+k)B(k-1,h+1)."""

    def B(h):
        return prev[h] if 0 <= h < len(prev) else 0

    return tuple(B(h - 1) + (1 + 2 * h + k) * B(h) + (1 + h) * (1 + h + k) * B(h + 1) for h in range(k))


def b_recurrence_comparison(k_max: int) -> list:
    """Per k: (k, basis row, recurrence row built from the basis row at k-1, agree).

    The k = 1 step starts from B(0, h) = delta_{0,h}.
    """
    out = []
    prev = (1,)
    for k in range(1, k_max + 1):
        basis = b_row(k)
        rec = b_recurrence_row(k, prev)
        out.append((k, basis, rec, basis == rec))
        prev = basis
    return out


# -- labeled forests on 1..n ---------------------------------------------


def _labeled_forests(k, n, nb, accept, shift=0):
    """Edge sets of size k on 1..n touching all of 1..nb, grouped by h = extra vertices - shift."""
    by_h = {}
    for edges in combinations(combinations(range(1, n + 1), 2), k):
        touched = {v for e in edges for v in e}
        if not all(v in touched for v in range(1, nb + 1)):
            continue
        comps = _components(sorted(touched), edges)
        if comps is None or not accept(comps, nb):
            continue
        h = len(touched) - nb - shift
        by_h[h] = by_h.get(h, 0) + 1
    return by_h


def _accept_a1(comps, nb):
    for c in comps:
        extra = sum(1 for v in c if v > nb)
        if 1 in c:
            if 2 not in c or extra:
                return False
        elif extra != 1:
            return False
    return True


def _accept_a0(comps, nb):
    return all(sum(1 for v in c if v > nb) == 1 for c in comps)


def forest_count_check(k: int, n: int, variant: str) -> VerificationReport:
    """Weighted class counts and direct labeled enumeration against the closed forms.

    A1-total: sum_h |A_1(k,h)| (n-k-1)_h = n^(k-1)
    A0-total: sum_h |A_0(k,h)| (n-k)_(h+1) = n^(k-1) (n-k)
    """
    if variant == "A1-total":
        if n < k + 1:
            raise ValueError("A1-total needs n >= k+1")
        weighted = {h: enumerate_A1(k, h) * falling_factorial(n - k - 1, h) for h in range(k)}
        direct = _labeled_forests(k, n, k + 1, _accept_a1)
        target = n ** (k - 1)
    elif variant == "A0-total":
        if n <= k:
            raise ValueError("A0-total needs n > k")
        weighted = {h: enumerate_A0(k, h) * falling_factorial(n - k, h + 1) for h in range(k)}
        direct = _labeled_forests(k, n, k, _accept_a0, shift=1)
        target = n ** (k - 1) * (n - k)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    wsum = sum(weighted.values())
    dsum = sum(direct.values())
    per_h = all(direct.get(h, 0) == w for h, w in weighted.items()) and set(direct) <= set(weighted)
    holds = wsum == target and dsum == target and per_h
    notes = [f"weighted={wsum}", f"direct={dsum}", f"per_h={ {h: direct.get(h, 0) for h in weighted} }"]
    return VerificationReport(
        "forests", {"k": k, "n": n, "variant": variant}, holds, lhs=dsum, rhs=target, notes=notes
    )


def count_table(k_max: int, enum_max: int = 5) -> list:
    """Rows (k, h, B, |A0|, |A1|, recurrence, agree) for the ``count`` command.

    Class counts are enumerated only for k <= enum_max and are None above it;
    ``agree`` then compares the columns that are present.
    """
    if k_max > 8:
        raise ValueError("k_max above 8 is not supported")
    comparison = {k: rec for k, _, rec, _ in b_recurrence_comparison(k_max)}
    rows = []
    for k in range(1, k_max + 1):
        basis = b_row(k)
        for h in range(k):
            if k <= enum_max:
                a0, a1 = enumerate_A0(k, h), enumerate_A1(k, h)
            else:
                a0 = a1 = None
            rec = comparison[k][h]
            agree = all(v == basis[h] for v in (a0, a1, rec) if v is not None)
            rows.append((k, h, basis[h], a0, a1, rec, agree))
    return rows
