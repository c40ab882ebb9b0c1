"""Deciding whether every zero of a polynomial is real, with exact arithmetic only.

Run: python3 demos/01_certify_real_roots.py
"""

from fractions import Fraction

from realzeros import UniPoly, classify_real_roots, hermite_minors, newton_girard
from realzeros.hermite import hermite_matrix

# x^2 - 3x + 2 = (x-1)(x-2); coefficients go constant term first
p = UniPoly([2, -3, 1])

# power sums of the roots come straight from the coefficients (Newton-Girard),
# so the roots themselves are never computed
ps = newton_girard(p, 2)
print("power sums p0..p2:", ps)  # [2, 3, 5]

# the Hermite matrix is the Hankel matrix of those power sums
print("H =", hermite_matrix(ps))  # [[2, 3], [3, 5]]

# leading minors: all positive <=> all zeros real and distinct
print("minors:", hermite_minors(p))  # [1, 2, 1]
print(classify_real_roots(p).verdict.value)

# x^2 + 1 has a negative second minor, so a complex pair is present
r = classify_real_roots(UniPoly([1, 0, 1]))
print(r.verdict.value, "first negative minor at k =", r.witness, r.minors)

# a double root makes the last minor vanish; the test cannot decide then
r = classify_real_roots(UniPoly([1, -2, 1]))
print(r.verdict.value, r.minors)

# rational coefficients stay exact end to end
q = UniPoly.from_roots([Fraction(-1, 3), Fraction(1, 2), 4])
print(q.coeffs)
print(classify_real_roots(q).verdict.value, [str(m) for m in hermite_minors(q)])

# x^5 + 1 has complex zeros, yet no minor is negative: the zero minors in the
# middle leave the sign test undecided, and it says so
r = classify_real_roots(UniPoly([1, 0, 0, 0, 0, 1]))
print("x^5 + 1:", r.verdict.value, r.minors)

# x^3 - x - 1 has one real zero; its third minor is negative
r = classify_real_roots(UniPoly([-1, -1, 0, 1]))
print("x^3 - x - 1:", r.verdict.value, r.minors)
