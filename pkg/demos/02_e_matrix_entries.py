"""The matrix E(n): entries as quadratic forms in e_0, e_1, ... with n-linear coefficients.

Run: python3 demos/02_e_matrix_entries.py
"""

from realzeros import MSpec, delta_e, e_entry_via_M, m_in_e_basis
from realzeros.ematrix import (
    EBasisQuadratic,
    coefficient_ring,
    delta_e_in_coefficients,
    e_entry_direct,
    e_entry_terms,
    m_sum_of_squares,
)
from realzeros.hermite import UniPoly

# the top-left 3x3 block of E(n)
for r in range(1, 4):
    print(" | ".join(e_entry_via_M(r, s).to_text() for s in range(1, 4)))

# every entry is a nonnegative combination of the functions M(m2, m1)
print("E[3,3] =", " + ".join(f"{w}*{spec}" for w, spec in e_entry_terms(3, 3)))

# M(1,0) is n*p2 - p1^2, which is a sum of squares of root differences
print("M(1,0) =", m_in_e_basis(MSpec(1, 0)))
print("as squares, n=3:", m_sum_of_squares(MSpec(1, 0), 3))

# the compact notation is accepted too
q = EBasisQuadratic.parse("(4n-12)e_2e_3 -6ne_1e_4 - 10n e_0 e_5")
print(q == e_entry_via_M(2, 3))

# E(2)[1,1] in the coefficients of x^2 + a1 x + a0: the discriminant
print("E(2)[1,1] =", delta_e_in_coefficients(1, 2).to_text(["a0", "a1"]))

# Delta_2(E(3)) for x^3 + a2 x^2 + a1 x + a0 is the classical cubic certificate
print("Delta_2(E(3)) =", delta_e_in_coefficients(2, 3).to_text(["a0", "a1", "a2"]))
a0, a1, a2 = coefficient_ring(3)
marik = 4 * (a1 * a1 - 3 * a0 * a2) * (a2 * a2 - 3 * a1) - (a1 * a2 - 9 * a0) ** 2
print("equals 4(a1^2-3a0a2)(a2^2-3a1) - (a1a2-9a0)^2:", marik == delta_e_in_coefficients(2, 3))

# three ways to get a number: symbolic in z, at roots, from coefficients
print(delta_e(2, 3).evaluate((0, 1, 2)), delta_e(2, 3, "at-roots", [0, 1, 2]),
      delta_e(2, 3, "from-poly", UniPoly([0, 2, -3, 1])))

# the pair-sum definition agrees with the e-basis form
print(e_entry_direct(2, 3, 5) == e_entry_via_M(2, 3).to_polynomial(5))
