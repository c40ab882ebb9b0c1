"""Three statements that do not hold as written, and what does hold instead.

Run: python3 demos/05_checks_that_fail.py
"""

from realzeros.ematrix import e_entry_structure
from realzeros.graphs import cancellation_check, tournament_property_check
from realzeros.identities import hypergeom_shifted_check, verify_hypergeom_identity

# 1. the |I| >= 2 part of the selection sum does not cancel for k = 2
r = cancellation_check(2, 3)
print("cancels:", r.holds)
print("residue:", r.lhs_text[:60], "...")
print(r.notes)  # the vertex-disjoint multisets alone do cancel

# the tournament fact used alongside it is fine
print([tournament_property_check(v).holds for v in range(2, 6)])

# 2. a terminating hypergeometric sum: the product form with (2m+k) is off by two
for m, i, k in [(1, 0, 0), (2, 0, 1), (3, 4, 2)]:
    a = verify_hypergeom_identity(m, i, k)
    b = hypergeom_shifted_check(m, i, k)
    print((m, i, k), "2m+k:", a.holds, a.lhs, a.rhs, "| 2m+k+2:", b.holds, b.rhs)

# 3. E[m+1, m+k+1] has leading term (m+1)!(m+k)!(n-m-k-1) e_{m+1} e_{m+k+1};
#    the coefficient m!k!(n-m-k) sits on e_m e_{m+k} inside M(m, k), not inside E
s = e_entry_structure(1, 1)
print(s.entry)
print("E leading", s.leading, s.leading_coefficient, "ok:", s.holds)
print("e_m e_(m+k) in E:", s.literal_coefficient, "wanted", s.literal_expected)
print("M(1,1) leading:", s.m_leading_coefficient)
