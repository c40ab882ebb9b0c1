"""Comparing minors of E(n) with minors of the Hermite matrix, symbolically.

Run: python3 demos/03_minor_identities.py
"""

from realzeros.identities import (
    main_relation_constant,
    shifted_prefactor,
    stated_prefactor,
    verify_alternating_vandermonde,
    verify_e_minor_formula,
    verify_main_relation,
    verify_minor_equivalence,
    verify_schur_minor,
)

# det H(lambda; n) as a sum of Schur polynomials times squared Vandermondes
print(verify_schur_minor((0, 2), 2).holds, verify_schur_minor((1, 2, 4), 4).holds)

print(verify_alternating_vandermonde(3).holds)

# Delta_k(E(n)) against n^(k-1) Delta_{k+1}(H(n)): the ratio is a constant c(k)
for k in (1, 2, 3):
    r = verify_main_relation(k, k + 2)
    print(f"k={k} n={k + 2}: constant ratio {r.holds}, c = {r.constant}")
    for note in r.notes[1:]:
        print("   ", note)

# c(k) at larger k, from a single exact evaluation
print("c(1..5):", [main_relation_constant(k) for k in range(1, 6)])
print("(prod (i-1)!)^2:", [shifted_prefactor(k) for k in range(1, 6)])
print("(prod i!)^2:    ", [stated_prefactor(k) for k in range(1, 6)])

# the two halves of the argument separately
r = verify_e_minor_formula(2, 4)
print("Delta_2(E(4)) / sum det(R3)^2 =", r.constant)
print("sum det(R3)^2 == n^(k-1) sum D^2:", verify_minor_equivalence(2, 4).holds)

# reports serialize to one JSON line each
print(verify_main_relation(2, 3).to_json())
