"""The triangle B(k,h) and the forest classes it counts.

Run: python3 demos/04_forest_counts.py
"""

from realzeros.exact import falling_factorial
from realzeros.graphs import (
    b_recurrence_comparison,
    b_row,
    count_table,
    enumerate_A0,
    enumerate_A1,
    forest_count_check,
)

# x^(k-1) expanded in the falling-factorial basis (x-k-1)_h
for k in range(1, 7):
    print(k, b_row(k))

k, x = 4, 11
print(sum(b * falling_factorial(x - k - 1, h) for h, b in enumerate(b_row(k))), x ** (k - 1))

# brute-force enumeration of the two forest classes gives the same numbers
print([enumerate_A1(4, h) for h in range(4)], [enumerate_A0(4, h) for h in range(4)])

# the three-term recurrence reproduces every row from k = 2 on; the k = 1 step does not
for k, basis, rec, agree in b_recurrence_comparison(4):
    print(k, basis, rec, "agree" if agree else "disagree")

# labeled forests on 1..n: n^(k-1) and n^(k-1)(n-k)
for variant in ("A1-total", "A0-total"):
    r = forest_count_check(3, 6, variant)
    print(variant, r.holds, r.notes)

for row in count_table(3):
    print(row)
