"""
Counting avoiders
=================

Brute-force counts from the enumerator next to the closed forms.
"""

from circperm import formulas
from circperm.enumerator import count_avoiders, count_avoiders_by_position

print(" n   1324  F(2n-3)   1342  2^(n-1)-(n-1)   1234  2^n+1-2n-C(n,3)")
for n in range(1, 11):
    row = []
    for p in ("1324", "1342", "1234"):
        row += [count_avoiders(n, [p]).count, formulas.closed_form(p, n)]
    print(f"{n:2d} " + "  ".join(f"{v:6d}" for v in row))

# Split the 1234-avoiders on [8] by the position k of the letter 7.
n = 8
brute = count_avoiders_by_position(n, ["1234"])
print("\nk  brute  formula")
for k in range(1, n):
    print(f"{k}  {brute[k]:5d}  {formulas.stratified_1234(n, k):5d}")

# The summation limit as usually printed runs to n-1 and overshoots.
print("\n1324 recurrence, sum to n-2:", [formulas.count_1324_recurrence(n) for n in range(1, 8)])
print("1324 recurrence, sum to n-1:", [formulas.count_1324_recurrence_as_printed(n) for n in range(1, 8)])
