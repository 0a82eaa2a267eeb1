"""
Circular containment
====================

A circular permutation is stored as the rotation that ends in its largest
letter.  An occurrence of a pattern may wrap around the end of that word.
"""

from circperm import (
    canonicalize,
    contains_circular,
    count_occurrences_circular,
    cyclic_rotations,
    occurrences_circular,
    pattern_classes,
)

# Any rotation of the arrangement gives the same canonical word.
c = canonicalize((3, 1, 7, 5, 6, 4, 2))
print("canonical word:", c)

# 5 6 4 2 3 1 7 holds exactly one 1234, and it wraps: 2 3 | 5 6.
print("occurrences of 1234:", count_occurrences_circular(c, "1234"))
for wit in occurrences_circular(c, "1234"):
    print("  positions", wit.positions, "letters", [c[i - 1] for i in wit.positions])

# Containing a pattern circularly is the same as containing any of its
# rotations, so the 24 patterns of length 4 fall into 6 orbits.
print("rotations of 1324:", [str(q) for q in cyclic_rotations("1324")])
for cls in pattern_classes(4):
    print(f"orbit {cls.representative}  reversal partner {cls.reversal_partner_representative}")

# Only the identity avoids 132.
print("identity avoids 132:", not contains_circular(tuple(range(1, 9)), "132"))
