"""
Bijections
==========

Bit words on one side, avoiding permutations on the other.
"""

from itertools import product

from circperm import bijections as bj
from circperm.enumerator import list_avoiders

# Bit 1 takes the largest unused letter, bit 0 the smallest.
w = bj.prop1_bits_to_perm((0, 1, 1, 1, 0, 1, 0))
print("0111010 ->", w, "->", bj.prop1_perm_to_bits(w))
print("all 213/231-avoiders of [4]:", sorted(bj.prop1_bits_to_perm(b) for b in product((0, 1), repeat=3)))

# Words of length n-1 that do not have exactly one 1 <-> 1342-avoiders.
n = 5
for u in bj.a_words(n - 1):
    c = bj.thm2_word_to_perm(u)
    print("".join(map(str, u)), "->", " ".join(map(str, c)))
image = sorted(bj.thm2_word_to_perm(u) for u in bj.a_words(n - 1))
print("image equals the avoider list:", image == list_avoiders(n, ["1342"]))

# Fibonacci words of length 2n-4 <-> 1324-avoiders, one recursive step at a time.
for word in bj.g_words(4):
    br = bj.g_decompose(word, 4)
    print("".join(map(str, word)), br.branch, br.k, "->", bj.fib_word_to_1324(word, 4))

# Structural tests of avoidance by the position of n-1.
d = bj.validate_structure_1342((3, 4, 7, 6, 5, 1, 2, 8))
print(d)
