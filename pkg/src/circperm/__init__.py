"""Pattern avoidance in circular permutations.

Brute-force enumeration, closed-form counts and bijections for circular
permutations avoiding a 3- or 4-letter pattern.
"""
from .model import (
    CircularPermutation,
    InvalidInputError,
    OccurrenceWitness,
    Pattern,
    PatternClass,
    UnsupportedPatternError,
    canonicalize,
    contains_circular,
    contains_linear,
    count_occurrences_circular,
    cyclic_rotations,
    occurrences_circular,
    parse_pattern,
    pattern_classes,
    reduce,
    reversal,
)
from .enumerator import (
    AvoiderCount,
    PositionStratum,
    count_avoiders,
    count_avoiders_at_position,
    count_linear_avoiders,
    iter_circular_perms,
    list_avoiders,
)
from .formulas import count_for_pattern, fib, growth_constant

__version__ = "0.1.0"
