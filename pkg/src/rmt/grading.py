"""Z2-graded basis ordering for the 2^m dimensional module.

Basis states are labeled by subsets of {1..m}, ordered first by cardinality
and then lexicographically, with 1-origin state indices.  The grading of a
state is the parity of its subset's size.
"""

from functools import lru_cache
from itertools import combinations

import numpy as np


@lru_cache(maxsize=None)
def states(m):
    """All subsets of {1..m} in (cardinality, lex) order."""
    if not 1 <= m <= 4:
        raise ValueError("m must be 1..4")
    out = []
    for size in range(m + 1):
        out.extend(combinations(range(1, m + 1), size))
    return tuple(out)


@lru_cache(maxsize=None)
def grading(m):
    """Array of length 2^m: parity of each basis state, indexed from 0."""
    return np.array([len(s) % 2 for s in states(m)], dtype=np.int64)


def state_index(m, subset):
    """1-origin index of a subset of {1..m}."""
    return states(m).index(tuple(sorted(subset))) + 1
