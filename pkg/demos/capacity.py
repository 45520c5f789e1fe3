"""
Capacity of the two column constraints
======================================

A square-isolation pattern on three tracks is a length-3 pattern of
GF(8) column symbols.  Pairing the eight symbols into four GF(4) classes
turns the two forbidden GF(8) patterns into one GF(4) pattern, at a
small cost in capacity.
"""

import math

import numpy as np

from tdloco import capacity, cardinality

# The reduced transition matrices, and their Perron roots.
q8, q4 = capacity.capacities()
print(f"GF(8) constraint: lambda = {q8.lam:.4f}, {q8.capacity_bits:.4f} bits/column")
print(f"GF(4) constraint: lambda = {q4.lam:.4f}, {q4.capacity_bits:.4f} bits/column")

# Normalising: 3 bits per column; the GF(4) scheme also carries one
# selection bit per column.
print(f"normalised: {q8.normalized:.4f} vs {q4.normalized:.4f}")
print(f"given up: {capacity.normalized_gap(q8, q4):.4f}")

# The same roots come out of the full length-2-state graphs, built only
# from the forbidden patterns.
for name, A in [("GF(4)", capacity.q4_adjacency()), ("GF(8)", capacity.q8_adjacency())]:
    print(name, A.shape, f"{capacity.dominant_eigenvalue(A):.6f}",
          f"numpy: {max(abs(np.linalg.eigvals(A))):.6f}")

# Growth of the code size tracks the GF(4) capacity.
for m in (10, 100, 1000):
    print(m, f"{math.log2(cardinality(m)) / m:.4f}")
