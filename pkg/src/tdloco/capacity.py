"""Constraint capacity from state-transition matrices.

The two reduced transition matrices are stored as literals; the
De Bruijn-style builder regenerates the same constraints from their
forbidden patterns so a transcription slip in either shows up as a
mismatched Perron root.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ConvergenceError
from .symbols import Q4, Q8

T_Q8 = np.array(
    [
        [6, 1, 1, 0, 0],
        [5, 1, 1, 1, 0],
        [5, 1, 1, 0, 1],
        [6, 0, 1, 0, 0],
        [6, 1, 0, 0, 0],
    ],
    dtype=np.int64,
)

T_Q4 = np.array(
    [
        [3, 0, 1],
        [3, 0, 0],
        [2, 1, 1],
    ],
    dtype=np.int64,
)


def dominant_eigenvalue(
    T: Sequence[Sequence[float]] | np.ndarray,
    tol: float = 1e-9,
    max_iter: int = 1_000_000,
    start: np.ndarray | None = None,
) -> float:
    """Perron root of a non-negative irreducible matrix by power iteration.

    Stops once two successive Rayleigh quotients agree to ``tol``
    (relative).  ``start`` must be strictly positive; the default is the
    all-ones vector.
    """
    A = np.asarray(T, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] == 0:
        raise ValueError(f"transition matrix must be square, got shape {A.shape}")
    if (A < 0).any():
        raise ValueError("transition matrix must be non-negative")
    if not A.any():
        raise ValueError("transition matrix is all zeros")

    x = np.ones(A.shape[0]) if start is None else np.asarray(start, dtype=float)
    if x.shape != (A.shape[0],) or (x <= 0).any():
        raise ValueError("start vector must be strictly positive and match the matrix")
    x = x / np.linalg.norm(x)

    prev = None
    for _ in range(max_iter):
        y = A @ x
        lam = float(x @ y)  # x has unit norm
        norm = np.linalg.norm(y)
        if norm == 0:
            raise ValueError("iteration collapsed to zero; matrix is not irreducible")
        x = y / norm
        if prev is not None and abs(lam - prev) <= tol * abs(lam):
            return lam
        prev = lam
    raise ConvergenceError(f"power iteration did not converge in {max_iter} steps")


@dataclass(frozen=True)
class CapacityReport:
    name: str
    lam: float
    capacity_bits: float
    normalized: float


def capacities(tol: float = 1e-9) -> tuple[CapacityReport, CapacityReport]:
    """Reports for the GF(8) constraint and for the overall GF(4) scheme.

    The GF(8) capacity is normalised by 3 bits per symbol; the GF(4) one
    first gains the selection bit, ``(C' + 1) / 3``.
    """
    lam8 = dominant_eigenvalue(T_Q8, tol)
    lam4 = dominant_eigenvalue(T_Q4, tol)
    c8 = math.log2(lam8)
    c4 = math.log2(lam4)
    return (
        CapacityReport("Q8", lam8, c8, c8 / 3),
        CapacityReport("Q4", lam4, c4, (c4 + 1) / 3),
    )


def normalized_gap(q8: CapacityReport, q4: CapacityReport, digits: int = 4) -> float:
    """Difference of the normalised capacities as reported (rounded to ``digits``)."""
    return round(round(q8.normalized, digits) - round(q4.normalized, digits), digits)


def build_constraint_adjacency(
    alphabet_size: int, forbidden: Iterable[Sequence[int]]
) -> np.ndarray:
    """Adjacency over length-2 states: ``xy -> yz`` unless ``xyz`` is forbidden.

    State ``xy`` has row index ``x * q + y``.
    """
    q = int(alphabet_size)
    if q < 1:
        raise ValueError("alphabet must be non-empty")
    bad = set()
    for pat in forbidden:
        pat = tuple(int(s) for s in pat)
        if len(pat) != 3 or any(not 0 <= s < q for s in pat):
            raise ValueError(f"forbidden pattern {pat!r} is not a length-3 word over {q} symbols")
        bad.add(pat)
    A = np.zeros((q * q, q * q), dtype=np.int64)
    for x, y, z in itertools.product(range(q), repeat=3):
        if (x, y, z) not in bad:
            A[x * q + y, y * q + z] = 1
    return A


def q4_adjacency() -> np.ndarray:
    return build_constraint_adjacency(4, Q4)


def q8_adjacency() -> np.ndarray:
    return build_constraint_adjacency(8, Q8)
