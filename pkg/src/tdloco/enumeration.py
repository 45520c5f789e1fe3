"""Cardinalities, inner sums, message lengths and rates.

Everything here is exact: Python integers for the counts, ``Fraction`` for
the rates.  Rounding happens only when a caller formats a value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

_card_table: list[int] = [1, 4, 16]


def _extend_to(m: int) -> None:
    t = _card_table
    while len(t) <= m:
        i = len(t)
        t.append(4 * t[i - 1] - t[i - 2] + 3 * t[i - 3])


def cardinality(m: int) -> int:
    """Number of length-``m`` GF(4) words avoiding ``a2 0 a2``.

    ``N(2) = 16`` is a base case so the fractional ``N(-1) = 1/3`` of the
    recursion never enters integer arithmetic.
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    _extend_to(m)
    return _card_table[m]


def clocked_cardinality(m: int) -> int:
    """Code size after removing the all-0 and all-a2 words."""
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    return cardinality(m) - 2


def inner_sum(i: int) -> int:
    """Alternating correction ``sum_{j>=0, i-2j>0} (-1)^(j+1) N(i-2j-1)``.

    Applied to a nonzero symbol that follows ``a2``; always <= 0.
    """
    if i < 0:
        raise ValueError(f"i must be non-negative, got {i}")
    total = 0
    j = 0
    while i - 2 * j > 0:
        term = cardinality(i - 2 * j - 1)
        total += term if j % 2 else -term
        j += 1
    return total


def message_length(m: int) -> int:
    """``floor(log2(N(m) - 2))`` via bit length, exact for any size."""
    if m < 2:
        raise ValueError(f"the codec needs m >= 2, got {m}")
    return clocked_cardinality(m).bit_length() - 1


def rate(m: int) -> Fraction:
    """Information bits per written column: message bits over m+1, plus the selection bit."""
    return Fraction(message_length(m), m + 1) + 1


def normalized_rate(m: int) -> Fraction:
    return rate(m) / 3


def k_eff(m: int) -> int:
    """Longest run of identical symbols possible in a bridged stream."""
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    return 2 * m - 1


@dataclass(frozen=True)
class CodeParams:
    m: int
    card: tuple[int, ...]
    inner_sum: tuple[int, ...]
    s_c: int

    @property
    def frame_bits(self) -> int:
        """Input bits consumed per frame: message plus one selection bit per column."""
        return self.s_c + self.m + 1

    @property
    def max_index(self) -> int:
        """Largest index a message can map to (``2**s_c``)."""
        return 1 << self.s_c


@lru_cache(maxsize=None)
def code_params(m: int) -> CodeParams:
    """Precomputed tables for length-``m`` codewords (cached per m)."""
    s_c = message_length(m)
    return CodeParams(
        m=m,
        card=tuple(cardinality(i) for i in range(m + 1)),
        inner_sum=tuple(inner_sum(i) for i in range(m)),
        s_c=s_c,
    )
