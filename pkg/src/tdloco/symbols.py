"""GF(4) / GF(8) alphabets and the mappings between them and grid columns.

Symbols are integer enums whose value is the integer level
(0 for the zero element, ``power + 1`` for a power of the primitive
element).  Ordering by level is the lexicographic symbol order used by
the code, so ``Gf4.ZERO < Gf4.ONE < Gf4.ALPHA < Gf4.ALPHA2``.
"""

from __future__ import annotations

from enum import IntEnum
from typing import Iterable, Sequence


class Gf4(IntEnum):
    ZERO = 0
    ONE = 1
    ALPHA = 2
    ALPHA2 = 3

    def __str__(self) -> str:
        return _GF4_NAMES[self]


class Gf8(IntEnum):
    ZERO = 0
    ONE = 1
    B1 = 2
    B2 = 3
    B3 = 4
    B4 = 5
    B5 = 6
    B6 = 7

    def __str__(self) -> str:
        return _GF8_NAMES[self]


_GF4_NAMES = {Gf4.ZERO: "0", Gf4.ONE: "1", Gf4.ALPHA: "a", Gf4.ALPHA2: "a2"}
_GF8_NAMES = {s: ("0" if s == 0 else "1" if s == 1 else f"b{s - 1}") for s in Gf8}
_GF4_BY_NAME = {v: k for k, v in _GF4_NAMES.items()}
_GF8_BY_NAME = {v: k for k, v in _GF8_NAMES.items()}

# GF(4) symbol -> (GF(8) symbol for selection bit 0, GF(8) symbol for bit 1)
PAIRS: dict[Gf4, tuple[Gf8, Gf8]] = {
    Gf4.ZERO: (Gf8.B1, Gf8.B4),
    Gf4.ONE: (Gf8.ONE, Gf8.B5),
    Gf4.ALPHA: (Gf8.B2, Gf8.B3),
    Gf4.ALPHA2: (Gf8.ZERO, Gf8.B6),
}
_DEMAP = {g8: (g4, bit) for g4, pair in PAIRS.items() for bit, g8 in enumerate(pair)}

Q8: frozenset[tuple[Gf8, Gf8, Gf8]] = frozenset(
    {(Gf8.ZERO, Gf8.B1, Gf8.ZERO), (Gf8.B6, Gf8.B4, Gf8.B6)}
)
Q4: frozenset[tuple[Gf4, Gf4, Gf4]] = frozenset({(Gf4.ALPHA2, Gf4.ZERO, Gf4.ALPHA2)})
FORBIDDEN = (3, 0, 3)


def level_of(symbol: Gf4 | Gf8) -> int:
    """Integer level: 0 for zero, ``gflog + 1`` otherwise."""
    return int(symbol)


def column_of(symbol: Gf8) -> tuple[int, int, int]:
    """Big-endian 3-bit expansion of the level; first bit is the top cell."""
    v = int(Gf8(symbol))
    return (v >> 2) & 1, (v >> 1) & 1, v & 1


def symbol_of(column: Sequence[int]) -> Gf8:
    if len(column) != 3 or any(b not in (0, 1) for b in column):
        raise ValueError(f"a column is three bits, got {tuple(column)!r}")
    top, mid, bot = (int(b) for b in column)
    return Gf8((top << 2) | (mid << 1) | bot)


def demap(symbol: Gf8) -> tuple[Gf4, int]:
    """Split a GF(8) symbol into its GF(4) representative and selection bit."""
    return _DEMAP[Gf8(symbol)]


def remap(symbol: Gf4, bit: int) -> Gf8:
    if bit not in (0, 1):
        raise ValueError(f"selection bit must be 0 or 1, got {bit!r}")
    return PAIRS[Gf4(symbol)][bit]


def contains_forbidden(seq: Sequence[int]) -> bool:
    """True iff ``seq`` has a consecutive ``a2 0 a2`` triple."""
    return any(
        seq[i] == 3 and seq[i + 1] == 0 and seq[i + 2] == 3 for i in range(len(seq) - 2)
    )


def parse_gf4(text: str | Iterable[str]) -> tuple[Gf4, ...]:
    """Parse whitespace-separated GF(4) tokens (``0 1 a a2``)."""
    tokens = text.split() if isinstance(text, str) else list(text)
    try:
        return tuple(_GF4_BY_NAME[t] for t in tokens)
    except KeyError as exc:
        raise ValueError(f"unknown GF(4) token {exc.args[0]!r}") from None


def parse_gf8(text: str | Iterable[str]) -> tuple[Gf8, ...]:
    tokens = text.split() if isinstance(text, str) else list(text)
    try:
        return tuple(_GF8_BY_NAME[t] for t in tokens)
    except KeyError as exc:
        raise ValueError(f"unknown GF(8) token {exc.args[0]!r}") from None


def format_symbols(symbols: Iterable[int], field: int = 4) -> str:
    names = _GF4_NAMES if field == 4 else _GF8_NAMES
    cls = Gf4 if field == 4 else Gf8
    return " ".join(names[cls(s)] for s in symbols)
