"""Lexicographic index rule and the message <-> codeword maps over GF(4).

Codewords are sequences of levels, most significant symbol first, i.e.
``word[0]`` is ``c_{m-1}`` and ``word[-1]`` is ``c_0``.
"""

from __future__ import annotations

from typing import Sequence

from .enumeration import CodeParams
from .errors import ConstraintViolation, IndexRangeError
from .symbols import Gf4, contains_forbidden

Codeword = tuple[Gf4, ...]


def _check_word(word: Sequence[int], params: CodeParams) -> None:
    if len(word) != params.m:
        raise ConstraintViolation(
            f"not a codeword: length {len(word)} but m = {params.m}"
        )
    if any(not 0 <= int(s) <= 3 for s in word):
        raise ConstraintViolation(f"not a codeword: symbol levels out of range in {word!r}")
    if contains_forbidden(word):
        raise ConstraintViolation("not a codeword: contains a2 0 a2")


def index_of(word: Sequence[int], params: CodeParams) -> int:
    """Zero-based lexicographic index among all valid words of length m.

    Each nonzero symbol contributes ``a_i * N(i)``; when the more
    significant neighbour is ``a2`` the precomputed inner sum is added.
    """
    _check_word(word, params)
    m = params.m
    card, inner = params.card, params.inner_sum
    g = 0
    prev = 0  # c_m is defined as 0
    for pos, sym in enumerate(word):
        i = m - 1 - pos
        a = int(sym)
        if a:
            g += a * card[i]
            if prev == 3:
                g += inner[i]
        prev = a
    return g


def codeword_of(g: int, params: CodeParams) -> Codeword:
    """Inverse of :func:`index_of` on the clocked range ``1 .. N(m)-2``."""
    m = params.m
    card, inner = params.card, params.inner_sum
    if not 1 <= g <= card[m] - 2:
        raise IndexRangeError(f"index {g} outside the clocked range [1, {card[m] - 2}]")
    r = g
    prev = 0
    out = []
    for i in range(m - 1, -1, -1):
        r_new = r - inner[i] if prev == 3 else r
        if r_new < card[i]:
            v = 0
        else:
            v = min(3, r_new // card[i])
            r = r_new - v * card[i]
        out.append(Gf4(v))
        prev = v
    return tuple(out)


def encode_message(bits: Sequence[int], params: CodeParams) -> Codeword:
    """Map ``s_c`` message bits (big-endian) to a clocked codeword.

    The index is ``decimal(bits) + 1``, which skips the all-0 word and
    never reaches the all-a2 word.
    """
    if len(bits) != params.s_c:
        raise ValueError(f"message must be {params.s_c} bits for m = {params.m}, got {len(bits)}")
    value = 0
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"message bits must be 0 or 1, got {b!r}")
        value = (value << 1) | int(b)
    return codeword_of(value + 1, params)


def decode_codeword(word: Sequence[int], params: CodeParams) -> tuple[int, ...]:
    g = index_of(word, params)
    if not 1 <= g <= params.max_index:
        raise IndexRangeError(
            f"index out of message range: {g} not in [1, {params.max_index}]"
        )
    value = g - 1
    s_c = params.s_c
    return tuple((value >> (s_c - 1 - k)) & 1 for k in range(s_c))
