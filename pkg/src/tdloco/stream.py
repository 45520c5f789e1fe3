"""Bridging codewords into a self-clocked GF(4) stream and splitting it back."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import ConstraintViolation, FramingError
from .symbols import Gf4, contains_forbidden


def bridge_symbol(prev_rms: int, next_lms: int) -> Gf4:
    """``a2`` when both neighbours are ``a2``, otherwise ``0``."""
    if prev_rms == Gf4.ALPHA2 and next_lms == Gf4.ALPHA2:
        return Gf4.ALPHA2
    return Gf4.ZERO


def _check_clocked(word: Sequence[int], m: int) -> tuple[Gf4, ...]:
    if len(word) != m:
        raise ConstraintViolation(f"codeword length {len(word)} differs from m = {m}")
    word = tuple(Gf4(s) for s in word)
    if contains_forbidden(word):
        raise ConstraintViolation(f"codeword {word!r} contains a2 0 a2")
    if m and (all(s == 0 for s in word) or all(s == 3 for s in word)):
        raise ConstraintViolation("all-0 and all-a2 words are excluded for self-clocking")
    return word


def iter_assemble(codewords: Iterable[Sequence[int]]) -> Iterator[Gf4]:
    """Yield the bridged stream lazily.

    A frame (codeword + bridge) is released only once the next codeword
    is known, or at end of input where the trailing bridge is 0.
    """
    pending: tuple[Gf4, ...] | None = None
    m = None
    for word in codewords:
        if m is None:
            m = len(word)
        word = _check_clocked(word, m)
        if pending is not None:
            yield from pending
            yield bridge_symbol(pending[-1], word[0])
        pending = word
    if pending is not None:
        yield from pending
        yield Gf4.ZERO


def assemble(codewords: Iterable[Sequence[int]]) -> tuple[Gf4, ...]:
    return tuple(iter_assemble(codewords))


def disassemble(stream: Sequence[int], m: int) -> list[tuple[Gf4, ...]]:
    """Split into frames of ``m + 1`` and drop each frame's bridge symbol."""
    frame = m + 1
    if len(stream) % frame:
        raise FramingError(f"stream length {len(stream)} is not a multiple of m + 1 = {frame}")
    words = []
    for start in range(0, len(stream), frame):
        word = tuple(Gf4(s) for s in stream[start:start + m])
        if contains_forbidden(word):
            raise ConstraintViolation(f"corrupt frame at symbol {start}: contains a2 0 a2")
        words.append(word)
    return words


def max_run(seq: Sequence) -> int:
    """Length of the longest run of equal consecutive items."""
    best = run = 0
    prev = object()
    for s in seq:
        run = run + 1 if s == prev else 1
        prev = s
        best = max(best, run)
    return best
