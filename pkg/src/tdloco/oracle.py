"""Brute-force ground truth for small m.

Nothing here touches the closed-form index rule; words are generated by
depth-first extension in symbol order, which emits them already sorted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .symbols import Gf4

MAX_M = 10


def _check_m(m: int, lo: int = 1) -> None:
    if not lo <= m <= MAX_M:
        raise ValueError(f"brute force supports {lo} <= m <= {MAX_M}, got {m}")


def iter_words(m: int) -> Iterator[tuple[int, ...]]:
    """All length-``m`` level tuples without ``3 0 3``, in lexicographic order."""
    _check_m(m)
    word = [0] * m
    stack = [(0, 0)]  # (position, next level to try)
    while stack:
        pos, level = stack.pop()
        if level > 3:
            continue
        stack.append((pos, level + 1))
        word[pos] = level
        if pos >= 2 and word[pos - 2] == 3 and word[pos - 1] == 0 and level == 3:
            continue
        if pos == m - 1:
            yield tuple(word)
        else:
            stack.append((pos + 1, 0))


def enumerate_words(m: int) -> list[tuple[Gf4, ...]]:
    return [tuple(Gf4(s) for s in w) for w in iter_words(m)]


@lru_cache(maxsize=None)
def _rank_table(m: int) -> dict[tuple[int, ...], int]:
    return {w: k for k, w in enumerate(iter_words(m))}


def rank(word: Sequence[int]) -> int:
    """Position of ``word`` in the sorted list of valid words of its length."""
    key = tuple(int(s) for s in word)
    _check_m(len(key))
    try:
        return _rank_table(len(key))[key]
    except KeyError:
        raise ValueError(f"{key!r} is not a valid word") from None


def group_counts(m: int) -> tuple[int, int, int]:
    """Counts of words starting with {0,1,a}, with a2 then nonzero, and with a2 0."""
    _check_m(m, lo=4)
    g1 = g2 = g3 = 0
    for w in iter_words(m):
        if w[0] != 3:
            g1 += 1
        elif w[1] != 0:
            g2 += 1
        else:
            g3 += 1
    return g1, g2, g3


@dataclass
class VerifyReport:
    checks: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(passed for _, passed in self.checks)

    def add(self, name: str, passed: bool) -> None:
        self.checks.append((name, bool(passed)))


def verify(max_m: int = 8) -> VerifyReport:
    """Cross-check cardinalities, index rule and group counts for m <= max_m."""
    from .codec import codeword_of, index_of
    from .enumeration import cardinality, code_params

    _check_m(max_m)
    report = VerifyReport()
    for m in range(1, max_m + 1):
        words = list(iter_words(m))
        report.add(f"N({m}) = {cardinality(m)} matches enumeration", len(words) == cardinality(m))
        if m < 2:
            continue
        params = code_params(m)
        ranks_ok = all(index_of(w, params) == k for k, w in enumerate(words))
        report.add(f"m={m}: index rule equals brute-force rank", ranks_ok)
        inverse_ok = all(codeword_of(k, params) == words[k] for k in range(1, len(words) - 1))
        report.add(f"m={m}: unranking inverts the index rule", inverse_ok)
        if m >= 4:
            n1, n2, n3 = group_counts(m)
            expected = (
                3 * cardinality(m - 1),
                cardinality(m - 1) - cardinality(m - 2),
                3 * cardinality(m - 3),
            )
            report.add(f"m={m}: group counts {n1}, {n2}, {n3}", (n1, n2, n3) == expected)
    return report
