"""Builders for the patterns that recur in the verification suites."""

from __future__ import annotations

import string

from .dsl import parse_pattern
from .data import bundled_poset
from .pattern import Gap, PopPattern, concat
from .poset import Poset, flat_poset


def classical(text: str) -> PopPattern:
    """A classical or generalized pattern such as ``"2-1-3"`` or ``"1~23"``."""
    return parse_pattern(text)


def fig_pattern(text: str, poset_file: str) -> PopPattern:
    return parse_pattern(text, bundled_poset(poset_file))


def flat_pattern(k: int, l: int = 0, dashed: bool = False) -> PopPattern:
    """The segmented pattern ``a1..ak a a(k+1)..a(k+l)`` over the flat poset on k+l tops.

    With ``l == 0`` this is ``a a1..ak`` (bottom first).  ``dashed`` puts a
    FREE gap right after the bottom letter, giving ``a-a1..ak``.
    """
    if l == 0:
        poset = flat_poset(k)
        letters = ["a"] + [f"a{i}" for i in range(1, k + 1)]
        gaps = [Gap.ADJ] * k
        if dashed:
            gaps[0] = Gap.FREE
        return PopPattern(poset, letters, gaps)
    if dashed:
        raise ValueError("dashed form is only defined with the bottom letter first")
    poset = flat_poset(k + l)
    letters = [f"a{i}" for i in range(1, k + 1)] + ["a"] + [f"a{i}" for i in range(k + 1, k + l + 1)]
    return PopPattern(poset, letters)


def peak() -> PopPattern:
    return fig_pattern("1'21''", "peak")


def valley() -> PopPattern:
    return fig_pattern("2'12''", "valley")


def _zigzag(k: int, first_down: bool) -> PopPattern:
    labels = list(string.ascii_lowercase[:k])
    rel = []
    for i in range(k - 1):
        down = (i % 2 == 0) == first_down
        a, b = labels[i], labels[i + 1]
        rel.append((b, a) if down else (a, b))
    return PopPattern(Poset(labels, rel), labels)


def alternating_pattern(k: int) -> PopPattern:
    """Segmented pattern a1 > a2 < a3 > ... of length k."""
    return _zigzag(k, first_down=True)


def reverse_alternating_pattern(k: int) -> PopPattern:
    """Segmented pattern a1 < a2 > a3 < ... of length k."""
    return _zigzag(k, first_down=False)


def counimodal_pattern(k: int, j: int, free: bool = False) -> PopPattern:
    """s1 > s2 > ... > sj < ... < sk; unless ``free``, s1 is also the largest letter."""
    if not 2 <= j <= k:
        raise ValueError("need 2 <= j <= k")
    labels = list(string.ascii_lowercase[:k])
    rel = [(labels[i + 1], labels[i]) for i in range(j - 1)]
    rel += [(labels[i], labels[i + 1]) for i in range(j - 1, k - 1)]
    if not free and j < k:
        rel.append((labels[-1], labels[0]))
    return PopPattern(Poset(labels, rel), labels)


def incomparable_pair(a: str = "1", b: str = "1'") -> PopPattern:
    """The segmented pattern 11' of two incomparable letters."""
    return PopPattern(Poset([a, b]), [a, b])


def shuffle_pattern(sigma: PopPattern, tau: PopPattern | None, top: str = "m") -> PopPattern:
    """``sigma-m-tau`` with m above every letter and sigma, tau incomparable."""
    blocks = [sigma, PopPattern(Poset([top]), [top])]
    if tau is not None:
        blocks.append(tau)
    letters = [x for b in blocks for x in b.letters if x != top]
    return concat(*blocks, relations=[(x, top) for x in letters])


def horse_patterns() -> list[PopPattern]:
    return [classical("1-3-2"), classical("1~23")]


def flat_split_pattern(k: int, l: int) -> PopPattern:
    """``a1..ak a a(k+1)..a(k+l)`` for any k, l >= 0 with k + l >= 1 (bottom letter a)."""
    if k < 0 or l < 0 or k + l == 0:
        raise ValueError("need k, l >= 0 and k + l >= 1")
    letters = [f"a{i}" for i in range(1, k + 1)] + ["a"] + [f"a{i}" for i in range(k + 1, k + l + 1)]
    return PopPattern(flat_poset(k + l), letters)


def fresh_copy(p: PopPattern, tag: str) -> PopPattern:
    """The same pattern on renamed letters, so copies can be combined incomparably."""
    return p.relabel(lambda x: f"{x}{tag}")
