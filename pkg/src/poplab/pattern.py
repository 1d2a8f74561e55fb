"""Partially ordered patterns and their occurrences in sequences.

A pattern is a word of distinct poset elements together with a gap
constraint between each pair of neighbouring letters and optional anchors
at either end.  An occurrence in a sequence ``s`` is an increasing tuple of
positions such that

* the gap constraints hold (``ADJ``: consecutive positions, ``FREE``: any
  distance, ``STRICT``: at least one position in between),
* anchors hold (first position is 0, last position is ``len(s) - 1``),
* whenever letter ``a`` is below letter ``b`` in the poset the entry of
  ``s`` matched to ``a`` is strictly smaller than the one matched to ``b``.

Positions are 0-based throughout the Python API.  Matching only ever
compares entries with ``<``, so the same code serves permutations and words
(equal word letters never satisfy a strict relation but are fine for
incomparable pattern letters).
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .poset import Poset, PosetError


class PatternError(ValueError):
    """Raised for invalid patterns or unsupported pattern kinds."""


class Gap(enum.Enum):
    ADJ = "ADJ"
    FREE = "FREE"
    STRICT = "STRICT"


_MIN_STEP = {Gap.ADJ: 1, Gap.FREE: 1, Gap.STRICT: 2}

# Set POPLAB_VERIFY=1 to cross-check greedy non-overlap counts with the DP.
VERIFY = os.environ.get("POPLAB_VERIFY", "") not in ("", "0")


@dataclass(frozen=True)
class _Compiled:
    m: int
    steps: tuple[int, ...]
    exact: tuple[bool, ...]
    # below[j]: (i, sign) for i < j; sign True means s[i] < s[j] required
    below: tuple[tuple[tuple[int, bool], ...], ...]
    above: tuple[tuple[tuple[int, bool], ...], ...]
    pairs: tuple[tuple[int, int], ...]
    head: tuple[int, ...]   # minimal offset of letter j from letter 0
    tail: tuple[int, ...]   # minimal offset of the last letter from letter j
    segmented: bool


@dataclass(frozen=True)
class PopPattern:
    poset: Poset
    letters: tuple[str, ...]
    gaps: tuple[Gap, ...] = field(default=None)
    anchored_left: bool = False
    anchored_right: bool = False

    def __post_init__(self):
        letters = tuple(str(x) for x in self.letters)
        if not letters:
            raise PatternError("a pattern needs at least one letter")
        seen = set()
        for x in letters:
            if x not in self.poset:
                raise PatternError(f"letter {x!r} is not an element of the poset")
            if x in seen:
                raise PatternError(f"letter {x!r} repeats")
            seen.add(x)
        gaps = self.gaps
        if gaps is None:
            gaps = (Gap.ADJ,) * (len(letters) - 1)
        try:
            gaps = tuple(g if isinstance(g, Gap) else Gap(str(g).upper()) for g in gaps)
        except ValueError as exc:
            raise PatternError(str(exc)) from None
        if len(gaps) != len(letters) - 1:
            raise PatternError(f"{len(letters)} letters need {len(letters) - 1} gaps, got {len(gaps)}")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "gaps", gaps)
        object.__setattr__(self, "anchored_left", bool(self.anchored_left))
        object.__setattr__(self, "anchored_right", bool(self.anchored_right))

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def segmented(self) -> bool:
        return all(g is Gap.ADJ for g in self.gaps)

    @cached_property
    def compiled(self) -> _Compiled:
        m = len(self.letters)
        sub = self.poset.restrict(self.letters)
        pos = {x: i for i, x in enumerate(self.letters)}
        pairs = tuple(sorted((pos[a], pos[b]) for a, b in sub.covers()))
        below = [[] for _ in range(m)]
        above = [[] for _ in range(m)]
        for a, b in pairs:
            lo, hi = min(a, b), max(a, b)
            # s[a] < s[b]; seen from hi, the partner lo must be smaller iff lo == a
            below[hi].append((lo, lo == a))
            above[lo].append((hi, lo == a))
        steps = tuple(_MIN_STEP[g] for g in self.gaps)
        head = [0]
        for st in steps:
            head.append(head[-1] + st)
        tail = [head[-1] - h for h in head]
        return _Compiled(
            m=m,
            steps=steps,
            exact=tuple(g is Gap.ADJ for g in self.gaps),
            below=tuple(tuple(x) for x in below),
            above=tuple(tuple(x) for x in above),
            pairs=pairs,
            head=tuple(head),
            tail=tuple(tail),
            segmented=self.segmented,
        )

    # -- trivial bijections ---------------------------------------------------

    def reverse(self) -> "PopPattern":
        return PopPattern(self.poset, self.letters[::-1], self.gaps[::-1],
                          anchored_left=self.anchored_right, anchored_right=self.anchored_left)

    def complement(self) -> "PopPattern":
        return PopPattern(self.poset.dual(), self.letters, self.gaps,
                          self.anchored_left, self.anchored_right)

    def with_poset(self, poset: Poset) -> "PopPattern":
        return PopPattern(poset, self.letters, self.gaps, self.anchored_left, self.anchored_right)

    def relabel(self, mapping) -> "PopPattern":
        """Rename letters (and the poset) by a dict or a function."""
        f = mapping.get if isinstance(mapping, dict) else mapping
        rename = {x: (f(x) if f(x) is not None else x) for x in self.poset.elements}
        poset = Poset([rename[x] for x in self.poset.elements],
                      [(rename[a], rename[b]) for a, b in self.poset.relations()])
        return PopPattern(poset, [rename[x] for x in self.letters], self.gaps,
                          self.anchored_left, self.anchored_right)

    def __str__(self) -> str:
        from .dsl import print_pattern
        return print_pattern(self)


def concat(*blocks: PopPattern, gap: Gap = Gap.FREE, relations: Iterable[Sequence[str]] = ()) -> PopPattern:
    """Join patterns with ``gap`` between blocks over the disjoint sum of their posets.

    Block posets are restricted to the letters actually used.  Extra
    ``relations`` between letters of different blocks may be supplied.
    """
    if not blocks:
        raise PatternError("nothing to concatenate")
    poset = None
    letters: list[str] = []
    gaps: list[Gap] = []
    for i, b in enumerate(blocks):
        if b.anchored_left and i > 0 or b.anchored_right and i < len(blocks) - 1:
            raise PatternError("anchors are only allowed at the ends of the combined pattern")
        sub = b.poset.restrict(b.letters)
        try:
            poset = sub if poset is None else poset.disjoint_sum(sub)
        except PosetError as exc:
            raise PatternError(str(exc)) from None
        if letters:
            gaps.append(gap)
        letters.extend(b.letters)
        gaps.extend(b.gaps)
    relations = list(relations)
    if relations:
        poset = poset.with_relations(relations)
    return PopPattern(poset, letters, gaps, blocks[0].anchored_left, blocks[-1].anchored_right)


# -- matching -----------------------------------------------------------------

def _ok(s, cp: _Compiled, pos: list[int], j: int, v) -> bool:
    for i, smaller in cp.below[j]:
        w = s[pos[i]]
        if smaller:
            if not w < v:
                return False
        elif not v < w:
            return False
    return True


def _iter_occurrences(cp: _Compiled, s: Sequence, left: bool, right: bool) -> Iterator[tuple[int, ...]]:
    n, m = len(s), cp.m
    if m > n:
        return
    pos = [0] * m
    last_start = n - 1 - cp.tail[0]

    def place(j: int, lo: int, hi: int):
        for p in range(lo, hi + 1):
            v = s[p]
            if not _ok(s, cp, pos, j, v):
                continue
            pos[j] = p
            if j == m - 1:
                if not right or p == n - 1:
                    yield tuple(pos)
                continue
            nlo = p + cp.steps[j]
            nhi = nlo if cp.exact[j] else n - 1 - cp.tail[j + 1]
            if nlo <= nhi:
                yield from place(j + 1, nlo, nhi)

    yield from place(0, 0, 0 if left else last_start)


def occurrences(p: PopPattern, s: Sequence) -> list[tuple[int, ...]]:
    """All occurrences of ``p`` in ``s`` as sorted 0-based position tuples."""
    return list(_iter_occurrences(p.compiled, s, p.anchored_left, p.anchored_right))


def _window_ok(s, pairs, start) -> bool:
    for a, b in pairs:
        if not s[start + a] < s[start + b]:
            return False
    return True


def count_occurrences(p: PopPattern, s: Sequence) -> int:
    cp = p.compiled
    if cp.segmented:
        n, m = len(s), cp.m
        if m > n:
            return 0
        lo = 0
        hi = n - m
        if p.anchored_left:
            hi = min(hi, 0)
        if p.anchored_right:
            lo = max(lo, n - m)
        pairs = cp.pairs
        return sum(1 for st in range(lo, hi + 1) if _window_ok(s, pairs, st))
    return sum(1 for _ in _iter_occurrences(cp, s, p.anchored_left, p.anchored_right))


def contains(p: PopPattern, s: Sequence) -> bool:
    cp = p.compiled
    if cp.segmented:
        n, m = len(s), cp.m
        if m > n:
            return False
        lo, hi = 0, n - m
        if p.anchored_left:
            hi = min(hi, 0)
        if p.anchored_right:
            lo = max(lo, n - m)
        pairs = cp.pairs
        return any(_window_ok(s, pairs, st) for st in range(lo, hi + 1))
    return next(_iter_occurrences(cp, s, p.anchored_left, p.anchored_right), None) is not None


def avoids(p: PopPattern, s: Sequence) -> bool:
    return not contains(p, s)


def avoids_all(patterns: Iterable[PopPattern], s: Sequence) -> bool:
    return not any(contains(p, s) for p in patterns)


word_contains = contains


def word_occurrences(p: PopPattern, w: Sequence[int]) -> int:
    """Number of occurrences of ``p`` in a word (letters may repeat)."""
    return count_occurrences(p, w)


# -- incremental matching used by prefix enumeration ---------------------------

def ends_at(p: PopPattern, s: Sequence, e: int, total: int) -> bool:
    """Whether ``s[:e+1]`` has an occurrence of ``p`` whose last position is ``e``.

    ``total`` is the final length of the sequence being built; it only
    matters for right-anchored patterns.
    """
    cp = p.compiled
    m = cp.m
    if p.anchored_right and e != total - 1:
        return False
    if e < cp.head[-1]:
        return False
    if cp.segmented:
        st = e - m + 1
        if p.anchored_left and st != 0:
            return False
        return _window_ok(s, cp.pairs, st)
    return _any_ending(cp, s, e, p.anchored_left)


def _any_ending(cp: _Compiled, s: Sequence, e: int, left: bool) -> bool:
    m = cp.m
    pos = [0] * m
    pos[m - 1] = e

    def ok(j, v):
        for i, smaller in cp.above[j]:
            w = s[pos[i]]
            if smaller:
                if not v < w:
                    return False
            elif not w < v:
                return False
        return True

    def place(j: int) -> bool:
        hi = pos[j + 1] - cp.steps[j]
        lo = max(hi if cp.exact[j] else 0, cp.head[j])
        if j == 0 and left:
            if lo > 0 or hi < 0:
                return False
            lo = hi = 0
        for q in range(hi, lo - 1, -1):
            v = s[q]
            if not ok(j, v):
                continue
            pos[j] = q
            if j == 0 or place(j - 1):
                return True
        return False

    if m == 1:
        return not left or e == 0
    return place(m - 2)


# -- quasi-avoidance and non-overlapping occurrences ---------------------------

def _require_segmented(p: PopPattern, what: str, allow_anchors: bool = True):
    if not p.segmented:
        raise PatternError(f"{what} needs a segmented pattern")
    if not allow_anchors and (p.anchored_left or p.anchored_right):
        raise PatternError(f"{what} needs an unanchored pattern")


def quasi_avoids(p: PopPattern, s: Sequence) -> bool:
    """Exactly one occurrence, and it occupies the last ``len(p)`` positions."""
    _require_segmented(p, "quasi-avoidance", allow_anchors=False)
    n, m = len(s), len(p)
    if m > n:
        return False
    pairs = p.compiled.pairs
    if not _window_ok(s, pairs, n - m):
        return False
    return not any(_window_ok(s, pairs, st) for st in range(n - m))


def _window_starts(p: PopPattern, s: Sequence) -> list[int]:
    return [occ[0] for occ in _iter_occurrences(p.compiled, s, p.anchored_left, p.anchored_right)]


def _greedy_nonoverlap(starts: list[int], m: int) -> int:
    # windows share a length, so earliest start == earliest right endpoint
    taken, free_from = 0, 0
    for st in starts:
        if st >= free_from:
            taken += 1
            free_from = st + m
    return taken


def _dp_nonoverlap(starts: list[int], m: int, n: int) -> int:
    is_start = [False] * n
    for st in starts:
        is_start[st] = True
    best = [0] * (n + 1)
    for i in range(1, n + 1):
        best[i] = best[i - 1]
        if i >= m and is_start[i - m]:
            best[i] = max(best[i], best[i - m] + 1)
    return best[n]


def max_nonoverlapping(p: PopPattern, s: Sequence, check: bool | None = None) -> int:
    """Maximum number of pairwise disjoint occurrences of a segmented pattern."""
    _require_segmented(p, "non-overlapping occurrence counting")
    m = len(p)
    starts = _window_starts(p, s)
    best = _greedy_nonoverlap(starts, m)
    if check if check is not None else VERIFY:
        dp = _dp_nonoverlap(starts, m, len(s))
        if dp != best:
            raise AssertionError(f"greedy ({best}) and DP ({dp}) disagree on {tuple(s)}")
    return best
