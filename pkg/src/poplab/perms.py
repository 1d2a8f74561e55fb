"""Permutations, words, statistics and exhaustive sweeps.

Permutations are tuples of the integers ``1..n``.  Sweeps build
permutations prefix by prefix in lexicographic order; a prefix is
discarded as soon as it contains one of the patterns being avoided (an
occurrence inside a prefix survives every extension, except for
right-anchored patterns, which are only tested on complete permutations).

Every sweep reduces to a :class:`collections.Counter` of keys computed by
a mapper.  Counters from shards (one shard per first letter) merge by
addition, so results do not depend on how shards are scheduled.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Hashable, Iterable, Iterator, Sequence

from .pattern import PopPattern, count_occurrences, ends_at, max_nonoverlapping, PatternError

Permutation = tuple[int, ...]

DEFAULT_MAX_N = 11


class EnumerationLimitError(ValueError):
    pass


def max_n() -> int:
    raw = os.environ.get("POPLAB_MAX_N")
    return int(raw) if raw else DEFAULT_MAX_N


def _guard(n: int, limit: int | None = None):
    limit = max_n() if limit is None else limit
    if n > limit:
        raise EnumerationLimitError(
            f"n={n} exceeds the enumeration limit {limit} (set POPLAB_MAX_N to raise it)")
    if n < 0:
        raise ValueError("n must be non-negative")


# -- generation ---------------------------------------------------------------

def gen_perms(n: int, first: int | None = None) -> Iterator[Permutation]:
    """All permutations of 1..n in lexicographic order, optionally with a fixed first letter."""
    if first is None:
        yield from itertools.permutations(range(1, n + 1))
        return
    rest = [v for v in range(1, n + 1) if v != first]
    for tail in itertools.permutations(rest):
        yield (first, *tail)


def gen_words(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All words of length n over 1..k in lexicographic order."""
    return itertools.product(range(1, k + 1), repeat=n)


def _avoiding_prefixes(n: int, avoid: Sequence[PopPattern], first: int | None) -> Iterator[Permutation]:
    seq = [0] * n
    used = [False] * (n + 1)
    avoid = tuple(avoid)

    def extend(e: int):
        if e == n:
            yield tuple(seq)
            return
        values = (first,) if e == 0 and first is not None else range(1, n + 1)
        for v in values:
            if used[v]:
                continue
            seq[e] = v
            if any(ends_at(p, seq, e, n) for p in avoid):
                continue
            used[v] = True
            yield from extend(e + 1)
            used[v] = False

    if n == 0:
        yield ()
        return
    yield from extend(0)


def avoiders(patterns: Sequence[PopPattern], n: int, first: int | None = None,
             limit: int | None = None) -> Iterator[Permutation]:
    """Permutations of length n avoiding every pattern, in lexicographic order."""
    _guard(n, limit)
    if not patterns:
        return gen_perms(n, first)
    return _avoiding_prefixes(n, patterns, first)


def _shard(n, restriction, mapper, first):
    out = Counter()
    for perm in _avoiding_prefixes(n, restriction, first) if restriction else gen_perms(n, first):
        out[mapper(perm)] += 1
    return out


def _constant(_perm):
    return 0


def sweep(n: int, mapper: Callable[[Permutation], Hashable] = _constant,
          restriction: Sequence[PopPattern] = (), jobs: int = 1,
          limit: int | None = None) -> Counter:
    """Counter of ``mapper(pi)`` over permutations of length n avoiding ``restriction``.

    With ``jobs > 1`` the n first-letter shards run in worker processes;
    ``mapper`` must then be picklable.
    """
    _guard(n, limit)
    restriction = tuple(restriction)
    if n == 0:
        return _shard(0, restriction, mapper, None)
    firsts = range(1, n + 1)
    total = Counter()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(partial(_shard, n, restriction, mapper), firsts))
    else:
        parts = [_shard(n, restriction, mapper, f) for f in firsts]
    for part in parts:
        total.update(part)
    # Counter.update drops nothing, but keep zero-count keys out of the result
    return Counter({k: v for k, v in total.items() if v})


# -- tables -------------------------------------------------------------------

@dataclass
class DistributionTable:
    """Exact counts keyed by tuples of statistic values."""

    n: int
    axes: tuple[str, ...]
    counts: dict = field(default_factory=dict)

    @classmethod
    def from_counter(cls, n: int, axes: Sequence[str], counter: Counter) -> "DistributionTable":
        counts = {}
        for key, c in counter.items():
            key = key if isinstance(key, tuple) else (key,)
            counts[key] = counts.get(key, 0) + c
        return cls(n, tuple(axes), dict(sorted(counts.items())))

    def _key(self, key):
        return key if isinstance(key, tuple) else (key,)

    def __getitem__(self, key) -> int:
        return self.counts.get(self._key(key), 0)

    def get(self, key, default: int = 0) -> int:
        return self.counts.get(self._key(key), default)

    def total(self) -> int:
        return sum(self.counts.values())

    def row(self) -> list[int]:
        """For one-axis tables: counts indexed by statistic value 0..max."""
        if len(self.axes) != 1:
            raise ValueError("row() needs a one-axis table")
        if not self.counts:
            return []
        top = max(k[0] for k in self.counts)
        return [self.counts.get((v,), 0) for v in range(top + 1)]

    def as_dict(self) -> dict:
        """Plain dict; one-axis tables use bare values as keys."""
        if len(self.axes) == 1:
            return {k[0]: v for k, v in self.counts.items()}
        return dict(self.counts)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([*self.axes, "count"])
        for key, c in self.counts.items():
            w.writerow([*key, c])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "axes": list(self.axes),
                           "counts": [[*k, c] for k, c in self.counts.items()]})


def to_bfile(values: Sequence[int], offset: int = 1) -> str:
    """OEIS b-file text: one ``n a(n)`` line per value."""
    return "".join(f"{offset + i} {v}\n" for i, v in enumerate(values))


# -- avoidance and distributions ---------------------------------------------

def count_avoiders(patterns: Sequence[PopPattern] | PopPattern, n: int, jobs: int = 1,
                   limit: int | None = None) -> int:
    if isinstance(patterns, PopPattern):
        patterns = [patterns]
    return sum(sweep(n, _constant, patterns, jobs=jobs, limit=limit).values())


def avoider_sequence(patterns: Sequence[PopPattern] | PopPattern, n_max: int, start: int = 1,
                     jobs: int = 1, limit: int | None = None) -> list[int]:
    return [count_avoiders(patterns, n, jobs=jobs, limit=limit) for n in range(start, n_max + 1)]


def _occ_count(p, perm):
    return count_occurrences(p, perm)


def _nonoverlap(p, perm):
    return max_nonoverlapping(p, perm)


def distribution(p: PopPattern, n: int, restriction: Sequence[PopPattern] = (),
                 jobs: int = 1) -> DistributionTable:
    """Permutations of length n (avoiding ``restriction``) by number of occurrences of p."""
    return DistributionTable.from_counter(
        n, ("occurrences",), sweep(n, partial(_occ_count, p), restriction, jobs=jobs))


def nonoverlap_distribution(p: PopPattern, n: int, restriction: Sequence[PopPattern] = (),
                            jobs: int = 1) -> DistributionTable:
    if not p.segmented:
        raise PatternError("non-overlapping occurrence counting needs a segmented pattern")
    return DistributionTable.from_counter(
        n, ("nonoverlap",), sweep(n, partial(_nonoverlap, p), restriction, jobs=jobs))


def word_nonoverlap_distribution(p: PopPattern, n: int, k: int) -> DistributionTable:
    if not p.segmented:
        raise PatternError("non-overlapping occurrence counting needs a segmented pattern")
    _guard(n)
    return DistributionTable.from_counter(
        n, ("nonoverlap",), Counter(max_nonoverlapping(p, w) for w in gen_words(n, k)))


def _pair(stat1, stat2, perm):
    return (stat1(perm), stat2(perm))


def joint_distribution(stat1: Callable, stat2: Callable, n: int,
                       restriction: Sequence[PopPattern] = (), names=None,
                       jobs: int = 1) -> DistributionTable:
    names = names or (getattr(stat1, "__name__", "stat1"), getattr(stat2, "__name__", "stat2"))
    return DistributionTable.from_counter(n, names, sweep(n, partial(_pair, stat1, stat2),
                                                         restriction, jobs=jobs))


def stat_distribution(stat: Callable, n: int, restriction: Sequence[PopPattern] = (),
                      name: str | None = None, jobs: int = 1) -> DistributionTable:
    return DistributionTable.from_counter(
        n, (name or getattr(stat, "__name__", "stat"),), sweep(n, stat, restriction, jobs=jobs))


# -- statistics ---------------------------------------------------------------

def inv(pi: Sequence[int]) -> int:
    n = len(pi)
    return sum(1 for i in range(n) for j in range(i + 1, n) if pi[i] > pi[j])


def descents(pi: Sequence[int]) -> list[int]:
    """1-based positions i with pi_i > pi_{i+1}."""
    return [i + 1 for i in range(len(pi) - 1) if pi[i] > pi[i + 1]]


def des(pi: Sequence[int]) -> int:
    return len(descents(pi))


def maj(pi: Sequence[int]) -> int:
    return sum(descents(pi))


def inverse(pi: Sequence[int]) -> Permutation:
    out = [0] * len(pi)
    for i, v in enumerate(pi, start=1):
        out[v - 1] = i
    return tuple(out)


def reverse(pi: Sequence[int]) -> Permutation:
    return tuple(reversed(pi))


def complement(pi: Sequence[int]) -> Permutation:
    n = len(pi)
    return tuple(n + 1 - v for v in pi)


def peaks(pi: Sequence[int]) -> int:
    return sum(1 for i in range(1, len(pi) - 1) if pi[i - 1] < pi[i] > pi[i + 1])


def valleys(pi: Sequence[int]) -> int:
    return sum(1 for i in range(1, len(pi) - 1) if pi[i - 1] > pi[i] < pi[i + 1])


def left_to_right_minima(pi: Sequence[int]) -> list[int]:
    """Values of the left-to-right minima, in order of appearance."""
    out = []
    for v in pi:
        if not out or v < out[-1]:
            out.append(v)
    return out


def place_sigma(sigma: PopPattern, pi: Sequence[int]) -> set[int]:
    """1-based starting positions of occurrences of a segmented pattern."""
    if not sigma.segmented:
        raise PatternError("place_sigma needs a segmented pattern")
    from .pattern import occurrences
    return {occ[0] + 1 for occ in occurrences(sigma, pi)}


def maj_sigma(sigma: PopPattern, pi: Sequence[int]) -> int:
    return sum(place_sigma(sigma, pi))


def _padded(pi):
    return (0, *pi, 0)


def modified_maxima(pi: Sequence[int]) -> int:
    s = _padded(pi)
    return sum(1 for i in range(1, len(s) - 1) if s[i - 1] < s[i] > s[i + 1])


def modified_minima(pi: Sequence[int]) -> int:
    s = _padded(pi)
    return sum(1 for i in range(1, len(s) - 1) if s[i - 1] > s[i] < s[i + 1])


def double_rises(pi: Sequence[int]) -> int:
    s = _padded(pi)
    return sum(1 for i in range(1, len(s) - 1) if s[i - 1] < s[i] < s[i + 1])


def double_falls(pi: Sequence[int]) -> int:
    s = _padded(pi)
    return sum(1 for i in range(1, len(s) - 1) if s[i - 1] > s[i] > s[i + 1])


def circular_maxima(pi: Sequence[int]) -> int:
    """Entries larger than both cyclic neighbours (the first letter follows the last)."""
    n = len(pi)
    return sum(1 for j in range(n) if pi[j] > pi[j - 1] and pi[j] > pi[(j + 1) % n])


def is_alternating(pi: Sequence[int]) -> bool:
    """pi_1 > pi_2 < pi_3 > ..."""
    return all((pi[i] > pi[i + 1]) == (i % 2 == 0) for i in range(len(pi) - 1))


def is_reverse_alternating(pi: Sequence[int]) -> bool:
    """pi_1 < pi_2 > pi_3 < ..."""
    return all((pi[i] < pi[i + 1]) == (i % 2 == 0) for i in range(len(pi) - 1))


def cycles(pi: Sequence[int]) -> list[list[int]]:
    """Cycles of pi, each starting at its least element, sorted by that element."""
    seen = set()
    out = []
    for start in range(1, len(pi) + 1):
        if start in seen:
            continue
        cyc = []
        v = start
        while v not in seen:
            seen.add(v)
            cyc.append(v)
            v = pi[v - 1]
        out.append(cyc)
    return out


def from_cycles(cycle_list: Iterable[Sequence[int]], n: int | None = None) -> Permutation:
    cycle_list = [list(c) for c in cycle_list]
    if n is None:
        n = sum(len(c) for c in cycle_list)
    img = [0] * n
    for c in cycle_list:
        for a, b in zip(c, c[1:] + c[:1]):
            if img[a - 1]:
                raise ValueError(f"{a} appears in two cycles")
            img[a - 1] = b
    if 0 in img:
        raise ValueError("cycles do not cover 1..n")
    return tuple(img)
