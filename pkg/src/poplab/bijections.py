"""Two constructive bijections.

* Permutations whose cycles have length at most k correspond to the
  avoiders of ``a-a1..ak``: write the cycles least element first, in
  decreasing order of least elements, and drop the parentheses.
* Two-dimensional faces of the (n+1)-cube correspond to the
  (n+2)-permutations avoiding 2-1-3 with exactly one occurrence of the
  consecutive pattern 312 ("good" permutations).
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .dsl import parse_pattern
from .named import flat_pattern
from .pattern import avoids, count_occurrences
from .perms import Permutation, avoiders, cycles, from_cycles, left_to_right_minima


class BijectionError(ValueError):
    pass


# -- cycles ----------------------------------------------------------------------

def standard_cycles(pi: Sequence[int]) -> list[list[int]]:
    """Cycles least element first, in decreasing order of the least element."""
    return cycles(pi)[::-1]


def cycles_to_avoider(pi: Sequence[int], k: int) -> Permutation:
    cyc = standard_cycles(pi)
    long = [c for c in cyc if len(c) > k]
    if long:
        raise BijectionError(f"cycle {format_cycles(long[:1])} is longer than k={k}")
    return tuple(v for c in cyc for v in c)


def avoider_to_cycles(sigma: Sequence[int], k: int) -> Permutation:
    """Inverse map: cut sigma in front of every left-to-right minimum."""
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise BijectionError(f"{sigma} is not a permutation")
    if not avoids(flat_pattern(k, dashed=True), sigma):
        raise BijectionError(f"{format_perm(sigma)} contains a-a1..a{k}")
    minima = set(left_to_right_minima(sigma))
    parts: list[list[int]] = []
    for v in sigma:
        if v in minima:
            parts.append([])
        parts[-1].append(v)
    return from_cycles(parts, len(sigma))


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[list[int]]:
    """Parse ``"(1 2)(3 4)"``; entries may be separated by spaces or commas."""
    body = text.strip()
    if not body or _CYCLE.sub("", body).strip():
        raise BijectionError(f"malformed cycle notation {text!r}")
    out = []
    for group in _CYCLE.findall(body):
        items = [t for t in re.split(r"[\s,]+", group.strip()) if t]
        if not items or not all(t.isdigit() for t in items):
            raise BijectionError(f"malformed cycle {group!r} in {text!r}")
        out.append([int(t) for t in items])
    flat = sorted(v for c in out for v in c)
    if flat != list(range(1, len(flat) + 1)):
        raise BijectionError(f"cycles in {text!r} do not partition 1..{len(flat)}")
    return out


def format_cycles(cyc: Sequence[Sequence[int]]) -> str:
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def format_perm(pi: Sequence[int]) -> str:
    """One-line notation; digits run together while every entry is a single digit."""
    return ("" if len(pi) < 10 else " ").join(map(str, pi))


def parse_perm(text: str) -> Permutation:
    text = text.strip()
    items = [t for t in re.split(r"[\s,]+", text) if t] if re.search(r"[\s,]", text) else list(text)
    if not items or not all(t.isdigit() for t in items):
        raise BijectionError(f"malformed permutation {text!r}")
    pi = tuple(int(t) for t in items)
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise BijectionError(f"{text!r} is not a permutation of 1..{len(pi)}")
    return pi


def verify_cycles(n: int, k: int) -> dict:
    """Round trip both ways and image equality with S_n(a-a1..ak)."""
    from .perms import gen_perms
    short = [pi for pi in gen_perms(n) if all(len(c) <= k for c in cycles(pi))]
    image = set()
    failures = []
    for pi in short:
        s = cycles_to_avoider(pi, k)
        image.add(s)
        if avoider_to_cycles(s, k) != pi:
            failures.append(format_perm(pi))
    target = set(avoiders([flat_pattern(k, dashed=True)], n))
    ok = not failures and image == target and len(image) == len(short)
    return {"identity": f"cycles of length <= {k} vs avoiders of a-a1..a{k}", "n": n,
            "sources": len(short), "avoiders": len(target),
            "status": "pass" if ok else "fail", "first_failure": failures[0] if failures else None}


# -- faces -----------------------------------------------------------------------

@dataclass(frozen=True)
class HypercubeFace:
    """A binary vector of length n+1 with two marked coordinates x < y.

    ``bits`` holds 0/1 at unmarked coordinates; marked coordinates hold None.
    """

    bits: tuple
    x: int
    y: int

    def __post_init__(self):
        m = len(self.bits)
        if m < 2:
            raise BijectionError("a face needs a vector of length at least 2")
        if not 0 <= self.x < self.y < m:
            raise BijectionError(f"marks {self.x}, {self.y} must satisfy 0 <= x < y < {m}")
        for k, b in enumerate(self.bits):
            if k in (self.x, self.y):
                if b is not None:
                    raise BijectionError("marked coordinates carry no bit")
            elif b not in (0, 1):
                raise BijectionError(f"coordinate {k} holds {b!r}, expected 0 or 1")

    @property
    def n(self) -> int:
        return len(self.bits) - 1

    @classmethod
    def parse(cls, text: str) -> "HypercubeFace":
        text = text.strip()
        if text.count("x") != 1 or text.count("y") != 1 or set(text) - set("01xy"):
            raise BijectionError(f"malformed face {text!r}: need 0/1 and one x before one y")
        x, y = text.index("x"), text.index("y")
        if x > y:
            raise BijectionError(f"malformed face {text!r}: x must come before y")
        bits = tuple(None if c in "xy" else int(c) for c in text)
        return cls(bits, x, y)

    def __str__(self):
        return "".join("x" if k == self.x else "y" if k == self.y else str(b)
                       for k, b in enumerate(self.bits))


def all_faces(n: int) -> Iterator[HypercubeFace]:
    """Every 2-face of the (n+1)-cube: C(n+1, 2) 2^(n-1) of them."""
    m = n + 1
    for x, y in itertools.combinations(range(m), 2):
        free = [k for k in range(m) if k not in (x, y)]
        for fill in itertools.product((0, 1), repeat=len(free)):
            bits = [None] * m
            for k, b in zip(free, fill):
                bits[k] = b
            yield HypercubeFace(tuple(bits), x, y)


def face_count(n: int) -> int:
    return math.comb(n + 1, 2) * 2 ** (n - 1) if n >= 1 else 0


def _fill(slots: list[int], bits: Sequence[int], values: Iterator[int], perm: list):
    """Place values in order: 0 -> leftmost empty slot, 1 -> rightmost; the last value
    goes to the single slot left over."""
    lo, hi = 0, len(slots) - 1
    for b in bits:
        v = next(values)
        if b == 0:
            perm[slots[lo]] = v
            lo += 1
        else:
            perm[slots[hi]] = v
            hi -= 1
    perm[slots[lo]] = next(values)


def _face_core(face: HypercubeFace) -> list:
    """The face with x in the first coordinate: pivot 1, then B, then A."""
    n, j = face.n, face.y
    size = n + 2
    perm = [0] * size
    pivot = j                      # |A| = j slots in front of the pivot
    perm[pivot] = 1
    values = iter(range(2, size + 1))
    _fill(list(range(pivot + 1, size)), face.bits[j + 1:], values, perm)
    _fill(list(range(0, pivot)), face.bits[1:j], values, perm)
    return perm


def face_to_good_perm(face: HypercubeFace | str) -> Permutation:
    """Image of a face, recursing on the leading unmarked bits.

    A leading bit 0 (1) puts the letter 1 at the left (right) end; the rest
    of the permutation is the image of the shortened face, shifted up by one.
    """
    if isinstance(face, str):
        face = HypercubeFace.parse(face)
    if face.x == 0:
        return tuple(_face_core(face))
    rest = HypercubeFace(face.bits[1:], face.x - 1, face.y - 1)
    shifted = tuple(v + 1 for v in face_to_good_perm(rest))
    return (1, *shifted) if face.bits[0] == 0 else (*shifted, 1)


def face_to_good_perm_direct(face: HypercubeFace | str) -> Permutation:
    """The slot-filling procedure read left to right in one pass (used as a cross-check)."""
    if isinstance(face, str):
        face = HypercubeFace.parse(face)
    n, i, j = face.n, face.x, face.y
    perm = [0] * (n + 2)
    empty = list(range(n + 2))
    for k in range(i):
        slot = empty.pop(0) if face.bits[k] == 0 else empty.pop()
        perm[slot] = k + 1
    t = empty[0]
    pivot = t + (j - i)
    perm[pivot] = i + 1
    values = iter(range(i + 2, n + 3))
    _fill(list(range(pivot + 1, empty[-1] + 1)), face.bits[j + 1:], values, perm)
    _fill(list(range(t, pivot)), face.bits[i + 1:j], values, perm)
    return tuple(perm)


def is_good(pi: Sequence[int]) -> bool:
    return avoids(_P213, pi) and count_occurrences(_P312, pi) == 1


_P213 = parse_pattern("2-1-3")
_P312 = parse_pattern("312")


def good_perms(n: int) -> list[Permutation]:
    """Good (n+2)-permutations."""
    return [pi for pi in avoiders([_P213], n + 2) if count_occurrences(_P312, pi) == 1]


def good_perm_to_face(pi: Sequence[int]) -> HypercubeFace:
    """Inverse by search over all faces of the right dimension (test scale only)."""
    pi = tuple(pi)
    for face in all_faces(len(pi) - 2):
        if face_to_good_perm(face) == pi:
            return face
    raise BijectionError(f"{format_perm(pi)} is not a good permutation")


def verify_faces(n: int) -> dict:
    """Injectivity, image = good permutations, and the face count, for one n."""
    images = {}
    failure = None
    for face in all_faces(n):
        pi = face_to_good_perm(face)
        if pi != face_to_good_perm_direct(face):
            failure = failure or {"face": str(face), "problem": "recursive and direct maps differ"}
        if pi in images:
            failure = failure or {"face": str(face), "problem": f"collides with {images[pi]}"}
        images[pi] = str(face)
    good = set(good_perms(n))
    if failure is None and set(images) != good:
        bad = sorted(set(images) ^ good)[0]
        failure = {"perm": format_perm(bad), "problem": "image differs from the good permutations"}
    expected = face_count(n)
    if failure is None and not (len(images) == len(good) == expected):
        failure = {"problem": f"counts {len(images)}, {len(good)}, expected {expected}"}
    return {"identity": "faces of the (n+1)-cube vs good (n+2)-permutations", "n": n,
            "faces": len(images), "good": len(good), "expected": expected,
            "status": "pass" if failure is None else "fail", "first_failure": failure}
