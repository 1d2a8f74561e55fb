"""Finite labeled strict partial orders.

A :class:`Poset` stores its elements in a fixed order together with the
transitively closed strict order relation.  Posets are immutable; every
derived poset (dual, restriction, disjoint sum) is a new object.
"""

from __future__ import annotations

import enum
import json
from pathlib import Path
from typing import Iterable, Sequence


class PosetError(ValueError):
    """Raised for malformed poset definitions."""


class Comparison(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"
    EQUAL = "equal"


class Poset:
    """A finite strict partial order on distinct string labels.

    ``relations`` may be any strict pairs ``(a, b)`` meaning ``a < b``; the
    transitive closure is always taken.  A relation set containing a cycle
    is rejected.
    """

    __slots__ = ("_elements", "_index", "_lt", "_hash")

    def __init__(self, elements: Iterable[str], relations: Iterable[Sequence[str]] = ()):
        elements = tuple(str(e) for e in elements)
        index: dict[str, int] = {}
        for i, e in enumerate(elements):
            if e in index:
                raise PosetError(f"duplicate label {e!r}")
            index[e] = i
        n = len(elements)
        lt = [[False] * n for _ in range(n)]
        given = []
        for pair in relations:
            if len(pair) != 2:
                raise PosetError(f"relation {pair!r} is not a pair")
            a, b = (str(x) for x in pair)
            for label in (a, b):
                if label not in index:
                    raise PosetError(f"unknown label {label!r} in relation ({a}, {b})")
            if a == b:
                raise PosetError(f"cycle detected: relation ({a}, {b}) is reflexive")
            lt[index[a]][index[b]] = True
            given.append((a, b))
        # Floyd-Warshall closure
        for k in range(n):
            row_k = lt[k]
            for i in range(n):
                if lt[i][k]:
                    row_i = lt[i]
                    for j in range(n):
                        if row_k[j]:
                            row_i[j] = True
        for a, b in given:
            if lt[index[b]][index[a]]:
                raise PosetError(f"cycle detected: relation ({a}, {b}) closes a cycle")
        self._elements = elements
        self._index = index
        self._lt = tuple(tuple(row) for row in lt)
        self._hash = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def chain(cls, labels: Iterable[str]) -> "Poset":
        labels = [str(x) for x in labels]
        return cls(labels, zip(labels, labels[1:]))

    @classmethod
    def antichain(cls, labels: Iterable[str]) -> "Poset":
        return cls(labels, ())

    @classmethod
    def from_dict(cls, data: dict) -> "Poset":
        try:
            elements = data["elements"]
        except (KeyError, TypeError):
            raise PosetError("poset object needs an 'elements' list") from None
        return cls(elements, data.get("relations", ()))

    @classmethod
    def from_json(cls, text: str) -> "Poset":
        return cls.from_dict(json.loads(text))

    @classmethod
    def load(cls, path) -> "Poset":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))

    def to_dict(self) -> dict:
        return {"elements": list(self._elements),
                "relations": [list(pair) for pair in self.relations()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    # -- queries --------------------------------------------------------------

    @property
    def elements(self) -> tuple[str, ...]:
        return self._elements

    def __len__(self) -> int:
        return len(self._elements)

    def __contains__(self, label) -> bool:
        return label in self._index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise PosetError(f"unknown label {label!r}") from None

    def less(self, a: str, b: str) -> bool:
        return self._lt[self.index(a)][self.index(b)]

    def comparable(self, a: str, b: str) -> Comparison:
        i, j = self.index(a), self.index(b)
        if i == j:
            return Comparison.EQUAL
        if self._lt[i][j]:
            return Comparison.LESS
        if self._lt[j][i]:
            return Comparison.GREATER
        return Comparison.INCOMPARABLE

    def relations(self) -> list[tuple[str, str]]:
        """All closed pairs ``(a, b)`` with ``a < b``, in element order."""
        els = self._elements
        return [(els[i], els[j]) for i, row in enumerate(self._lt)
                for j, flag in enumerate(row) if flag]

    def covers(self) -> list[tuple[str, str]]:
        """The Hasse diagram edges."""
        n = len(self._elements)
        lt = self._lt
        els = self._elements
        out = []
        for i in range(n):
            for j in range(n):
                if lt[i][j] and not any(lt[i][k] and lt[k][j] for k in range(n)):
                    out.append((els[i], els[j]))
        return out

    def linear_extension(self) -> list[str]:
        """One linear extension (Kahn's algorithm, ties broken by element order)."""
        n = len(self._elements)
        indeg = [sum(self._lt[j][i] for j in range(n)) for i in range(n)]
        done = [False] * n
        order = []
        for _ in range(n):
            nxt = next((i for i in range(n) if not done[i] and indeg[i] == 0), None)
            if nxt is None:  # pragma: no cover - excluded by construction
                raise PosetError("relation is not acyclic")
            done[nxt] = True
            order.append(self._elements[nxt])
            for j in range(n):
                if self._lt[nxt][j]:
                    indeg[j] -= 1
        return order

    # -- derived posets -------------------------------------------------------

    def dual(self) -> "Poset":
        return Poset(self._elements, [(b, a) for a, b in self.relations()])

    def restrict(self, labels: Iterable[str]) -> "Poset":
        keep = [str(x) for x in labels]
        for x in keep:
            self.index(x)
        wanted = set(keep)
        return Poset(keep, [(a, b) for a, b in self.relations() if a in wanted and b in wanted])

    def with_relations(self, relations: Iterable[Sequence[str]]) -> "Poset":
        return Poset(self._elements, list(self.relations()) + [tuple(r) for r in relations])

    def disjoint_sum(self, other: "Poset") -> "Poset":
        clash = set(self._elements) & set(other.elements)
        if clash:
            raise PosetError(f"labels shared by both posets: {sorted(clash)}")
        return Poset(self._elements + other.elements, self.relations() + other.relations())

    # -- dunder ---------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return (set(self._elements) == set(other._elements)
                and set(self.relations()) == set(other.relations()))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((frozenset(self._elements), frozenset(self.relations())))
        return self._hash

    def __repr__(self) -> str:
        rels = ", ".join(f"{a}<{b}" for a, b in self.covers())
        return f"Poset([{', '.join(self._elements)}]; {rels})"

    def __getstate__(self):
        return self.to_dict()

    def __setstate__(self, state):
        fresh = Poset.from_dict(state)
        for slot in Poset.__slots__:
            object.__setattr__(self, slot, getattr(fresh, slot))


def build_poset(elements: Iterable[str], relations: Iterable[Sequence[str]] = ()) -> Poset:
    return Poset(elements, relations)


def chain_poset(labels: Iterable[str]) -> Poset:
    return Poset.chain(labels)


def flat_poset(k: int) -> Poset:
    """Bottom element ``a`` below ``k`` mutually incomparable elements ``a1..ak``."""
    if k < 1:
        raise PosetError("a flat poset needs k >= 1")
    tops = [f"a{i}" for i in range(1, k + 1)]
    return Poset(["a", *tops], [("a", t) for t in tops])


def comparable(poset: Poset, a: str, b: str) -> Comparison:
    return poset.comparable(a, b)
