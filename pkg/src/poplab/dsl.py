"""Text notation for patterns.

Grammar (whitespace is ignored)::

    pattern := '['? segment (sep segment)* ']'?
    sep     := '-' | '~'           # FREE gap | STRICT gap (a box)
    segment := letter+             # neighbouring letters are ADJ
    letter  := base "'"*
    base    := one alphanumeric character | '{' label '}'

The braced form names multi-character labels such as the ``a1`` of a flat
poset.  Without a poset every letter must be an unprimed digit and the
pattern is classical: the chain ordered by digit value is used.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .data import resolve_path
from .pattern import Gap, PatternError, PopPattern
from .poset import Poset

_SIMPLE = re.compile(r"[A-Za-z0-9]'*\Z")
_SEP = {"-": Gap.FREE, "~": Gap.STRICT}
_SEP_TEXT = {Gap.ADJ: "", Gap.FREE: "-", Gap.STRICT: "~"}


class PatternSyntaxError(PatternError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


def _tokens(text: str):
    """Yield (kind, value, position) with kind in letter/sep/open/close."""
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        start = i
        if c in "[]":
            yield ("open" if c == "[" else "close"), c, start
            i += 1
            continue
        if c in _SEP:
            yield "sep", c, start
            i += 1
            continue
        if c == "{":
            end = text.find("}", i + 1)
            if end < 0:
                raise PatternSyntaxError("unclosed '{'", text, start)
            base = text[i + 1:end].strip()
            if not base:
                raise PatternSyntaxError("empty braced label", text, start)
            i = end + 1
        elif c.isascii() and c.isalnum():
            base = c
            i += 1
        else:
            raise PatternSyntaxError(f"unexpected character {c!r}", text, start)
        primes = 0
        while i < n and text[i] == "'":
            primes += 1
            i += 1
        yield "letter", base + "'" * primes, start


def parse_pattern(text: str, poset: Poset | None = None) -> PopPattern:
    letters: list[str] = []
    positions: list[int] = []
    gaps: list[Gap] = []
    left = right = False
    pending_sep = None
    last_kind = None
    for kind, value, at in _tokens(text):
        if right:
            raise PatternSyntaxError("text after closing ']'", text, at)
        if kind == "open":
            if last_kind is not None:
                raise PatternSyntaxError("'[' is only allowed at the start", text, at)
            left = True
        elif kind == "close":
            if last_kind != "letter":
                raise PatternSyntaxError("empty segment before ']'", text, at)
            right = True
        elif kind == "sep":
            if last_kind != "letter":
                raise PatternSyntaxError("empty segment before separator", text, at)
            pending_sep = _SEP[value]
        else:
            if letters:
                gaps.append(pending_sep or Gap.ADJ)
            pending_sep = None
            letters.append(value)
            positions.append(at)
        last_kind = kind
    if last_kind is None or (last_kind == "open"):
        raise PatternSyntaxError("empty pattern", text, len(text))
    if last_kind == "sep":
        raise PatternSyntaxError("empty segment after separator", text, len(text))

    seen = {}
    for x, at in zip(letters, positions):
        if x in seen:
            raise PatternSyntaxError(f"duplicate letter {x!r}", text, at)
        seen[x] = at

    if poset is None:
        for x, at in zip(letters, positions):
            if not (len(x) == 1 and x.isdigit()):
                what = "primed letter" if "'" in x else f"letter {x!r}"
                raise PatternSyntaxError(f"{what} needs a poset", text, at)
        poset = Poset.chain(sorted(letters, key=int))
    else:
        for x, at in zip(letters, positions):
            if x not in poset:
                raise PatternSyntaxError(f"unknown letter {x!r} for the given poset", text, at)
    return PopPattern(poset, letters, gaps, left, right)


def _letter_text(label: str) -> str:
    if _SIMPLE.match(label):
        return label
    if any(c in label for c in "{}") or not label.strip() or label != label.strip():
        raise PatternError(f"label {label!r} has no text form; use the JSON form")
    return "{" + label + "}"


def print_pattern(p: PopPattern) -> str:
    parts = ["[" if p.anchored_left else ""]
    for i, x in enumerate(p.letters):
        if i:
            parts.append(_SEP_TEXT[p.gaps[i - 1]])
        parts.append(_letter_text(x))
    if p.anchored_right:
        parts.append("]")
    return "".join(parts)


# -- JSON form ----------------------------------------------------------------

def load_poset(ref) -> Poset:
    """A poset from a dict, a JSON file path, or ``@name`` (path or bundled file)."""
    if isinstance(ref, Poset):
        return ref
    if isinstance(ref, dict):
        return Poset.from_dict(ref)
    return Poset.load(resolve_path(str(ref)))


def pattern_to_dict(p: PopPattern) -> dict:
    return {
        "poset": p.poset.to_dict(),
        "letters": list(p.letters),
        "gaps": [g.value for g in p.gaps],
        "anchored_left": p.anchored_left,
        "anchored_right": p.anchored_right,
    }


def pattern_from_dict(data: dict, poset: Poset | None = None) -> PopPattern:
    if "poset" in data:
        poset = load_poset(data["poset"])
    if poset is None:
        raise PatternError("pattern JSON needs a 'poset'")
    return PopPattern(poset, data["letters"], data.get("gaps", None),
                      data.get("anchored_left", False), data.get("anchored_right", False))


def load_pattern(arg: str, poset: Poset | None = None) -> PopPattern:
    """Parse pattern text, or load the JSON form when ``arg`` is ``@file``."""
    if arg.startswith("@"):
        path = resolve_path(arg)
        return pattern_from_dict(json.loads(Path(path).read_text(encoding="utf-8")), poset)
    return parse_pattern(arg, poset)
