"""Bundled posets and golden values."""

from __future__ import annotations

import csv
import json
from functools import lru_cache
from pathlib import Path

DATA_DIR = Path(__file__).resolve().parent


def resolve_path(ref: str) -> Path:
    """``@name`` or a plain path: an existing file wins, else the bundled one."""
    name = ref[1:] if ref.startswith("@") else ref
    path = Path(name)
    if path.exists():
        return path
    bundled = DATA_DIR / name
    if bundled.exists():
        return bundled
    raise FileNotFoundError(f"no such file: {name!r} (also looked in {DATA_DIR})")


def bundled_poset(name: str):
    from ..poset import Poset
    if not name.endswith(".json"):
        name += ".json"
    return Poset.load(DATA_DIR / name)


@lru_cache(maxsize=None)
def golden_sequences() -> dict:
    return json.loads((DATA_DIR / "sequences.json").read_text(encoding="utf-8"))


def table1_rows() -> list[dict]:
    """Rows of the golden avoider-count table: pattern, poset file, a(1..9)."""
    with open(DATA_DIR / "table1.csv", newline="", encoding="utf-8") as fh:
        rows = []
        for rec in csv.DictReader(fh):
            values = [int(rec[f"n{i}"]) for i in range(1, 10)]
            rows.append({"pattern": rec["pattern"], "poset": rec["poset"], "values": values})
        return rows
