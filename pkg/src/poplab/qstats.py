"""Inversion-graded avoidance polynomials and checks of their q-EGF identities.

Every identity is compared on the numerators of ``x^n/[n]_q!``, so the
checks never divide by a q-factorial.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import partial
from typing import Sequence

from .pattern import PatternError, PopPattern, concat, max_nonoverlapping, quasi_avoids
from .perms import inv, sweep
from .poly import Poly, Y
from .series import QEgfSeries, q_geom_inverse, q_integer


@dataclass
class QPolynomialTable:
    """n -> polynomial in q (and possibly y)."""

    polys: dict[int, Poly] = field(default_factory=dict)

    def __getitem__(self, n: int) -> Poly:
        return self.polys[n]

    @property
    def n_max(self) -> int:
        return max(self.polys, default=-1)

    def at(self, q=1) -> dict[int, int]:
        """Evaluate at a number; q = 1 gives plain counts."""
        out = {}
        for n, p in self.polys.items():
            v = p.subs(q=q).simplify()
            out[n] = int(v) if not isinstance(v, Poly) and v.denominator == 1 else v
        return out

    def series(self) -> QEgfSeries:
        return QEgfSeries([self.polys[n] for n in range(self.n_max + 1)])

    def to_dict(self) -> dict[str, list[int]]:
        return {str(n): [int(c) for c in p.coefficients("q")] for n, p in sorted(self.polys.items())}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _poly_from_counter(counts: Counter) -> Poly:
    """Keys are an inversion number or a pair (nonoverlap count, inversions)."""
    terms = {}
    for key, c in counts.items():
        if key is None:
            continue
        e = (0, key) if isinstance(key, int) else key
        terms[e] = terms.get(e, 0) + c
    return Poly(terms)


def _inv_if_quasi(p, perm):
    return inv(perm) if quasi_avoids(p, perm) else None


def _nonoverlap_inv(p, perm):
    return (max_nonoverlapping(p, perm), inv(perm))


def q_avoiders(p: PopPattern | Sequence[PopPattern], n_max: int, jobs: int = 1) -> QPolynomialTable:
    """A_n(q) = sum of q^inv over the avoiders of p, 0 <= n <= n_max."""
    pats = [p] if isinstance(p, PopPattern) else list(p)
    return QPolynomialTable({n: _poly_from_counter(sweep(n, inv, pats, jobs=jobs))
                             for n in range(n_max + 1)})


def q_quasi_avoiders(p: PopPattern, n_max: int, jobs: int = 1) -> QPolynomialTable:
    """B_n(q): the same sum over permutations whose only occurrence of p is the suffix."""
    if not p.segmented:
        raise PatternError("quasi-avoidance is defined for segmented patterns only")
    return QPolynomialTable({n: _poly_from_counter(sweep(n, partial(_inv_if_quasi, p), jobs=jobs))
                             for n in range(n_max + 1)})


def q_nonoverlap(p: PopPattern, n_max: int, jobs: int = 1) -> QPolynomialTable:
    """Sum of y^N(pi) q^inv(pi), N the maximum number of non-overlapping occurrences."""
    return QPolynomialTable({n: _poly_from_counter(sweep(n, partial(_nonoverlap_inv, p), jobs=jobs))
                             for n in range(n_max + 1)})


# -- reports -------------------------------------------------------------------

def _report(identity: str, lo: int, hi: int, lhs: Sequence[Poly], rhs: Sequence[Poly]) -> dict:
    failure = None
    for n in range(lo, hi + 1):
        if lhs[n] != rhs[n]:
            failure = {"n": n, "lhs": str(lhs[n]), "rhs": str(rhs[n])}
            break
    return {"identity": identity, "n_range": [lo, hi],
            "status": "pass" if failure is None else "fail", "first_failure": failure}


def verify_lemma_B(p: PopPattern, n_max: int) -> dict:
    """B_n(q) = [n]_q A_(n-1)(q) - A_n(q) for 1 <= n <= n_max."""
    a = q_avoiders(p, n_max)
    b = q_quasi_avoiders(p, n_max)
    rhs = [Poly(0)] + [q_integer(n) * a[n - 1] - a[n] for n in range(1, n_max + 1)]
    return _report(f"B_n = [n]_q A_(n-1) - A_n for {p}", 1, n_max,
                   [b[n] for n in range(n_max + 1)], rhs)


def _check_disjoint(blocks: Sequence[PopPattern]):
    seen: set = set()
    for b in blocks:
        labels = set(b.letters)
        if labels & seen:
            raise PatternError(f"blocks share letters {sorted(labels & seen)}; "
                               "their alphabets must be incomparable")
        seen |= labels


def verify_lemma_split(p: PopPattern, sigma: PopPattern, n_max: int) -> dict:
    """A^P = A^p + A^sigma B^p for P = p-sigma with p segmented."""
    if not p.segmented:
        raise PatternError("the first block must be segmented")
    _check_disjoint([p, sigma])
    big = concat(p, sigma)
    lhs = q_avoiders(big, n_max).series()
    a_p = q_avoiders(p, n_max).series()
    a_s = q_avoiders(sigma, n_max).series()
    b_p = q_quasi_avoiders(p, n_max).series()
    rhs = a_p + a_s * b_p
    return _report(f"A^({big}) = A^({p}) + A^({sigma}) B^({p})", 0, n_max, lhs.coeffs, rhs.coeffs)


def verify_q_multipattern(blocks: Sequence[PopPattern], n_max: int) -> dict:
    """A^P = sum_i A^(p_i) prod_(j<i) B^(p_j) for P = p_1-...-p_k."""
    blocks = list(blocks)
    if any(not b.segmented for b in blocks):
        raise PatternError("every block of a multi-pattern must be segmented")
    _check_disjoint(blocks)
    big = concat(*blocks)
    lhs = q_avoiders(big, n_max).series()
    rhs = QEgfSeries.constant(0, n_max)
    prod = QEgfSeries.constant(1, n_max)
    for b in blocks:
        rhs = rhs + q_avoiders(b, n_max).series() * prod
        prod = prod * q_quasi_avoiders(b, n_max).series()
    return _report(f"multi-pattern identity for {big}", 0, n_max, lhs.coeffs, rhs.coeffs)


def q_nonoverlap_formula(p: PopPattern, n_max: int) -> QEgfSeries:
    """A_q / (1 - y B_q) from the brute-force A and B of p."""
    a = q_avoiders(p, n_max).series()
    b = q_quasi_avoiders(p, n_max).series()
    return a * q_geom_inverse(b, Y)


def verify_q_nonoverlap(p: PopPattern, n_max: int) -> dict:
    """sum_pi y^N(pi) q^inv(pi) = numerators of A_q / (1 - y B_q)."""
    lhs = q_nonoverlap(p, n_max).series()
    rhs = q_nonoverlap_formula(p, n_max)
    return _report(f"non-overlap q-analogue for {p}", 0, n_max, lhs.coeffs, rhs.coeffs)


__all__ = [
    "QPolynomialTable", "q_avoiders", "q_quasi_avoiders", "q_nonoverlap", "q_nonoverlap_formula",
    "verify_lemma_B", "verify_lemma_split", "verify_q_multipattern", "verify_q_nonoverlap",
]
