"""Exact polynomials in ``y`` and ``q`` with rational coefficients.

This is the coefficient ring for bivariate (``y`` marks a statistic) and
q-graded (``q`` marks inversions) generating functions.  Plain rationals
(:class:`fractions.Fraction`) are used for univariate series and mix
freely with :class:`Poly`.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

VARS = ("y", "q")


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Poly:
    __slots__ = ("_t",)

    def __init__(self, terms=None):
        if terms is None:
            self._t = {}
        elif isinstance(terms, dict):
            self._t = {k: _frac(v) for k, v in terms.items() if v}
        else:
            c = _frac(terms)
            self._t = {(0, 0): c} if c else {}

    @classmethod
    def var(cls, name: str, power: int = 1) -> "Poly":
        exp = [0, 0]
        exp[VARS.index(name)] = power
        return cls({tuple(exp): 1})

    @classmethod
    def monomial(cls, coeff, ey: int = 0, eq: int = 0) -> "Poly":
        return cls({(ey, eq): coeff})

    @classmethod
    def from_coefficients(cls, coeffs, var: str = "y") -> "Poly":
        """Polynomial sum(coeffs[i] * var**i)."""
        k = VARS.index(var)
        out = {}
        for i, c in enumerate(coeffs):
            if c:
                exp = [0, 0]
                exp[k] = i
                out[tuple(exp)] = c
        return cls(out)

    # -- inspection -----------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._t)

    def coeff(self, ey: int = 0, eq: int = 0) -> Fraction:
        return self._t.get((ey, eq), Fraction(0))

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self._t)

    def constant(self) -> Fraction:
        return self._t.get((0, 0), Fraction(0))

    def degree(self, var: str = "y") -> int:
        k = VARS.index(var)
        return max((e[k] for e in self._t), default=-1)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._t.values())

    def coefficients(self, var: str = "y") -> list:
        """Coefficient list in ``var``; entries are Fractions, or Polys in the other variable."""
        k = VARS.index(var)
        top = self.degree(var)
        rows = [dict() for _ in range(top + 1)]
        for e, c in self._t.items():
            rest = list(e)
            rest[k] = 0
            rows[e[k]][tuple(rest)] = c
        out = []
        for r in rows:
            p = Poly(r)
            out.append(p.constant() if p.is_constant() else p)
        return out

    def subs(self, **values) -> "Poly":
        """Substitute numbers for variables; unnamed variables stay symbolic."""
        out = {}
        for (ey, eq), c in self._t.items():
            e = [ey, eq]
            for k, name in enumerate(VARS):
                if name in values:
                    c = c * _frac(values[name]) ** e[k]
                    e[k] = 0
            key = tuple(e)
            out[key] = out.get(key, 0) + c
        return Poly(out)

    def simplify(self):
        """Constant polynomials collapse to Fractions."""
        return self.constant() if self.is_constant() else self

    # -- arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Rational)):
            return Poly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._t)
        for k, c in other._t.items():
            out[k] = out.get(k, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            c = _frac(other)
            return Poly({k: v * c for k, v in self._t.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out: dict = {}
        for (a1, b1), c1 in self._t.items():
            for (a2, b2), c2 in other._t.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDivisionError("division of a polynomial by zero")
            return self * (Fraction(1) / _frac(other))
        if isinstance(other, Poly):
            return self.exact_div(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out, base = Poly(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def _lead(self):
        return max(self._t)

    def exact_div(self, other) -> "Poly":
        """Quotient by ``other``; raises ArithmeticError unless the remainder is zero."""
        other = self._coerce(other)
        if not other._t:
            raise ZeroDivisionError("division by the zero polynomial")
        lead = other._lead()
        lc = other._t[lead]
        rem = Poly(self._t)
        quot: dict = {}
        while rem._t:
            k = rem._lead()
            if k[0] < lead[0] or k[1] < lead[1]:
                raise ArithmeticError(f"{self} is not divisible by {other}")
            mono = (k[0] - lead[0], k[1] - lead[1])
            c = rem._t[k] / lc
            quot[mono] = quot.get(mono, 0) + c
            rem = rem - Poly({mono: c}) * other
        return Poly(quot)

    def inverse(self) -> Fraction:
        if not self.is_constant() or not self._t:
            raise ArithmeticError(f"{self} is not a unit")
        return Fraction(1) / self.constant()

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._t == other._t
        if isinstance(other, (int, Rational)):
            c = _frac(other)
            return self._t == ({(0, 0): c} if c else {})
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant())
        return hash(frozenset(self._t.items()))

    def __bool__(self):
        return bool(self._t)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for (ey, eq), c in sorted(self._t.items()):
            mono = []
            if ey:
                mono.append("y" if ey == 1 else f"y^{ey}")
            if eq:
                mono.append("q" if eq == 1 else f"q^{eq}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(mono))
            elif c == -1:
                parts.append("-" + "*".join(mono))
            else:
                parts.append(f"{c}*" + "*".join(mono))
        return " + ".join(parts).replace("+ -", "- ")


Y = Poly.var("y")
Q = Poly.var("q")


def is_unit(c) -> bool:
    if isinstance(c, Poly):
        return c.is_constant() and bool(c)
    return c != 0


def unit_inverse(c):
    if isinstance(c, Poly):
        return c.inverse()
    if c == 0:
        raise ZeroDivisionError("constant term is zero")
    return Fraction(1) / _frac(c)
