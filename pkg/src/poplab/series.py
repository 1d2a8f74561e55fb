"""Exact truncated power series in ``x``.

A :class:`TruncatedSeries` of order ``N`` knows the coefficients of
``x^0 .. x^N`` exactly.  Coefficients live in any exact commutative ring
whose elements support ``+ - *`` with each other and with integers:
:class:`fractions.Fraction` for plain series and :class:`poplab.poly.Poly`
for series whose coefficients are polynomials in ``y`` and/or ``q``.
Binary operations return the smaller of the two orders; nothing is ever
extended past what the inputs determine.

:class:`QEgfSeries` holds ``sum a_n x^n / [n]_q!`` by its numerators
``a_n``; its product is the Gaussian-binomial convolution.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .poly import Poly, is_unit, unit_inverse


class SeriesError(ArithmeticError):
    pass


class NonIntegralCoefficientError(SeriesError):
    """Scaled coefficients were expected to be integers."""


def _norm(c):
    if isinstance(c, Poly):
        return c.simplify()
    return c if isinstance(c, Fraction) else Fraction(c)


def _is_zero(c) -> bool:
    return c == 0


class TruncatedSeries:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence, order: int | None = None):
        coeffs = [_norm(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise SeriesError("order must be non-negative")
        if len(coeffs) > order + 1:
            coeffs = coeffs[:order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        self.coeffs = coeffs
        self.order = order

    # -- constructors ---------------------------------------------------------

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedSeries":
        return cls([c], order)

    @classmethod
    def x(cls, order: int, power: int = 1) -> "TruncatedSeries":
        return cls([0] * power + [1], order)

    @classmethod
    def from_function(cls, f: Callable[[int], object], order: int) -> "TruncatedSeries":
        return cls([f(n) for n in range(order + 1)], order)

    @classmethod
    def from_egf_counts(cls, counts: Sequence, order: int | None = None) -> "TruncatedSeries":
        order = len(counts) - 1 if order is None else order
        return cls([_norm(c) * Fraction(1, math.factorial(n)) for n, c in enumerate(counts)], order)

    # -- access ---------------------------------------------------------------

    def __getitem__(self, n: int):
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise SeriesError(f"coefficient {n} is beyond the truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise SeriesError(f"cannot raise order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[:order + 1], order)

    def map(self, fn) -> "TruncatedSeries":
        return TruncatedSeries([fn(c) for c in self.coeffs], self.order)

    def subs(self, **values) -> "TruncatedSeries":
        """Substitute numbers for the polynomial variables of every coefficient."""
        return self.map(lambda c: c.subs(**values) if isinstance(c, Poly) else c)

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction, Poly)):
            return TruncatedSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

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
        if isinstance(other, (int, Fraction, Poly)):
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = Fraction(0)
            for i in range(k + 1):
                if not _is_zero(a[i]) and not _is_zero(b[k - i]):
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        a = self.coeffs
        if not is_unit(a[0]):
            raise SeriesError(f"constant term {a[0]} is not invertible")
        inv0 = unit_inverse(a[0])
        out = [_norm(inv0)]
        for k in range(1, self.order + 1):
            acc = Fraction(0)
            for i in range(1, k + 1):
                if not _is_zero(a[i]):
                    acc = acc + a[i] * out[k - i]
            out.append(_norm(-acc * inv0))
        return TruncatedSeries(out, self.order)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, Poly):
            return self.exact_div_coeffs(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = TruncatedSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def exact_div_coeffs(self, d) -> "TruncatedSeries":
        """Divide every coefficient exactly by the ring element ``d``."""
        def div(c):
            if _is_zero(c):
                return c
            if isinstance(d, Poly) or isinstance(c, Poly):
                return _norm(Poly(c).exact_div(d) if not isinstance(c, Poly) else c.exact_div(d))
            return c / d

        return self.map(div)

    # -- calculus -------------------------------------------------------------

    def derivative(self) -> "TruncatedSeries":
        if self.order == 0:
            raise SeriesError("derivative of an order-0 series is unknown")
        return TruncatedSeries([self.coeffs[n] * n for n in range(1, self.order + 1)], self.order - 1)

    def integral(self) -> "TruncatedSeries":
        """Antiderivative with zero constant term (one order higher)."""
        return TruncatedSeries([0] + [c * Fraction(1, n + 1) for n, c in enumerate(self.coeffs)],
                               self.order + 1)

    def mul_x(self, k: int = 1) -> "TruncatedSeries":
        return TruncatedSeries([0] * k + list(self.coeffs), self.order + k)

    def div_x(self, k: int = 1) -> "TruncatedSeries":
        """Exact division by x^k; the k lowest coefficients must vanish."""
        for i in range(min(k, self.order + 1)):
            if not _is_zero(self.coeffs[i]):
                raise SeriesError(f"coefficient of x^{i} is {self.coeffs[i]}, not divisible by x^{k}")
        if self.order - k < 0:
            raise SeriesError("nothing left after dividing by x^k")
        return TruncatedSeries(self.coeffs[k:], self.order - k)

    def compose(self, g: "TruncatedSeries") -> "TruncatedSeries":
        """f(g(x)) for g with zero constant term."""
        if not _is_zero(g.coeffs[0]):
            raise SeriesError("compose needs g(0) = 0")
        n = min(self.order, g.order)
        g = g.truncate(n)
        out = TruncatedSeries.constant(self.coeffs[n], n)
        for i in range(n - 1, -1, -1):
            out = out * g + self.coeffs[i]
        return out

    def exp(self) -> "TruncatedSeries":
        """exp(f) for f with zero constant term."""
        f = self.coeffs
        if not _is_zero(f[0]):
            raise SeriesError("exp needs f(0) = 0")
        out = [Fraction(1)]
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                if not _is_zero(f[k]):
                    acc = acc + f[k] * out[n - k] * k
            out.append(_norm(acc * Fraction(1, n)))
        return TruncatedSeries(out, self.order)

    def sqrt(self) -> "TruncatedSeries":
        """Square root for f with constant term 1."""
        f = self.coeffs
        if f[0] != 1:
            raise SeriesError("sqrt needs f(0) = 1")
        out = [Fraction(1)]
        half = Fraction(1, 2)
        for n in range(1, self.order + 1):
            acc = f[n]
            for k in range(1, n):
                acc = acc - out[k] * out[n - k]
            out.append(_norm(acc * half))
        return TruncatedSeries(out, self.order)

    # -- comparison and read-out ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def agrees(self, other: "TruncatedSeries", order: int | None = None) -> bool:
        n = min(self.order, other.order) if order is None else order
        if n > min(self.order, other.order):
            raise SeriesError("comparison order exceeds the known coefficients")
        return all(self.coeffs[i] == other.coeffs[i] for i in range(n + 1))

    def __repr__(self):
        terms = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedSeries([{terms}], order={self.order})"

    def lines(self) -> str:
        return "".join(f"{n}: {c}\n" for n, c in enumerate(self.coeffs))

    def json_coefficients(self) -> list[str]:
        out = []
        for c in self.coeffs:
            if isinstance(c, Fraction):
                out.append(f"{c.numerator}/{c.denominator}")
            else:
                out.append(str(c))
        return out


# -- integer read-out -----------------------------------------------------------

def _integral(c, where: str):
    if isinstance(c, Poly):
        if not c.is_integral():
            raise NonIntegralCoefficientError(f"{where}: {c} has non-integer coefficients")
        return c
    if c.denominator != 1:
        raise NonIntegralCoefficientError(f"{where}: {c} is not an integer")
    return int(c)


def gf_counts(f: TruncatedSeries) -> list:
    """[x^n] f, required to be integral."""
    return [_integral(c, f"[x^{n}]") for n, c in enumerate(f.coeffs)]


def egf_counts(f: TruncatedSeries) -> list:
    """n! [x^n] f, required to be integral."""
    return [_integral(c * math.factorial(n), f"{n}! [x^{n}]") for n, c in enumerate(f.coeffs)]


def bgf_table(f: TruncatedSeries, egf: bool = True, var: str = "y") -> dict[tuple[int, int], int]:
    """{(n, k): count} from a series whose coefficients are polynomials in ``var``."""
    counts = egf_counts(f) if egf else gf_counts(f)
    table = {}
    for n, c in enumerate(counts):
        row = c.coefficients(var) if isinstance(c, Poly) else [c]
        for k, v in enumerate(row):
            if v:
                table[(n, k)] = int(v)
    return table


def bgf_row(f: TruncatedSeries, n: int, egf: bool = True, var: str = "y") -> list[int]:
    c = (egf_counts(f) if egf else gf_counts(f))[n]
    row = c.coefficients(var) if isinstance(c, Poly) else [c]
    return [int(v) for v in row]


# -- elementary series ------------------------------------------------------------

def exp_series(order: int) -> TruncatedSeries:
    return TruncatedSeries.from_function(lambda n: Fraction(1, math.factorial(n)), order)


def sin_series(order: int) -> TruncatedSeries:
    return TruncatedSeries.from_function(
        lambda n: Fraction((-1) ** (n // 2), math.factorial(n)) if n % 2 else 0, order)


def cos_series(order: int) -> TruncatedSeries:
    return TruncatedSeries.from_function(
        lambda n: 0 if n % 2 else Fraction((-1) ** (n // 2), math.factorial(n)), order)


def tan_series(order: int) -> TruncatedSeries:
    return sin_series(order) / cos_series(order)


def sec_series(order: int) -> TruncatedSeries:
    return cos_series(order).inverse()


def sinh_series(order: int) -> TruncatedSeries:
    return TruncatedSeries.from_function(
        lambda n: Fraction(1, math.factorial(n)) if n % 2 else 0, order)


def cosh_series(order: int) -> TruncatedSeries:
    return TruncatedSeries.from_function(
        lambda n: 0 if n % 2 else Fraction(1, math.factorial(n)), order)


def tanh_series(order: int) -> TruncatedSeries:
    return sinh_series(order) / cosh_series(order)


def geometric_poly(k: int, order: int) -> TruncatedSeries:
    """(1 - x^k) / (1 - x) = 1 + x + ... + x^(k-1)."""
    return TruncatedSeries([1] * k, order) if k > 0 else TruncatedSeries([0], order)


# -- equation solvers -----------------------------------------------------------

def ode_solve(c0: TruncatedSeries | None, c1: TruncatedSeries | None, c2: TruncatedSeries | None,
              initial, order: int) -> TruncatedSeries:
    """The series P of the given order with P(0) = initial and P' = c0 + c1 P + c2 P^2.

    Each coefficient series must be known to order ``order - 1``.  The
    solution is built one coefficient at a time: [x^n] of the right side
    only involves p_0..p_n.
    """
    for c in (c0, c1, c2):
        if c is not None and c.order < order - 1:
            raise SeriesError(f"coefficient series of order {c.order} cannot fix P to order {order}")
    p = [_norm(initial)]
    sq = []
    for n in range(order):
        sq.append(sum((p[i] * p[n - i] for i in range(n + 1)), Fraction(0)))
        acc = Fraction(0)
        if c0 is not None:
            acc = acc + c0.coeffs[n]
        if c1 is not None:
            for i in range(n + 1):
                if not _is_zero(c1.coeffs[i]):
                    acc = acc + c1.coeffs[i] * p[n - i]
        if c2 is not None:
            for i in range(n + 1):
                if not _is_zero(c2.coeffs[i]):
                    acc = acc + c2.coeffs[i] * sq[n - i]
        p.append(_norm(acc * Fraction(1, n + 1)))
    return TruncatedSeries(p, order)


def ode_residual(p: TruncatedSeries, c0, c1, c2) -> TruncatedSeries:
    """P' - (c0 + c1 P + c2 P^2), known to order ``p.order - 1``."""
    n = p.order - 1
    rhs = TruncatedSeries.constant(0, n)
    pt = p.truncate(n)
    if c0 is not None:
        rhs = rhs + c0.truncate(n)
    if c1 is not None:
        rhs = rhs + c1.truncate(n) * pt
    if c2 is not None:
        rhs = rhs + c2.truncate(n) * pt * pt
    return p.derivative() - rhs


def fixpoint_solve(phi: Callable[[TruncatedSeries], TruncatedSeries], order: int,
                   start: TruncatedSeries | None = None) -> TruncatedSeries:
    """The unique P with P = phi(P) mod x^(order+1).

    ``phi`` must fix the coefficient of x^m from coefficients below m, so
    iteration t settles coefficient t.  A settled coefficient that changes
    again means phi feeds a coefficient back into itself.
    """
    p = start if start is not None else TruncatedSeries.constant(0, order)
    p = p.truncate(order)
    for t in range(order + 1):
        nxt = phi(p)
        if nxt.order < order:
            raise SeriesError("phi lost precision")
        nxt = nxt.truncate(order)
        for i in range(t):
            if nxt.coeffs[i] != p.coeffs[i]:
                raise SeriesError(f"coefficient {i} changed after it settled: phi is not contracting")
        p = nxt
    if phi(p).truncate(order) != p:
        raise SeriesError("no fixed point reached: phi is not contracting")
    return p


# -- q-analogues ------------------------------------------------------------------

def q_integer(n: int) -> Poly:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    return Poly.from_coefficients([1] * n, "q")


def q_factorial(n: int) -> Poly:
    out = Poly(1)
    for i in range(1, n + 1):
        out = out * q_integer(i)
    return out


@lru_cache(maxsize=None)
def gauss_binomial(n: int, i: int) -> Poly:
    """Gaussian binomial by the Pascal recurrence [n,i] = [n-1,i-1] + q^i [n-1,i]."""
    if i < 0 or i > n:
        return Poly(0)
    if i == 0 or i == n:
        return Poly(1)
    return gauss_binomial(n - 1, i - 1) + Poly.monomial(1, 0, i) * gauss_binomial(n - 1, i)


class QEgfSeries:
    """sum a_n x^n / [n]_q!, stored by numerators a_n (polynomials in q, optionally y)."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence, order: int | None = None):
        coeffs = [c if isinstance(c, Poly) else Poly(c) for c in coeffs]
        order = len(coeffs) - 1 if order is None else order
        coeffs = coeffs[:order + 1] + [Poly(0)] * (order + 1 - len(coeffs))
        self.coeffs = coeffs
        self.order = order

    @classmethod
    def constant(cls, c, order: int) -> "QEgfSeries":
        return cls([c], order)

    def __getitem__(self, n):
        return self.coeffs[n]

    def _coerce(self, other):
        if isinstance(other, QEgfSeries):
            return other
        if isinstance(other, (int, Fraction, Poly)):
            return QEgfSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return QEgfSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return QEgfSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return QEgfSeries([c * other for c in self.coeffs], self.order)
        if not isinstance(other, QEgfSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = Poly(0)
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    acc = acc + gauss_binomial(k, i) * a[i] * b[k - i]
            out.append(acc)
        return QEgfSeries(out, n)

    __rmul__ = __mul__

    def x_times(self) -> "QEgfSeries":
        """x * f: (x f)_n = [n]_q f_(n-1); one order higher."""
        return QEgfSeries([Poly(0)] + [q_integer(n) * self.coeffs[n - 1]
                                       for n in range(1, self.order + 2)], self.order + 1)

    def inverse(self) -> "QEgfSeries":
        a = self.coeffs
        if not is_unit(a[0]):
            raise SeriesError(f"constant term {a[0]} is not invertible")
        inv0 = unit_inverse(a[0])
        out = [Poly(inv0)]
        for k in range(1, self.order + 1):
            acc = Poly(0)
            for i in range(1, k + 1):
                if a[i]:
                    acc = acc + gauss_binomial(k, i) * a[i] * out[k - i]
            out.append(-acc * inv0)
        return QEgfSeries(out, self.order)

    def subs(self, **values) -> "QEgfSeries":
        return QEgfSeries([c.subs(**values) for c in self.coeffs], self.order)

    def truncate(self, order: int) -> "QEgfSeries":
        if order > self.order:
            raise SeriesError(f"cannot raise order {self.order} to {order}")
        return QEgfSeries(self.coeffs[:order + 1], order)

    def to_egf(self) -> TruncatedSeries:
        """At q = 1 the numerators over n! give the ordinary EGF."""
        return TruncatedSeries([c.subs(q=1).simplify() * Fraction(1, math.factorial(n))
                                for n, c in enumerate(self.coeffs)], self.order)

    def __eq__(self, other):
        if not isinstance(other, QEgfSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        return f"QEgfSeries([{', '.join(map(str, self.coeffs))}], order={self.order})"


def q_mul(f: QEgfSeries, g: QEgfSeries) -> QEgfSeries:
    return f * g


def q_geom_inverse(b: QEgfSeries, y=None) -> QEgfSeries:
    """(1 - y B)^(-1) in the q-EGF ring; ``y`` defaults to the polynomial variable y."""
    y = Poly.var("y") if y is None else y
    return (1 - b * y).inverse()


def q_x_times(f: QEgfSeries) -> QEgfSeries:
    return f.x_times()
