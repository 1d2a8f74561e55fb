"""Named generating functions, all built exactly as truncated series.

Forms are addressed by stable ids ``"C1"`` .. ``"C20"``.  EGFs are returned
as ordinary coefficient lists (read counts with :func:`egf_counts`); the
ordinary GFs (C6, C7, C8, C19, word D) with :func:`gf_counts`.  A marker
variable ``y`` is the polynomial variable of :mod:`poplab.poly`.

Closed forms that carry square roots of non-rational quantities or a
non-unit denominator are rewritten before expansion; each builder says how.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable

from .poly import Y
from .series import (
    SeriesError, TruncatedSeries, cos_series, exp_series, fixpoint_solve,
    geometric_poly, ode_solve, sin_series, tan_series, tanh_series, sec_series,
)

DEFAULT_ORDER = 12


class UnknownFormError(KeyError):
    pass


def _x(order):
    return TruncatedSeries.x(order)


def _one(order):
    return TruncatedSeries.constant(1, order)


def _odd_part_in(base: TruncatedSeries, marker, order: int) -> TruncatedSeries:
    """sum b_(2m+1) marker^m x^(2m+1) for an odd series sum b_(2m+1) x^(2m+1)."""
    coeffs = [0] * (order + 1)
    for n in range(1, order + 1, 2):
        coeffs[n] = base[n] * marker ** ((n - 1) // 2)
    return TruncatedSeries(coeffs, order)


# -- C1 .. C4 -----------------------------------------------------------------------

def short_cycles_egf(k: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """C1: exp(x + x^2/2 + ... + x^k/k)."""
    return TruncatedSeries([0] + [Fraction(1, i) for i in range(1, k + 1)], order).exp()


def bell_egf(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """C2: exp(e^x - 1)."""
    return (exp_series(order) - 1).exp()


def descent_bgf(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """C3: (1-y) / (e^((y-1)x) - y).

    The denominator is (1-y)(1 - sum_(n>=1) (y-1)^(n-1) x^n/n!); cancelling
    the common factor 1-y leaves a unit constant term.
    """
    w = TruncatedSeries([0] + [(Y - 1) ** (n - 1) * Fraction(1, math.factorial(n))
                               for n in range(1, order + 1)], order)
    return (1 - w).inverse()


def valleyless_egf(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """C4: (e^(2x) + 1) / 2."""
    e2 = TruncatedSeries.from_function(lambda n: Fraction(2 ** n, math.factorial(n)), order)
    return (e2 + 1) * Fraction(1, 2)


# -- C5: peaks / valleys --------------------------------------------------------------

def valley_bgf_times_y(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """y times the closed valley BGF, 1 - 1/y + (1/y) s tan(xs + arctan(1/s)), s^2 = y - 1.

    tan-addition gives s tan(xs + arctan(1/s)) = s (s T + 1) / (s - T) with
    T = tan(xs) = s U, U = sum t_(2m+1) (y-1)^m x^(2m+1).  The surd then
    cancels: s (s^2 U + 1) / (s - s U) = ((y-1) U + 1) / (1 - U).
    """
    u = _odd_part_in(tan_series(order), Y - 1, order)
    return (Y - 1) + ((Y - 1) * u + 1) / (1 - u)


def valley_bgf(order: int = DEFAULT_ORDER, method: str = "closed") -> TruncatedSeries:
    """C5: BGF of permutations by number of valleys (equivalently peaks)."""
    if method == "closed":
        return valley_bgf_times_y(order).exact_div_coeffs(Y)
    if method == "ode":
        return spogp_bgf(1, 1, order)
    raise ValueError(f"unknown method {method!r}")


# -- C6 .. C8: ordinary GFs -----------------------------------------------------------

def horse_gf(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """C6: (1 - x - sqrt(1 - 2x - 3x^2 - 4x^3)) / (2 x^2 (1 + x)).

    The numerator is expanded two orders further and divided by x^2
    exactly (its two lowest coefficients vanish).
    """
    big = order + 2
    root = TruncatedSeries([1, -2, -3, -4], big).sqrt()
    num = TruncatedSeries([1, -1], big) - root
    return num.div_x(2) / TruncatedSeries([2, 2], order)


def catalan_partial(k: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """C7: P_k = sum_(n<k) C(2n, n)/(n+1) x^n."""
    return TruncatedSeries([Fraction(math.comb(2 * n, n), n + 1) for n in range(k)], order)


def spogp_213_bgf(k: int, l: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """C8: BGF on 2-1-3 avoiders, as the fixed point of
    P = 1 + x (y (P - P_k)(P - P_l) + P_k P + P P_l - P_k P_l)."""
    pk, pl = catalan_partial(k, order), catalan_partial(l, order)
    x = _x(order)

    def phi(p):
        return 1 + x * (Y * (p - pk) * (p - pl) + pk * p + p * pl - pk * pl)

    return fixpoint_solve(phi, order)


def spogp_213_closed(k: int, l: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """C19: the closed form of C8, with the division by 2xy done exactly."""
    big = order + 1
    pk, pl = catalan_partial(k, big), catalan_partial(l, big)
    x = _x(big)
    s = x * (1 - Y) * (pk + pl)
    disc = (s - 1) * (s - 1) - x * Y * 4 * (x * (Y - 1) * pk * pl + 1)
    num = 1 - s - disc.sqrt()
    return num.div_x(1).exact_div_coeffs(2 * Y)


def bgf_312_on_213(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """(1 - 2x(1-y) - sqrt(4(1-y)x^2 + 1 - 4x)) / (2xy), i.e. C19 at k = l = 1."""
    big = order + 1
    x = _x(big)
    disc = x * x * (1 - Y) * 4 + 1 - x * 4
    num = 1 - x * (1 - Y) * 2 - disc.sqrt()
    return num.div_x(1).exact_div_coeffs(2 * Y)


# -- C9, C10: multi-patterns and non-overlapping occurrences ----------------------------

def multi_pattern_egf(blocks: list[TruncatedSeries]) -> TruncatedSeries:
    """A = sum_i A_i prod_(j<i) ((x-1) A_j + 1) for avoider EGFs A_i of the blocks."""
    order = min(b.order for b in blocks)
    x = _x(order)
    total = TruncatedSeries.constant(0, order)
    prod = _one(order)
    for a in blocks:
        total = total + a * prod
        prod = prod * ((x - 1) * a + 1)
    return total


def two_letter_multi_egf(k: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """C9: (1 - (1 + (x-1) e^x)^k) / (1 - x)."""
    x = _x(order)
    inner = 1 + (x - 1) * exp_series(order)
    return (1 - inner ** k) / (1 - x)


def nonoverlap_bgf(b: TruncatedSeries, word_k: int | None = None) -> TruncatedSeries:
    """C10: B / (1 - y (1 + (x-1) B)); words: x -> kx and B is an ordinary GF."""
    order = b.order
    x = _x(order) * (word_k if word_k else 1)
    return b / (1 - Y * (1 + (x - 1) * b))


def central_binomial_egf(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """EGF of C(n, floor(n/2)), the avoiders of 11'2."""
    return TruncatedSeries.from_egf_counts([math.comb(n, n // 2) for n in range(order + 1)])


def incomparable_pair_egf(order: int = DEFAULT_ORDER, word_k: int | None = None) -> TruncatedSeries:
    """B for the pattern 11': only lengths 0 and 1 avoid it."""
    return TruncatedSeries([1, word_k or 1], order)


# -- C11 .. C13: length-four segmented patterns ------------------------------------------

def egf_122p1p(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """C11: 1/2 + 1/4 tan x (1 + e^(2x) + 2 e^x sin x) + 1/2 e^x cos x."""
    e = exp_series(order)
    e2 = TruncatedSeries.from_function(lambda n: Fraction(2 ** n, math.factorial(n)), order)
    inner = 1 + e2 + e * sin_series(order) * 2
    return (Fraction(1, 2) + tan_series(order) * inner * Fraction(1, 4)
            + e * cos_series(order) * Fraction(1, 2))


def egf_1231p(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """C12: x e^(x/2) (cos(sqrt3 x/2) - (sqrt3/3) sin(sqrt3 x/2))^(-1) + 1.

    cos(sqrt3 x/2) has x^(2m) coefficient (-3/4)^m/(2m)!, and
    (sqrt3/3) sin(sqrt3 x/2) has x^(2m+1) coefficient (-1)^m 3^m / 2^(2m+1) / (2m+1)!,
    so the surds drop out.
    """
    inner_order = order - 1 if order > 0 else 0
    half_exp = TruncatedSeries.from_function(
        lambda n: Fraction(1, 2 ** n * math.factorial(n)), inner_order)

    def trig(n):
        m = n // 2
        if n % 2 == 0:
            return Fraction((-3) ** m, 4 ** m * math.factorial(n))
        return -Fraction((-1) ** m * 3 ** m, 2 ** (2 * m + 1) * math.factorial(n))

    denom = TruncatedSeries.from_function(trig, inner_order)
    if order == 0:
        return _one(0)
    return (half_exp / denom).mul_x(1) + 1


def egf_1321p(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """C13: x (1 - int_0^x e^(-t^2/2) dt)^(-1) + 1 (also for 2131')."""
    if order == 0:
        return _one(0)
    inner_order = order - 1
    gauss = exp_series(inner_order).compose(TruncatedSeries([0, 0, Fraction(-1, 2)], inner_order))
    erfish = gauss.truncate(max(inner_order - 1, 0)).integral() if inner_order > 0 else \
        TruncatedSeries.constant(0, 0)
    return (1 - erfish).inverse().mul_x(1) + 1


# -- C14, C18, C20: first-order ODEs ------------------------------------------------------

def shuffle_egf(a: TruncatedSeries, b: TruncatedSeries, order: int | None = None) -> TruncatedSeries:
    """C14: C' = (A + B) C - A B, C(0) = 1."""
    order = min(a.order, b.order) + 1 if order is None else order
    return ode_solve(-(a * b), a + b, None, 1, order)


def spogp_bgf(k: int, l: int = 0, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """C18: BGF of a1..ak a a(k+1)..a(k+l) occurrences (l = 0: a a1..ak).

    P' = y (P - G_k)(P - G_l) + (G_k + G_l) P - G_k G_l with
    G_j = (1 - x^j)/(1 - x), i.e. P' = y P^2 + (1-y)(G_k + G_l) P + (y-1) G_k G_l.
    """
    gk, gl = geometric_poly(k, order), geometric_poly(l, order)
    return ode_solve((gk * gl) * (Y - 1), (gk + gl) * (1 - Y), TruncatedSeries.constant(Y, order),
                     1, order)


def spogp_avoid_egf(k: int, l: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """C20: A' = (2 - x^k - x^l)/(1-x) A - (1 - x^k - x^l + x^(k+l))/(1-x)^2, A(0) = 1."""
    gk, gl = geometric_poly(k, order), geometric_poly(l, order)
    return ode_solve(-(gk * gl), gk + gl, None, 1, order)


# -- C15 .. C17 --------------------------------------------------------------------------

def circular_maxima_egf(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """C15: z x (1 - z tanh(xz)) / (z - tanh(xz)), z^2 = 1 - y.

    tanh(xz) = z V with V = sum h_(2m+1) (1-y)^m x^(2m+1), so the form is
    x (1 - (1-y) V) / (1 - V).
    """
    v = _odd_part_in(tanh_series(order), 1 - Y, order)
    return _x(order) * (1 - v * (1 - Y)) / (1 - v)


def tan_plus_sec(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """C16."""
    return tan_series(order) + sec_series(order)


def power_sum_series(n: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """C17: sum_(k>=0) k^n t^k (the variable is written x)."""
    return TruncatedSeries.from_function(lambda k: k ** n, order)


def eulerian_from_series(n: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """(1 - t)^(n+1) sum_k k^n t^k; equals the Eulerian polynomial A_n(t) for n >= 1."""
    return power_sum_series(n, order) * TruncatedSeries([1, -1], order) ** (n + 1)


# -- registry -----------------------------------------------------------------------------

def _b_series(name, order, word_k=None):
    if isinstance(name, TruncatedSeries):
        return name
    if name in ("11'", None):
        return incomparable_pair_egf(order, word_k)
    if word_k:
        raise ValueError("word GFs are only bundled for the pattern 11'")
    if name == "11'2":
        return central_binomial_egf(order)
    if name == "122'1'":
        return egf_122p1p(order)
    raise ValueError(f"no bundled avoider EGF for {name!r}")


def _ab_series(name, order):
    if isinstance(name, TruncatedSeries):
        return name
    if name in ("exp", None):
        return exp_series(order)
    if name == "zero":
        return TruncatedSeries.constant(0, order)
    raise ValueError(f"unknown block EGF {name!r} (use 'exp' or 'zero')")


FORMS: dict[str, tuple[str, Callable]] = {
    "C1": ("exp(sum_{i<=k} x^i/i): avoiders of a-a1..ak", lambda o, k=2: short_cycles_egf(int(k), o)),
    "C2": ("Bell numbers exp(e^x - 1)", lambda o: bell_egf(o)),
    "C3": ("descent BGF (1-y)/(e^((y-1)x) - y)", lambda o: descent_bgf(o)),
    "C4": ("(e^(2x)+1)/2: avoiders of a1aa2", lambda o: valleyless_egf(o)),
    "C5": ("valley/peak BGF", lambda o, method="closed": valley_bgf(o, method)),
    "C6": ("Horse permutations GF", lambda o: horse_gf(o)),
    "C7": ("Catalan partial sum P_k", lambda o, k=3: catalan_partial(int(k), o)),
    "C8": ("BGF on S_n(2-1-3), fixed point", lambda o, k=1, l=0: spogp_213_bgf(int(k), int(l), o)),
    "C9": ("multi-pattern of k two-letter blocks", lambda o, k=2: two_letter_multi_egf(int(k), o)),
    "C10": ("non-overlapping occurrence BGF D(x,y)",
            lambda o, b="11'", word_k=None: nonoverlap_bgf(
                _b_series(b, o, int(word_k) if word_k else None), int(word_k) if word_k else None)),
    "C11": ("EGF of 122'1' avoiders", lambda o: egf_122p1p(o)),
    "C12": ("EGF of 1231' avoiders", lambda o: egf_1231p(o)),
    "C13": ("EGF of 1321' (and 2131') avoiders", lambda o: egf_1321p(o)),
    "C14": ("shuffle pattern ODE C' = (A+B)C - AB",
            lambda o, a="exp", b="exp": shuffle_egf(_ab_series(a, o), _ab_series(b, o), o)),
    "C15": ("circular maxima EGF", lambda o: circular_maxima_egf(o)),
    "C16": ("tan x + sec x", lambda o: tan_plus_sec(o)),
    "C17": ("sum_k k^n t^k", lambda o, n=3: power_sum_series(int(n), o)),
    "C18": ("BGF of a1..ak a a(k+1)..a(k+l) by ODE", lambda o, k=1, l=0: spogp_bgf(int(k), int(l), o)),
    "C19": ("BGF on S_n(2-1-3), closed form", lambda o, k=1, l=1: spogp_213_closed(int(k), int(l), o)),
    "C20": ("avoiders of a1..ak a a(k+1)..a(k+l) by ODE",
            lambda o, k=1, l=1: spogp_avoid_egf(int(k), int(l), o)),
}

# ordinary (not exponential) generating functions
ORDINARY = {"C6", "C7", "C8", "C17", "C19"}


def catalog(form_id: str, order: int = DEFAULT_ORDER, y=None, **params) -> TruncatedSeries:
    """Build form ``form_id`` to ``order``; ``y`` optionally specializes the marker."""
    if order < 0:
        raise SeriesError("order must be non-negative")
    try:
        _, build = FORMS[form_id.upper()]
    except KeyError:
        raise UnknownFormError(f"unknown form {form_id!r}; known: {', '.join(FORMS)}") from None
    f = build(order, **params)
    if y is not None:
        f = f.subs(y=y)
    return f


def is_ordinary(form_id: str, **params) -> bool:
    return form_id.upper() in ORDINARY or (form_id.upper() == "C10" and bool(params.get("word_k")))
