"""Exact rational arithmetic helpers.

Rationals are plain :class:`fractions.Fraction` values, which are always kept
in lowest terms with a positive denominator.
"""

from fractions import Fraction
from math import gcd, isqrt

Rat = Fraction


def Q(x):
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rat(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def parse_rat(text):
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None
    if d == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(n, d)


def format_rat(x):
    x = Q(x)
    return f"{x.numerator}/{x.denominator}"


def height(x):
    """max(|num|, den) of a rational in lowest terms."""
    x = Q(x)
    return max(abs(x.numerator), x.denominator)


def rationals_of_height(bound, positive=False):
    """All rationals u/v in lowest terms with |u|, v <= bound, sorted by value."""
    out = []
    lo = 1 if positive else -bound
    for v in range(1, bound + 1):
        for u in range(lo, bound + 1):
            if gcd(u, v) == 1:
                out.append(Fraction(u, v))
    if not positive:
        out.append(Fraction(0))
    return sorted(set(out))


def is_square_int(n):
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def rat_sqrt(x):
    """Non-negative rational square root of ``x``, or None if x is not a square."""
    x = Q(x)
    if x < 0:
        raise ValueError(f"square root of negative rational {x}")
    # lowest terms: x is a square iff numerator and denominator both are
    rn = isqrt(x.numerator)
    if rn * rn != x.numerator:
        return None
    rd = isqrt(x.denominator)
    if rd * rd != x.denominator:
        return None
    return Fraction(rn, rd)


def is_rat_square(x):
    x = Q(x)
    return x >= 0 and rat_sqrt(x) is not None


class QPoly:
    """Univariate polynomial over Q, coefficients stored lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        if len(cs) > 5:
            raise ValueError("QPoly supports degree at most 4")
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    evaluate = __call__

    def __eq__(self, other):
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QPoly({[format_rat(c) for c in self.coeffs]})"


def solve_quadratic(a2, a1, a0):
    """Rational roots of a2*x^2 + a1*x + a0, ascending, without repeats.

    Degenerates to the linear case when a2 == 0. The all-zero polynomial is
    rejected; a non-zero constant simply has no roots.
    """
    a2, a1, a0 = Q(a2), Q(a1), Q(a0)
    if a2 == 0:
        if a1 == 0:
            if a0 == 0:
                raise ValueError("zero polynomial has every rational as a root")
            return []
        return [-a0 / a1]
    disc = a1 * a1 - 4 * a2 * a0
    if disc < 0:
        return []
    r = rat_sqrt(disc)
    if r is None:
        return []
    roots = sorted({(-a1 - r) / (2 * a2), (-a1 + r) / (2 * a2)})
    for x in roots:
        assert a2 * x * x + a1 * x + a0 == 0
    return roots


def _divisors(n):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _integer_coeffs(coeffs):
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints]


def rational_roots_cubic(a3, a2, a1, a0):
    """All rational roots of a3*x^3 + a2*x^2 + a1*x + a0 by the rational root test."""
    a3, a2, a1, a0 = Q(a3), Q(a2), Q(a1), Q(a0)
    if a3 == 0:
        raise ValueError("leading coefficient of a cubic must be non-zero")
    if a0 == 0:
        rest = solve_quadratic(a3, a2, a1)
        return sorted({Fraction(0), *rest})
    c3, c2, c1, c0 = _integer_coeffs([a3, a2, a1, a0])

    def f(x):
        return ((c3 * x + c2) * x + c1) * x + c0

    roots = set()
    for num in _divisors(c0):
        for den in _divisors(c3):
            for x in (Fraction(num, den), Fraction(-num, den)):
                if f(x) == 0:
                    roots.add(x)
    for x in roots:
        assert ((a3 * x + a2) * x + a1) * x + a0 == 0
    return sorted(roots)
