"""Short Weierstrass curves over Q, the chord-tangent law, and the quartic models
w^2 = Delta(x) attached to each family, with their maps to and from the cubic.

Cases are named C321, C322, C421, C431, C432. The quartic variable is m for
C321/C421/C431 and k (with d = 1) for C322/C432.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

from .exactq import Q, QPoly, format_rat, parse_rat, rat_sqrt

ZERO = Fraction(0)

# ranks quoted alongside the curves; documentation only, nothing here computes them
STATED_RANKS = {"C421": 0}


class CurveDomainError(ValueError):
    pass


class ExcludedPointError(ValueError):
    """A map's denominator vanishes at the given point."""


class Case(str, Enum):
    C321 = "C321"
    C322 = "C322"
    C421 = "C421"
    C431 = "C431"
    C432 = "C432"


@dataclass(frozen=True)
class Point:
    X: Fraction = None
    Y: Fraction = None

    @property
    def is_infinity(self):
        return self.X is None

    def to_json(self):
        if self.is_infinity:
            return {"inf": True}
        return {"X": format_rat(self.X), "Y": format_rat(self.Y)}

    @classmethod
    def from_json(cls, obj):
        if obj.get("inf"):
            return INFINITY
        return cls(parse_rat(obj["X"]), parse_rat(obj["Y"]))

    def __str__(self):
        return "O" if self.is_infinity else f"({self.X}, {self.Y})"


INFINITY = Point()


def point(X, Y):
    return Point(Q(X), Q(Y))


@dataclass(frozen=True)
class Curve:
    """Y^2 = X^3 + A X + B."""

    A: Fraction
    B: Fraction

    def __post_init__(self):
        object.__setattr__(self, "A", Q(self.A))
        object.__setattr__(self, "B", Q(self.B))
        if self.discriminant == 0:
            raise CurveDomainError(f"singular curve: 4A^3 + 27B^2 = 0 for A={self.A}, B={self.B}")

    @property
    def discriminant(self):
        """-(4A^3 + 27B^2), without the customary factor 16."""
        return -(4 * self.A ** 3 + 27 * self.B ** 2)

    def rhs(self, X):
        return X ** 3 + self.A * X + self.B

    def to_json(self):
        return {"A": format_rat(self.A), "B": format_rat(self.B)}

    @classmethod
    def from_json(cls, obj):
        return cls(parse_rat(obj["A"]), parse_rat(obj["B"]))


def on_curve(c, pt):
    return pt.is_infinity or pt.Y ** 2 == c.rhs(pt.X)


def _check(c, *pts):
    for pt in pts:
        if not on_curve(c, pt):
            raise CurveDomainError(f"{pt} is not on {c}")


def neg(c, pt):
    _check(c, pt)
    return pt if pt.is_infinity else Point(pt.X, -pt.Y)


def add(c, p1, p2):
    _check(c, p1, p2)
    if p1.is_infinity:
        return p2
    if p2.is_infinity:
        return p1
    if p1.X == p2.X:
        if p1.Y != p2.Y or p1.Y == 0:
            return INFINITY
        lam = (3 * p1.X ** 2 + c.A) / (2 * p1.Y)
    else:
        lam = (p2.Y - p1.Y) / (p2.X - p1.X)
    X3 = lam * lam - p1.X - p2.X
    return Point(X3, lam * (p1.X - X3) - p1.Y)


def double(c, pt):
    return add(c, pt, pt)


def multiply(c, n, pt):
    """[n]pt by double-and-add; negative n uses -pt."""
    if n < 0:
        return multiply(c, -n, neg(c, pt))
    acc, base = INFINITY, pt
    while n:
        if n & 1:
            acc = add(c, acc, base)
        base = double(c, base)
        n >>= 1
    return acc


# --- case parameters ------------------------------------------------------------------------

def _p(p):
    p = Q(p)
    if p == 0:
        raise CurveDomainError("need p != 0")
    return p


def _mp(m, p):
    m, p = Q(m), _p(p)
    if m * m == 1:
        raise CurveDomainError("need m != +-1")
    return m, p


def _make(A, B, cond):
    try:
        return Curve(A, B)
    except CurveDomainError:
        raise CurveDomainError(f"singular parameters: {cond}") from None


# C321 ----------------------------------------------------------------------------------

def curve_321(p):
    p = _p(p)
    A = -27 * p ** 2 * (p ** 6 - 12 * p ** 5 + 38 * p ** 4 - 36 * p ** 3 + 49 * p ** 2 - 24 * p + 48)
    B = (54 * p ** 4 * (p ** 3 - 6 * p ** 2 + p - 12)
         * (p ** 5 - 12 * p ** 4 + 38 * p ** 3 - 36 * p ** 2 + p - 24))
    return _make(A, B, f"discriminant of the p-curve vanishes at p={p}")


def delta_321(p):
    p = Q(p)
    return QPoly([p ** 4, -2 * p * (p ** 3 - p ** 2 - 2), p ** 2 * (p ** 2 + 1),
                  -2 * p * (p ** 2 - p + 2), p ** 2])


def double_p_321(p):
    """Closed-form [2]P as displayed; equals -(double of P), see the notes."""
    p = Q(p)
    X = 3 * (p ** 6 - 4 * p ** 5 + 38 * p ** 4 - 16 * p ** 3 + 25 * p ** 2 - 12 * p + 12) / (p + 1) ** 2
    Y = (108 * (2 * p ** 2 + 1) * (2 * p ** 5 - 4 * p ** 4 + 5 * p ** 3 - 2 * p ** 2 + 3 * p - 2)
         / (p + 1) ** 3)
    return Point(X, Y)


def _phi_321(p, m, w):
    if m == 0:
        raise ExcludedPointError("m = 0")
    e = p ** 3 - p ** 2 - 2
    X = 3 * p * (p * (p ** 2 + 1) * m ** 2 - 6 * e * m + 6 * p ** 3 + 6 * p * w) / m ** 2
    Ym = 54 * p * (p ** 2 * ((p ** 2 - p + 2) * m ** 3 - p * (p ** 2 + 1) * m ** 2 + 3 * e * m - 2 * p ** 3)
                   + (e * m - 2 * p ** 3) * w)
    return Point(X, -Ym / m ** 3)


def _phi_inv_321(p, X, Y):
    den = (X - 3 * p ** 2 * (p ** 2 - 6 * p + 1)) * (X - 3 * p ** 2 * (p ** 2 + 6 * p + 1))
    if den == 0:
        raise ExcludedPointError(f"X = {X} lies on the excluded divisor")
    num = 6 * p * (Y * p - 3 * (p ** 3 - p ** 2 - 2) * X
                   + 9 * p ** 2 * (p ** 5 - 7 * p ** 4 + 7 * p ** 3 - 15 * p ** 2 - 2))
    return num / den


# C421 ----------------------------------------------------------------------------------

def curve_421():
    return Curve(-675, 13662)


def delta_421():
    return QPoly([0, 4, 1, -2, 1])


DEGENERATE_421 = tuple(point(X, Y) for X, Y in
                       ((-33, 0), (3, 108), (3, -108), (39, 216), (39, -216)))


def _phi_421(m, w):
    if m == 1:
        raise ExcludedPointError("m = 1")
    X = 3 * (m ** 2 + 10 * m - 12 * w + 13) / (m - 1) ** 2
    Y = -108 * (m ** 3 - 2 * m ** 2 + 7 * m + 2 - (m + 3) * w) / (m - 1) ** 3
    return Point(X, Y)


def _phi_inv_421(X, Y):
    den = (X + 33) * (X - 39)
    if den == 0:
        raise ExcludedPointError(f"X = {X} lies on (X+33)(X-39) = 0")
    return (X ** 2 + 30 * X - 99 - 12 * Y) / den


def phi_inv_421_w(X, Y):
    """Second coordinate of the inverse map for C421."""
    X, Y = Q(X), Q(Y)
    den = (X + 33) * (X - 39) ** 2
    if den == 0:
        raise ExcludedPointError(f"X = {X} lies on (X+33)(X-39) = 0")
    return -2 * (X ** 3 - 27 * X ** 2 + 2727 * X - 31293 - 6 * (X + 33) * Y) / den


# C431 ----------------------------------------------------------------------------------

def curve_431(p):
    p = _p(p)
    A = -27 * p ** 2 * (12 * p ** 4 - 12 * p ** 3 + 25 * p ** 2 - 12 * p + 12)
    B = 54 * p ** 4 * (12 * p ** 2 - p + 12) * (6 * p ** 2 - p + 6)
    return _make(A, B, f"discriminant vanishes at p={p}")


def delta_431(p):
    p = Q(p)
    return QPoly([0, 2 * p * (p ** 2 + 1), p ** 2, -2 * p * (p ** 2 - p + 1), p ** 2])


def y_431(p, m, w):
    """The auxiliary Y(m, w) of the C431 map."""
    return (p * ((m - 1) * (m ** 2 + 4 * m + 1) * p ** 2 - m * (m + 1) * (3 * m + 1) * p
                 + (m - 1) * (m ** 2 + 4 * m + 1))
            - ((m - 1) * p ** 2 - (3 * m + 1) * p + m - 1) * w)


def _phi_431(p, m, w):
    if m == 1:
        raise ExcludedPointError("m = 1")
    X = -3 * p * (6 * (m ** 2 - 1) * p ** 2 - p * (13 * m ** 2 + 10 * m + 1) + 6 * (m ** 2 - 1) + 12 * w) / (m - 1) ** 2
    return Point(X, 108 * p * y_431(p, m, w) / (m - 1) ** 3)


def _phi_inv_431(p, X, Y):
    q = X + 3 * p * (6 * p ** 2 - p + 6)
    den = q * (X + 3 * p * (6 * p ** 2 - 25 * p + 6))
    if den == 0:
        raise ExcludedPointError(f"X = {X} lies on the excluded divisor")
    return (q * (X - 3 * p * (6 * p ** 2 - 11 * p + 6)) - 12 * p * Y) / den


# C322 (d = 1) --------------------------------------------------------------------------

def _h322(m, p):
    return (m ** 2 - 1) * p + (m + 1) ** 2


def g_322(m, p):
    return ((m ** 2 - 1) ** 2 * p ** 3 + 2 * (m ** 2 - 1) * (3 * m ** 2 + 2 * m + 3) * p ** 2
            + (m + 1) ** 4 * p + 8 * m * (m ** 2 - 1))


def a4_322(m, p):
    return ((m ** 2 - 1) ** 4 * p ** 6 - 4 * (3 * m ** 2 - 2 * m + 3) * (m ** 2 - 1) ** 3 * p ** 5
            + 2 * (19 * m ** 4 - 20 * m ** 3 + 50 * m ** 2 - 20 * m + 19) * (m ** 2 - 1) ** 2 * p ** 4
            - 4 * (m + 1) ** 3 * (m - 1) * (3 * m ** 2 - 2 * m + 3) ** 2 * p ** 3
            + (m + 1) ** 2 * (49 * m ** 6 - 90 * m ** 5 + 223 * m ** 4 - 300 * m ** 3 + 223 * m ** 2
                              - 90 * m + 49) * p ** 2
            - 8 * (m + 1) ** 5 * (m - 1) * (3 * m ** 2 - 2 * m + 3) * p
            + 16 * (m ** 2 + 3) * (3 * m ** 2 + 1) * (m ** 2 - 1) ** 2)


def _x1_322_inner(m, p):
    n, u = m ** 2 - 1, 3 * m ** 2 - 2 * m + 3
    return n ** 2 * p ** 3 - 2 * n * u * p ** 2 + (m + 1) ** 4 * p - 4 * n * u


def a6_322(m, p):
    n, u = m ** 2 - 1, 3 * m ** 2 - 2 * m + 3
    second = (n ** 4 * p ** 6 - 4 * u * n ** 3 * p ** 5
              + 2 * (19 * m ** 4 - 20 * m ** 3 + 50 * m ** 2 - 20 * m + 19) * n ** 2 * p ** 4
              - 4 * (m + 1) ** 3 * (m - 1) * u ** 2 * p ** 3
              + (m + 1) ** 2 * (m ** 6 + 102 * m ** 5 - 113 * m ** 4 + 84 * m ** 3 - 113 * m ** 2
                                + 102 * m + 1) * p ** 2
              - 8 * (m + 1) ** 5 * (m - 1) * u * p + 32 * m * (3 * m ** 2 + 2 * m + 3) * n ** 2)
    return _x1_322_inner(m, p) * second


def curve_322(m, p):
    m, p = _mp(m, p)
    if p != 1 and m == (p + 1) / (p - 1):
        raise CurveDomainError(f"singular parameters: m = (p+1)/(p-1) at p={p}")
    return _make(-27 * p ** 2 * a4_322(m, p), 54 * p ** 3 * a6_322(m, p),
                 f"discriminant vanishes at (m, p)=({m}, {p})")


def delta_322(m, p):
    m, p = Q(m), Q(p)
    h, n4, pp = _h322(m, p), m ** 4 - 1, p ** 2 + 1
    return QPoly([4 * p ** 2 * pp ** 2, -4 * p ** 2 * pp * h, p * g_322(m, p), -2 * p * n4 * h, n4 ** 2])


def _x1_322(m, p):
    return 3 * p * _x1_322_inner(m, p)


def _x2_322(m, p):
    n = m ** 2 - 1
    return 3 * p * (n ** 2 * p ** 3 + 2 * n * (9 * m ** 2 + 2 * m + 9) * p ** 2 + (m + 1) ** 4 * p
                    + 4 * n * (3 * m ** 2 + 2 * m + 3))


def x_322(m, p, k, w):
    """The auxiliary X(k, w) of the C322 map."""
    h, pp = _h322(m, p), p ** 2 + 1
    return g_322(m, p) * k ** 2 - 12 * p * pp * h * k + 24 * p * pp ** 2 - 12 * pp * w


def y_322(m, p, k, w):
    """The auxiliary Y(k, w) of the C322 map."""
    h, pp = _h322(m, p), p ** 2 + 1
    return ((m ** 4 - 1) * h * k ** 3 - g_322(m, p) * k ** 2 + 6 * p * pp * h * k - 8 * p * pp ** 2
            - (h * k - 4 * pp) * w)


def _phi_322(m, p, k, w):
    if k == 0:
        raise ExcludedPointError("k = 0")
    return Point(3 * p * x_322(m, p, k, w) / k ** 2,
                 -108 * p ** 2 * (p ** 2 + 1) * y_322(m, p, k, w) / k ** 3)


def k_322(m, p, X, Y):
    """The auxiliary k(X, Y) of the C322 inverse map."""
    return Y + 3 * p * _h322(m, p) * (X - _x1_322(m, p))


def _phi_inv_322(m, p, X, Y):
    den = (X - _x1_322(m, p)) * (X - _x2_322(m, p))
    if den == 0:
        raise ExcludedPointError(f"X = {X} lies on the excluded divisor")
    return -12 * p * (p ** 2 + 1) * k_322(m, p, X, Y) / den


# C432 (d = 1) --------------------------------------------------------------------------

def g_432(m, p):
    n = m ** 2 - 1
    return 4 * m * n * p ** 2 + (m + 1) ** 4 * p + 4 * m * n


def a4_432(m, p):
    n, u = m ** 2 - 1, 3 * m ** 2 - 2 * m + 3
    return (4 * (m ** 2 + 3) * (3 * m ** 2 + 1) * n ** 2 * p ** 4 - 4 * (m - 1) * u * (m + 1) ** 5 * p ** 3
            + (25 * m ** 6 - 42 * m ** 5 + 119 * m ** 4 - 140 * m ** 3 + 119 * m ** 2 - 42 * m + 25)
            * (m + 1) ** 2 * p ** 2
            - 4 * (m - 1) * u * (m + 1) ** 5 * p + 4 * (m ** 2 + 3) * (3 * m ** 2 + 1) * n ** 2)


def _x1_432_inner(m, p):
    n, u = m ** 2 - 1, 3 * m ** 2 - 2 * m + 3
    return 2 * n * u * p ** 2 - (m + 1) ** 4 * p + 2 * n * u


def a6_432(m, p):
    n, u, v = m ** 2 - 1, 3 * m ** 2 - 2 * m + 3, 3 * m ** 2 + 2 * m + 3
    second = (8 * m * v * n ** 2 * p ** 4 - 4 * (m - 1) * u * (m + 1) ** 5 * p ** 3
              + (m ** 6 + 54 * m ** 5 - 49 * m ** 4 + 52 * m ** 3 - 49 * m ** 2 + 54 * m + 1)
              * (m + 1) ** 2 * p ** 2
              - 4 * (m - 1) * u * (m + 1) ** 5 * p + 8 * m * v * n ** 2)
    return _x1_432_inner(m, p) * second


def curve_432(m, p):
    m, p = _mp(m, p)
    return _make(-432 * p ** 2 * a4_432(m, p), -3456 * p ** 3 * a6_432(m, p),
                 f"discriminant vanishes at (m, p)=({m}, {p})")


def delta_432(m, p):
    m, p = Q(m), Q(p)
    n4, pp, s = m ** 4 - 1, p ** 2 + 1, (m + 1) ** 2
    return QPoly([16 * p ** 2 * pp ** 2, -16 * p ** 2 * pp * s, 4 * p * g_432(m, p),
                  -4 * p * n4 * s, n4 ** 2])


def _x1_432(m, p):
    return -12 * p * _x1_432_inner(m, p)


def _x2_432(m, p):
    n, v = m ** 2 - 1, 3 * m ** 2 + 2 * m + 3
    return 12 * p * (2 * n * v * p ** 2 + (m + 1) ** 4 * p + 2 * n * v)


def x_432(m, p, k, w):
    pp, s = p ** 2 + 1, (m + 1) ** 2
    return g_432(m, p) * k ** 2 - 12 * p * pp * s * k + 24 * p * pp ** 2 - 6 * pp * w


def y_432(m, p, k, w):
    pp, s = p ** 2 + 1, (m + 1) ** 2
    return ((m ** 4 - 1) * s * k ** 3 - 2 * g_432(m, p) * k ** 2 + 12 * p * pp * s * k
            - 16 * p * pp ** 2 - (s * k - 4 * pp) * w)


def _phi_432(m, p, k, w):
    if k == 0:
        raise ExcludedPointError("k = 0")
    return Point(12 * p * x_432(m, p, k, w) / k ** 2,
                 432 * p ** 2 * (p ** 2 + 1) * y_432(m, p, k, w) / k ** 3)


def k_432(m, p, X, Y):
    return Y + 6 * p * (m + 1) ** 2 * (X - _x1_432(m, p))


def _phi_inv_432(m, p, X, Y):
    den = (X - _x1_432(m, p)) * (X - _x2_432(m, p))
    if den == 0:
        raise ExcludedPointError(f"X = {X} lies on the excluded divisor")
    return -24 * p * (p ** 2 + 1) * k_432(m, p, X, Y) / den


def double_p_432(m, p):
    """Closed-form [2]P on the C432 curve, as displayed."""
    m, p = Q(m), Q(p)
    n, u = m ** 2 - 1, 3 * m ** 2 - 2 * m + 3
    X = 12 * (3 * n ** 2 * p ** 4 - 2 * n * u * p ** 3 + (m + 1) ** 2 * (7 * m ** 2 - 10 * m + 7) * p ** 2
              - 2 * n * u * p + 3 * n ** 2)
    Y = -216 * (p ** 2 + 1) ** 2 * n ** 2 * (n * p ** 2 - u * p + n)
    return Point(X, Y)


# --- dispatch ----------------------------------------------------------------------------

def _params(case, params):
    case = Case(case)
    params = {k: Q(v) for k, v in (params or {}).items()}
    need = {Case.C321: ("p",), Case.C421: (), Case.C431: ("p",),
            Case.C322: ("m", "p"), Case.C432: ("m", "p")}[case]
    missing = [k for k in need if k not in params]
    if missing:
        raise ValueError(f"{case.value} needs parameters {need}, missing {missing}")
    return case, tuple(params[k] for k in need)


def curve(case, params=None):
    case, args = _params(case, params)
    return {Case.C321: curve_321, Case.C322: curve_322, Case.C421: curve_421,
            Case.C431: curve_431, Case.C432: curve_432}[case](*args)


def marked_points(case, params=None):
    """(Q, P): Q is 2-torsion; for C421, whose points are all degenerate, P = (3, 108)."""
    case, args = _params(case, params)
    if case is Case.C321:
        (p,) = args
        Qp = point(3 * p * (p ** 3 - 6 * p ** 2 + p - 12), 0)
        Pp = point(3 * p ** 2 * (p ** 2 - 6 * p + 1), 108 * p ** 2 * (p + 1))
    elif case is Case.C421:
        Qp, Pp = DEGENERATE_421[0], DEGENERATE_421[1]
    elif case is Case.C431:
        (p,) = args
        Qp = point(-3 * p * (6 * p ** 2 - p + 6), 0)
        Pp = point(-3 * p * (6 * p ** 2 - 25 * p + 6), -216 * p ** 2 * (p ** 2 - 3 * p + 1))
    elif case is Case.C322:
        m, p = args
        Qp = point(_x1_322(m, p), 0)
        Pp = point(_x2_322(m, p), 216 * p ** 2 * (p ** 2 + 1) * (m ** 4 - 1) * _h322(m, p))
    else:
        m, p = args
        Qp = point(_x1_432(m, p), 0)
        Pp = point(_x2_432(m, p), 864 * p ** 2 * (p ** 2 + 1) * (m ** 4 - 1) * (m + 1) ** 2)
    return Qp, Pp


@dataclass(frozen=True)
class QuarticModel:
    case: Case
    params: tuple
    quartic: QPoly

    @property
    def variable(self):
        return "k" if self.case in (Case.C322, Case.C432) else "m"


def quartic_model(case, params=None):
    case, args = _params(case, params)
    q = {Case.C321: delta_321, Case.C322: delta_322, Case.C421: delta_421,
         Case.C431: delta_431, Case.C432: delta_432}[case](*args)
    return QuarticModel(case, args, q)


def phi(case, params, x, w):
    """Image on the case curve of the quartic point (x, w), w^2 = Delta(x)."""
    model = quartic_model(case, params)
    x, w = Q(x), Q(w)
    if w * w != model.quartic(x):
        raise ValueError(f"({x}, {w}) is not on w^2 = Delta")
    a = model.params
    case = model.case
    if case is Case.C321:
        return _phi_321(a[0], x, w)
    if case is Case.C421:
        return _phi_421(x, w)
    if case is Case.C431:
        return _phi_431(a[0], x, w)
    if case is Case.C322:
        return _phi_322(a[0], a[1], x, w)
    return _phi_432(a[0], a[1], x, w)


def phi_inv(case, params, pt):
    """The quartic parameter of ``pt`` by the displayed inverse map.

    For C322 the displayed inverse recovers k from the negated point, i.e.
    phi_inv(neg(phi(k, w))) == k.
    """
    case, a = _params(case, params)
    if pt.is_infinity:
        raise ExcludedPointError("point at infinity")
    X, Y = pt.X, pt.Y
    if case is Case.C321:
        return _phi_inv_321(a[0], X, Y)
    if case is Case.C421:
        return _phi_inv_421(X, Y)
    if case is Case.C431:
        return _phi_inv_431(a[0], X, Y)
    if case is Case.C322:
        return _phi_inv_322(a[0], a[1], X, Y)
    return _phi_inv_432(a[0], a[1], X, Y)


# --- Fermat's method -----------------------------------------------------------------------

def fermat_candidates(q):
    """Candidate x from matching q against squares of quadratics, with branch labels.

    ``lead``: (s x^2 + a3/(2s) x + c)^2 with s^2 = a4, free c; ``const``: the same with
    the roles of a4 and a0 exchanged; ``mixed``: (s x^2 + b x + t)^2 with s^2 = a4 and
    t^2 = a0 both fixed, b matched to a3 or to a1. Unverified; zero denominators skipped.
    """
    q = q if isinstance(q, QPoly) else QPoly(q)
    a0, a1, a2, a3, a4 = (q.coeff(i) for i in range(5))
    s = rat_sqrt(a4) if a4 > 0 else None
    t = rat_sqrt(a0) if a0 > 0 else None
    out = []

    def push(label, num, den):
        if den != 0:
            out.append((label, num / den))

    if s is not None:
        c = (a2 - a3 ** 2 / (4 * a4)) / (2 * s)
        push("lead", c * c - a0, a1 - a3 * c / s)
    if t is not None:
        e = (a2 - a1 ** 2 / (4 * a0)) / (2 * t)
        push("const", e * e - a4, a3 - a1 * e / t)
    if s is not None and t is not None:
        for ss in (s, -s):
            for tt in (t, -t):
                b = a3 / (2 * ss)
                push("mixed", -(a1 - 2 * b * tt), a2 - (b * b + 2 * ss * tt))
                b = a1 / (2 * tt)
                push("mixed", -(a2 - (b * b + 2 * ss * tt)), a3 - 2 * ss * b)
    return out


def fermat_square_point(q, enumerate=False):
    """A rational x with q(x) a rational square, or None.

    Branches are tried in the order leading, constant, mixed. With ``enumerate``
    every verified x is returned instead, sorted and without repeats.
    """
    q = q if isinstance(q, QPoly) else QPoly(q)
    found = []
    for _, x in fermat_candidates(q):
        v = q(x)
        if v >= 0 and rat_sqrt(v) is not None:
            if not enumerate:
                return x
            found.append(x)
    return sorted(set(found)) if enumerate else None


# --- searches and other curves -------------------------------------------------------------

def naive_point_search(c, height):
    """Affine points with X = u/v^2, |u| <= height, 1 <= v <= height, sorted by (X, Y)."""
    if height < 1:
        raise ValueError("height must be >= 1")
    pts = set()
    for v in range(1, height + 1):
        for u in range(-height, height + 1):
            if gcd(u, v) != 1:
                continue
            X = Fraction(u, v * v)
            rhs = c.rhs(X)
            if rhs < 0:
                continue
            Y = rat_sqrt(rhs)
            if Y is not None:
                pts.add(Point(X, Y))
                pts.add(Point(X, -Y))
    return sorted(pts, key=lambda P: (P.X, P.Y))


def genus2_rhs(variant, m):
    m = Q(m)
    if variant == 1:
        return (m ** 3 + 11 * m ** 2 - 5 * m + 1) * (m ** 3 - 5 * m ** 2 + 11 * m + 1)
    if variant == 2:
        return (m ** 3 - 2 * m ** 2 + 2) * (m ** 3 + 2 * m ** 2 - 2)
    raise ValueError("variant must be 1 or 2")


def genus2_membership(variant, m, w):
    return Q(w) ** 2 == genus2_rhs(variant, m)
