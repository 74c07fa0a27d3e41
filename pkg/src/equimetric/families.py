"""Closed-form parametric families of weak metric transforms, and the small
impossibility computations (root sets, discriminants) that accompany them.

Every generator evaluates the closed-form expressions directly and then runs the
result through :func:`equimetric.affine.verify_solution`; a family output that
fails its own system raises :class:`FamilyVerificationError` rather than being
returned.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .affine import (
    ONE, System, SolutionTuple, TransformMatrix, apply, build_tuple, homogeneity_scale,
    verify_solution,
)
from .exactq import Q, format_rat, height, rational_roots_cubic, rationals_of_height, solve_quadratic
from .geometry import (
    Parallelogram, SideTriple, Triangle, half_angle_triangles, heron_area_sq16, pair_json,
    perimeter, sides, weakly_equivalent,
)


class FamilyVerificationError(AssertionError):
    """A closed-form family produced a tuple that does not solve its system."""


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyOutput:
    family: str
    params: dict
    tuple: SolutionTuple
    pair: tuple
    notes: str = ""

    @property
    def is_parallelogram(self):
        return isinstance(self.pair[1], Parallelogram)

    def to_json(self):
        out = {"family": self.family,
               "params": {k: format_rat(v) for k, v in self.params.items()}}
        out.update(self.tuple.to_json())
        if self.is_parallelogram:
            tri, par = self.pair
            out["pair"] = {"sides1": tri.to_json(), "parallelogram": par.to_json(),
                           "perimeter": format_rat(perimeter(tri)),
                           "area16sq": format_rat(heron_area_sq16(tri))}
        else:
            out["pair"] = pair_json(*self.pair)
        if self.notes:
            out["notes"] = self.notes
        return out


def _need(cond, msg):
    if not cond:
        raise DomainError(msg)


def _finish(family, params, tup, notes=""):
    if not verify_solution(tup):
        raise FamilyVerificationError(f"{family} {params}: residuals {tup}")
    T = tup.triangle
    image = apply(tup.transform, T)
    s1 = sides(T)
    if s1 is None:
        raise FamilyVerificationError(f"{family}: source triangle has irrational sides")
    if tup.system.halved:
        par = Parallelogram(*image.vertices)
        if par.side_lengths() is None:
            raise FamilyVerificationError(f"{family}: parallelogram sides irrational")
        if par.perimeter() != perimeter(s1) or par.area() != T.r * T.t / 2:
            raise FamilyVerificationError(f"{family}: parallelogram not equal in area/perimeter")
        pair = (s1, par)
    else:
        s2 = sides(image)
        if s2 is None or not weakly_equivalent(s1, s2):
            raise FamilyVerificationError(f"{family}: image is not weakly equivalent")
        pair = (s1, s2)
    return FamilyOutput(family, {k: Q(v) for k, v in params.items()}, tup, pair, notes)


def _lcm(a, b):
    return a * b // gcd(a, b)


def primitive_scale(values):
    """Smallest k > 0 turning all ``values`` into coprime integers."""
    L = 1
    for v in values:
        L = _lcm(L, v.denominator)
    g = 0
    for v in values:
        g = gcd(g, int(v * L))
    return Fraction(L, g)


def _tuple_sides(tup):
    T = tup.triangle
    img = apply(tup.transform, T)
    return [*img.squared_sides(), *T.squared_sides()], [tup.r, *tup.w, img.r]


def _primitive_k(tup):
    return primitive_scale(_tuple_sides(tup)[1])


# --- triangle pairs: classical cases -------------------------------------------------

def right_right_roots(m):
    """Roots a of (a - 1)((m^2 - 1)a - 2m) = 0 for the right/right configuration."""
    m = Q(m)
    _need(m > 1, "need m > 1")
    return solve_quadratic(m * m - 1, -(m * m - 1 + 2 * m), 2 * m)


def right_triangle(m, k=ONE):
    m, k = Q(m), Q(k)
    return Triangle(2 * k * m, 0, k * (m * m - 1))


def right_right_images(m, k=ONE):
    """(a, source sides, image sides) for each root; the images are always congruent."""
    T = right_triangle(m, k)
    return [(a, sides(T), sides(apply(TransformMatrix(a), T))) for a in right_right_roots(m)]


def isosceles_pair(variant, m, k=None):
    """Nontrivial isosceles partner with b = 0, or None when the root is not rational."""
    m = Q(m)
    _need(m > 1, "need m > 1")
    if variant == 1:
        T = Triangle(4 * m, 2 * m, m * m - 1)
        # (a-1)((m-1)^2 a^2 + (m-1)^2 a - 4m) = 0
        roots = solve_quadratic((m - 1) ** 2, (m - 1) ** 2, -4 * m)
    elif variant == 2:
        T = Triangle(2 * (m * m - 1), m * m - 1, 2 * m)
        # (a-1)(a^2 + a - (m^2 - 1)) = 0
        roots = solve_quadratic(1, 1, -(m * m - 1))
    else:
        raise ValueError("variant must be 1 or 2")
    for a in roots:
        if a <= 0 or a == 1:
            continue
        tup = build_tuple(System.EQ2, a, 0, T.r, T.s, T.t)
        if tup is None:
            continue
        kk = _primitive_k(tup) if k is None else Q(k)
        tup = homogeneity_scale(tup, kk)
        return _finish(f"Isosceles{variant}", {"m": m, "k": kk}, tup)
    return None


def right_isosceles_cubic(m):
    """Coefficients (a3, a2, a1, a0) of (m+1)(m-1)^2 a^3 - m^2 (m+1) a + 2m^2."""
    m = Q(m)
    return ((m + 1) * (m - 1) ** 2, Fraction(0), -m * m * (m + 1), 2 * m * m)


def right_isosceles(m, k=None):
    """Right triangle paired with an isosceles triangle, or None.

    With ``k`` unset the pair is scaled to coprime integer sides; at m = 16/11 this
    is k = 121 and sides (135, 352, 377) / (132, 366, 366).
    """
    m = Q(m)
    _need(m > 1, "need m > 1")
    bound = m / (m - 1)
    for a in rational_roots_cubic(*right_isosceles_cubic(m)):
        if not 0 < a < bound:
            continue
        b = m / (a * (m * m - 1))
        T = right_triangle(m)
        tup = build_tuple(System.EQ2, a, b, T.r, T.s, T.t)
        if tup is None:
            continue
        kk = _primitive_k(tup) if k is None else Q(k)
        tup = homogeneity_scale(tup, kk)
        return _finish("RightIsosceles", {"m": m, "k": kk}, tup)
    return None


def choudhry_sides(R, S):
    R, S = Q(R), Q(S)
    q = S * S + S + 1
    s1 = (R * R + 1) * q, S * (S + 1) * (R * R + q), R * R + q * q
    s2 = (R * R + S * S) * q, (S + 1) * (R * R + q), R * R * S * S + q * q
    return s1, s2


def choudhry_b_poly(R, S):
    q = S * S + S + 1
    return (R ** 6 * S * S - q * (S ** 4 + S ** 3 - S * S + S + 1) * R ** 4
            - (2 * S * S + 3 * S + 2) * q ** 3 * R * R - q ** 5)


def choudhry_pair(R, S):
    R, S = Q(R), Q(S)
    _need(R > 0 and S > 0, "need R > 0 and S > 0")
    q = S * S + S + 1
    D = S ** 4 + 2 * S ** 3 + R * R + 3 * S * S + 2 * S + 1
    E = R * R * S * S + S ** 4 + 2 * S ** 3 + 3 * S * S + 2 * S + 1
    r = R * R + q * q
    s = S * (S + 1) * (R * R + q) * (S * S + R + S + 1) * (S * S - R + S + 1) / D
    t = (2 * S * S + 2 * S + 2) * (R * R + q) * R * S * (S + 1) / D
    a = D / E
    b = (S - 1) * choudhry_b_poly(R, S) / (2 * S * R * D * E)
    (a1, b1, c1), (a2, b2, c2) = choudhry_sides(R, S)
    notes = "S = 1 gives b = 0 and congruent triangles" if S == 1 else ""
    ws = (b1, a1, b2, a2)
    if s < 0:
        # R > S^2+S+1 puts V3 left of the origin; reflect both triangles in x = r/2,
        # which sends (b, s) to (-b, r - s) and swaps the two sides through V3
        s, b, ws = r - s, -b, (a1, b1, a2, b2)
        notes = "placement mirrored (R > S^2+S+1)"
    tup = SolutionTuple(System.EQ2, a, b, r, s, t, ws)
    out = _finish("Choudhry", {"R": R, "S": S}, tup, notes)
    if out.pair != (SideTriple(a1, b1, c1), SideTriple(a2, b2, c2)):
        raise FamilyVerificationError("Choudhry sides disagree with the coordinate placement")
    return out


# --- triangle pairs: right-triangle source -----------------------------------------

def eq9_coeffs(m, p):
    """Quadratic in c: p(p^2+1)(m^2-1)c^2 - p(m^2+(p+1)m-p)c + m."""
    m, p = Q(m), Q(p)
    return (p * (p * p + 1) * (m * m - 1), -p * (m * m + (p + 1) * m - p), m)


def f321_general(m, c, p, k=ONE, family="F321", notes=""):
    """Right-triangle source with a = 2cp, b = c(p^2 - 1); w4 from the perimeter."""
    m, c, p, k = Q(m), Q(c), Q(p), Q(k)
    r, s, t = 2 * k * m, Fraction(0), k * (m * m - 1)
    a, b = 2 * c * p, c * (p * p - 1)
    w1, w2 = k * (m * m - 1), k * (m * m + 1)
    w3 = c * k * (m * m - 1) * (p * p + 1)
    w4 = 2 * k * m * (m + 1) - k * m / (c * p) - w3
    tup = SolutionTuple(System.EQ2, a, b, r, s, t, (w1, w2, w3, w4))
    return _finish(family, {"m": m, "c": c, "p": p, "k": k}, tup, notes)


def _check_pk(p, k):
    p, k = Q(p), Q(k)
    _need(p > 1, "need p > 1")
    _need(k > 0, "need k > 0")
    return p, k


def f321_base(p, k=ONE, alt_c=False):
    p, k = _check_pk(p, k)
    if alt_c:
        m = (p * p + p + 1) / (p * p)
        c = (p * p + p + 1) / (2 * p ** 3 + 3 * p * p + 2 * p + 1)
        return f321_general(m, c, p, k, "F321base", "alternate c-root")
    r = 2 * k * (p * p + p + 1) / p ** 2
    t = k * (p + 1) * (2 * p * p + p + 1) / p ** 4
    a = 2 * p * p / (p * p + 1)
    b = p * (p * p - 1) / (p * p + 1)
    w1 = k * (p + 1) * (2 * p * p + p + 1) / p ** 4
    w2 = k * (p * p + 1) * (2 * p * p + 2 * p + 1) / p ** 4
    w3 = k * (p + 1) * (2 * p * p + p + 1) / p ** 3
    w4 = (p ** 4 + 2 * p ** 3 + 4 * p * p + 2 * p + 1) * k / p ** 4
    tup = SolutionTuple(System.EQ2, a, b, r, 0, t, (w1, w2, w3, w4))
    return _finish("F321base", {"p": p, "k": k}, tup)


def f321_double(p, k=ONE, alt_c=False):
    p, k = _check_pk(p, k)
    if alt_c:
        m = p * (p + 1) / (p * p - p + 1)
        c = (p * p - p + 1) / (2 * p ** 3 - p * p + 2 * p - 1)
        return f321_general(m, c, p, k, "F321double", "alternate c-root")
    d = p * p - p + 1
    r = 2 * k * p * (p + 1) / d
    t = k * (2 * p - 1) * (2 * p * p + 1) / d ** 2
    a = 2 * (p + 1) * p / (2 * p * p + 1)
    b = (p + 1) ** 2 * (p - 1) / (2 * p * p + 1)
    w1 = k * (2 * p - 1) * (2 * p * p + 1) / d ** 2
    w2 = k * (2 * p ** 4 + 4 * p * p - 2 * p + 1) / d ** 2
    w3 = (p * p + 1) * (2 * p - 1) * k * (p + 1) / d ** 2
    w4 = k * p * (5 * p * p - 2 * p + 2) / d ** 2
    tup = SolutionTuple(System.EQ2, a, b, r, 0, t, (w1, w2, w3, w4))
    return _finish("F321double", {"p": p, "k": k}, tup)


F321_M_CHOICES = {
    "main": lambda p: (p * p + p + 1) / (p * p),
    "alt1": lambda p: (p * p - p + 1) / (p * (p - 2)),
    "alt2": lambda p: (p ** 3 - p * p - 1) / (p * p * (p + 1)),
    "double": lambda p: p * (p + 1) / (p * p - p + 1),
}


def f321_variant(p, k=ONE, choice="alt1"):
    """Family for one of the square-making m(p), with c solved from the c-quadratic.

    Returns every valid output (one per admissible c-root).
    """
    p, k = _check_pk(p, k)
    try:
        m = F321_M_CHOICES[choice](p)
    except ZeroDivisionError:
        raise DomainError(f"m({choice}) undefined at p={p}") from None
    _need(m > 1, f"m = {m} is not > 1 for choice {choice} at p={p}")
    outs = []
    for c in solve_quadratic(*eq9_coeffs(m, p)):
        if c <= 0:
            continue
        try:
            outs.append(f321_general(m, c, p, k, "F321" + choice, f"c-quadratic root {c}"))
        except (FamilyVerificationError, ValueError):
            continue
    return outs


# --- triangle pairs: scalene source ----------------------------------------------------

def _check_mp(m, p):
    m, p = Q(m), Q(p)
    _need(m > 1, "need m > 1")
    _need(p > 1, "need p > 1")
    return m, p


def _tuple_or_fail(family, system, a, b, r, s, t):
    tup = build_tuple(system, a, b, r, s, t)
    if tup is None:
        raise FamilyVerificationError(f"{family}: a side length is irrational")
    return tup


def f322_b_base(m, p):
    return ((m ** 4 - 1) ** 2 * p ** 5 + 2 * (m * m - 1) * (m * m + 1) ** 3 * p ** 4
            + 4 * (m + 1) ** 2 * m * (m * m + 1) ** 2 * p ** 3
            - 2 * (m + 1) ** 4 * (m ** 4 - 1) * p * p
            - (m + 1) ** 4 * (m * m + 1) ** 2 * p - (m + 1) ** 5 * m * (m - 1))


def f322_base(m, p):
    m, p = _check_mp(m, p)
    g = 2 * (m * m + 1) * p * p + (m + 1) ** 2
    h = (m * m - 1) * p + (m + 1) ** 2
    den_r = (m + 1) * (2 * (m * m + 1) * p - m * m + 1)
    _need(den_r != 0, "2(m^2+1)p - m^2 + 1 vanishes")
    r = 2 * ((m + 1) * p * p - (m - 1) * p + m + 1) * (m * m + 1) * p / den_r
    s = 2 * g * m / ((m * m + 1) * h)
    t = (m - 1) * g / (((m - 1) * p + m + 1) * (m * m + 1))
    a = 2 * ((m - 1) * p + m + 1) * (m * m + 1) * p / ((m - 1) * g)
    b = f322_b_base(m, p) / ((m ** 4 - 1) * g * h * p)
    tup = _tuple_or_fail("F322base", System.EQ2, a, b, r, s, t)
    return _finish("F322base", {"m": m, "p": p}, tup)


def f322_b_double(m, p):
    return (4 * m * (m * m - 1) ** 2 * p ** 7
            - 4 * (m * m - 1) * (m ** 4 - 2 * m ** 3 - 2 * m * m - 2 * m + 1) * p ** 6
            + 4 * (m + 1) ** 2 * m * (3 * m * m - 2 * m + 3) * p ** 5
            + 8 * m * (m * m - 1) * (m * m + 4 * m + 1) * p ** 4
            + 4 * (m + 1) ** 2 * m * (3 * m * m + 2 * m + 3) * p ** 3
            + 3 * (m - 1) * (m + 1) ** 5 * p * p + 4 * (m + 1) ** 4 * m * p
            + (m - 1) * (m + 1) ** 5)


def f322_double(m, p):
    m, p = _check_mp(m, p)
    g = 2 * (m * m + 1) * p * p + (m + 1) ** 2
    h = (m * m - 1) * p + (m + 1) ** 2
    den_r = (m * m - 1) * p * p - (m - 1) ** 2 * p + m * m - 1
    _need(den_r != 0, "(m^2-1)p^2 - (m-1)^2 p + m^2 - 1 vanishes")
    r = (p * p + 1) * (2 * (m * m + 1) * p - m * m + 1) / den_r
    s = 4 * (p * p + 1) * p * ((m - 1) * p + m + 1) * m / ((m - 1) * g)
    t = 2 * (p * p + 1) * p * h / g
    a = g / ((p * p + 1) * h)
    b = -f322_b_double(m, p) / (2 * (m * m - 1) * p * h * (p * p + 1) * g)
    tup = _tuple_or_fail("F322double", System.EQ2, a, b, r, s, t)
    return _finish("F322double", {"m": m, "p": p}, tup)


# --- triangle / parallelogram ----------------------------------------------------------

def right_rectangle_roots(m):
    """Rational roots a of 2km(m+1) = 2(km/a + ak(m^2-1))."""
    m = Q(m)
    _need(m > 1, "need m > 1")
    return solve_quadratic(m * m - 1, -m * (m + 1), m)


def right_rectangle_discriminant(m):
    m = Q(m)
    return m ** 4 - 2 * m ** 3 + m * m + 4 * m


def rhombus_discriminant(variant, m):
    m = Q(m)
    if variant == 1:
        return (m ** 3 + 11 * m * m - 5 * m + 1) * (m ** 3 - 5 * m * m + 11 * m + 1)
    if variant == 2:
        return (m ** 3 - 2 * m * m + 2) * (m ** 3 + 2 * m * m - 2)
    raise ValueError("variant must be 1 or 2")


def in_f431_window(p):
    """1 + sqrt(2) < p < (3 + sqrt(5))/2, decided without radicals."""
    p = Q(p)
    return p > 1 and (p - 1) ** 2 > 2 and (2 * p - 3) ** 2 < 5


def _check_f431(p, k):
    p, k = Q(p), Q(k)
    _need(k > 0, "need k > 0")
    _need(p > 1 and (p - 1) ** 2 > 2, f"p={p} violates p > 1+sqrt(2), i.e. (p-1)^2 > 2")
    _need((2 * p - 3) ** 2 < 5, f"p={p} violates p < (3+sqrt(5))/2, i.e. (2p-3)^2 < 5")
    return p, k


def f431_base(p, k=ONE):
    p, k = _check_f431(p, k)
    u = p * p - 3 * p + 1
    v = p * p - 4 * p + 1
    r = -k * (p - 1) ** 4 / (2 * p * u)
    t = k * (p * p + 2 * p - 1) * (p * p - 2 * p - 1) * v ** 2 / (16 * p * p * u ** 2)
    a = -2 * (p - 1) ** 2 * p / ((p * p + 1) * v)
    b = -(p - 1) ** 3 * (p + 1) / ((p * p + 1) * v)
    tup = _tuple_or_fail("F431base", System.EQ4_1, a, b, r, 0, t)
    return _finish("F431base", {"p": p, "k": k}, tup)


def f431_double(p, k=ONE):
    p, k = _check_f431(p, k)
    v = p * p - 4 * p + 1
    e = (p * p + 2 * p - 1) * (p * p - 2 * p - 1)
    r = 2 * k * v ** 2 / e
    t = -16 * k * (p - 1) ** 4 * p * (p * p - 3 * p + 1) / e ** 2
    a = -v / (2 * (p - 1) ** 2)
    b = -(p + 1) * v / (4 * p * (p - 1))
    tup = _tuple_or_fail("F431double", System.EQ4_1, a, b, r, 0, t)
    return _finish("F431double", {"p": p, "k": k}, tup)


def in_f432_domain(m, p):
    """1 < p < 2+sqrt(3), m > 1; or p > 2+sqrt(3), 1 < m < sqrt((p^2-4p+1)(p^2+4p+1))/(p^2-4p+1)."""
    m, p = Q(m), Q(p)
    if not (m > 1 and p > 1):
        return False
    if (p - 2) ** 2 < 3:
        return True
    v = p * p - 4 * p + 1
    # p > 2 + sqrt(3) here, so v > 0 and both sides of the bound are positive
    return p > 2 and m * m * v * v < v * (p * p + 4 * p + 1)


def f432_double(m, p):
    m, p = Q(m), Q(p)
    _need(m > 1, "need m > 1")
    _need(p > 1, "need p > 1")
    _need(in_f432_domain(m, p),
          f"(m, p)=({m}, {p}) violates m^2 (p^2-4p+1)^2 < (p^2-4p+1)(p^2+4p+1) for p > 2+sqrt(3)")
    n = m * m - 1
    r = -(p * p + 1) * (n * p * p - 4 * (m * m + 1) * p + n) / (n * p * p - 2 * (m - 1) ** 2 * p + n)
    s = 8 * m * p / n
    t = 4 * p
    a = Fraction(1, 2)
    b = (n * p * p - 8 * m * p - m * m + 1) / (4 * p * n)
    tup = _tuple_or_fail("F432double", System.EQ4_1, a, b, r, s, t)
    return _finish("F432double", {"m": m, "p": p}, tup)


# --- proportional systems -----------------------------------------------------------------

def solve_b_for_a(system, tri, a, alpha=ONE, beta=ONE):
    """All b making (a, b, tri) a solution of ``system``; w's are rational by construction."""
    system = System(system)
    s_tri = sides(tri)
    if s_tri is None:
        return []
    r, s, t = tri.r, tri.s, tri.t
    m11 = alpha / (2 * a) if system.halved else alpha / a
    P = perimeter(s_tri)
    if system.halved:
        w3 = beta * P / 2 - m11 * r
        if w3 <= 0:
            return []
        xs = solve_quadratic(1, 0, (a * t) ** 2 - w3 * w3)
    else:
        K = beta * P - m11 * r   # = w3 + w4
        if K <= 0:
            return []
        c0 = (K * K - (m11 * r) ** 2) / (2 * K)
        c1 = m11 * r / K
        # w3 = c0 + c1*X with X = m11*s + b*t, and w3^2 = X^2 + (a t)^2
        xs = solve_quadratic(c1 * c1 - 1, 2 * c0 * c1, c0 * c0 - (a * t) ** 2)
    return sorted({(X - m11 * s) / t for X in xs})


def proportional_residual_search(alpha, beta, system, bound, triangles=None, tri_height=3):
    """Residual-zero tuples of the proportional systems on a height grid.

    ``a`` ranges over positive rationals of height <= bound, and ``b`` over the exact
    roots of the remaining equations, kept when height(b) <= bound. The triangles
    default to the rational triangles with half-angle tangents of height <= tri_height,
    normalised to r = 1.
    """
    alpha, beta = Q(alpha), Q(beta)
    _need(alpha > 0 and beta > 0, "alpha and beta must be positive")
    _need(bound >= 1, "bound must be >= 1")
    system = System(system)
    _need(system.proportional, "system must be Eq5_1 or Eq5_2")
    if triangles is None:
        triangles = list(half_angle_triangles(tri_height))
    hits = []
    for tri in triangles:
        for a in rationals_of_height(bound, positive=True):
            for b in solve_b_for_a(system, tri, a, alpha, beta):
                if height(b) > bound:
                    continue
                tup = build_tuple(system, a, b, tri.r, tri.s, tri.t, alpha, beta)
                if tup is not None and verify_solution(tup):
                    hits.append(tup)
    return hits


# --- registry for the CLI and grid verification -----------------------------------------

FAMILIES = {
    "RightRight": (right_right_images, ("m",)),
    "Isosceles1": (lambda m, k=None: isosceles_pair(1, m, k), ("m",)),
    "Isosceles2": (lambda m, k=None: isosceles_pair(2, m, k), ("m",)),
    "RightIsosceles": (right_isosceles, ("m",)),
    "Choudhry": (choudhry_pair, ("R", "S")),
    "F321base": (f321_base, ("p", "k")),
    "F321double": (f321_double, ("p", "k")),
    "F322base": (f322_base, ("m", "p")),
    "F322double": (f322_double, ("m", "p")),
    "RightRect": (right_rectangle_roots, ("m",)),
    "Rhombus1": (lambda m: rhombus_discriminant(1, m), ("m",)),
    "Rhombus2": (lambda m: rhombus_discriminant(2, m), ("m",)),
    "F431base": (f431_base, ("p", "k")),
    "F431double": (f431_double, ("p", "k")),
    "F432double": (f432_double, ("m", "p")),
}


def _ladder(lo, hi, n):
    """n evenly spaced rationals in (lo, hi]."""
    return [lo + (hi - lo) * Fraction(j, n) for j in range(1, n + 1)]


def _window(lo, hi, n):
    """n evenly spaced rationals strictly inside (lo, hi)."""
    return [lo + (hi - lo) * Fraction(j, n + 1) for j in range(1, n + 1)]


# rational brackets just inside 1 + sqrt(2) = 2.41421... and (3 + sqrt(5))/2 = 2.61803...
F431_WINDOW = (Fraction(24143, 10000), Fraction(26180, 10000))


def parameter_grid(family, n):
    """In-domain parameter dicts for ``family``; two-parameter families get an n x n grid."""
    ps = _ladder(ONE, Fraction(10), n)
    ks = _ladder(Fraction(0), Fraction(5), n)
    if family in ("F321base", "F321double"):
        return [{"p": p, "k": k} for p in ps for k in ks]
    if family in ("F322base", "F322double"):
        return [{"m": m, "p": p} for p in ps for m in ps]
    if family in ("F431base", "F431double"):
        return [{"p": p, "k": ONE} for p in _window(*F431_WINDOW, n)]
    if family == "F432double":
        return [{"m": m, "p": p} for p in ps for m in ps if in_f432_domain(m, p)]
    if family == "Choudhry":
        return [{"R": R, "S": S} for R in _ladder(Fraction(0), Fraction(4), n)
                for S in _ladder(Fraction(0), Fraction(4), n)]
    if family in ("Isosceles1", "Isosceles2", "RightIsosceles"):
        # rational roots are sparse; use every m > 1 of height <= n instead of a ladder
        return [{"m": m} for m in rationals_of_height(n, positive=True) if m > 1]
    raise KeyError(family)


def run_family(family, params):
    fn, _ = FAMILIES[family]
    return fn(**params)


VERIFIABLE = ("F321base", "F321double", "F322base", "F322double", "F431base", "F431double",
              "F432double", "Choudhry", "Isosceles1", "Isosceles2", "RightIsosceles")
