"""Rational triangles in the canonical placement, side triples, parallelograms.

A triangle is stored by coordinates (r, s, t): vertices (0, 0), (r, 0), (s, t).
"""

from dataclasses import dataclass
from fractions import Fraction

from .exactq import Q, format_rat, rat_sqrt


@dataclass(frozen=True)
class Triangle:
    r: Fraction
    s: Fraction
    t: Fraction

    def __post_init__(self):
        for name in ("r", "s", "t"):
            object.__setattr__(self, name, Q(getattr(self, name)))
        if self.r <= 0 or self.t <= 0:
            raise ValueError(f"need r > 0 and t > 0, got r={self.r}, t={self.t}")

    @property
    def in_canonical_region(self):
        """True when s >= 0, i.e. the third vertex lies over the non-negative x-axis."""
        return self.s >= 0

    @property
    def vertices(self):
        return ((Fraction(0), Fraction(0)), (self.r, Fraction(0)), (self.s, self.t))

    def squared_sides(self):
        """(|V1V2|^2, |V1V3|^2, |V2V3|^2)."""
        r, s, t = self.r, self.s, self.t
        return r * r, s * s + t * t, (s - r) ** 2 + t * t

    def scaled(self, k):
        k = Q(k)
        if k <= 0:
            raise ValueError("scale factor must be positive")
        return Triangle(k * self.r, k * self.s, k * self.t)

    @classmethod
    def from_sides(cls, a, b, c):
        """Placement with side ``a`` on the x-axis and ``b`` = |V1V3|.

        Returns None when the apex height is irrational.
        """
        a, b, c = Q(a), Q(b), Q(c)
        s = (a * a + b * b - c * c) / (2 * a)
        t2 = b * b - s * s
        if t2 <= 0:
            raise ValueError(f"({a}, {b}, {c}) is not a triangle")
        t = rat_sqrt(t2)
        if t is None:
            return None
        return cls(a, s, t)

    def placements(self):
        """All six labelings of this triangle with V1 at the origin, V2 on the
        positive x-axis and V3 above it. Irrational placements are skipped."""
        lens = sides_or_none(self)
        if lens is None:
            return []
        out = []
        for i, j, k in ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
            T = Triangle.from_sides(lens[i], lens[j], lens[k])
            if T is not None and T not in out:
                out.append(T)
        return out


@dataclass(frozen=True, order=True)
class SideTriple:
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        xs = sorted(Q(v) for v in (self.a, self.b, self.c))
        if xs[0] <= 0:
            raise ValueError(f"side lengths must be positive: {xs}")
        if xs[0] + xs[1] <= xs[2]:
            raise ValueError(f"triangle inequality fails for {xs}")
        object.__setattr__(self, "a", xs[0])
        object.__setattr__(self, "b", xs[1])
        object.__setattr__(self, "c", xs[2])

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def scaled(self, k):
        k = Q(k)
        return SideTriple(k * self.a, k * self.b, k * self.c)

    def to_json(self):
        return [format_rat(x) for x in self]

    def __str__(self):
        return "(" + ", ".join(str(x) for x in self) + ")"


def sides_or_none(tri):
    w1 = rat_sqrt(tri.s ** 2 + tri.t ** 2)
    w2 = rat_sqrt((tri.s - tri.r) ** 2 + tri.t ** 2)
    if w1 is None or w2 is None:
        return None
    return (tri.r, w1, w2)


def sides(tri):
    """Side lengths of ``tri`` as a SideTriple, or None if any side is irrational."""
    lens = sides_or_none(tri)
    return None if lens is None else SideTriple(*lens)


def perimeter(x):
    if isinstance(x, Triangle):
        st = sides(x)
        if st is None:
            raise ValueError(f"{x} has irrational sides; perimeter is not rational")
        x = st
    return sum(x, Fraction(0))


def area(tri):
    if isinstance(tri, SideTriple):
        a16 = heron_area_sq16(tri)
        A = rat_sqrt(a16)
        if A is None:
            raise ValueError(f"{tri} has irrational area")
        return A / 4
    return tri.r * tri.t / 2


def heron_area_sq16(sides):
    """16 * area^2 = (a+b+c)(-a+b+c)(a-b+c)(a+b-c); zero for collinear input."""
    a, b, c = (Q(x) for x in sides)
    return (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)


def weakly_equivalent(x, y):
    """Same perimeter and same area, compared exactly."""
    return perimeter(x) == perimeter(y) and heron_area_sq16(x) == heron_area_sq16(y)


def similar(x, y):
    x, y = tuple(x), tuple(y)
    lam = y[0] / x[0]
    return lam > 0 and all(yi == lam * xi for xi, yi in zip(x, y))


def similarity_key(x):
    """Side triple normalised to unit perimeter; equal keys iff similar."""
    P = perimeter(x)
    return tuple(v / P for v in x)


@dataclass(frozen=True)
class Parallelogram:
    """Parallelogram spanned by the half-triangle f(V1), f(V2), f(V3)."""

    v1: tuple
    v2: tuple
    v3: tuple

    @property
    def v4(self):
        return (self.v2[0] + self.v3[0] - self.v1[0], self.v2[1] + self.v3[1] - self.v1[1])

    def edge_vectors(self):
        e1 = (self.v2[0] - self.v1[0], self.v2[1] - self.v1[1])
        e2 = (self.v3[0] - self.v1[0], self.v3[1] - self.v1[1])
        return e1, e2

    def side_lengths(self):
        """(|v1v2|, |v1v3|); None if either is irrational."""
        e1, e2 = self.edge_vectors()
        u = rat_sqrt(e1[0] ** 2 + e1[1] ** 2)
        v = rat_sqrt(e2[0] ** 2 + e2[1] ** 2)
        if u is None or v is None:
            return None
        return u, v

    def perimeter(self):
        uv = self.side_lengths()
        if uv is None:
            raise ValueError("parallelogram has irrational sides")
        return 2 * (uv[0] + uv[1])

    def area(self):
        e1, e2 = self.edge_vectors()
        return abs(e1[0] * e2[1] - e1[1] * e2[0])

    def height(self):
        """Height over the v1v2 side."""
        u = self.side_lengths()[0]
        return self.area() / u

    @property
    def half_triangle(self):
        return (self.v1, self.v2, self.v3)

    def to_json(self):
        u, v = self.side_lengths()
        return {
            "sides": [format_rat(u), format_rat(v)],
            "height": format_rat(self.height()),
            "vertices": [[format_rat(c) for c in p] for p in (self.v1, self.v2, self.v4, self.v3)],
            "perimeter": format_rat(self.perimeter()),
            "area16sq": format_rat(16 * self.area() ** 2),
        }


def pair_json(s1, s2):
    return {
        "sides1": s1.to_json(),
        "sides2": s2.to_json(),
        "perimeter": format_rat(perimeter(s1)),
        "area16sq": format_rat(heron_area_sq16(s1)),
    }


def half_angle_triangles(bound):
    """Rational triangles with r = 1, indexed by the half-angle tangents u1, u2 at V1, V2.

    u1 ranges over (0, 1] so that s >= 0, u2 over positive rationals with u1*u2 < 1,
    both of height <= bound. Every rational triangle is similar to one of these.
    """
    from .exactq import rationals_of_height

    us = rationals_of_height(bound, positive=True)
    for u1 in us:
        if u1 > 1:
            break
        c1, s1 = (1 - u1 * u1) / (1 + u1 * u1), 2 * u1 / (1 + u1 * u1)
        for u2 in us:
            if u1 * u2 >= 1:
                break
            c2, s2 = (1 - u2 * u2) / (1 + u2 * u2), 2 * u2 / (1 + u2 * u2)
            side = s2 / (s1 * c2 + c1 * s2)
            yield Triangle(1, side * c1, side * s1)
