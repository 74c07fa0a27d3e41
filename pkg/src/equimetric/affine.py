"""Upper-triangular affine maps acting on canonical triangles, and exact residuals
of the Diophantine systems that characterise area/perimeter-preserving maps.

The map with parameters (a, b, alpha, halved) has matrix

    [[alpha / (h*a), b],
     [0,             a]]        h = 2 if halved else 1

so it scales area by alpha/h. The halved form maps a triangle onto the
half-triangle of a parallelogram.
"""

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import reduce

from .exactq import Q, format_rat, parse_rat
from .geometry import Triangle, sides, weakly_equivalent

ONE = Fraction(1)


class System(str, Enum):
    EQ2 = "Eq2"        # triangle pair, equal area and perimeter
    EQ4_1 = "Eq4_1"    # triangle / parallelogram, equal area and perimeter
    EQ5_1 = "Eq5_1"    # triangle pair, area ratio alpha, perimeter ratio beta
    EQ5_2 = "Eq5_2"    # triangle / parallelogram with ratios

    @property
    def halved(self):
        return self in (System.EQ4_1, System.EQ5_2)

    @property
    def proportional(self):
        return self in (System.EQ5_1, System.EQ5_2)

    @property
    def n_w(self):
        return 3 if self.halved else 4


@dataclass(frozen=True)
class TransformMatrix:
    a: Fraction
    b: Fraction = Fraction(0)
    alpha: Fraction = ONE
    halved: bool = False

    def __post_init__(self):
        object.__setattr__(self, "a", Q(self.a))
        object.__setattr__(self, "b", Q(self.b))
        object.__setattr__(self, "alpha", Q(self.alpha))
        if self.a <= 0:
            raise ValueError(f"a must be positive, got {self.a}")
        if self.alpha <= 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")

    @property
    def m11(self):
        return self.alpha / (2 * self.a if self.halved else self.a)

    @property
    def entries(self):
        return ((self.m11, self.b), (Fraction(0), self.a))

    @property
    def determinant(self):
        return self.m11 * self.a

    def is_identity(self):
        return self.entries == ((ONE, Fraction(0)), (Fraction(0), ONE))

    def __eq__(self, other):
        if not isinstance(other, TransformMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __matmul__(self, other):
        return compose(self, other)

    def to_json(self):
        return {"a": format_rat(self.a), "b": format_rat(self.b),
                "alpha": format_rat(self.alpha), "halved": self.halved}


IDENTITY = TransformMatrix(ONE)


def _from_entries(m11, b, a):
    # store as non-halved with alpha = det
    return TransformMatrix(a, b, alpha=m11 * a)


def apply(f, tri):
    """Image of ``tri`` under ``f``; V1 stays at the origin, V2 stays on the x-axis."""
    return Triangle(f.m11 * tri.r, f.m11 * tri.s + f.b * tri.t, f.a * tri.t)


def compose(f, g):
    """Matrix product f*g, i.e. apply g first."""
    return _from_entries(f.m11 * g.m11, f.m11 * g.b + f.b * g.a, f.a * g.a)


def invert(f):
    return _from_entries(1 / f.m11, -f.b / (f.m11 * f.a), 1 / f.a)


@dataclass(frozen=True)
class SolutionTuple:
    system: System
    a: Fraction
    b: Fraction
    r: Fraction
    s: Fraction
    t: Fraction
    w: tuple
    alpha: Fraction = ONE
    beta: Fraction = ONE

    def __post_init__(self):
        object.__setattr__(self, "system", System(self.system))
        for name in ("a", "b", "r", "s", "t", "alpha", "beta"):
            object.__setattr__(self, name, Q(getattr(self, name)))
        w = tuple(Q(x) for x in self.w)
        if len(w) != self.system.n_w:
            raise ValueError(f"{self.system.value} needs {self.system.n_w} w-values, got {len(w)}")
        object.__setattr__(self, "w", w)

    @property
    def triangle(self):
        return Triangle(self.r, self.s, self.t)

    @property
    def transform(self):
        return TransformMatrix(self.a, self.b, self.alpha, self.system.halved)

    def to_json(self):
        return {
            "system": self.system.value,
            "a": format_rat(self.a), "b": format_rat(self.b),
            "r": format_rat(self.r), "s": format_rat(self.s), "t": format_rat(self.t),
            "w": [format_rat(x) for x in self.w],
            "alpha": format_rat(self.alpha), "beta": format_rat(self.beta),
        }

    def dumps(self):
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(
            system=System(obj["system"]),
            a=parse_rat(obj["a"]), b=parse_rat(obj["b"]),
            r=parse_rat(obj["r"]), s=parse_rat(obj["s"]), t=parse_rat(obj["t"]),
            w=tuple(parse_rat(x) for x in obj["w"]),
            alpha=parse_rat(obj.get("alpha", "1/1")), beta=parse_rat(obj.get("beta", "1/1")),
        )


def residuals(cand):
    """Left-minus-right of every equation of the tagged system, exactly.

    The square-root equations are checked in squared form (w_i^2 against the
    squared distance). The closing perimeter equation is always reported as
    beta * P(T) - P(image), so the equal-ratio systems agree term for term
    with their alpha = beta = 1 specialisations.
    """
    sysm = cand.system
    a, b, r, s, t = cand.a, cand.b, cand.r, cand.s, cand.t
    alpha = cand.alpha if sysm.proportional else ONE
    beta = cand.beta if sysm.proportional else ONE
    if a == 0:
        raise ZeroDivisionError("a = 0 in candidate")
    if t == 0:
        raise ValueError("t = 0: degenerate triangle")
    w = cand.w
    m11 = alpha / (2 * a) if sysm.halved else alpha / a
    res = [
        s * s + t * t - w[0] ** 2,
        (s - r) ** 2 + t * t - w[1] ** 2,
        (m11 * s + b * t) ** 2 + (a * t) ** 2 - w[2] ** 2,
    ]
    if sysm.halved:
        res.append(beta * (r + w[0] + w[1]) - 2 * (m11 * r + w[2]))
    else:
        res.append((m11 * (s - r) + b * t) ** 2 + (a * t) ** 2 - w[3] ** 2)
        res.append(beta * (r + w[0] + w[1]) - (m11 * r + w[2] + w[3]))
    return res


def verify_solution(cand):
    """All residuals zero, plus the positivity the systems demand."""
    if not (cand.a > 0 and cand.r > 0 and cand.t > 0 and cand.s >= 0):
        return False
    if cand.alpha <= 0 or cand.beta <= 0 or any(x <= 0 for x in cand.w):
        return False
    return all(x == 0 for x in residuals(cand))


def image_w(system, a, b, r, s, t, alpha=ONE):
    """Squared lengths that the image-side w's must square to."""
    system = System(system)
    m11 = alpha / (2 * a) if system.halved else alpha / a
    w3sq = (m11 * s + b * t) ** 2 + (a * t) ** 2
    if system.halved:
        return (w3sq,)
    return (w3sq, (m11 * (s - r) + b * t) ** 2 + (a * t) ** 2)


def build_tuple(system, a, b, r, s, t, alpha=ONE, beta=ONE):
    """SolutionTuple with every w obtained as an exact square root.

    Returns None when some required length is irrational.
    """
    from .exactq import rat_sqrt

    system = System(system)
    a, b, r, s, t = Q(a), Q(b), Q(r), Q(s), Q(t)
    sq = [s * s + t * t, (s - r) ** 2 + t * t, *image_w(system, a, b, r, s, t, Q(alpha))]
    ws = []
    for v in sq:
        x = rat_sqrt(v)
        if x is None:
            return None
        ws.append(x)
    return SolutionTuple(system, a, b, r, s, t, tuple(ws), Q(alpha), Q(beta))


def homogeneity_scale(cand, k):
    """Scale the triangle and all w's by k > 0; (a, b) are unchanged."""
    k = Q(k)
    if k <= 0:
        raise ValueError(f"scale factor must be positive, got {k}")
    return SolutionTuple(cand.system, cand.a, cand.b, k * cand.r, k * cand.s, k * cand.t,
                         tuple(k * x for x in cand.w), cand.alpha, cand.beta)


def _transform_between(t1, t2):
    a = t2.t / t1.t
    if a <= 0:
        return None
    f = TransformMatrix(a, (t2.s - t1.s / a) / t1.t)
    return f if apply(f, t1) == t2 else None


def derive_transform(t1, t2):
    """The unique det-1 map sending ``t1`` onto a canonical labeling of ``t2``.

    ``t2`` as given is tried first, then its other labelings with s >= 0.
    Returns None unless the two triangles are weakly equivalent.
    """
    if t1.r * t1.t != t2.r * t2.t:
        raise ValueError("triangles must have equal area")
    s1, s2 = sides(t1), sides(t2)
    if s1 is None or s2 is None or not weakly_equivalent(s1, s2):
        return None
    candidates = [t2] if t2.in_canonical_region else []
    candidates += [T for T in t2.placements() if T.in_canonical_region and T != t2]
    for T in candidates:
        f = _transform_between(t1, T)
        if f is not None:
            return f
    return None


def transform_chain(triangles):
    """Maps f_i with f_i(T_i) = T_{i+1}; every partial product is checked to send T_1 to T_j."""
    fs = []
    for i in range(len(triangles) - 1):
        f = derive_transform(triangles[i], triangles[i + 1])
        if f is None:
            raise ValueError(f"no weak metric transform from triangle {i} to triangle {i + 1}")
        fs.append(f)
    for j in range(1, len(triangles)):
        prod = reduce(lambda acc, g: compose(g, acc), fs[:j], IDENTITY)
        if apply(prod, triangles[0]) != triangles[j]:
            raise ValueError(f"composed transform fails to reach triangle {j}")
    return fs
