"""Brute-force ground truth: integer Heron triangles bucketed by (perimeter, 16*area^2),
equal-area-and-perimeter pairs, and small exhaustive scans over (a, b) and over triangles.

Nothing here uses the closed-form families, so the two can check each other.
"""

import json
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import permutations
from math import gcd, isqrt

from .affine import System, apply, build_tuple, verify_solution
from .exactq import format_rat, rat_sqrt, rationals_of_height
from .geometry import SideTriple, half_angle_triangles, similar, similarity_key, sides, weakly_equivalent


class Kind(str, Enum):
    TRIANGLE_TRIANGLE = "TriangleTriangle"
    TRIANGLE_PARALLELOGRAM = "TriangleParallelogram"


def choudhry_obstruction(sides_):
    """True if some ordering (x, y, z) of the sides is a zero of the excluded quartic."""
    for x, y, z in permutations(tuple(sides_)):
        v = (x ** 4 - x ** 3 * y - 2 * x ** 3 * z + 3 * x ** 2 * y * z - x * y ** 3 + 3 * x * y ** 2 * z
             - 6 * x * y * z ** 2 + 3 * x * z ** 3 + y ** 4 - 2 * y ** 3 * z + 3 * y * z ** 3 - 2 * z ** 4)
        if v == 0:
            return True
    return False


# --- Heron enumeration ---------------------------------------------------------------

def _heron_slice(max_perimeter, start, step):
    # odd perimeters never carry an integer area, so P = 2S with x = S-a, y = S-b, z = S-c
    S = max_perimeter // 2
    out = []
    for z in range(1 + start, S // 3 + 1, step):
        for y in range(z, (S - z) // 2 + 1):
            yz, s0 = y * z, y + z
            for x in range(y, S - s0 + 1):
                n = (x + s0) * x * yz
                r = isqrt(n)
                if r * r == n:
                    out.append((y + z, x + z, x + y, 16 * n))
    return out


def _heron_raw(max_perimeter, threads=1):
    if threads <= 1:
        rows = _heron_slice(max_perimeter, 0, 1)
    else:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            parts = ex.map(_heron_slice, [max_perimeter] * threads, range(threads), [threads] * threads)
            rows = [row for part in parts for row in part]
    rows.sort()
    return rows


def enumerate_heron(max_perimeter, threads=1):
    """Integer triangles a <= b <= c with a+b+c <= max_perimeter and integer area, sorted."""
    if max_perimeter < 3:
        raise ValueError("max_perimeter must be >= 3")
    for a, b, c, _ in _heron_raw(max_perimeter, threads):
        yield SideTriple(a, b, c)


# --- pairs -------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchConfig:
    max_perimeter: int
    kind: Kind = Kind.TRIANGLE_TRIANGLE
    dedup: bool = True
    out: str = None
    threads: int = 1

    def __post_init__(self):
        if self.max_perimeter < 3:
            raise ValueError("max_perimeter must be >= 3")
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.threads < 1:
            raise ValueError("threads must be >= 1")


@dataclass(frozen=True)
class PairRecord:
    """For parallelogram records ``sides2`` is (u, v, h): the two sides and the height over u."""

    sides1: SideTriple
    sides2: tuple
    perimeter: Fraction
    area16sq: Fraction
    kind: Kind
    similarity_class_distinct: bool
    obstruction: bool = False

    def to_json(self):
        return {
            "kind": self.kind.value,
            "sides1": [format_rat(x) for x in self.sides1],
            "sides2": [format_rat(x) for x in self.sides2],
            "perimeter": format_rat(self.perimeter),
            "area16sq": format_rat(self.area16sq),
            "similarity_class_distinct": self.similarity_class_distinct,
            "choudhry_obstruction": self.obstruction,
        }

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)


def _gcd_all(xs):
    g = 0
    for x in xs:
        g = gcd(g, int(x))
    return g


def _triangle_pairs(rows, dedup):
    buckets = defaultdict(list)
    for a, b, c, a16 in rows:
        buckets[(a + b + c, a16)].append((a, b, c))
    out = []
    for (P, a16), tris in buckets.items():
        for i in range(len(tris)):
            for j in range(i + 1, len(tris)):
                s1, s2 = SideTriple(*tris[i]), SideTriple(*tris[j])
                if dedup and _gcd_all([*tris[i], *tris[j]]) != 1:
                    continue
                if not weakly_equivalent(s1, s2):
                    raise AssertionError(f"bucket mismatch {s1} {s2}")
                out.append(PairRecord(s1, tuple(s2), Fraction(P), Fraction(a16),
                                      Kind.TRIANGLE_TRIANGLE, not similar(s1, s2),
                                      choudhry_obstruction(s1)))
    return out


def _parallelogram_pairs(rows, dedup):
    out = []
    for a, b, c, a16 in rows:
        P = a + b + c
        if P % 2:
            continue
        A = isqrt(a16) // 4
        assert 16 * A * A == a16
        half = P // 2
        for u in range(1, half // 2 + 1):
            v = half - u
            d = u * u * v * v - A * A
            if d < 0:
                continue
            r = isqrt(d)
            if r * r != d:
                continue
            if dedup and _gcd_all([a, b, c, u, v]) != 1:
                continue
            out.append(PairRecord(SideTriple(a, b, c), (Fraction(u), Fraction(v), Fraction(A, u)),
                                  Fraction(P), Fraction(a16), Kind.TRIANGLE_PARALLELOGRAM, True,
                                  choudhry_obstruction((a, b, c))))
    return out


def find_pairs(cfg):
    """All equal-perimeter, equal-area pairs up to ``cfg.max_perimeter``, sorted by (perimeter, sides1).

    With ``cfg.out`` set the records are written as JSON lines, plus a ``.summary`` file.
    """
    if cfg.out is not None:
        d = os.path.dirname(os.path.abspath(cfg.out))
        if not os.path.isdir(d) or not os.access(d, os.W_OK):
            raise OSError(f"cannot write to {cfg.out}")
    rows = _heron_raw(cfg.max_perimeter, cfg.threads)
    if cfg.kind is Kind.TRIANGLE_TRIANGLE:
        recs = _triangle_pairs(rows, cfg.dedup)
    else:
        recs = _parallelogram_pairs(rows, cfg.dedup)
    recs.sort(key=lambda r: (r.perimeter, tuple(r.sides1), tuple(r.sides2)))
    if cfg.out is not None:
        write_pairs(recs, cfg.out, len(rows), cfg)
    return recs


def write_pairs(recs, path, n_heron, cfg):
    with open(path, "w", encoding="utf-8") as fh:
        for r in recs:
            fh.write(r.dumps() + "\n")
    summary = {"max_perimeter": cfg.max_perimeter, "kind": cfg.kind.value, "dedup": cfg.dedup,
               "heron_triangles": n_heron, "pairs": len(recs)}
    with open(path + ".summary", "w", encoding="utf-8") as fh:
        fh.write(json.dumps(summary, sort_keys=True) + "\n")


# --- exhaustive scans over rational grids -------------------------------------------------

def conjecture27_experiment(f, height):
    """Similarity classes of triangles T with f(T) weakly equivalent to T.

    Triangles are drawn from the half-angle-tangent grid of the given height
    (normalised to r = 1; the condition is invariant under scaling).
    """
    if f.is_identity():
        raise ValueError("the identity map preserves every triangle; pick f != identity")
    if height < 1:
        raise ValueError("height must be >= 1")
    seen, out = set(), []
    for T in half_angle_triangles(height):
        s1 = sides(T)
        s2 = sides(apply(f, T))
        if s2 is None or not weakly_equivalent(s1, s2):
            continue
        key = similarity_key(s1)
        if key not in seen:
            seen.add(key)
            out.append(T)
    return out


def grid_solution_search(system, triangle, height, alpha=Fraction(1), beta=Fraction(1)):
    """Every (a, b) with height <= ``height`` (a > 0) solving ``system`` for ``triangle``."""
    system = System(system)
    if sides(triangle) is None:
        raise ValueError("triangle must have rational sides")
    bs = rationals_of_height(height)
    r, s, t = triangle.r, triangle.s, triangle.t
    out = []
    for a in rationals_of_height(height, positive=True):
        m11 = alpha / (2 * a) if system.halved else alpha / a
        at2 = (a * t) ** 2
        for b in bs:
            # the image side through f(V3) is needed by every system; test it first
            X = m11 * s + b * t
            if rat_sqrt(X * X + at2) is None:
                continue
            tup = build_tuple(system, a, b, r, s, t, alpha, beta)
            if tup is not None and verify_solution(tup):
                out.append(tup)
    return out
