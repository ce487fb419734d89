"""Lattice lines on the marked torus R^2 / 2Z^2.

The involution is s(x, y) = (2 - x, 2 - y), with marked points p = (1, 1)
and q = (1, 0).  A line is the set ``a x + b y + c = 0 (mod 2)`` with
gcd(a, b) = 1 and c a half-integer; it is oriented so that it realizes the
class ``b e1 - a e2`` where e1, e2 are the classes of (2, 0), (0, 2).
The torus form nu has nu(e1) = 0, nu(e2) = 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import PreconditionError
from .quadratic import SpQuadraticForm, evaluate

P = (1, 1)
Q = (1, 0)
MARKED_POINTS = (P, Q)
TWO = Fraction(2)


def _mod2(t) -> Fraction:
    return Fraction(t) % TWO


@dataclass(frozen=True)
class LatticeLine:
    a: int
    b: int
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", _mod2(self.c))
        if gcd(self.a, self.b) != 1:
            raise PreconditionError(f"gcd({self.a}, {self.b}) != 1")
        if self.c.denominator not in (1, 2):
            raise PreconditionError("c must be an integer or half-integer")

    @property
    def homology_class(self) -> tuple[int, int]:
        return (self.b, -self.a)

    def level(self, point: Sequence) -> Fraction:
        """Value of a x + b y (mod 2) at a point."""
        return _mod2(self.a * Fraction(point[0]) + self.b * Fraction(point[1]))

    def contains(self, point: Sequence) -> bool:
        return _mod2(self.level(point) + self.c) == 0

    def image_under_involution(self) -> "LatticeLine":
        # a(2-x) + b(2-y) + c = -(a x + b y - c - 2a - 2b), so c -> -c mod 2
        return LatticeLine(self.a, self.b, -self.c - 2 * self.a - 2 * self.b)

    def same_set(self, other: "LatticeLine") -> bool:
        if (self.a, self.b) == (other.a, other.b):
            return self.c == other.c
        if (self.a, self.b) == (-other.a, -other.b):
            return self.c == _mod2(-other.c)
        return False

    def is_involution_invariant(self) -> bool:
        return self.same_set(self.image_under_involution())

    def avoids(self, points=MARKED_POINTS) -> bool:
        return not any(self.contains(pt) for pt in points)

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "c": str(self.c), "class": list(self.homology_class)}


def nu(w: Sequence[int]) -> int:
    return evaluate(SpQuadraticForm((0, 1)), w)


def _check_primitive(w: Sequence[int]) -> tuple[int, int]:
    w1, w2 = (int(t) for t in w)
    if gcd(w1, w2) != 1:
        raise PreconditionError(f"class {(w1, w2)} is not primitive")
    return w1, w2


def _coefficients(w: Sequence[int]) -> tuple[int, int]:
    w1, w2 = _check_primitive(w)
    return -w2, w1


def realize_symmetric(w: Sequence[int]) -> LatticeLine:
    """Involution-invariant line in class w missing p."""
    a, b = _coefficients(w)
    return LatticeLine(a, b, Fraction(0 if (a + b) % 2 else 1))


def realize_nu1(w: Sequence[int]) -> LatticeLine:
    """Involution-invariant line through neither p nor q, for nu(w) = 1."""
    a, b = _coefficients(w)
    if nu(w) != 1:
        raise PreconditionError(f"nu({tuple(w)}) = 0, need 1")
    return LatticeLine(a, b, Fraction(0))


def realize_nu0_pair(w: Sequence[int]) -> tuple[LatticeLine, LatticeLine]:
    """Two disjoint lines in class w swapped by the involution, for nu(w) = 0."""
    a, b = _coefficients(w)
    if nu(w) != 0:
        raise PreconditionError(f"nu({tuple(w)}) = 1, need 0")
    return LatticeLine(a, b, Fraction(1, 2)), LatticeLine(a, b, Fraction(3, 2))


def disjoint(l1: LatticeLine, l2: LatticeLine) -> bool:
    """Parallel lines with distinct offsets never meet."""
    if (l1.a, l1.b) == (-l2.a, -l2.b):
        l2 = LatticeLine(-l2.a, -l2.b, -l2.c)
    return (l1.a, l1.b) == (l2.a, l2.b) and l1.c != l2.c


def annulus_occupancy(l1: LatticeLine, l2: LatticeLine, points=MARKED_POINTS) -> tuple[int, int]:
    """Marked points in each of the two annuli cut out by disjoint parallel lines.

    The level function f = a x + b y (mod 2) has connected fibres, and the
    lines are its fibres over t1 = -c1 and t2 = -c2; the annuli are the
    preimages of the two open arcs between t1 and t2.
    """
    if not disjoint(l1, l2):
        raise PreconditionError("lines are not disjoint parallels")
    if (l1.a, l1.b) != (l2.a, l2.b):
        l2 = LatticeLine(-l2.a, -l2.b, -l2.c)
    t1, t2 = _mod2(-l1.c), _mod2(-l2.c)
    counts = [0, 0]
    for pt in points:
        f = l1.level(pt)
        if f in (t1, t2):
            raise PreconditionError(f"marked point {pt} lies on a line")
        # arc from t1 counterclockwise to t2
        counts[0 if _mod2(f - t1) < _mod2(t2 - t1) else 1] += 1
    return counts[0], counts[1]


def isotopic_in_complement(l1: LatticeLine, l2: LatticeLine, points=MARKED_POINTS) -> bool:
    """Disjoint parallel curves are isotopic off the marks iff one annulus is unmarked."""
    return 0 in annulus_occupancy(l1, l2, points)


def _extend_to_sl2(w: tuple[int, int]) -> tuple[tuple[int, int], tuple[int, int]]:
    """Matrix A in SL(2, Z) with first column w."""
    w1, w2 = w
    # extended Euclid: s w1 + t w2 = 1, then z = (-t, s)
    old_r, r, old_s, s, old_t, t = w1, w2, 1, 0, 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_s, s = s, old_s - qt * s
        old_t, t = t, old_t - qt * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return ((w1, -old_t), (w2, old_s))


# A mod 2 for the three shapes allowed by nu(w) = 0
NORMALIZED_SHAPES = (((1, 0), (0, 1)), ((1, 1), (0, 1)), ((1, 0), (1, 1)))


def occupancy_by_normalization(w: Sequence[int]) -> tuple[tuple, frozenset]:
    """Cross-check of the annulus criterion by straightening w to e1.

    Returns A mod 2 (one of :data:`NORMALIZED_SHAPES` when nu(w) = 0) and the
    images of p, q under A^{-1}; after straightening the pair of lines
    becomes y = 1/2, y = 3/2, so the marks are separated iff their images
    have different y-coordinates.
    """
    w = _check_primitive(w)
    (p11, p12), (p21, p22) = _extend_to_sl2(w)
    assert p11 * p22 - p12 * p21 == 1
    if (p11 % 2, p12 % 2, p21 % 2, p22 % 2) == (1, 1, 1, 0):
        # the complement z is only defined up to multiples of w; pick z + w
        p12, p22 = p12 + p11, p22 + p21
    shape = ((p11 % 2, p12 % 2), (p21 % 2, p22 % 2))
    inv = ((p22, -p12), (-p21, p11))
    images = frozenset(((inv[0][0] * x + inv[0][1] * y) % 2, (inv[1][0] * x + inv[1][1] * y) % 2)
                       for x, y in MARKED_POINTS)
    return shape, images


def normalize_middle_basis(u_value: int, v_value: int):
    """Change of basis of a genus-1 summand giving form values (0, 1).

    Returns ``(T, values)``: the columns of the 2x2 matrix T are the
    coefficients of the new basis vectors in the old basis (u, v), i.e.
    ``u'' = T[0][0] u + T[1][0] v`` and ``v'' = T[0][1] u + T[1][1] v``.
    """
    u_value, v_value = int(u_value) & 1, int(v_value) & 1
    if (u_value, v_value) == (1, 1):
        raise PreconditionError("values (1, 1) have Arf invariant 1")
    if (u_value, v_value) == (0, 0):
        t = ((1, 1), (0, 1))   # (u, u + v)
    elif (u_value, v_value) == (0, 1):
        t = ((1, 0), (0, 1))   # identity
    else:
        t = ((1, 1), (1, 2))   # (u + v, u + 2v)
    form = SpQuadraticForm((u_value, v_value))
    values = (evaluate(form, (t[0][0], t[1][0])), evaluate(form, (t[0][1], t[1][1])))
    return t, values


def fundamental_domain_svg(lines: Sequence[LatticeLine], size: int = 320) -> str:
    """Picture of the lines and marked points on [0, 2]^2."""
    scale = size / 2

    def px(x, y):
        return float(x) * scale, size - float(y) * scale

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
             f'viewBox="0 0 {size} {size}">',
             f'<rect x="0" y="0" width="{size}" height="{size}" fill="white" stroke="black"/>']
    colors = ("crimson", "royalblue", "darkgreen")
    for k, line in enumerate(lines):
        segs = _segments(line)
        for (x0, y0), (x1, y1) in segs:
            (X0, Y0), (X1, Y1) = px(x0, y0), px(x1, y1)
            parts.append(f'<line x1="{X0:.2f}" y1="{Y0:.2f}" x2="{X1:.2f}" y2="{Y1:.2f}" '
                         f'stroke="{colors[k % len(colors)]}" stroke-width="2"/>')
    for name, pt in zip("pq", MARKED_POINTS):
        X, Y = px(*pt)
        parts.append(f'<circle cx="{X:.2f}" cy="{Y:.2f}" r="4" fill="black"/>')
        parts.append(f'<text x="{X + 6:.2f}" y="{Y - 6:.2f}" font-size="12">{name}</text>')
    parts.append("</svg>")
    return "\n".join(parts)


def _segments(line: LatticeLine):
    """Pieces of the line inside the square [0, 2]^2."""
    a, b, c = line.a, line.b, line.c
    out = []
    # a x + b y = -c + 2k for every k meeting the square
    lo = min(0, 2 * a, 2 * b, 2 * a + 2 * b)
    hi = max(0, 2 * a, 2 * b, 2 * a + 2 * b)
    k = (lo + c) // 2 - 1
    while -c + 2 * k <= hi + 2:
        rhs = -c + 2 * k
        pts = set()
        for x in (Fraction(0), TWO):
            if b:
                y = (rhs - a * x) / b
                if 0 <= y <= 2:
                    pts.add((x, y))
        for y in (Fraction(0), TWO):
            if a:
                x = (rhs - b * y) / a
                if 0 <= x <= 2:
                    pts.add((x, y))
        pts = sorted(pts)
        if len(pts) >= 2:
            out.append((pts[0], pts[-1]))
        k += 1
    return out
