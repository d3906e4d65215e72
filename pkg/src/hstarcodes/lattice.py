"""Lattice simplices and polytopes, normalized volume and h*-polynomials.

Two independent routes to h* are provided for simplices:

* :func:`hstar` grades the lattice points of the fundamental parallelepiped,
  obtained from the Smith normal form of the matrix with rows ``(v_i, 1)``;
* :func:`hstar_ehrhart` counts lattice points of the dilates ``k*P`` for
  ``k = 0..d`` and inverts the Ehrhart series numerator.
"""

import dataclasses
import functools
import itertools
import math
from fractions import Fraction
from math import comb

from . import intmat
from .config import resolve
from .errors import (
    DegenerateInput,
    DegenerateSimplex,
    HStarError,
    NegativeCoefficient,
    NonEmptySegment,
    ResourceLimit,
)


def _as_vectors(vertices):
    try:
        vs = tuple(tuple(int(x) for x in v) for v in vertices)
    except (TypeError, ValueError) as exc:
        raise HStarError(f"vertices must be integer vectors: {exc}", "integer vertex coordinates")
    for v, raw in zip(vs, vertices):
        if any(int(x) != x for x in raw):
            raise HStarError("vertices must be integer vectors", "integer vertex coordinates")
    return vs


@dataclasses.dataclass(frozen=True)
class LatticeSimplex:
    """A full-dimensional lattice simplex with an ordered vertex list."""

    vertices: tuple

    def __post_init__(self):
        vs = _as_vectors(self.vertices)
        object.__setattr__(self, "vertices", vs)
        d = len(vs) - 1
        if d < 1:
            raise HStarError("a simplex needs at least two vertices", "d >= 1")
        if any(len(v) != d for v in vs):
            raise HStarError(f"expected {d + 1} vectors of length {d}",
                             "d+1 vertices of length d")
        if self.volume == 0:
            raise DegenerateSimplex(f"vertices {vs} do not span a {d}-simplex")

    @property
    def dim(self):
        return len(self.vertices) - 1

    @functools.cached_property
    def volume(self):
        v0 = self.vertices[0]
        edges = [[a - b for a, b in zip(v, v0)] for v in self.vertices[1:]]
        return abs(intmat.det(edges))

    def homogenized(self):
        """Rows ``(v_i, 1)``."""
        return [list(v) + [1] for v in self.vertices]


@dataclasses.dataclass(frozen=True)
class LatticePolytope:
    """A full-dimensional lattice polytope given by a point list.

    The points may contain repetitions and non-vertices; only the convex hull
    matters.
    """

    vertices: tuple

    def __post_init__(self):
        vs = tuple(dict.fromkeys(_as_vectors(self.vertices)))
        object.__setattr__(self, "vertices", vs)
        if not vs:
            raise DegenerateInput("empty vertex list", "vertex list nonempty")
        d = len(vs[0])
        if any(len(v) != d for v in vs):
            raise HStarError("vertices of mixed length", "vertices share a dimension")
        if _affine_rank(vs) != d:
            raise DegenerateInput(f"points do not span R^{d}")

    @property
    def dim(self):
        return len(self.vertices[0])

    @functools.cached_property
    def facets(self):
        """Facet inequalities ``(a, b)`` meaning ``a . x <= b``, primitive ``a``."""
        return _facets(self.vertices)

    @functools.cached_property
    def volume(self):
        return sum(hstar_ehrhart(self).coeffs)


@dataclasses.dataclass(frozen=True)
class HStarPolynomial:
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def __call__(self, t):
        return sum(c * t**i for i, c in enumerate(self.coeffs))

    @property
    def degree(self):
        return max(i for i, c in enumerate(self.coeffs) if c)

    @property
    def is_binomial(self):
        """True for ``1 + h_k t^k`` with ``h_k > 0`` and ``k >= 1``."""
        return self.coeffs[0] == 1 and sum(1 for c in self.coeffs[1:] if c) == 1

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            coef = str(c) if (c != 1 or i == 0) else ""
            terms.append(coef + mono)
        return " + ".join(terms)


def make_simplex(vertices):
    return LatticeSimplex(vertices)


def volume(s):
    """Normalized volume; 1 on unimodular simplices."""
    return s.volume


def _affine_rank(points):
    p0 = points[0]
    diffs = [[a - b for a, b in zip(p, p0)] for p in points[1:]]
    if not diffs:
        return 0
    h = intmat.hnf(diffs)
    return sum(1 for row in h if any(row))


def _normal(diffs, d):
    """Primitive integer normal to ``d-1`` vectors in ``Z^d`` (cofactor expansion)."""
    n = []
    for j in range(d):
        minor = [row[:j] + row[j + 1:] for row in diffs]
        n.append((-1) ** j * intmat.det(minor))
    g = math.gcd(*n)
    return [x // g for x in n] if g else n


def _facets(points):
    # brute force over d-subsets; fine for the handful of vertices used here
    d = len(points[0])
    found = {}
    for subset in itertools.combinations(points, d):
        diffs = [[a - b for a, b in zip(p, subset[0])] for p in subset[1:]]
        n = _normal(diffs, d)
        if not any(n):
            continue
        b = sum(x * y for x, y in zip(n, subset[0]))
        vals = [sum(x * y for x, y in zip(n, p)) for p in points]
        if all(v <= b for v in vals):
            found[tuple(n)] = b
        elif all(v >= b for v in vals):
            found[tuple(-x for x in n)] = -b
    return tuple(sorted(found.items()))


def lattice_distance(s, i):
    """Lattice distance of vertex ``i`` from the hyperplane of the opposite facet."""
    others = [v for j, v in enumerate(s.vertices) if j != i]
    diffs = [[a - b for a, b in zip(v, others[0])] for v in others[1:]]
    if s.dim == 1:
        return abs(s.vertices[i][0] - others[0][0])
    n = _normal(diffs, s.dim)
    return abs(sum(x * (a - b) for x, a, b in zip(n, s.vertices[i], others[0])))


def is_geometric_pyramid(s):
    """True iff some vertex sits at lattice distance 1 from its opposite facet."""
    return any(lattice_distance(s, i) == 1 for i in range(s.dim + 1))


# -- fundamental parallelepiped --------------------------------------------

def box_coefficients(s, caps=None):
    """Coefficient vectors ``x in [0,1)^(d+1)`` of the parallelepiped lattice points.

    These are exactly the solutions of ``x @ V in Z^(d+1)`` modulo 1 where
    ``V`` has rows ``(v_i, 1)``. With ``U V W = D`` in Smith form, the
    solutions are ``y @ U`` for ``y_i in (1/D_ii) Z``.
    """
    caps = resolve(caps)
    if s.volume > caps.volume:
        raise ResourceLimit(f"volume {s.volume} exceeds cap {caps.volume}")
    dmat, u, _ = intmat.smith(s.homogenized())
    n = s.dim + 1
    diag = [dmat[i][i] for i in range(n)]
    gens = [(diag[i], u[i]) for i in range(n) if diag[i] > 1]
    out = []
    for cs in itertools.product(*(range(dd) for dd, _ in gens)):
        x = [Fraction(0)] * n
        for c, (dd, row) in zip(cs, gens):
            if c:
                for j in range(n):
                    x[j] += Fraction(c * row[j], dd)
        out.append(tuple(v - math.floor(v) for v in x))
    return out


def hstar(s, caps=None):
    """h* of a simplex by grading parallelepiped points by coefficient sum.

    Polytopes are handed to :func:`hstar_ehrhart`.
    """
    if isinstance(s, LatticePolytope):
        return hstar_ehrhart(s, caps)
    coeffs = [0] * (s.dim + 1)
    for x in box_coefficients(s, caps):
        coeffs[int(sum(x))] += 1
    return HStarPolynomial(coeffs)


# -- Ehrhart counting -------------------------------------------------------

def _count_simplex(s, k, caps):
    """Points of ``k*s`` by a coordinate sweep after triangularizing the edges.

    With edge rows ``E`` and unimodular ``U`` such that ``E U`` is lower
    triangular, the map ``x -> (x - k v_0) U`` is a lattice bijection, and in
    the new coordinates each coordinate's admissible integer range follows
    exactly from the previously fixed ones.
    """
    d = s.dim
    v0 = s.vertices[0]
    edges = [[a - b for a, b in zip(v, v0)] for v in s.vertices[1:]]
    h = intmat.transpose(intmat.hnf(intmat.transpose(edges)))
    # h lower triangular, positive diagonal; lambda_i scaled by q are integers
    q = 1
    for i in range(d):
        q *= h[i][i]
    budget = caps.box_points
    visited = 0

    def sweep(j, shift_num, used):
        # shift_num[j'] = q * sum_{i>j} lambda_i h[i][j'] for j' <= j
        nonlocal visited
        if j < 0:
            return 1
        lo = -((-shift_num[j]) // q)
        hi = (shift_num[j] + h[j][j] * (k * q - used)) // q
        total = 0
        for y in range(lo, hi + 1):
            visited += 1
            if visited > budget:
                raise ResourceLimit(f"ehrhart sweep exceeded {budget} points")
            lam = (y * q - shift_num[j]) // h[j][j]
            if j == 0:
                total += 1
                continue
            nxt = [shift_num[t] + lam * h[j][t] for t in range(j)]
            total += sweep(j - 1, nxt, used + lam)
        return total

    return sweep(d - 1, [0] * d, 0)


def _count_polytope(p, k, caps):
    box = []
    for c in range(p.dim):
        vals = [v[c] for v in p.vertices]
        box.append(range(k * min(vals), k * max(vals) + 1))
    size = math.prod(len(r) for r in box)
    if size > caps.box_points:
        raise ResourceLimit(f"bounding box of {size} points exceeds cap {caps.box_points}")
    facets = p.facets
    count = 0
    for x in itertools.product(*box):
        if all(sum(a * b for a, b in zip(n, x)) <= k * rhs for n, rhs in facets):
            count += 1
    return count


def ehrhart_count(p, k, caps=None):
    """Number of lattice points in the ``k``-th dilate (``k >= 0``)."""
    if k < 0:
        raise HStarError(f"dilation factor must be nonnegative, got {k}", "k >= 0")
    if k == 0:
        return 1
    caps = resolve(caps)
    if isinstance(p, LatticeSimplex):
        return _count_simplex(p, k, caps)
    return _count_polytope(p, k, caps)


def hstar_from_counts(counts, d):
    """Invert ``Ehr(t) (1-t)^(d+1)`` truncated to degree ``d``."""
    counts = list(counts)
    if len(counts) != d + 1 or counts[0] != 1:
        raise HStarError("need counts L(0..d) with L(0) = 1", "d+1 counts, L(0) = 1")
    coeffs = [sum((-1) ** j * comb(d + 1, j) * counts[k - j] for j in range(k + 1))
              for k in range(d + 1)]
    if any(c < 0 for c in coeffs):
        raise NegativeCoefficient(f"counts {counts} give negative h* coefficients {coeffs}")
    return HStarPolynomial(coeffs)


def hstar_ehrhart(p, caps=None):
    d = p.dim
    return hstar_from_counts([ehrhart_count(p, k, caps) for k in range(d + 1)], d)


# -- constructions ----------------------------------------------------------

def pyramid(p):
    """``conv(P x {0}, (0, 1))``; the apex is the last vertex."""
    base = [tuple(v) + (0,) for v in p.vertices]
    apex = (0,) * p.dim + (1,)
    return type(p)(base + [apex])


def lawrence_prism(heights):
    """Cayley polytope of the segments ``[0, h_1], ..., [0, h_n]``."""
    heights = [int(h) for h in heights]
    n = len(heights)
    if n < 1 or any(h < 0 for h in heights):
        raise HStarError("heights must be a nonempty list of nonnegative integers",
                         "n >= 1, h_i >= 0")
    if not any(heights):
        raise DegenerateInput(f"heights {heights} give a polytope of dimension {n - 1}")
    points = []
    for i, h in enumerate(heights):
        base = tuple(int(j == i - 1) for j in range(n - 1))
        points.append(base + (0,))
        points.append(base + (h,))
    return LatticePolytope(points)


def exceptional_simplex(n):
    """The ``(n-2)``-fold pyramid over twice the unimodular triangle."""
    if n < 2:
        raise HStarError(f"exceptional simplices need n >= 2, got {n}", "n >= 2")
    s = LatticeSimplex([(0, 0), (2, 0), (0, 2)])
    for _ in range(n - 2):
        s = pyramid(s)
    return s


def cayley_empty_segments(segments, offsets=None):
    """Cayley polytope of ``k`` empty segments ``[a_i, a_i + u_i]`` in ``Z^k``.

    ``segments`` lists the direction vectors ``u_i``; ``offsets`` the start
    points ``a_i`` (default origin). The result is a ``(2k-1)``-simplex.
    """
    segs = _as_vectors(segments)
    k = len(segs)
    if k < 1 or any(len(u) != k for u in segs):
        raise HStarError(f"need k vectors of length k, got {segs}", "k segments in Z^k")
    offs = _as_vectors(offsets) if offsets is not None else ((0,) * k,) * k
    if len(offs) != k or any(len(a) != k for a in offs):
        raise HStarError("offsets must be k vectors of length k", "k offsets in Z^k")
    for u in segs:
        if math.gcd(*u) != 1:
            raise NonEmptySegment(f"segment direction {u} is not primitive")
    vertices = []
    for i, (u, a) in enumerate(zip(segs, offs)):
        lift = tuple(int(j == i - 1) for j in range(k - 1))
        vertices.append(lift + a)
        vertices.append(lift + tuple(x + y for x, y in zip(a, u)))
    return LatticeSimplex(vertices)
