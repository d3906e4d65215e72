"""Finite subgroups of the torus (Q/Z)^(d+1) and their simplices.

A simplex with ordered vertices determines the group of coefficient vectors
of its fundamental-parallelepiped lattice points; conversely, a finite
subgroup determines a simplex spanned by the unit vectors inside the preimage
lattice of the group. The two maps are mutually inverse.
"""

import collections
import dataclasses
import math
from fractions import Fraction

from . import intmat
from .config import resolve
from .errors import HStarError, NonIntegerAge, NotAGroup, ResourceLimit
from .lattice import HStarPolynomial, LatticeSimplex, box_coefficients


def _frac_vector(x, n):
    try:
        v = tuple(Fraction(c) for c in x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise HStarError(f"bad group element {x!r}: {exc}", "elements are rational vectors")
    if len(v) != n:
        raise HStarError(f"element {x!r} has length {len(v)}, expected {n}",
                         "elements have the ambient length")
    return tuple(c - math.floor(c) for c in v)


def _add(x, y):
    return tuple((a + b) % 1 for a, b in zip(x, y))


def _neg(x):
    return tuple((-a) % 1 for a in x)


@dataclasses.dataclass(frozen=True)
class TorusSubgroup:
    """A finite subgroup of ``(Q/Z)^ambient`` stored as its sorted element list.

    The zero vector may be left out of ``elements``; it is always added.
    Construction verifies closure and raises :class:`NotAGroup` otherwise.
    """

    ambient: int
    elements: tuple

    def __post_init__(self):
        n = int(self.ambient)
        if n < 1:
            raise HStarError(f"ambient dimension must be positive, got {n}", "ambient >= 1")
        elems = {_frac_vector(x, n) for x in self.elements}
        elems.add((Fraction(0),) * n)
        _check_closed(elems)
        object.__setattr__(self, "ambient", n)
        object.__setattr__(self, "elements", tuple(sorted(elems)))

    @classmethod
    def generated(cls, ambient, generators):
        """The subgroup generated by ``generators``."""
        n = int(ambient)
        span = {(Fraction(0),) * n}
        for g in generators:
            x = _frac_vector(g, n)
            multiples, y = [], x
            while any(y):
                multiples.append(y)
                y = _add(y, x)
            span |= {_add(a, b) for a in span for b in multiples}
        return cls(n, tuple(span))

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return _frac_vector(x, self.ambient) in set(self.elements)

    @property
    def exponent(self):
        return math.lcm(*(c.denominator for x in self.elements for c in x))

    def permuted(self, perm):
        """Group with coordinate ``i`` moved to position ``perm[i]``."""
        out = []
        for x in self.elements:
            y = [None] * self.ambient
            for i, c in enumerate(x):
                y[perm[i]] = c
            out.append(y)
        return TorusSubgroup(self.ambient, out)


def _check_closed(elems):
    # grow the generated subgroup; it may never outgrow the given set
    n = len(next(iter(elems)))
    span = {(Fraction(0),) * n}
    for x in sorted(elems):
        if x in span:
            continue
        cyclic = [(Fraction(0),) * n]
        y = x
        while any(y):
            cyclic.append(y)
            y = _add(y, x)
        span = {_add(a, b) for a in span for b in cyclic}
        if len(span) > len(elems):
            break
    if span != elems:
        raise NotAGroup(f"{len(elems)} elements generate a group of order >= {len(span)}")


def age(x):
    """Sum of the fractional parts of ``x``."""
    return sum(c % 1 for c in x)


def lambda_of(s, caps=None):
    """The group of a simplex (equivalently, its parallelepiped points)."""
    return TorusSubgroup(s.dim + 1, box_coefficients(s, caps))


def hstar_from_lambda(group):
    counts = [0] * group.ambient
    for x in group.elements:
        a = age(x)
        if a.denominator != 1:
            raise NonIntegerAge(f"element {x} has age {a}")
        counts[int(a)] += 1
    return HStarPolynomial(counts)


def simplex_of(group):
    """Simplex spanned by the unit vectors in the preimage lattice of ``group``.

    Coordinates are taken in the Hermite basis of the lattice
    ``{m in M : sum(m) = 0}`` where ``M`` is the preimage lattice; vertex 0 is
    the origin and vertex ``i`` corresponds to unit vector ``i``. Elements of
    non-integral age do not survive: the resulting simplex has the subgroup
    of integral-age elements as its group.
    """
    n = group.ambient
    if n < 2:
        raise HStarError("need ambient dimension >= 2 for a simplex", "ambient >= 2")
    scale = group.exponent
    gens = [[scale * int(i == j) for j in range(n)] for i in range(n)]
    gens += [[int(c * scale) for c in x] for x in group.elements if any(x)]
    basis = [row for row in intmat.hnf(gens) if any(row)]
    # integer combinations of basis rows with zero coordinate sum
    sums = [[sum(row)] for row in basis]
    _, u = intmat.hnf(sums, with_transform=True)
    kernel = u[1:]
    zero_sum = [row for row in intmat.hnf(intmat.matmul(kernel, basis)) if any(row)]
    vertices = [[0] * (n - 1)]
    for i in range(1, n):
        target = [scale * (int(j == i) - int(j == 0)) for j in range(n)]
        vertices.append(intmat.solve_echelon(zero_sum, target))
    return LatticeSimplex(vertices)


def apex_coordinates(group):
    """Coordinates that vanish on every element; each marks a pyramid apex."""
    return [i for i in range(group.ambient) if all(x[i] == 0 for x in group.elements)]


def is_pyramid(group):
    return bool(apex_coordinates(group))


def _signature(group, i):
    return tuple(sorted(collections.Counter(x[i] for x in group.elements).items()))


def iso_simplices(s1, s2, caps=None):
    """A vertex permutation realizing an isomorphism ``s1 -> s2``, or ``None``.

    Returns ``perm`` with vertex ``i`` of ``s1`` mapped to vertex ``perm[i]``
    of ``s2``; equivalently the coordinate permutation carrying
    ``lambda_of(s1)`` onto ``lambda_of(s2)``.
    """
    if s1.dim != s2.dim:
        return None
    return iso_groups(lambda_of(s1, caps), lambda_of(s2, caps), caps)


def iso_groups(g1, g2, caps=None):
    caps = resolve(caps)
    n = g1.ambient
    if n != g2.ambient or len(g1) != len(g2):
        return None
    sig1 = [_signature(g1, i) for i in range(n)]
    sig2 = [_signature(g2, i) for i in range(n)]
    if sorted(sig1) != sorted(sig2):
        return None
    # rarest signature first prunes earliest
    freq = collections.Counter(sig1)
    order = sorted(range(n), key=lambda i: (freq[sig1[i]], sig1[i], i))
    target = set(g2.elements)
    perm = [None] * n
    used = [False] * n
    nodes = 0

    def projections(group, coords):
        return collections.Counter(tuple(x[c] for c in coords) for x in group.elements)

    def extend(depth):
        nonlocal nodes
        if depth == n:
            return True
        i = order[depth]
        for j in range(n):
            if used[j] or sig2[j] != sig1[i]:
                continue
            nodes += 1
            if nodes > caps.search_nodes:
                raise ResourceLimit(f"isomorphism search exceeded {caps.search_nodes} nodes")
            perm[i] = j
            used[j] = True
            src = order[:depth + 1]
            if projections(g1, src) == projections(g2, [perm[c] for c in src]) and extend(depth + 1):
                return True
            used[j] = False
            perm[i] = None
        return False

    if not extend(0):
        return None
    moved = g1.permuted(perm)
    assert set(moved.elements) == target
    return tuple(perm)
