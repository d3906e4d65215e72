import itertools

import pytest
from hypothesis import given, settings, strategies as st

from hstarcodes.config import Caps
from hstarcodes.errors import HStarError, DegenerateInput, DegenerateSimplex, NonEmptySegment, ResourceLimit
from hstarcodes.lattice import (
    HStarPolynomial,
    LatticePolytope,
    LatticeSimplex,
    cayley_empty_segments,
    ehrhart_count,
    exceptional_simplex,
    hstar,
    hstar_ehrhart,
    hstar_from_counts,
    is_geometric_pyramid,
    lattice_distance,
    lawrence_prism,
    pyramid,
)

TWO_DELTA2 = LatticeSimplex([[0, 0], [2, 0], [0, 2]])


def brute_count(vertices, k):
    """Lattice points of k*P for a simplex, via exact barycentric coordinates."""
    from fractions import Fraction
    import sympy
    m = sympy.Matrix([list(v) + [1] for v in vertices]).T.inv()
    d = len(vertices[0])
    box = [range(min(v[i] for v in vertices) * k, max(v[i] for v in vertices) * k + 1)
           for i in range(d)]
    n = 0
    for x in itertools.product(*box):
        lam = m * sympy.Matrix(list(x) + [k])
        n += all(Fraction(str(c)) >= 0 for c in lam)
    return n


def test_two_delta2():
    assert TWO_DELTA2.volume == 4
    assert hstar(TWO_DELTA2).coeffs == (1, 3, 0)
    assert hstar_ehrhart(TWO_DELTA2).coeffs == (1, 3, 0)
    assert [ehrhart_count(TWO_DELTA2, k) for k in range(4)] == [1, 6, 15, 28]
    assert str(hstar(TWO_DELTA2)) == "1 + 3t"


def test_reeve_like_tetrahedron():
    s = LatticeSimplex([[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 2]])
    assert s.volume == 2
    assert hstar(s).coeffs == (1, 0, 1, 0)
    assert [ehrhart_count(s, k) for k in range(4)] == [1, 4, 11, 24]


def test_unimodular():
    for d in range(1, 5):
        s = LatticeSimplex([[0] * d] + [[int(i == j) for j in range(d)] for i in range(d)])
        assert s.volume == 1
        assert hstar(s).coeffs == (1,) + (0,) * d


def test_degenerate_simplex():
    with pytest.raises(DegenerateSimplex):
        LatticeSimplex([[0, 0], [1, 1], [2, 2]])
    with pytest.raises(DegenerateSimplex):
        LatticeSimplex([[1, 2, 3], [2, 3, 4], [3, 4, 5], [0, 0, 1]])
    with pytest.raises(HStarError):
        LatticeSimplex([[0, 0], [1, 0]])


def test_ehrhart_counts_match_brute_force():
    s = LatticeSimplex([[0, 0, 0], [3, 1, 0], [0, 2, 1], [1, 0, 2]])
    for k in range(3):
        assert ehrhart_count(s, k) == brute_count(s.vertices, k)


def test_hstar_from_counts_inverts():
    assert hstar_from_counts([1, 6, 15], 2).coeffs == (1, 3, 0)


simplices = st.integers(1, 4).flatmap(lambda d: st.lists(
    st.lists(st.integers(-2, 2), min_size=d, max_size=d), min_size=d + 1, max_size=d + 1))


@given(simplices)
@settings(max_examples=120, deadline=None)
def test_two_algorithms_agree(verts):
    try:
        s = LatticeSimplex(verts)
    except DegenerateSimplex:
        return
    h = hstar(s)
    assert h.coeffs == hstar_ehrhart(s).coeffs
    assert h(1) == s.volume
    assert all(c >= 0 for c in h.coeffs)
    # h*_1 counts the lattice points beyond the vertices
    assert h.coeffs[1] == ehrhart_count(s, 1) - s.dim - 1


def test_pyramid_preserves_hstar():
    s = LatticeSimplex([[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 2]])
    p = pyramid(s)
    assert p.dim == 4
    assert hstar(p).coeffs[:4] == hstar(s).coeffs
    assert is_geometric_pyramid(p)
    assert not is_geometric_pyramid(s)
    assert lattice_distance(p, 4) == 1


def test_exceptional_simplex():
    for n in range(2, 6):
        s = exceptional_simplex(n)
        assert s.dim == n and s.volume == 4
        assert str(hstar(s)) == "1 + 3t"


@pytest.mark.parametrize("heights,expected", [
    ((1, 1), "1 + t"), ((2, 2), "1 + 3t"), ((0, 0, 1), "1"), ((3, 1, 2), "1 + 5t"),
])
def test_lawrence_prism(heights, expected):
    p = lawrence_prism(heights)
    assert isinstance(p, LatticePolytope)
    h = hstar_ehrhart(p)
    assert str(h) == expected
    assert h(1) == p.volume == sum(heights)


def test_lawrence_prism_all_zero():
    with pytest.raises(DegenerateInput):
        lawrence_prism([0, 0])


def test_cayley_segments():
    assert str(hstar(cayley_empty_segments([[1, 0], [1, 2]]))) == "1 + t^2"
    assert str(hstar(cayley_empty_segments([[1, 0], [0, 1]]))) == "1"
    s = cayley_empty_segments([[1, 0, 0], [0, 1, 0], [1, 1, 2]])
    assert s.dim == 5
    assert str(hstar(s)) == "1 + t^3"
    with pytest.raises(NonEmptySegment):
        cayley_empty_segments([[2, 0], [0, 1]])


def test_polytope_facets_of_square():
    sq = LatticePolytope([[0, 0], [1, 0], [0, 1], [1, 1]])
    assert len(sq.facets) == 4
    assert sq.volume == 2
    assert hstar(sq).coeffs == (1, 1, 0)


def test_hstar_polynomial():
    h = HStarPolynomial((1, 0, 8, 0))
    assert h.degree == 2 and h.is_binomial and h(1) == 9
    assert not HStarPolynomial((1, 2, 1)).is_binomial


def test_volume_cap():
    with pytest.raises(ResourceLimit):
        hstar(TWO_DELTA2, Caps(volume=3))
    with pytest.raises(ResourceLimit):
        ehrhart_count(TWO_DELTA2, 5, Caps(box_points=4))


def test_cayley_of_empty_segments_can_have_lower_degree():
    # three empty segments from the origin; not a pyramid, yet h* has degree 2
    from hstarcodes.groups import is_pyramid, lambda_of
    s = cayley_empty_segments([[0, 0, 1], [0, 2, 1], [2, 0, 1]])
    assert not is_geometric_pyramid(s) and not is_pyramid(lambda_of(s))
    assert hstar(s).coeffs == hstar_ehrhart(s).coeffs == (1, 0, 3, 0, 0, 0)
    assert brute_count(s.vertices, 2) == ehrhart_count(s, 2)
