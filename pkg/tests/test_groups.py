from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from hstarcodes.errors import DegenerateSimplex, NonIntegerAge, NotAGroup
from hstarcodes.groups import (
    TorusSubgroup,
    age,
    apex_coordinates,
    hstar_from_lambda,
    is_pyramid,
    iso_simplices,
    lambda_of,
    simplex_of,
)
from hstarcodes.lattice import LatticeSimplex, hstar, pyramid

TET = LatticeSimplex([[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 2]])


def test_lambda_of_tetrahedron():
    g = lambda_of(TET)
    half = F(1, 2)
    assert g.elements == ((0, 0, 0, 0), (half, half, half, half))
    assert hstar_from_lambda(g).coeffs == (1, 0, 1, 0)


def test_group_order_is_volume():
    s = LatticeSimplex([[0, 0], [2, 0], [0, 2]])
    g = lambda_of(s)
    assert len(g) == s.volume == 4
    assert [age(x) for x in g.elements].count(1) == 3


def test_not_a_group():
    with pytest.raises(NotAGroup):
        TorusSubgroup(2, [[F(1, 3), F(2, 3)]])


def test_generated_and_mod_one():
    g = TorusSubgroup.generated(3, [[F(1, 4), F(1, 4), F(1, 2)]])
    assert len(g) == 4
    assert [F(5, 4), F(1, 4), F(-1, 2)] in g
    assert g.exponent == 4


def test_non_integer_age():
    g = TorusSubgroup.generated(2, [[F(1, 3), F(0)]])
    with pytest.raises(NonIntegerAge):
        hstar_from_lambda(g)


def test_round_trip_reproduces_group():
    g = lambda_of(TET)
    s = simplex_of(g)
    assert lambda_of(s) == g
    assert iso_simplices(TET, s) is not None


def test_pyramid_coordinate():
    p = pyramid(TET)
    g = lambda_of(p)
    assert is_pyramid(g)
    assert apex_coordinates(g) == [4]
    assert not is_pyramid(lambda_of(TET))


def test_iso_detects_difference():
    other = LatticeSimplex([[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 3]])
    assert iso_simplices(TET, other) is None
    twisted = LatticeSimplex([[0, 0], [3, 0], [0, 1]])
    skew = LatticeSimplex([[0, 0], [1, 0], [1, 3]])
    assert iso_simplices(twisted, skew) is not None


def test_iso_returns_vertex_permutation():
    # reversing the vertex order must be recovered as a permutation
    s = LatticeSimplex([[0, 0, 0], [2, 0, 0], [0, 3, 0], [0, 0, 5]])
    t = LatticeSimplex(list(reversed(s.vertices)))
    perm = iso_simplices(s, t)
    assert perm is not None
    assert lambda_of(s).permuted(perm) == lambda_of(t)


def test_unimodular_transform_is_isomorphic(rng):
    for _ in range(20):
        d = rng.randint(2, 4)
        while True:
            verts = [[rng.randint(-2, 2) for _ in range(d)] for _ in range(d + 1)]
            try:
                s = LatticeSimplex(verts)
                break
            except DegenerateSimplex:
                pass
        # shear by an upper unitriangular matrix and translate
        m = [[1 if i == j else (rng.randint(-2, 2) if j > i else 0) for j in range(d)]
             for i in range(d)]
        shift = [rng.randint(-3, 3) for _ in range(d)]
        moved = [[sum(v[i] * m[i][j] for i in range(d)) + shift[j] for j in range(d)]
                 for v in s.vertices]
        rng.shuffle(moved)
        assert iso_simplices(s, LatticeSimplex(moved)) is not None


cyclic = st.integers(1, 4).flatmap(lambda d: st.tuples(
    st.just(d), st.integers(2, 12), st.lists(st.integers(0, 11), min_size=d, max_size=d)))


@given(cyclic)
@settings(max_examples=80, deadline=None)
def test_simplex_of_group_round_trip(args):
    d, n, a = args
    a = [x % n for x in a]
    a.append(-sum(a) % n)
    g = TorusSubgroup.generated(d + 1, [[F(x, n) for x in a]])
    s = simplex_of(g)
    assert s.volume == len(g)
    assert lambda_of(s) == g
    assert hstar(s).coeffs == hstar_from_lambda(g).coeffs
