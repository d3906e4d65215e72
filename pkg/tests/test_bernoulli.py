import dataclasses
from fractions import Fraction

import pytest

from hstarcodes.bernoulli import (
    b1,
    b1_chi,
    is_odd_character,
    nonvanishing_sweep,
    norm_identity_check,
    norm_identity_sides,
    restricted_b1_chi,
    trace_pair_prediction,
    trace_pair_sum,
)
from hstarcodes.config import Caps
from hstarcodes.cyclotomic import CyclotomicNumber as Z
from hstarcodes.errors import HStarError, ResourceLimit, ZeroElement
from hstarcodes.finitefield import make_field, multiplicative_order


def test_b1():
    assert b1(Fraction(1, 3)) == Fraction(-1, 6)
    assert b1(Fraction(5, 4)) == Fraction(-1, 4)
    assert b1(2) == 0


def test_f3_value():
    f = make_field(3, 1)
    assert b1_chi(f, 1) == Z.rational(2, Fraction(-1, 3))
    assert b1_chi(f, 0).is_zero()


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_prime_field_matches_classical(p):
    # for nontrivial chi, sum chi(a) b1(a/p) = (1/p) sum chi(a) a
    f = make_field(p, 1)
    m = p - 1
    for j in range(1, m):
        expected = Z.rational(m, 0)
        for t, a in enumerate(f.powers):
            expected = expected + Z.zeta(m, j * t) * Fraction(a[0], p)
        assert b1_chi(f, j) == expected


def test_odd_characters():
    f = make_field(5, 2)
    minus_one = f.powers[(f.q - 1) // 2]
    assert minus_one == f.neg(f.one)
    assert [is_odd_character(f, j) for j in range(4)] == [False, True, False, True]


def test_restriction_of_odd_character_is_nontrivial():
    for p, r in [(3, 2), (5, 2), (3, 3), (7, 2)]:
        f = make_field(p, r)
        step = (f.q - 1) // (p - 1)
        for j in range(1, f.q - 1, 2):
            assert j * step % (f.q - 1) != 0
            assert not restricted_b1_chi(f, j).is_zero()


def test_generator_choice_does_not_change_values():
    f = make_field(5, 2)
    values = {b1_chi(f, j).coeffs for j in range(f.q - 1)}
    others = [g for g in f.elements()[1:]
              if g != f.generator and multiplicative_order(f, g) == f.q - 1]
    for g in others[:3]:
        f2 = dataclasses.replace(f, generator=g)
        assert {b1_chi(f2, j).coeffs for j in range(f2.q - 1)} == values


def test_trace_pair_f9():
    f = make_field(3, 2)
    assert trace_pair_sum(f, f.one) == Fraction(1, 6)
    for c in f.elements()[1:]:
        assert trace_pair_sum(f, c) == trace_pair_prediction(f, c)
        if not f.in_prime_field(c):
            assert trace_pair_sum(f, c) == 0
    with pytest.raises(ZeroElement):
        trace_pair_sum(f, f.zero)


def test_norm_identity():
    f = make_field(3, 2)
    for j in range(1, 8, 2):
        assert norm_identity_check(f, j)
    lhs, rhs = norm_identity_sides(f, 1)
    assert lhs == rhs == Z.rational(8, Fraction(1, 3))
    with pytest.raises(HStarError):
        norm_identity_check(f, 2)


def test_sweep():
    rep = nonvanishing_sweep(make_field(7, 1))
    assert [c.j for c in rep.characters] == list(range(6))
    assert rep.odd_zeros == []
    assert all(c.is_zero for c in rep.characters if c.j == 0)
    with pytest.raises(ResourceLimit):
        nonvanishing_sweep(make_field(3, 3), Caps(field_size=10))
