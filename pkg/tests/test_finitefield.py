import pytest
import sympy

from hstarcodes.errors import EvenPrime, InvalidPrime
from hstarcodes.finitefield import is_irreducible, make_field, multiplicative_order

FIELDS = [(3, 1), (5, 1), (3, 2), (5, 2), (3, 3), (7, 2), (3, 4)]


@pytest.mark.parametrize("p,r", FIELDS)
def test_field_structure(p, r):
    f = make_field(p, r)
    x = sympy.symbols("x")
    poly = sympy.Poly(list(reversed(f.modulus)), x, modulus=p)
    assert poly.is_irreducible
    assert multiplicative_order(f, f.generator) == f.q - 1
    assert len(set(f.powers)) == f.q - 1
    for a in f.elements()[1:]:
        assert f.mul(a, f.inverse(a)) == f.one


@pytest.mark.parametrize("p,r", FIELDS)
def test_trace_linear_form_matches_frobenius(p, r):
    f = make_field(p, r)
    for a in f.elements():
        assert f.trace(a) == f.frobenius_trace(a)
    for c in range(p):
        assert f.trace(f.scalar(c)) == r * c % p


def test_deterministic_choice():
    f = make_field(3, 2)
    assert f.modulus == (1, 0, 1)  # x^2 + 1
    assert f.generator == (1, 1)   # x + 1
    assert make_field(3, 2) == f
    assert make_field(3, 1).generator == (2,)


def test_modulus_is_smallest():
    p, r = 5, 2
    f = make_field(p, r)
    enc = sum(c * p**i for i, c in enumerate(f.modulus[:-1]))
    for smaller in range(enc):
        low = [(smaller // p**i) % p for i in range(r)]
        assert not is_irreducible(low + [1], p)


def test_rejections():
    with pytest.raises(EvenPrime):
        make_field(2, 3)
    with pytest.raises(InvalidPrime):
        make_field(9, 1)
