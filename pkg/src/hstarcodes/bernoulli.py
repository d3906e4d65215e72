"""Generalized Bernoulli numbers B_{1,chi}^{(r)} for characters of F_q^*.

Characters are indexed by ``j`` in ``0..q-2`` through
``chi_j(g^t) = zeta_{q-1}^(j t)`` for the field's fixed generator ``g``.
Values live in Q(zeta_{q-1}) and are computed exactly.
"""

import dataclasses
import math
from fractions import Fraction

from .config import resolve
from .cyclotomic import CyclotomicNumber, from_exponents, norm_square
from .errors import HStarError, ResourceLimit, TheoremViolation, ZeroElement


def b1(x):
    """Periodic first Bernoulli function: ``{x} - 1/2`` off the integers, 0 on them."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


def _b1_scaled(lam, p):
    # 2p * b1(lam/p) as an integer
    lam %= p
    return 0 if lam == 0 else 2 * lam - p


def _check_size(field, caps):
    caps = resolve(caps)
    if field.q > caps.field_size:
        raise ResourceLimit(f"q = {field.q} exceeds cap {caps.field_size}")


def _check_index(field, j):
    if not 0 <= j < field.q - 1:
        raise HStarError(f"character index {j} outside 0..{field.q - 2}", "0 <= j < q-1")


def is_odd_character(field, j):
    """``chi_j(-1) = -1``; since ``-1 = g^((q-1)/2)`` this is ``j`` odd."""
    _check_index(field, j)
    return j % 2 == 1


def b1_chi(field, j, caps=None):
    """``sum over a in F_q^* of chi_j(a) b1(Tr(a)/p)`` in Q(zeta_{q-1})."""
    _check_size(field, caps)
    _check_index(field, j)
    m = field.q - 1
    p = field.p
    vec = [0] * m
    for t, a in enumerate(field.powers):
        vec[j * t % m] += _b1_scaled(field.trace(a), p)
    return from_exponents(m, [Fraction(c, 2 * p) for c in vec])


def character_sum(field, j):
    """``sum over a in F_q^* of chi_j(a)``; zero unless ``j == 0``."""
    m = field.q - 1
    vec = [0] * m
    for t in range(m):
        vec[j * t % m] += 1
    return from_exponents(m, vec)


def restricted_b1_chi(field, j):
    """Classical ``B_{1, chi|F_p}`` embedded in Q(zeta_{q-1}).

    ``F_p^*`` is generated by ``h = g^((q-1)/(p-1))`` and
    ``chi_j(h^u) = zeta_{q-1}^(j u (q-1)/(p-1))``.
    """
    _check_index(field, j)
    m = field.q - 1
    step = m // (field.p - 1)
    p = field.p
    vec = [0] * m
    for u in range(p - 1):
        a = field.powers[u * step]
        if not field.in_prime_field(a):
            raise ArithmeticError(f"{a} should lie in the prime field")
        vec[j * u * step % m] += _b1_scaled(a[0], p)
    return from_exponents(m, [Fraction(c, 2 * p) for c in vec])


def trace_pair_sum(field, c):
    """``sum over a in F_q of b1(Tr(a)/p) b1(Tr(ac)/p)``, evaluated term by term."""
    if not any(c):
        raise ZeroElement("c must be nonzero")
    p = field.p
    total = 0
    for a in field.elements():
        total += _b1_scaled(field.trace(a), p) * _b1_scaled(field.trace(field.mul(a, c)), p)
    return Fraction(total, 4 * p * p)


def trace_pair_prediction(field, c):
    """Closed form of :func:`trace_pair_sum`.

    For ``c`` in F_p: ``p^(r-1) * sum_{a=1}^{p-1} b1(a/p) b1(ac/p)``;
    for ``c`` outside F_p: 0.
    """
    if not any(c):
        raise ZeroElement("c must be nonzero")
    if not field.in_prime_field(c):
        return Fraction(0)
    p = field.p
    inner = sum(b1(Fraction(a, p)) * b1(Fraction(a * c[0], p)) for a in range(1, p))
    return p ** (field.r - 1) * inner


def norm_identity_sides(field, j, caps=None):
    """``(|B_{1,chi}^{(r)}|^2, p^(r-1) |B_{1,chi|F_p}|^2)`` for character ``j``."""
    lhs = norm_square(b1_chi(field, j, caps))
    rhs = norm_square(restricted_b1_chi(field, j)) * field.p ** (field.r - 1)
    return lhs, rhs


def norm_identity_check(field, j, caps=None):
    if not is_odd_character(field, j):
        raise HStarError(f"character {j} is not odd", "j odd")
    lhs, rhs = norm_identity_sides(field, j, caps)
    return lhs == rhs


@dataclasses.dataclass(frozen=True)
class CharacterReport:
    j: int
    odd: bool
    value: CyclotomicNumber
    norm_square: CyclotomicNumber

    @property
    def is_zero(self):
        return self.value.is_zero()


@dataclasses.dataclass(frozen=True)
class SweepReport:
    field: object
    characters: tuple

    @property
    def odd_zeros(self):
        return [c.j for c in self.characters if c.odd and c.is_zero]


def nonvanishing_sweep(field, caps=None):
    """Compute B_{1,chi}^{(r)} for every character, ordered by index.

    Raises :class:`TheoremViolation` if an odd character gives exactly zero.
    """
    _check_size(field, caps)
    rows = []
    for j in range(field.q - 1):
        value = b1_chi(field, j, caps)
        rows.append(CharacterReport(j, is_odd_character(field, j), value, norm_square(value)))
    report = SweepReport(field, tuple(rows))
    if report.odd_zeros:
        raise TheoremViolation(f"odd characters {report.odd_zeros} give B_1,chi = 0")
    return report
