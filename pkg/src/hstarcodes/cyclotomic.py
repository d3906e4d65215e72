"""Exact arithmetic in the cyclotomic field Q(zeta_m).

Elements are rational coefficient vectors on the power basis
``1, zeta, ..., zeta^(phi(m)-1)``, always reduced modulo the m-th cyclotomic
polynomial, so equality and zero tests are coefficient comparisons.
"""

import dataclasses
import functools
from fractions import Fraction


def _divexact(num, den):
    # integer polynomial division (low -> high coefficients), den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[:len(den) - 1]):
        raise ArithmeticError("polynomial division is not exact")
    return out


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Integer coefficients of Phi_m, lowest degree first."""
    if m < 1:
        raise ValueError(f"cyclotomic index must be positive, got {m}")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def reduce_mod(coeffs, m):
    """Reduce a coefficient list (any length) modulo Phi_m."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    c = list(coeffs)
    for i in range(len(c) - 1, deg - 1, -1):
        lead = c[i]
        if lead:
            for j in range(deg):
                c[i - deg + j] -= lead * phi[j]
            c[i] = 0
    c = c[:deg]
    return c + [0] * (deg - len(c))


def from_exponents(m, coeffs_by_exponent):
    """Element ``sum c_e zeta^e`` from a length-``m`` list indexed by exponent."""
    return CyclotomicNumber(m, reduce_mod(coeffs_by_exponent, m))


@dataclasses.dataclass(frozen=True)
class CyclotomicNumber:
    conductor: int
    coeffs: tuple

    def __post_init__(self):
        deg = len(cyclotomic_polynomial(self.conductor)) - 1
        c = [Fraction(x) for x in self.coeffs]
        if len(c) > deg:
            c = reduce_mod(c, self.conductor)
        c += [Fraction(0)] * (deg - len(c))
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def zeta(cls, m, k=1):
        vec = [0] * m
        vec[k % m] = 1
        return from_exponents(m, vec)

    @classmethod
    def rational(cls, m, x):
        return cls(m, [Fraction(x)])

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.conductor != self.conductor:
                raise ValueError("cyclotomic numbers with different conductors")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.rational(self.conductor, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicNumber(self.conductor, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.conductor, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = [Fraction(0)] * (2 * len(self.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CyclotomicNumber(self.conductor, reduce_mod(prod, self.conductor))

    __rmul__ = __mul__

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self):
        return not self

    def conj(self):
        """Complex conjugation ``zeta -> zeta^(-1)``."""
        m = self.conductor
        vec = [Fraction(0)] * m
        for k, c in enumerate(self.coeffs):
            vec[(-k) % m] += c
        return from_exponents(m, vec)

    def as_rational(self):
        """The value as a Fraction when it lies in Q, else ``None``."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def __str__(self):
        q = self.as_rational()
        if q is not None:
            return str(q)
        return " + ".join(f"({c})*z^{k}" for k, c in enumerate(self.coeffs) if c)


def norm_square(b):
    """``b * conj(b)``, the squared absolute value."""
    return b * b.conj()
