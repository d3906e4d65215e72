"""The finite field F_q, q = p^r, with a fixed modulus and primitive element.

Elements are coefficient tuples of length ``r`` (lowest degree first) of
residues modulo the defining polynomial. The field is chosen
deterministically: the modulus is the monic irreducible polynomial of
degree ``r`` with the smallest base-``p`` encoding ``sum c_i p^i``, and the
generator is the primitive element with the smallest encoding.
"""

import dataclasses
import functools

from . import modp
from .errors import EvenPrime, InvalidPrime, HStarError


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a, f, p):
    a = _trim(x % p for x in a)
    f = _trim(f)
    inv = pow(f[-1], -1, p)
    while len(a) >= len(f):
        c = a[-1] * inv % p
        shift = len(a) - len(f)
        for j, y in enumerate(f):
            a[shift + j] = (a[shift + j] - c * y) % p
        a = _trim(a)
    return a


def poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def poly_gcd(a, b, p):
    a, b = _trim(x % p for x in a), _trim(x % p for x in b)
    while b:
        a, b = b, poly_mod(a, b, p)
    return a


def poly_powmod(a, e, f, p):
    result, base = [1], poly_mod(a, f, p)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base, p), f, p)
        base = poly_mod(poly_mul(base, base, p), f, p)
        e >>= 1
    return result


def is_irreducible(f, p):
    """Ben-Or test: ``gcd(f, x^(p^i) - x) == 1`` for ``i <= deg(f)/2``."""
    f = _trim(f)
    r = len(f) - 1
    if r < 1:
        return False
    x = [0, 1]
    power = x
    for _ in range(r // 2):
        power = poly_powmod(power, p, f, p)
        diff = list(power) + [0] * max(0, 2 - len(power))
        diff[1] = (diff[1] - 1) % p
        if len(poly_gcd(f, diff, p)) != 1:
            return False
    return True


def _encode(coeffs, p):
    return sum(c * p**i for i, c in enumerate(coeffs))


def _factor_set(n):
    out, d = set(), 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


@dataclasses.dataclass(frozen=True)
class FqField:
    p: int
    r: int
    modulus: tuple
    generator: tuple

    @property
    def q(self):
        return self.p ** self.r

    @property
    def zero(self):
        return (0,) * self.r

    @property
    def one(self):
        return (1,) + (0,) * (self.r - 1)

    def element(self, coeffs):
        c = [x % self.p for x in coeffs]
        if len(c) > self.r:
            c = poly_mod(c, self.modulus, self.p)
        return tuple(c) + (0,) * (self.r - len(c))

    def from_int(self, n):
        """Element whose base-p digits are its coefficients."""
        return tuple((n // self.p**i) % self.p for i in range(self.r))

    def to_int(self, a):
        return _encode(a, self.p)

    def elements(self):
        return [self.from_int(n) for n in range(self.q)]

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        return self.element(poly_mul(_trim(a), _trim(b), self.p))

    def power(self, a, e):
        if e < 0:
            return self.power(self.inverse(a), -e)
        return self.element(poly_powmod(_trim(a), e, self.modulus, self.p))

    def inverse(self, a):
        if not any(a):
            raise ZeroDivisionError("zero has no inverse")
        return self.power(a, self.q - 2)

    def scalar(self, c):
        return self.element([c])

    def in_prime_field(self, a):
        return not any(a[1:])

    def frobenius_trace(self, a):
        """``a + a^p + ... + a^(p^(r-1))`` computed by repeated Frobenius."""
        total, x = self.zero, a
        for _ in range(self.r):
            total = self.add(total, x)
            x = self.power(x, self.p)
        if not self.in_prime_field(total):
            raise ArithmeticError(f"trace {total} left the prime field")
        return total[0]

    @functools.cached_property
    def _basis_traces(self):
        return tuple(self.frobenius_trace(self.element([0] * i + [1])) for i in range(self.r))

    def trace(self, a):
        """Trace representative in ``{0..p-1}`` via the F_p-linear form."""
        return sum(c * t for c, t in zip(a, self._basis_traces)) % self.p

    @functools.cached_property
    def powers(self):
        """``g^t`` for ``t = 0..q-2``."""
        out, x = [], self.one
        for _ in range(self.q - 1):
            out.append(x)
            x = self.mul(x, self.generator)
        return tuple(out)

    @functools.cached_property
    def log(self):
        return {a: t for t, a in enumerate(self.powers)}


def multiplicative_order(field, a):
    n = field.q - 1
    order = n
    for f in _factor_set(n):
        while order % f == 0 and field.power(a, order // f) == field.one:
            order //= f
    return order


def make_field(p, r):
    if not isinstance(p, int) or not modp.is_prime(p):
        raise InvalidPrime(f"{p!r} is not a prime")
    if p == 2:
        raise EvenPrime("p = 2 has no odd characters")
    if r < 1:
        raise HStarError(f"extension degree must be >= 1, got {r}", "r >= 1")
    modulus = None
    for tail in range(p**r):
        low = [(tail // p**i) % p for i in range(r)]
        if is_irreducible(low + [1], p):
            modulus = tuple(low + [1])
            break
    probe = FqField(p, r, modulus, (1,) + (0,) * (r - 1))
    for n in range(1, p**r):
        g = probe.from_int(n)
        if multiplicative_order(probe, g) == p**r - 1:
            return FqField(p, r, modulus, g)
    raise ArithmeticError("no primitive element found")  # unreachable for a field

