"""Linear codes over F_p: weights and ages, simplex codes, monomial
equivalence, Bonisoli and (A, -A) pair decompositions, and the bridge between
codes of constant age and lattice simplices with binomial h*.
"""

import collections
import dataclasses
import itertools
from fractions import Fraction

from . import modp
from .config import resolve
from .errors import (
    CoverageFailure,
    DegreeOutOfRange,
    HStarError,
    InvalidPrime,
    IsPyramid,
    MixedParameters,
    NonPrimeExponent,
    NotBinomial,
    NotConstantAge,
    NotConstantWeight,
    NotSimplexCode,
    OddBlockCount,
    ResourceLimit,
    ZeroCoordinate,
)
from .groups import TorusSubgroup, hstar_from_lambda, is_pyramid, lambda_of, simplex_of


def _check_prime(p):
    if not isinstance(p, int) or not modp.is_prime(p):
        raise InvalidPrime(f"{p!r} is not a prime")


@dataclasses.dataclass(frozen=True)
class LinearCode:
    """The row space of ``generators`` (``r`` independent rows) in ``F_p^n``."""

    p: int
    generators: tuple

    def __post_init__(self):
        _check_prime(self.p)
        rows = tuple(tuple(int(x) % self.p for x in row) for row in self.generators)
        if not rows or not rows[0]:
            raise HStarError("a code needs at least one nonempty generator row",
                             "r >= 1, n >= 1")
        if len({len(row) for row in rows}) != 1:
            raise HStarError("generator rows have different lengths", "rows share length n")
        if modp.rank(rows, self.p) != len(rows):
            raise HStarError("generator rows are linearly dependent",
                             "rows linearly independent over F_p")
        object.__setattr__(self, "generators", rows)

    @property
    def n(self):
        return len(self.generators[0])

    @property
    def r(self):
        return len(self.generators)

    @property
    def size(self):
        return self.p ** self.r

    @property
    def columns(self):
        return tuple(zip(*self.generators))

    def codewords(self, caps=None):
        caps = resolve(caps)
        if self.size > caps.codewords:
            raise ResourceLimit(f"code has {self.size} words, cap is {caps.codewords}")
        p = self.p
        for coeffs in itertools.product(range(p), repeat=self.r):
            yield tuple(sum(c * g[j] for c, g in zip(coeffs, self.generators)) % p
                        for j in range(self.n))

    def same_code(self, other):
        return (self.p == other.p and self.n == other.n
                and modp.rref(self.generators, self.p) == modp.rref(other.generators, other.p))


def weight(v):
    return sum(1 for x in v if x)


def age(v, p=None):
    """Sum of the least nonnegative residues."""
    return sum(x % p for x in v) if p else sum(v)


def support(v):
    return frozenset(i for i, x in enumerate(v) if x)


def _constant(code, fn, caps):
    values = {fn(v) for v in code.codewords(caps) if any(v)}
    return values.pop() if len(values) == 1 else None


def constant_weight(code, caps=None):
    """The common weight of all nonzero codewords, or ``None``."""
    return _constant(code, weight, caps)


def constant_age(code, caps=None):
    return _constant(code, lambda v: age(v, code.p), caps)


def projective_points(p, r):
    """One vector per point of P^(r-1)(F_p), first nonzero entry 1, lex order."""
    return [v for v in itertools.product(range(p), repeat=r)
            if any(v) and v[next(i for i, x in enumerate(v) if x)] == 1]


def simplex_code(p, r):
    _check_prime(p)
    if r < 1:
        raise HStarError(f"simplex code dimension must be >= 1, got {r}", "r >= 1")
    return LinearCode(p, tuple(zip(*projective_points(p, r))))


def is_simplex_matrix(rows, p):
    cols = list(zip(*rows))
    r = len(rows)
    normed = [modp.normalize(c, p)[0] for c in cols]
    return (all(any(c) for c in cols) and len(cols) == (p**r - 1) // (p - 1)
            and len(set(normed)) == len(cols))


def replicate(code, m):
    if m < 1:
        raise HStarError(f"replication count must be >= 1, got {m}", "m >= 1")
    return LinearCode(code.p, tuple(row * m for row in code.generators))


def pair_construct(matrices, p):
    """Code generated by ``(A_1, -A_1, ..., A_s, -A_s)``."""
    _check_prime(p)
    if not matrices:
        raise HStarError("need at least one simplex-code matrix", "s >= 1")
    mats = [tuple(tuple(x % p for x in row) for row in a) for a in matrices]
    if len({len(a) for a in mats}) != 1:
        raise MixedParameters("simplex-code matrices have different dimensions")
    for a in mats:
        if not is_simplex_matrix(a, p):
            raise NotSimplexCode(f"{a} is not a simplex-code generator matrix over F_{p}")
    r = len(mats[0])
    rows = []
    for i in range(r):
        row = []
        for a in mats:
            row.extend(a[i])
            row.extend((-x) % p for x in a[i])
        rows.append(tuple(row))
    return LinearCode(p, tuple(rows))


def random_simplex_matrix(p, r, rng):
    """Simplex-code generator with random representatives in random order."""
    cols = []
    for v in projective_points(p, r):
        c = rng.randrange(1, p)
        cols.append(tuple(x * c % p for x in v))
    rng.shuffle(cols)
    return tuple(zip(*cols))


# -- monomial transforms ----------------------------------------------------

@dataclasses.dataclass(frozen=True)
class MonomialTransform:
    """``x -> (tau_1 x_sigma(1), ..., tau_n x_sigma(n))`` (0-based indices)."""

    sigma: tuple
    tau: tuple

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "tau", tuple(self.tau))
        n = len(self.sigma)
        if sorted(self.sigma) != list(range(n)) or len(self.tau) != n:
            raise HStarError("sigma must be a permutation and tau match its length",
                             "sigma bijective, len(tau) = n")
        if any(t == 0 for t in self.tau):
            raise HStarError("monomial scalars must be nonzero", "tau_i != 0")

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)), (1,) * n)

    def __call__(self, v, p):
        return tuple(t * v[s] % p for s, t in zip(self.sigma, self.tau))

    def after(self, first, p):
        """The composite ``self o first``."""
        sigma = tuple(first.sigma[s] for s in self.sigma)
        tau = tuple(t * first.tau[s] % p for s, t in zip(self.sigma, self.tau))
        return MonomialTransform(sigma, tau)


def apply_monomial(f, code):
    return LinearCode(code.p, tuple(f(row, code.p) for row in code.generators))


def random_monomial(n, p, rng):
    sigma = list(range(n))
    rng.shuffle(sigma)
    return MonomialTransform(sigma, [rng.randrange(1, p) for _ in range(n)])


def _sort_normalize(rows, p):
    entries = []
    for j, col in enumerate(zip(*rows)):
        normed, lead = modp.normalize(col, p)
        entries.append((not any(normed), normed, j, pow(lead, -1, p)))
    entries.sort()
    f = MonomialTransform([e[2] for e in entries], [e[3] for e in entries])
    return tuple(zip(*(e[1] for e in entries))), f


def canonical_form(code):
    """Deterministic normal form of a generator matrix under column monomials.

    Columns are scaled to leading entry 1 and sorted (zero columns last),
    then rows are brought to reduced echelon form; the two steps are iterated
    until the sequence of matrices repeats and the smallest matrix on the
    cycle is returned with the accumulated transform ``f``, so that
    ``apply_monomial(f, code)`` spans the same space as the returned rows.

    The result is invariant under monomial transforms of the given generator
    matrix but depends on its row basis; use :func:`equivalence_witness` to
    decide equivalence of codes.
    """
    p = code.p
    mat, f = _sort_normalize(code.generators, p)
    seen = {}
    trail = []
    while mat not in seen:
        seen[mat] = len(trail)
        trail.append((mat, f))
        reduced, _ = modp.rref(mat, p)
        mat, g = _sort_normalize(reduced, p)
        f = g.after(f, p)
    cycle = trail[seen[mat]:]
    return min(cycle, key=lambda item: item[0])


def _match_columns(src_rows, dst_rows, p):
    # monomial f with f(src_row) == dst_row for each row, or None
    pool = collections.defaultdict(list)
    for j, col in enumerate(zip(*src_rows)):
        normed, lead = modp.normalize(col, p)
        pool[normed].append((j, lead))
    for bucket in pool.values():
        bucket.reverse()
    sigma, tau = [], []
    for col in zip(*dst_rows):
        normed, lead = modp.normalize(col, p)
        if not pool.get(normed):
            return None
        j, src_lead = pool[normed].pop()
        sigma.append(j)
        tau.append(lead * pow(src_lead, -1, p) % p)
    return MonomialTransform(sigma, tau)


def equivalence_witness(c1, c2, caps=None):
    """A monomial transform ``f`` with ``f(c1) == c2``, or ``None``.

    Searches for a weight-preserving linear isomorphism by assigning images
    to the generator rows of ``c1`` one at a time, checking weights on the
    growing span. By the MacWilliams extension theorem any such isomorphism
    extends to a monomial transform, read off by matching columns.
    """
    if (c1.p, c1.n, c1.r) != (c2.p, c2.n, c2.r):
        return None
    caps = resolve(caps)
    p, r = c1.p, c1.r
    by_weight = collections.defaultdict(list)
    for v in c2.codewords(caps):
        if any(v):
            by_weight[weight(v)].append(v)
    basis = c1.generators
    nodes = 0

    def add(u, v, a):
        return tuple((x + a * y) % p for x, y in zip(u, v))

    def search(t, span, images):
        nonlocal nodes
        if t == r:
            f = _match_columns(basis, images, p)
            if f is not None and apply_monomial(f, c1).same_code(c2):
                return f
            return None
        b = basis[t]
        for cand in by_weight.get(weight(b), ()):
            nodes += 1
            if nodes > caps.search_nodes:
                raise ResourceLimit(f"equivalence search exceeded {caps.search_nodes} nodes")
            grown = []
            ok = True
            for u, v in span:
                for a in range(1, p):
                    u2, v2 = add(u, b, a), add(v, cand, a)
                    if weight(u2) != weight(v2):
                        ok = False
                        break
                    grown.append((u2, v2))
                if not ok:
                    break
            if ok:
                found = search(t + 1, span + grown, images + [cand])
                if found is not None:
                    return found
        return None

    zero = (0,) * c1.n
    return search(0, [(zero, zero)], [])


# -- decompositions ---------------------------------------------------------

def _nonzero_columns(code):
    zero = [j for j, c in enumerate(code.columns) if not any(c)]
    if zero:
        raise ZeroCoordinate(f"coordinates {zero} vanish on the whole code")


def bonisoli_decompose(code, caps=None):
    """Split the columns into blocks that each generate an r-dimensional simplex code.

    Returns ``m`` tuples of column indices; block ``t`` takes the ``t``-th
    column (in index order) of each projective point, points in lex order.
    """
    w = constant_weight(code, caps)
    if w is None:
        raise NotConstantWeight("nonzero codewords have different weights")
    _nonzero_columns(code)
    p, r = code.p, code.r
    classes = collections.defaultdict(list)
    for j, col in enumerate(code.columns):
        classes[modp.normalize(col, p)[0]].append(j)
    npoints = (p**r - 1) // (p - 1)
    sizes = {len(v) for v in classes.values()}
    if len(classes) != npoints or len(sizes) != 1:
        raise CoverageFailure(
            f"{len(classes)} of {npoints} projective points covered with multiplicities {sorted(sizes)}")
    m = sizes.pop()
    if w != m * p ** (r - 1):
        raise CoverageFailure(f"weight {w} differs from m p^(r-1) = {m * p ** (r - 1)}")
    points = sorted(classes)
    return [tuple(classes[pt][t] for pt in points) for t in range(m)]


@dataclasses.dataclass(frozen=True)
class PairDecomposition:
    """Columns grouped as ``(A_1, -A_1, ..., A_s, -A_s)``.

    ``pairs[t] = (a, b)`` lists column indices with column ``b[i]`` equal to
    the negation of column ``a[i]``, and ``a`` one column per projective
    point. Over F_2 an odd Bonisoli block count leaves one block in
    ``unpaired``. ``transform`` reorders the columns into the normal form.
    """

    p: int
    r: int
    age: int
    pairs: tuple
    unpaired: tuple
    transform: MonomialTransform

    @property
    def s(self):
        return len(self.pairs)

    @property
    def p2_unpaired(self):
        return bool(self.unpaired)

    def normal_form(self, code):
        return apply_monomial(self.transform, code).generators


def pair_decompose(code, caps=None):
    a = constant_age(code, caps)
    if a is None:
        raise NotConstantAge("nonzero codewords have different ages")
    blocks = bonisoli_decompose(code, caps)
    p, r = code.p, code.r
    m = len(blocks)
    points = {}
    for j, col in enumerate(code.columns):
        normed, lead = modp.normalize(col, p)
        points.setdefault(normed, collections.defaultdict(list))[lead].append(j)
    per_point = []
    for pt in sorted(points):
        buckets = points[pt]
        if p == 2:
            idx = buckets[1]
            pairs = list(zip(idx[0:2 * (m // 2):2], idx[1:2 * (m // 2):2]))
            rest = idx[2 * (m // 2):]
        else:
            if m % 2:
                raise OddBlockCount(f"{m} simplex blocks cannot form (A, -A) pairs")
            pairs = []
            for lam in range(1, (p - 1) // 2 + 1):
                pos, neg = buckets.get(lam, []), buckets.get(p - lam, [])
                if len(pos) != len(neg):
                    raise OddBlockCount(
                        f"point {pt}: {len(pos)} columns with scalar {lam}, {len(neg)} with {p - lam}")
                pairs.extend(zip(pos, neg))
            rest = []
        per_point.append((pairs, rest))
    s = m // 2
    pairs = tuple((tuple(pp[t][0] for pp, _ in per_point), tuple(pp[t][1] for pp, _ in per_point))
                  for t in range(s))
    unpaired = tuple(tuple(rest[i] for _, rest in per_point) for i in range(m - 2 * s))
    order = [j for a_, b_ in pairs for j in a_ + b_] + [j for blk in unpaired for j in blk]
    return PairDecomposition(p, r, a, pairs, unpaired,
                             MonomialTransform(order, (1,) * code.n))


# -- simplices <-> codes ----------------------------------------------------

def param_check(p, r, k, d):
    """``2k(p^r - 1) == (d+1)(p-1)p^(r-1)``."""
    return 2 * k * (p**r - 1) == (d + 1) * (p - 1) * p ** (r - 1)


def replication_count(p, r, d):
    """Number of simplex-code blocks ``(d+1)(p-1)/(p^r-1)``, or ``None`` if not integral."""
    q, rem = divmod((d + 1) * (p - 1), p**r - 1)
    return None if rem else q


def group_of_code(code):
    """``{x/p mod 1 : x in code}`` as a torus subgroup."""
    p = code.p
    return TorusSubgroup(code.n, [tuple(Fraction(x, p) for x in v) for v in code.codewords()])


def simplex_of_code(code):
    return simplex_of(group_of_code(code))


def code_of_simplex(s, caps=None):
    """``(p, L, k)`` for a non-pyramid simplex with h* = 1 + h_k t^k, 1 < k < (d+1)/2."""
    group = lambda_of(s, caps)
    h = hstar_from_lambda(group)
    if not h.is_binomial:
        raise NotBinomial(f"h* = {h} is not a binomial")
    k, d = h.degree, s.dim
    if not (1 < k and 2 * k < d + 1):
        raise DegreeOutOfRange(f"degree {k} outside 1 < k < {d + 1}/2")
    if is_pyramid(group):
        raise IsPyramid("some coordinate vanishes on the whole group")
    orders = {max(c.denominator for c in x) for x in group.elements if any(x)}
    denominators = {c.denominator for x in group.elements for c in x if c}
    if len(orders) != 1 or denominators != orders or not modp.is_prime(next(iter(orders))):
        raise NonPrimeExponent(f"element denominators {sorted(denominators)}")
    p = orders.pop()
    words = [tuple(int(c * p) for c in x) for x in group.elements]
    basis, _ = modp.rref(words, p)
    code = LinearCode(p, tuple(map(tuple, basis)))
    if code.size != len(group):
        raise NonPrimeExponent(f"group of order {len(group)} is not F_{p}-linear")
    return p, code, k
