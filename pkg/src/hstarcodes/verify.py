"""Acceptance suites, shared by the test suite and ``verify-all``.

Each check returns a :class:`CheckResult`; ``passed`` already includes the
time limit.
"""

import dataclasses
import itertools
import math
import random
import time
from fractions import Fraction

from . import codes as C
from . import modp
from .bernoulli import norm_identity_check, nonvanishing_sweep, trace_pair_prediction, trace_pair_sum
from .errors import DegenerateSimplex
from .finitefield import make_field
from .groups import TorusSubgroup, hstar_from_lambda, is_pyramid, iso_simplices, lambda_of, simplex_of
from .lattice import (
    LatticeSimplex,
    cayley_empty_segments,
    exceptional_simplex,
    hstar,
    hstar_ehrhart,
    is_geometric_pyramid,
    lawrence_prism,
)

CORPUS_SEED = 20240611
CORPUS_SIZE = 200
MAX_VOLUME = 200
MAX_DIM = 5


@dataclasses.dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    seconds: float
    limit: float
    detail: str

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return (f"[{status}] criterion {self.number:2d} {self.name}: {self.detail} "
                f"({self.seconds:.2f}s, limit {self.limit:g}s)")

    def to_dict(self):
        return dataclasses.asdict(self)


def _timed(number, name, limit, fn):
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed check, reported not raised
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    seconds = time.perf_counter() - start
    if ok and seconds > limit:
        ok, detail = False, detail + f"; over time limit {limit:g}s"
    return CheckResult(number, name, ok, seconds, limit, detail)


# -- simplex corpus ---------------------------------------------------------

def _random_vertex_simplex(rng, d):
    spread = 2 if d <= 3 else 1
    while True:
        verts = [[rng.randint(-spread, spread) for _ in range(d)] for _ in range(d + 1)]
        try:
            s = LatticeSimplex(verts)
        except DegenerateSimplex:
            continue
        if s.volume <= MAX_VOLUME:
            return s


def _random_cyclic_simplex(rng, d):
    # simplex of a cyclic group generated by (a_0..a_d)/N with integral age
    while True:
        n = rng.randint(2, 24)
        a = [rng.randrange(n) for _ in range(d)]
        a.append(-sum(a) % n)
        g = TorusSubgroup.generated(d + 1, [[Fraction(x, n) for x in a]])
        if len(g) > 1 and len(g) <= MAX_VOLUME:
            return simplex_of(g)


def simplex_corpus(size=CORPUS_SIZE, seed=CORPUS_SEED):
    """Deterministic pseudo-random simplices with ``d <= 5`` and volume ``<= 200``.

    Three quarters come from random vertex coordinates, the rest from
    random cyclic subgroups, which favour small h*-degrees and binomials.
    """
    rng = random.Random(seed)
    out = []
    for i in range(size):
        d = 1 + i % MAX_DIM
        if i % 4 == 3:
            out.append(_random_cyclic_simplex(rng, d))
        else:
            out.append(_random_vertex_simplex(rng, d))
    return out


# -- criteria ---------------------------------------------------------------

def check_example(scale="small"):
    def run():
        s = LatticeSimplex([[0, 0], [2, 0], [0, 2]])
        h = hstar(s)
        return h.coeffs == (1, 3, 0), f"hstar(2*Delta_2) = {h}"
    return _timed(1, "2*Delta_2 example", 1, run)


def check_two_algorithms(corpus, scale="small"):
    def run():
        bad = []
        for i, s in enumerate(corpus):
            a, b = hstar(s), hstar_ehrhart(s)
            if a.coeffs != b.coeffs or a(1) != s.volume:
                bad.append(i)
        return not bad, f"{len(corpus)} simplices, mismatches at {bad}"
    return _timed(2, "parallelepiped vs Ehrhart", 120, run)


def check_round_trip(corpus, scale="small"):
    def run():
        bad = [i for i, s in enumerate(corpus) if iso_simplices(s, simplex_of(lambda_of(s))) is None]
        return not bad, f"{len(corpus)} simplices, failures at {bad}"
    return _timed(3, "lambda/simplex round trip", 120, run)


def check_simplex_weights(scale="small"):
    def run():
        seen = []
        for p in (2, 3, 5, 7):
            for r in (1, 2, 3):
                code = C.simplex_code(p, r)
                w = C.constant_weight(code)
                if w != p ** (r - 1):
                    return False, f"p={p} r={r}: weight {w}"
                seen.append(f"{p}^{r}")
        return True, f"constant weight p^(r-1) for q in {seen}"
    return _timed(4, "simplex-code weights", 30, run)


def _pair_preserving_monomial(dec_pairs, n, p, rng):
    # permutation plus scalars that agree on each (X, -X) column pair
    tau = [1] * n
    for a, b in dec_pairs:
        for i, j in zip(a, b):
            c = rng.randrange(1, p)
            tau[i] = tau[j] = c
    sigma = list(range(n))
    rng.shuffle(sigma)
    return C.MonomialTransform(sigma, [tau[s] for s in sigma])


def _block_pairs(s, size):
    return [(tuple(range(2 * t * size, (2 * t + 1) * size)),
             tuple(range((2 * t + 1) * size, (2 * t + 2) * size))) for t in range(s)]


def pair_recovery_case(p, r, s, rng):
    """Build, scramble and decompose one pair code; return an error string or ``None``."""
    mats = [C.random_simplex_matrix(p, r, rng) for _ in range(s)]
    code = C.pair_construct(mats, p)
    size = (p**r - 1) // (p - 1)
    f = _pair_preserving_monomial(_block_pairs(s, size), code.n, p, rng)
    scrambled = C.apply_monomial(f, code)
    dec = C.pair_decompose(scrambled)
    if dec.s != s or dec.unpaired:
        return f"found {dec.s} pairs, unpaired {dec.unpaired}"
    cols = scrambled.columns
    for a, b in dec.pairs:
        if any(tuple((-x) % p for x in cols[i]) != cols[j] for i, j in zip(a, b)):
            return "pairing is not exact negation"
        block = tuple(zip(*(cols[i] for i in a)))
        if not C.is_simplex_matrix(block, p):
            return "block is not a simplex-code matrix"
    if dec.age != s * p**r:
        return f"age {dec.age} != {s * p**r}"
    if C.constant_age(scrambled) != s * p**r:
        return "scrambled code lost constant age"
    k, rem = divmod(dec.age, p)
    if rem or not C.param_check(p, r, k, scrambled.n - 1):
        return f"param_check fails for k={dec.age}/{p}, d={scrambled.n - 1}"
    return None


PAIR_CASES = ((3, 2, 1), (3, 2, 2), (5, 2, 1), (3, 3, 1))


def check_pair_recovery(scale="small", trials=5, seed=7):
    def run():
        rng = random.Random(seed)
        for p, r, s in PAIR_CASES:
            for _ in range(trials):
                err = pair_recovery_case(p, r, s, rng)
                if err:
                    return False, f"(p,r,s)=({p},{r},{s}): {err}"
        return True, f"{trials} trials each for (p,r,s) in {list(PAIR_CASES)}"
    return _timed(5, "pair-decomposition recovery", 60, run)


def constant_age_codes_f3_8():
    """All 2-dim codes in F_3^8 of constant age 9 with no zero coordinate.

    Brute force over generator matrices in reduced row echelon form.
    """
    p, n, target = 3, 8, 9
    good_rows = [v for v in itertools.product(range(p), repeat=n)
                 if any(v) and C.age(v, p) == target]
    found = set()
    for u in good_rows:
        lead = next(i for i, x in enumerate(u) if x)
        if u[lead] != 1:
            continue
        for v in good_rows:
            lead_v = next(i for i, x in enumerate(v) if x)
            if lead_v <= lead or v[lead_v] != 1 or u[lead_v] != 0:
                continue
            if any(a == 0 and b == 0 for a, b in zip(u, v)):
                continue
            ok = all(C.age(tuple((a * x + b * y) % p for x, y in zip(u, v)), p) == target
                     for a in range(p) for b in range(p) if (a, b) != (0, 0))
            if ok:
                found.add((u, v))
    return sorted(found)


def _pair_family_f3_8():
    # row spaces of all column orders of the 8 nonzero vectors of F_3^2
    cols = [v for v in itertools.product(range(3), repeat=2) if any(v)]
    out = set()
    for perm in itertools.permutations(cols):
        basis, _ = modp.rref([tuple(c[i] for c in perm) for i in range(2)], 3)
        out.add(tuple(map(tuple, basis)))
    return out


def check_exhaustive(scale="small"):
    def run():
        found = constant_age_codes_f3_8()
        for rows in found:
            dec = C.pair_decompose(C.LinearCode(3, rows))
            if dec.s != 1 or dec.unpaired:
                return False, f"{rows} gives {dec.s} pairs, unpaired {dec.unpaired}"
        family = _pair_family_f3_8()
        if family != set(found):
            return False, f"brute force found {len(found)} codes, pair family has {len(family)}"
        return True, f"{len(found)} codes, each (A1, -A1); equal to the pair family"
    return _timed(6, "F_3^8 exhaustive oracle", 600, run)


def check_bridge(scale="small"):
    def run():
        a1 = ((1, 0, 1, 1), (0, 1, 1, 2))
        code = C.pair_construct([a1], 3)
        s = C.simplex_of_code(code)
        h = hstar(s)
        if s.dim != 7 or s.volume != 9 or h.coeffs != (1, 0, 0, 8, 0, 0, 0, 0):
            return False, f"dim {s.dim}, volume {s.volume}, h* = {h}"
        if is_pyramid(lambda_of(s)):
            return False, "simplex is a pyramid"
        p, back, k = C.code_of_simplex(s)
        if (p, k, back.r) != (3, 3, 2):
            return False, f"code_of_simplex gave p={p}, k={k}, r={back.r}"
        if C.equivalence_witness(code, back) is None:
            return False, "returned code is not monomially equivalent"
        return True, f"7-simplex, volume 9, h* = {h}, p=3 k=3 r=2, equivalent code"
    return _timed(7, "simplex/code bridge", 10, run)


def check_degree_bound(corpus, scale="small"):
    def run():
        seen = 0
        for i, s in enumerate(corpus):
            h = hstar(s)
            if h.is_binomial and h.degree > 1:
                seen += 1
                if 2 * h.degree > s.dim + 1:
                    return False, f"simplex {i}: degree {h.degree}, d = {s.dim}"
        return seen > 0, f"{seen} binomials of degree > 1, all with k <= (d+1)/2"
    return _timed(8, "binomial degree bound", 120, run)


def sweep_fields(scale="small"):
    qs = [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2), (3, 3), (7, 2)]
    if scale == "full":
        qs.append((3, 4))
    return qs


def check_nonvanishing(scale="small"):
    def run():
        zeros, counted = [], 0
        for p, r in sweep_fields(scale):
            rep = nonvanishing_sweep(make_field(p, r))
            zeros.extend((p**r, j) for j in rep.odd_zeros)
            counted += sum(c.odd for c in rep.characters)
        qs = [p**r for p, r in sweep_fields(scale)]
        return not zeros, f"q in {qs}: {counted} odd characters, zeros {zeros}"
    return _timed(9, "Bernoulli non-vanishing", 60, run)


def check_trace_pairs(scale="small"):
    def run():
        checked = 0
        for p, r in ((3, 2), (5, 2), (3, 3)):
            f = make_field(p, r)
            for c in f.elements()[1:]:
                got = trace_pair_sum(f, c)
                if got != trace_pair_prediction(f, c):
                    return False, f"q={f.q} c={c}: {got}"
                if not f.in_prime_field(c) and got != 0:
                    return False, f"q={f.q} c={c} outside F_p gives {got}"
                checked += 1
        return True, f"{checked} nonzero c over q in [9, 25, 27]"
    return _timed(10, "trace-pair sums", 60, run)


def check_norm_identity(scale="small"):
    def run():
        checked = 0
        for p, r in ((3, 2), (5, 2), (3, 3), (7, 2)):
            f = make_field(p, r)
            for j in range(1, f.q - 1, 2):
                if not norm_identity_check(f, j):
                    return False, f"q={f.q} j={j}"
                checked += 1
        return True, f"{checked} odd characters over q in [9, 25, 27, 49]"
    return _timed(11, "norm identity", 60, run)


def cayley_instances(k):
    """Cayley simplices of ``k`` primitive segments with entries in ``0..2``."""
    vecs = [v for v in itertools.product(range(3), repeat=k)
            if math.gcd(*v) == 1]
    for segs in itertools.combinations(vecs, k):
        try:
            yield cayley_empty_segments(segs)
        except DegenerateSimplex:
            continue


def check_families(scale="small"):
    def run():
        count = 0
        for n in range(1, 5):
            for hs in itertools.product(range(4), repeat=n):
                if not any(hs):
                    continue
                h = hstar_ehrhart(lawrence_prism(hs))
                if h.degree > 1:
                    return False, f"lawrence_prism{hs}: h* = {h}"
                count += 1
        for n in range(2, 5):
            h = hstar(exceptional_simplex(n))
            if h.degree > 1:
                return False, f"exceptional_simplex({n}): h* = {h}"
            count += 1
        parts, wrong = [], []
        for k in (2, 3):
            total = good = 0
            for s in cayley_instances(k):
                if is_geometric_pyramid(s) or is_pyramid(lambda_of(s)):
                    continue
                h = hstar_from_lambda(lambda_of(s))
                total += 1
                if h.is_binomial and h.degree == k:
                    good += 1
                else:
                    wrong.append((k, s.vertices, str(h)))
            parts.append(f"k={k}: {good}/{total} non-pyramid Cayley simplices binomial of degree k")
        detail = f"{count} prism/exceptional instances ok; " + "; ".join(parts)
        if wrong:
            k, verts, h = wrong[0]
            detail += f"; e.g. k={k} vertices {verts} has h* = {h}"
        return not wrong, detail
    return _timed(12, "named families", 60, run)


def run_all(scale="small"):
    corpus = simplex_corpus()
    return [
        check_example(scale),
        check_two_algorithms(corpus, scale),
        check_round_trip(corpus, scale),
        check_simplex_weights(scale),
        check_pair_recovery(scale),
        check_exhaustive(scale),
        check_bridge(scale),
        check_degree_bound(corpus, scale),
        check_nonvanishing(scale),
        check_trace_pairs(scale),
        check_norm_identity(scale),
        check_families(scale),
    ]
