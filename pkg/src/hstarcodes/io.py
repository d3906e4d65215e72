"""JSON (and plain-text) interchange formats.

Integers beyond the signed 64-bit range are written as decimal strings and
accepted either way on input.
"""

import json
from fractions import Fraction

from .codes import LinearCode
from .errors import HStarError
from .groups import TorusSubgroup
from .lattice import LatticePolytope, LatticeSimplex

_INT64 = 2**63


def enc_int(n):
    n = int(n)
    return n if -_INT64 <= n < _INT64 else str(n)


def dec_int(x):
    if isinstance(x, bool):
        raise HStarError(f"expected an integer, got {x!r}", "integer field")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x.strip())
        except ValueError:
            pass
    raise HStarError(f"expected an integer, got {x!r}", "integer field")


def _require(obj, *keys):
    if not isinstance(obj, dict):
        raise HStarError("expected a JSON object", "file holds a JSON object")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise HStarError(f"missing keys {missing}", f"object has keys {list(keys)}")


def polytope_to_json(p):
    return {"dim": p.dim, "vertices": [[enc_int(x) for x in v] for v in p.vertices]}


def polytope_from_json(obj):
    """A :class:`LatticeSimplex` when there are ``dim + 1`` points, else a polytope."""
    _require(obj, "dim", "vertices")
    dim = dec_int(obj["dim"])
    vertices = [[dec_int(x) for x in v] for v in obj["vertices"]]
    if any(len(v) != dim for v in vertices):
        raise HStarError(f"vertices must have length dim = {dim}", "vertex length equals dim")
    if len(vertices) == dim + 1:
        return LatticeSimplex(vertices)
    return LatticePolytope(vertices)


def hstar_to_json(h):
    return {"coeffs": [enc_int(c) for c in h.coeffs]}


def group_to_json(g):
    return {"ambient": g.ambient, "elements": [[str(c) for c in x] for x in g.elements]}


def group_from_json(obj):
    _require(obj, "ambient", "elements")
    try:
        elements = [[Fraction(str(c)) for c in x] for x in obj["elements"]]
    except (ValueError, ZeroDivisionError) as exc:
        raise HStarError(f"bad fraction in group file: {exc}", "elements are fraction strings")
    return TorusSubgroup(dec_int(obj["ambient"]), elements)


def code_to_json(c):
    return {"p": c.p, "n": c.n, "generators": [list(row) for row in c.generators]}


def code_from_json(obj, p=None):
    _require(obj, "generators")
    if "p" not in obj and p is None:
        raise HStarError("code file has no p; pass --p", "p is known")
    file_p = dec_int(obj["p"]) if "p" in obj else p
    if p is not None and p != file_p:
        raise HStarError(f"--p {p} disagrees with file p = {file_p}", "consistent p")
    rows = [[dec_int(x) for x in row] for row in obj["generators"]]
    if "n" in obj and any(len(row) != dec_int(obj["n"]) for row in rows):
        raise HStarError("generator rows do not have length n", "rows of length n")
    if any(not 0 <= x < file_p for row in rows for x in row):
        raise HStarError(f"entries must lie in 0..{file_p - 1}", "entries reduced mod p")
    return LinearCode(file_p, rows)


def code_from_text(text, p):
    """Space-separated matrix rows, one per line; blank and ``#`` lines ignored."""
    if p is None:
        raise HStarError("plain-text code needs --p", "p is known")
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append([dec_int(x) for x in line.split()])
    return code_from_json({"p": p, "generators": rows}, p)


def read_code(text, p=None):
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return code_from_json(json.loads(text), p)
    return code_from_text(text, p)


def transform_to_json(f):
    return {"sigma": list(f.sigma), "tau": list(f.tau)}


def pair_to_json(dec):
    return {
        "s": dec.s,
        "age": dec.age,
        "pairs": [{"A": list(a), "minus_A": list(b)} for a, b in dec.pairs],
        "p2_unpaired": dec.p2_unpaired,
        "unpaired": [list(b) for b in dec.unpaired],
        "transform": transform_to_json(dec.transform),
    }


def _cyclo_to_json(z):
    q = z.as_rational()
    return str(q) if q is not None else [str(c) for c in z.coeffs]


def sweep_to_json(report):
    f = report.field
    return {
        "p": f.p,
        "r": f.r,
        "modulus": list(f.modulus),
        "generator": list(f.generator),
        "characters": [
            {
                "j": c.j,
                "odd": c.odd,
                "is_zero": c.is_zero,
                "norm_square": _cyclo_to_json(c.norm_square),
                "value": _cyclo_to_json(c.value),
            }
            for c in report.characters
        ],
    }
