"""Command-line interface: ``hstarcodes <subcommand> ...``.

Exit codes: 0 success, 1 domain error, 2 resource limit, 64 usage error.
Errors are written to stderr as ``{"error": {...}}``.
"""

import argparse
import json
import sys

from . import codes as C
from . import io
from .bernoulli import nonvanishing_sweep
from .config import load_caps, parse_caps
from .errors import HStarError, ResourceLimit
from .finitefield import make_field
from .groups import hstar_from_lambda, lambda_of, simplex_of
from .lattice import LatticeSimplex, hstar, hstar_ehrhart
from .verify import run_all

EXIT_OK, EXIT_DOMAIN, EXIT_LIMIT, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _read_text(path):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise HStarError(f"cannot read {path}: {exc.strerror}", "input file is readable")


def _read_json(path):
    try:
        return json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise HStarError(f"{path} is not valid JSON: {exc}", "input file holds JSON")


# -- subcommands: each returns (json payload, text rendering, exit code) ----

def cmd_hstar(args, caps):
    poly = io.polytope_from_json(_read_json(args.file))
    ehr = hstar_ehrhart(poly, caps)
    if isinstance(poly, LatticeSimplex):
        par = hstar(poly, caps)
        agree = par.coeffs == ehr.coeffs
        coeffs, par_coeffs = par.coeffs, list(par.coeffs)
    else:
        agree, coeffs, par_coeffs = None, ehr.coeffs, None
    payload = {
        "coeffs": [io.enc_int(c) for c in coeffs],
        "parallelepiped": par_coeffs,
        "ehrhart": list(ehr.coeffs),
        "agreement": agree,
        "volume": io.enc_int(ehr(1)),
    }
    text = f"h* = {ehr}\nvolume = {ehr(1)}\nagreement = {agree}"
    return payload, text, EXIT_OK


def cmd_lambda(args, caps):
    s = io.polytope_from_json(_read_json(args.file))
    if not isinstance(s, LatticeSimplex):
        raise HStarError("lambda needs a simplex (dim + 1 vertices)", "input is a simplex")
    g = lambda_of(s, caps)
    payload = io.group_to_json(g)
    payload["order"] = len(g)
    text = "\n".join(" ".join(str(c) for c in x) for x in g.elements)
    return payload, text, EXIT_OK


def cmd_simplex_from_group(args, caps):
    g = io.group_from_json(_read_json(args.file))
    s = simplex_of(g)
    payload = io.polytope_to_json(s)
    return payload, "\n".join(" ".join(map(str, v)) for v in s.vertices), EXIT_OK


def _code_text(code):
    return "\n".join(" ".join(map(str, row)) for row in code.generators)


def cmd_code_from_simplex(args, caps):
    s = io.polytope_from_json(_read_json(args.file))
    if not isinstance(s, LatticeSimplex):
        raise HStarError("code-from-simplex needs a simplex", "input is a simplex")
    p, code, k = C.code_of_simplex(s, caps)
    payload = {"p": p, "r": code.r, "k": k, "code": io.code_to_json(code)}
    text = f"p = {p}, r = {code.r}, k = {k}\n{_code_text(code)}"
    return payload, text, EXIT_OK


def cmd_simplex_from_code(args, caps):
    code = io.read_code(_read_text(args.file), args.p)
    s = C.simplex_of_code(code)
    h = hstar_from_lambda(lambda_of(s, caps))
    payload = io.polytope_to_json(s)
    payload["hstar"] = list(h.coeffs)
    text = "\n".join(" ".join(map(str, v)) for v in s.vertices) + f"\nh* = {h}"
    return payload, text, EXIT_OK


def cmd_simplex_code(args, caps):
    if args.r < 1:
        raise HStarError(f"r must be >= 1, got {args.r}", "r >= 1")
    code = C.simplex_code(args.p, args.r)
    return io.code_to_json(code), _code_text(code), EXIT_OK


def cmd_decompose(args, caps):
    code = io.read_code(_read_text(args.file), args.p)
    blocks = C.bonisoli_decompose(code, caps)
    payload = {"p": code.p, "r": code.r, "n": code.n, "bonisoli": [list(b) for b in blocks]}
    lines = [f"Bonisoli blocks: {len(blocks)}"]
    try:
        dec = C.pair_decompose(code, caps)
    except ResourceLimit:
        raise
    except HStarError as exc:
        payload["pair"] = {"error": exc.to_dict()}
        lines.append(f"pair decomposition: {exc}")
    else:
        payload["pair"] = io.pair_to_json(dec)
        lines.append(f"pair decomposition: s = {dec.s}, age = {dec.age}")
        if dec.p2_unpaired:
            lines.append("one block left unpaired (p = 2)")
    return payload, "\n".join(lines), EXIT_OK


def cmd_param_check(args, caps):
    holds = C.param_check(args.p, args.r, args.k, args.d)
    payload = {"p": args.p, "r": args.r, "k": args.k, "d": args.d, "holds": holds,
               "replication": C.replication_count(args.p, args.r, args.d) if args.r >= 1 else None}
    return payload, "true" if holds else "false", EXIT_OK


def cmd_bernoulli_sweep(args, caps):
    report = nonvanishing_sweep(make_field(args.p, args.r), caps)
    payload = io.sweep_to_json(report)
    payload["odd_zeros"] = report.odd_zeros
    lines = [f"F_{report.field.q}: modulus {list(report.field.modulus)}, "
             f"generator {list(report.field.generator)}"]
    for c in report.characters:
        lines.append(f"j={c.j} odd={c.odd} |B|^2 = {c.norm_square}")
    lines.append(f"odd characters with B = 0: {report.odd_zeros}")
    return payload, "\n".join(lines), EXIT_OK


def cmd_verify_all(args, caps):
    results = run_all(args.scale)
    ok = all(r.passed for r in results)
    # timings stay out of JSON so repeated runs are byte-identical
    payload = {
        "scale": args.scale,
        "passed": ok,
        "results": [{"criterion": r.number, "name": r.name, "passed": r.passed,
                     "limit_seconds": r.limit, "detail": r.detail} for r in results],
    }
    text = "\n".join(r.line() for r in results)
    return payload, text, EXIT_OK if ok else EXIT_DOMAIN


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--output", "-o", help="write the result here instead of stdout")
    common.add_argument("--caps", help='JSON overrides for resource caps, e.g. \'{"volume": 5000}\'')

    parser = _Parser(prog="hstarcodes", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text, parents=[common])
        sp.set_defaults(func=fn)
        return sp

    add("hstar", cmd_hstar, "h* by both algorithms").add_argument("file")
    add("lambda", cmd_lambda, "the group of a simplex").add_argument("file")
    add("simplex-from-group", cmd_simplex_from_group, "simplex of a group").add_argument("file")
    add("code-from-simplex", cmd_code_from_simplex, "code of a binomial simplex").add_argument("file")
    sp = add("simplex-from-code", cmd_simplex_from_code, "simplex of a linear code")
    sp.add_argument("--p", type=int)
    sp.add_argument("file")
    sp = add("simplex-code", cmd_simplex_code, "generator matrix of a simplex code")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp = add("decompose", cmd_decompose, "Bonisoli and pair decompositions")
    sp.add_argument("--p", type=int)
    sp.add_argument("file")
    sp = add("param-check", cmd_param_check, "the arithmetic condition on (p, r, k, d)")
    for name in ("--p", "--r", "--k", "--d"):
        sp.add_argument(name, type=int, required=True)
    sp = add("bernoulli-sweep", cmd_bernoulli_sweep, "B_1,chi for every character of F_q^*")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    add("verify-all", cmd_verify_all, "run the acceptance suites").add_argument(
        "--scale", choices=("small", "full"), default="small")
    return parser


def _emit(args, payload, text):
    out = json.dumps(payload, sort_keys=True) if args.format == "json" else text
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _fail(exc, code):
    print(json.dumps({"error": exc.to_dict()}, sort_keys=True), file=sys.stderr)
    return code


def run(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        caps = load_caps()
        if args.caps:
            caps = parse_caps(args.caps, caps, "--caps")
        payload, text, code = args.func(args, caps)
        _emit(args, payload, text)
        return code
    except ResourceLimit as exc:
        return _fail(exc, EXIT_LIMIT)
    except HStarError as exc:
        return _fail(exc, EXIT_DOMAIN)


def main():
    sys.exit(run())
