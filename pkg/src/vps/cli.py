"""Command-line front end.

Exit status: 0 success, 1 computation error, 2 usage error, 3 failed check.
With ``--json`` every command prints ``{"schema": 1, "command": ..., "result": ...}``
where all numbers are decimal strings.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import List, Sequence

from .apolarity import QuadraticForm, perp_space, scheme_from_json, vector_str
from .chart import chart_system, loc_equations, sec_equations, vero_equations
from .errors import ParseError, VpsError, WrongDimension
from .intersection import degree_terms
from .modp import AffineSystem, count_points, jacobian_rank
from .mukai import eigensimplex, tau_image
from .poly import Polynomial, Ring, infer_ring, parse, render
from .resolution import GradedQuotient, betti_numbers, expected_table
from .scalars import fraction_str
from .spinor import spinor_check
from .verify import DEFAULT_SUITES, SUITES, run_suites

SCHEMA = 1
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_CHECK = 3


class Output:
    def __init__(self, command: str, as_json: bool):
        self.command = command
        self.as_json = as_json
        self.lines: List[str] = []

    def line(self, text: str = ""):
        self.lines.append(text)

    def flush(self, result) -> None:
        if self.as_json:
            envelope = {"schema": SCHEMA, "command": self.command, "result": result}
            sys.stdout.write(json.dumps(envelope, indent=2, sort_keys=True) + "\n")
        else:
            sys.stdout.write("".join(line + "\n" for line in self.lines))


# -- input files ---------------------------------------------------------------

def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _statements(text: str) -> List[str]:
    """Non-empty lines with ``#`` comments removed; a trailing comma or semicolon is ignored."""
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip().rstrip(",;").strip()
        if line:
            out.append(line)
    return out


def _letter(texts: Sequence[str]) -> str:
    letters = {m.group(1) for t in texts for m in re.finditer(r"([xy])\d", t)}
    if len(letters) > 1:
        raise ParseError("mixes x and y variables", 0)
    return letters.pop() if letters else "x"


def read_polys(path: str, nvars: int | None = None, letter: str | None = None) -> List[Polynomial]:
    """Polynomials from a text file (one per line) or a scheme JSON file."""
    text = _read(path)
    if text.lstrip().startswith("{"):
        return scheme_from_json(text).basis
    lines = _statements(text)
    letter = letter or _letter(lines)
    ring = Ring(tuple(f"{letter}{i}" for i in range(1, nvars + 1))) if nvars else infer_ring(lines, letter)
    return [parse(t, ring) for t in lines]


def read_quadrics(*paths: str) -> List[QuadraticForm]:
    texts = [" ".join(_statements(_read(p))) for p in paths]
    letter = _letter(texts)
    ring = infer_ring(texts, letter)
    return [QuadraticForm.from_poly(parse(t, ring)) for t in texts]


def read_point(path: str) -> List[Fraction]:
    fields = [f for f in re.split(r"[\s,\[\]()]+", _read(path)) if f]
    try:
        return [Fraction(f) for f in fields]
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad point coordinate: {exc}", 0) from exc


# -- commands ------------------------------------------------------------------

def cmd_degree(args, out: Output) -> int:
    terms = degree_terms(args.n)
    total = sum(t.summand for t in terms)
    result = {"n": str(args.n), "degree": str(total)}
    if args.per_partition:
        result["partitions"] = [t.as_dict() for t in terms]
        for t in terms:
            d = t.as_dict()
            lam = ",".join(map(str, t.partition.parts))
            out.line(f"lambda=({lam}) multinomial={d['multinomial']} lambda_star_factorial={d['lambda_star_factorial']} "
                     f"d_lambda={d['d_lambda']} summand={d['summand']}")
        out.line(f"total={total}")
    else:
        out.line(str(total))
    out.flush(result)
    return 0


def cmd_chart(args, out: Output) -> int:
    n, kind = args.n, args.subvariety
    if kind == "aff":
        cs = chart_system(n)
        result = cs.equations_json()
        result = {**result, "n": str(n), "weights": [str(w) for w in result["weights"]]}
        gens = cs.generators
    else:
        gens = {"sec": sec_equations, "loc": loc_equations, "vero": vero_equations}[kind](n)
        result = {"n": str(n), "generators": [render(g) for g in gens]}
    result["subvariety"] = kind
    for g in gens:
        out.line(render(g))
    out.flush(result)
    return 0


def cmd_mukai(args, out: Output) -> int:
    q, q2 = read_quadrics(args.q, args.qprime)
    image = tau_image(q, q2)
    for g in image.basis:
        out.line(render(g))
    out.flush({"dimension": str(image.dim), "generators": [render(g) for g in image.basis]})
    return 0


def cmd_eigensimplex(args, out: Output) -> int:
    q, q2 = read_quadrics(args.q, args.qprime)
    result = eigensimplex(q, q2)
    data = {"representation": result.kind}
    out.line(f"representation {result.kind}")
    if result.kind == "points":
        data["points"] = [vector_str(p) for p in result.points]
        data["eigenvalues"] = [fraction_str(v) for v in result.eigenvalues]
        for lam, p in zip(result.eigenvalues, result.points):
            out.line(f"{fraction_str(lam)}: [{', '.join(vector_str(p))}]")
    data["generators"] = [render(g) for g in result.ideal.basis]
    for g in result.ideal.basis:
        out.line(render(g))
    out.flush(data)
    return 0


def cmd_betti(args, out: Output) -> int:
    if args.quadric:
        (q,) = read_quadrics(args.quadric)
        gens = perp_space(q).basis
    else:
        gens = read_polys(args.ideal, letter="x")
    if not gens:
        raise WrongDimension("the ideal has no generators")
    ring = gens[0].ring
    table = betti_numbers(GradedQuotient(ring, gens), args.steps, args.max_shift)
    nonzero = table.nonzero()
    result = {"table": {f"{i},{j}": str(v) for (i, j), v in nonzero.items()}}
    out.line(table.render())
    status = 0
    if args.expected:
        want = {k: v for k, v in expected_table(args.expected, ring.nvars).items()
                if k[0] <= args.steps and k[1] - k[0] <= args.max_shift}
        ok = nonzero == want
        result["expected"] = args.expected
        result["matches_expected"] = ok
        out.line(f"{'PASS' if ok else 'FAIL'} expected {args.expected}")
        status = 0 if ok else EXIT_CHECK
    out.flush(result)
    return status


def cmd_count(args, out: Output) -> int:
    polys = read_polys(args.ideal, nvars=args.vars)
    system = AffineSystem.from_polys(polys, args.prime, args.vars)
    n = count_points(system)
    out.line(str(n))
    out.flush({"prime": str(args.prime), "vars": str(args.vars), "points": str(n)})
    return 0


def cmd_jrank(args, out: Output) -> int:
    point = read_point(args.point)
    polys = read_polys(args.ideal, nvars=len(point))
    r = jacobian_rank(polys, point, args.prime)
    out.line(str(r))
    result = {"rank": str(r)}
    if args.prime:
        result["prime"] = str(args.prime)
    out.flush(result)
    return 0


def cmd_spinor_check(args, out: Output) -> int:
    report = spinor_check()
    for key, value in report.as_dict().items():
        if key != "quadrics":
            out.line(f"{key}: {str(value).lower()}")
    out.flush(report.as_dict())
    return 0 if report.ok else EXIT_CHECK


def cmd_verify(args, out: Output) -> int:
    names = [s.strip() for s in args.suite.split(",") if s.strip()] if args.suite else list(DEFAULT_SUITES)
    checks = run_suites(names, args.seed)
    passed = sum(c.ok for c in checks)
    out.line(f"seed {args.seed}")
    for c in checks:
        out.line(c.line())
    out.line(f"{passed}/{len(checks)} checks passed")
    out.flush({"seed": str(args.seed), "suites": names, "checks": [c.as_dict() for c in checks],
               "passed": str(passed), "total": str(len(checks))})
    return 0 if passed == len(checks) else EXIT_CHECK


# -- argument parsing ----------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _positive(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="vps", description="Polar simplices and apolar schemes of quadrics.", allow_abbrev=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, fn, help_text: str):
        p = sub.add_parser(name, help=help_text, description=help_text, allow_abbrev=False)
        p.set_defaults(run=fn)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("degree", cmd_degree, "degree of the variety of polar simplices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--per-partition", action="store_true", help="list every summand of the partition sum")

    p = add("chart", cmd_chart, "equations of the affine chart or one of its strata")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--subvariety", choices=("aff", "sec", "loc", "vero"), default="aff")

    for name, fn, text in (("mukai", cmd_mukai, "image of the trilinear form of a pencil"),
                           ("eigensimplex", cmd_eigensimplex, "common apolar scheme of a pencil")):
        p = add(name, fn, text)
        p.add_argument("--q", required=True, metavar="FILE", help="nondegenerate quadric")
        p.add_argument("--qprime", required=True, metavar="FILE", help="second quadric of the pencil")

    p = add("betti", cmd_betti, "graded Betti numbers of a quotient by quadrics")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--ideal", metavar="FILE", help="quadrics in x1..xn, one per line, or scheme JSON")
    src.add_argument("--quadric", metavar="FILE", help="use the apolar ideal of this quadric")
    p.add_argument("--steps", type=_positive, required=True)
    p.add_argument("--max-shift", type=_positive, default=2)
    p.add_argument("--expected", choices=("aq", "points"))

    p = add("count", cmd_count, "number of points over F_p")
    p.add_argument("--ideal", required=True, metavar="FILE")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--vars", type=_positive, required=True)

    p = add("jrank", cmd_jrank, "rank of the Jacobian matrix at a point")
    p.add_argument("--ideal", required=True, metavar="FILE")
    p.add_argument("--point", required=True, metavar="FILE")
    p.add_argument("--prime", type=int, help="work modulo this prime instead of over Q")

    add("spinor-check", cmd_spinor_check, "identify the n = 6 chart with the spinor variety")

    p = add("verify", cmd_verify, "run the verification suites")
    p.add_argument("--suite", help=f"comma-separated subset of: {', '.join(SUITES)}")
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = Output(args.command, args.json)
    try:
        return args.run(args, out)
    except VpsError as exc:
        sys.stderr.write(f"vps {args.command}: {type(exc).__name__}: {exc}\n")
        return EXIT_ERROR
    except OSError as exc:
        sys.stderr.write(f"vps {args.command}: {exc}\n")
        return EXIT_ERROR
    except (json.JSONDecodeError, KeyError) as exc:
        sys.stderr.write(f"vps {args.command}: malformed scheme file: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
