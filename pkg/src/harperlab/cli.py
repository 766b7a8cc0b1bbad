"""Command line front end.

Exit codes: 0 when the property holds, 1 when it is violated (a witness is
written), 2 for usage, parse and infeasibility errors.
"""

from __future__ import annotations

import argparse
import inspect
import sys

from .classifier import enumerate_extremal
from .constructions import ConstructionSpec, construct
from .errors import HarperLabError
from .extremality import ExtremalityReport, extremality_report
from .isomorphism import check_isomorphism
from .serialization import RunReport, Timer, dumps, emit_family, read_family, to_csv
from .statements import STATEMENTS, verify_statement

OK, VIOLATED, USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser):
    p.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
    p.add_argument("--format", choices=("json", "csv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="harperlab", description="Exact checks for extremal sets in the hypercube.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="build a named family")
    p.add_argument("kind", help="initial_segment, G, C, B (br), A_i (ai), prop10, punctured_ball, two_ball_union")
    for flag in ("n", "r", "k", "i", "s", "size", "x", "y"):
        p.add_argument(f"--{flag}", type=int)
    _common(p)

    p = sub.add_parser("check", help="extremality report for a family document")
    p.add_argument("family", help="family document path, or - for stdin")
    p.add_argument("--t", type=int, help="only report t = 1..T")
    p.add_argument("--weak", action="store_true", help="judge by t = 1 only")
    _common(p)

    p = sub.add_parser("enumerate", help="isomorphism classes of extremal families")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--size", type=int)
    p.add_argument("--k", type=int, help="same as --size")
    p.add_argument("--mode", choices=("full", "sandwich"), default="full")
    p.add_argument("--weak", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    _common(p)

    p = sub.add_parser("verify", help="run one statement verifier")
    p.add_argument("statement", choices=sorted(STATEMENTS))
    for flag in ("n", "r", "k", "s"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--mode", choices=("full", "sandwich"))
    p.add_argument("--threads", type=int)
    _common(p)

    p = sub.add_parser("iso", help="are two family documents isomorphic")
    p.add_argument("a")
    p.add_argument("b")
    _common(p)
    return parser


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _construct(args, argv) -> tuple[int, object, list[dict]]:
    params = {f: getattr(args, f) for f in ("n", "r", "k", "i", "s", "size", "x", "y")}
    spec = ConstructionSpec(args.kind, **params)
    A = construct(spec)
    label = spec.kind + "(" + ",".join(f"{k}={v}" for k, v in spec.parameters().items()) + ")"
    rows = [{"mask": v, "coordinates": " ".join(map(str, _coords(v)))} for v in A.vertices()]
    return OK, emit_family(A, label), rows


def _coords(v: int) -> list[int]:
    return [b + 1 for b in range(v.bit_length()) if v >> b & 1]


def _check(args, argv):
    A = read_family(args.family)
    with Timer() as clock:
        rep = extremality_report(A)
        if args.t is not None:
            if args.t < 1:
                raise _UsageError("--t must be positive")
            rep = ExtremalityReport(rep.n, rep.size, rep.records[: args.t])
    ok = rep.weak_extremal if args.weak else rep.strong_extremal
    failure = rep.first_failure()
    verdict = {"property": "weak_extremal" if args.weak else "strong_extremal", "holds": ok,
               "first_failure": None if failure is None else {"t": failure[0], "side": failure[1]}}
    report = RunReport(argv, {"family": args.family, "t": args.t, "weak": args.weak}, [verdict],
                       [] if ok else [emit_family(A)], rep.to_dict(), clock.seconds)
    rows = [rec.to_dict() for rec in rep.records]
    return (OK if ok else VIOLATED), report.to_dict(), rows


def _enumerate(args, argv):
    size = args.size if args.size is not None else args.k
    if size is None:
        raise _UsageError("enumerate needs --size")
    with Timer() as clock:
        res = enumerate_extremal(args.n, size, args.mode, weak=args.weak, threads=args.threads)
    ok = args.weak or res.theorem2_verified
    witnesses = [emit_family(rep) for rep in res.unmatched] + [emit_family(p.family, p.label) for p in res.missing]
    verdict = {"property": "classes match the A_i construction", "holds": ok} if not args.weak else \
        {"property": "weak classes listed", "holds": True}
    report = RunReport(argv, {"n": args.n, "size": size, "mode": args.mode, "weak": args.weak,
                              "threads": args.threads}, [verdict], witnesses, res.to_dict(), clock.seconds)
    rows = [{"class": idx, "matched": label, "size": len(rep), "vertices": " ".join(map(str, rep.vertices()))}
            for idx, (rep, label) in enumerate(zip(res.representatives, res.matched))]
    return (OK if ok else VIOLATED), report.to_dict(), rows


def _verify(args, argv):
    fn = STATEMENTS[args.statement]
    accepted = set(inspect.signature(fn).parameters)
    params = {f: getattr(args, f) for f in ("n", "r", "k", "s", "mode", "threads") if getattr(args, f) is not None}
    unknown = sorted(set(params) - accepted)
    if unknown:
        raise _UsageError(f"{args.statement} does not take: {', '.join('--' + u for u in unknown)}")
    missing = [name for name, p in inspect.signature(fn).parameters.items()
               if p.default is inspect.Parameter.empty and name not in params]
    if missing:
        raise _UsageError(f"{args.statement} needs: {', '.join('--' + m for m in missing)}")
    with Timer() as clock:
        verdict = verify_statement(args.statement, **params)
    body = verdict.to_dict()
    report = RunReport(argv, params, [body], [] if verdict.witness is None else [body["witness"]], None, clock.seconds)
    rows = [{"statement": verdict.statement, "holds": verdict.holds, "detail": verdict.detail}]
    return (OK if verdict.holds else VIOLATED), report.to_dict(), rows


def _iso(args, argv):
    A, B = read_family(args.a), read_family(args.b)
    with Timer() as clock:
        res = check_isomorphism(A, B)
    if not res.exact:
        raise HarperLabError("isomorphism search exhausted its budget without a decision")
    body = {"property": "isomorphic", "holds": res.isomorphic, "method": res.method,
            "witness_map": None if res.witness is None else {"perm": list(res.witness.perm),
                                                               "shift": res.witness.shift}}
    report = RunReport(argv, {"a": args.a, "b": args.b}, [body],
                       [] if res.isomorphic else [emit_family(A), emit_family(B)], None, clock.seconds)
    rows = [{"a": args.a, "b": args.b, "isomorphic": res.isomorphic, "method": res.method}]
    return (OK if res.isomorphic else VIOLATED), report.to_dict(), rows


_COMMANDS = {"construct": _construct, "check": _check, "enumerate": _enumerate, "verify": _verify, "iso": _iso}


def run(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        code, doc, rows = _COMMANDS[args.command](args, argv)
    except _UsageError as exc:
        print(f"harperlab: usage error: {exc}", file=sys.stderr)
        return USAGE
    except (HarperLabError, ValueError) as exc:
        print(f"harperlab: error: {exc}", file=sys.stderr)
        return USAGE
    except SystemExit as exc:  # --help
        return OK if exc.code in (0, None) else USAGE
    _emit(to_csv(rows) if args.format == "csv" else dumps(doc), args.out)
    return code


def main() -> None:
    sys.exit(run())


__all__ = ["build_parser", "main", "run"]
