"""Command-line interface.  Results go to stdout as JSON, diagnostics to stderr."""

from __future__ import annotations

import argparse
import json
import sys

from . import complexity as cx
from .errors import SammyError
from .fincat import FinCat, validate_category
from .iso import automorphisms, entropy, equivalent, isomorphic
from .lang.interp import run
from .lang.ops import Limits
from .lang.parser import parse
from .serialize import dumps, loads, to_obj

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_VIOLATIONS = 10


class _IOFailure(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise _IOFailure(f"{path}: {e.strerror or e}") from None


def _load_value(path: str):
    return loads(_read(path))


def _load_cat(path: str) -> FinCat:
    c = _load_value(path)
    if not isinstance(c, FinCat):
        raise SammyError(f"{path}: expected a category")
    bad = validate_category(c)
    if bad:
        raise SammyError(f"{path}: not a category ({bad[0].law} at {bad[0].witness})")
    return c


def _bindings(pairs) -> dict:
    env = {}
    for item in pairs or ():
        name, sep, path = item.partition("=")
        if not sep or not name:
            raise _Usage(f"expected NAME=PATH, got {item!r}")
        env[name] = _load_value(path)
    return env


class _Usage(Exception):
    pass


def _emit(obj):
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _budget(args) -> cx.Budget:
    return cx.Budget(max_len=args.max_len, max_objects=args.max_objects,
                     max_morphisms=args.max_morphisms, max_states=args.max_states,
                     deadline=args.deadline)


# -- commands ------------------------------------------------------------------------

def cmd_run(args):
    program = parse(_read(args.program))
    env = _bindings(args.input)
    limits = Limits(max_steps=args.max_steps,
                    max_objects=args.max_objects if args.max_objects_set else Limits.max_objects,
                    max_morphisms=args.max_morphisms if args.max_morphisms_set else Limits.max_morphisms)
    value = run(program, env, limits)
    sys.stdout.write(dumps(value, indent=2) + "\n")
    return EXIT_OK


def cmd_check(args):
    c = _load_value(args.category)
    if not isinstance(c, FinCat):
        raise SammyError("check expects a category")
    bad = validate_category(c)
    _emit({"valid": not bad, "violations": [{"law": v.law, "witness": list(v.witness)} for v in bad]})
    return EXIT_VIOLATIONS if bad else EXIT_OK


def cmd_iso(args):
    a, b = _load_cat(args.a), _load_cat(args.b)
    f = isomorphic(a, b)
    _emit({"isomorphic": f is not None, "functor": None if f is None else to_obj(f)})
    return EXIT_OK


def cmd_equiv(args):
    _emit({"equivalent": equivalent(_load_cat(args.a), _load_cat(args.b))})
    return EXIT_OK


def cmd_skeleton(args):
    from .constructions import skeleton
    s, _ = skeleton(_load_cat(args.category))
    sys.stdout.write(dumps(s, indent=2) + "\n")
    return EXIT_OK


def cmd_entropy(args):
    c = _load_cat(args.category)
    _emit({"automorphisms": automorphisms(c), "entropy": entropy(c)})
    return EXIT_OK


_REPORT_COLUMNS = ["target", "k", "exact", "mode", "witness_lines"]


def _print_report(report: cx.ComplexityReport, as_json: bool):
    if as_json:
        sys.stdout.write(cx.report_json(report) + "\n")
        return
    row = report.to_json()
    row["witness_lines"] = "" if report.witness is None else len(report.witness.splitlines())
    sys.stdout.write(cx.format_table([row], _REPORT_COLUMNS))
    if report.witness:
        sys.stdout.write("\n" + report.witness)
    sys.stdout.write(f"\n{report.note}\n")


def cmd_search(args):
    target = _load_value(args.target)
    given = _bindings(args.given)
    try:
        report = cx.k_search(target, given, args.mode, _budget(args), args.workers)
    except SammyError as e:
        if getattr(e, "report", None) is not None:
            _print_report(e.report, args.json)
        raise
    _print_report(report, args.json)
    return EXIT_OK


def _suite_from_file(path):
    data = json.loads(_read(path))
    base = cx.default_suite()
    suite = {k: data.get(k, base[k]) for k in base}
    if "cats" in data:
        suite["cats"] = {k: loads(json.dumps(v)) for k, v in data["cats"].items()}
    if "functors" in data:
        suite["functors"] = {k: loads(json.dumps(v)) for k, v in data["functors"].items()}
    return suite


def cmd_theorems(args):
    suite = _suite_from_file(args.suite) if args.suite else None
    res = cx.theorem_constants(suite, _budget(args), args.mode, args.workers)
    if args.json:
        _emit(res)
    else:
        out = sys.stdout
        out.write(cx.format_table([{"macro": k, "length": v} for k, v in res["constants"].items()],
                                  ["macro", "length"]))
        out.write("\n")
        out.write(cx.format_table(res["rows"], ["theorem", "instance", "lhs", "rhs_terms",
                                                "constant", "rhs", "status", "exact"]))
        out.write("\n")
        out.write(cx.format_table(res["degenerate"], ["instance", "k_product", "k_zero", "status"]))
        out.write(f"\n{res['note']}\n")
    return EXIT_OK


# -- parser --------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_USAGE)


def _positive(text):
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    d = cx.Budget()
    common.add_argument("--max-steps", type=_positive, default=Limits.max_steps)
    common.add_argument("--max-objects", type=_positive, default=None)
    common.add_argument("--max-morphisms", type=_positive, default=None)
    common.add_argument("--max-states", type=_positive, default=d.max_states)
    common.add_argument("--max-len", type=_nonneg, default=d.max_len)
    common.add_argument("--mode", choices=("iso", "eq"), default="iso")
    common.add_argument("--json", action="store_true", help="JSON instead of a text table")
    common.add_argument("--workers", type=_positive, default=1)
    common.add_argument("--deadline", type=float, default=None, help="seconds per search")

    p = _Parser(prog="sammycat", description="Finite categories, the Sammy language and "
                "bounded program-size search.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("run", parents=[common], help="run a .sam program")
    s.add_argument("program")
    s.add_argument("--input", action="append", metavar="NAME=PATH")
    s.set_defaults(func=cmd_run)

    s = sub.add_parser("check", parents=[common], help="validate a category table")
    s.add_argument("category")
    s.set_defaults(func=cmd_check)

    for name, func, helptext in (("iso", cmd_iso, "isomorphism test"),
                                 ("equiv", cmd_equiv, "equivalence test")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("a")
        s.add_argument("b")
        s.set_defaults(func=func)

    s = sub.add_parser("skeleton", parents=[common], help="skeleton of a category")
    s.add_argument("category")
    s.set_defaults(func=cmd_skeleton)

    s = sub.add_parser("entropy", parents=[common], help="automorphism count and entropy")
    s.add_argument("category")
    s.set_defaults(func=cmd_entropy)

    s = sub.add_parser("search", parents=[common], help="shortest straight-line program")
    s.add_argument("target")
    s.add_argument("--given", action="append", metavar="NAME=PATH")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("theorems", parents=[common], help="measured inequality rows")
    s.add_argument("suite", nargs="?")
    s.set_defaults(func=cmd_theorems)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.max_objects_set = args.max_objects is not None
    args.max_morphisms_set = args.max_morphisms is not None
    d = cx.Budget()
    if args.max_objects is None:
        args.max_objects = d.max_objects
    if args.max_morphisms is None:
        args.max_morphisms = d.max_morphisms
    try:
        return args.func(args)
    except _Usage as e:
        sys.stderr.write(f"usage error: {e}\n")
        return EXIT_USAGE
    except _IOFailure as e:
        sys.stderr.write(f"IOError: {e}\n")
        return EXIT_IO
    except SammyError as e:
        sys.stderr.write(f"{type(e).__name__}: {e}\n")
        return e.code


if __name__ == "__main__":
    sys.exit(main())
