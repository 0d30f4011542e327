"""Command-line front end: ``blowup-positivity <command> ...``.

Exit codes: 0 certified / success, 1 not certified or unknown, 2 conditional,
3 invalid input or missing golden file.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import repro
from .criteria import CERTIFIERS, SCHEMA_VERSION, Outcome, Property, UniformBundle, certify, min_degree
from .interpolation import DEFAULT_PRIME, DEFAULT_TRIALS, InvalidPrime, _best_of
from .lattice import DivisorClass, parse_mults
from .weyl import (
    DEFAULT_DEGREE_CAP,
    NotApplicable,
    enumerate_exceptional_classes,
    exceptional_patterns,
    is_exceptional_class,
    reduce_to_fundamental,
)

EXIT_OK, EXIT_FAIL, EXIT_CONDITIONAL, EXIT_INVALID = 0, 1, 2, 3
SEED_ENV = "BLOWUP_POSITIVITY_SEED"

PROPERTIES = {"ample": Property.AMPLE, "gg": Property.GLOBALLY_GENERATED, "va": Property.VERY_AMPLE}
EXIT_FOR = {Outcome.CERTIFIED: EXIT_OK, Outcome.CONDITIONAL: EXIT_CONDITIONAL,
            Outcome.NOT_CERTIFIED: EXIT_FAIL, Outcome.NOT_APPLICABLE: EXIT_FAIL}


class UsageError(ValueError):
    pass


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}")


def parse_assignments(items: Sequence[str], keys: Sequence[str]) -> dict[str, int]:
    """``["d=170", "r=8", "m=60"]`` -> ``{"d": 170, "r": 8, "m": 60}``."""
    out = {}
    for item in items:
        key, sep, val = item.partition("=")
        if not sep or key not in keys:
            raise UsageError(f"expected one of {', '.join(k + '=N' for k in keys)}; got {item!r}")
        try:
            out[key] = int(val)
        except ValueError:
            raise UsageError(f"{key} must be an integer, got {val!r}")
    missing = [k for k in keys if k not in out]
    if missing:
        raise UsageError(f"missing {', '.join(missing)}")
    return out


def _emit(doc: dict) -> None:
    doc = {"schema": SCHEMA_VERSION, **doc}
    print(json.dumps(doc, indent=2))


def _class_arg(text: str) -> DivisorClass:
    try:
        return DivisorClass.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc))


# -- commands --------------------------------------------------------------


def cmd_check(args) -> int:
    if (args.cls is None) == (args.uniform is None):
        raise UsageError("give exactly one of a class string or --uniform d= r= m=")
    if args.uniform is not None:
        u = parse_assignments(args.uniform, ("d", "r", "m"))
        if u["r"] < 1:
            raise UsageError("r must be >= 1")
        target = UniformBundle(u["d"], u["r"], u["m"])
    else:
        target = _class_arg(args.cls)

    mode, permissive, conditional = args.mode, args.permissive, args.conditional
    if mode == "conditional":
        mode, conditional = "auto", True
    elif mode == "permissive":
        mode, permissive = "auto", True
    elif mode != "auto" and mode not in CERTIFIERS:
        raise UsageError(f"unknown mode {mode!r}; use auto, conditional, permissive or one of "
                         + ", ".join(CERTIFIERS))

    verdict = certify(PROPERTIES[args.property], target, mode=mode, permissive=permissive,
                      conditional=conditional, cap=args.cap)
    _emit(verdict.to_dict())
    return EXIT_FOR[verdict.outcome]


def cmd_reduce(args) -> int:
    A = _class_arg(args.cls)
    try:
        trace = reduce_to_fundamental(A)
    except NotApplicable as exc:
        raise UsageError(str(exc))
    _emit({"start": str(trace.start), "end": str(trace.end), "steps": list(trace.steps),
           "cremona_steps": trace.cremona_steps, "non_effective": trace.non_effective})
    return EXIT_OK


def cmd_exceptional(args) -> int:
    if (args.cls is None) == (args.enumerate is None):
        raise UsageError("give a class string or --enumerate r=N")
    if args.cls is not None:
        A = _class_arg(args.cls)
        ok, trace = is_exceptional_class(A)
        _emit({"class": str(A), "exceptional": ok,
               "steps": list(trace.steps) if trace else None,
               "end": str(trace.end) if trace else None})
        return EXIT_OK

    r = parse_assignments(args.enumerate, ("r",))["r"]
    if r < 1:
        raise UsageError("r must be >= 1")
    cap = args.cap if r >= 9 else None
    if args.patterns:
        classes = list(exceptional_patterns(r, cap)) if r >= 3 else enumerate_exceptional_classes(r, cap)
    else:
        classes = enumerate_exceptional_classes(r, cap)
    if args.json:
        _emit({"r": r, "max_degree": cap, "count": len(classes), "classes": [str(c) for c in classes]})
    else:
        print("\n".join(str(c) for c in classes))
    return EXIT_OK


def cmd_mindeg(args) -> int:
    if (args.mults is None) == (args.uniform is None):
        raise UsageError("give exactly one of --mults or --uniform r= m=")
    kw = {}
    if args.mults is not None:
        try:
            mults = parse_mults(args.mults)
        except ValueError:
            raise UsageError(f"malformed multiplicities {args.mults!r}")
        if not mults:
            raise UsageError("empty multiplicity list")
        kw["mults"] = mults
        uniform = len(set(mults)) == 1
    else:
        u = parse_assignments(args.uniform, ("r", "m"))
        kw.update(u)
        uniform = True

    if args.mode != "auto":
        criterion = args.mode
        if criterion not in CERTIFIERS:
            raise UsageError(f"unknown certifier {criterion!r}")
    else:
        criterion = {
            "ample": "ample_uniform" if uniform else "ample_general",
            "gg": "gg_uniform" if uniform else "gg_general",
            "va": "va_uniform",
        }[args.property]
    if criterion == "gg_general":
        kw["permissive"] = args.permissive
    try:
        d = min_degree(criterion, **kw)
    except ValueError as exc:
        raise UsageError(str(exc))
    _emit({"criterion": criterion, "property": PROPERTIES[args.property].value,
           **{k: list(v) if isinstance(v, tuple) else v for k, v in kw.items()}, "min_degree": d})
    return EXIT_OK


def cmd_dim(args) -> int:
    A = _class_arg(args.cls)
    seed = args.seed if args.seed is not None else default_seed()
    try:
        rep = _best_of(A, args.trials, args.prime, seed)
    except (InvalidPrime, ValueError) as exc:
        raise UsageError(str(exc))
    _emit({**rep.to_dict(), "trials": args.trials})
    return EXIT_OK


def cmd_repro(args) -> int:
    golden_dir = Path(args.golden_dir) if args.golden_dir else None
    try:
        cases = repro.select(args.only)
    except KeyError as exc:
        raise UsageError(exc.args[0])
    results = []
    for case in cases:
        try:
            results.append(repro.run_case(case, golden_dir))
        except repro.GoldenMissing as exc:
            print(f"golden file missing: {exc}", file=sys.stderr)
            return EXIT_INVALID
    if args.json:
        _emit({"cases": [r.to_dict() for r in results]})
    else:
        width = max(len(r.id) for r in results)
        for r in results:
            print(f"{r.id:<{width}}  {'PASS' if r.passed else 'FAIL'}")
            for d in r.diffs:
                print(f"    {d['key']}: expected {d['expected']!r}, got {d['got']!r}")
        print(f"{sum(r.passed for r in results)}/{len(results)} cases match")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="blowup-positivity",
                                description="Positivity certificates for dH - sum m_i E_i "
                                            "on blow-ups of P^2 at general points.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="certify a property of a line bundle")
    c.add_argument("property", choices=sorted(PROPERTIES))
    c.add_argument("cls", nargs="?", metavar="CLASS", help='class string "d; n1 ... nr"')
    c.add_argument("--uniform", nargs="+", metavar="KEY=N", help="d=.. r=.. m=..")
    c.add_argument("--mode", default="auto",
                   help="auto, conditional, permissive, or a certifier id")
    c.add_argument("--permissive", action="store_true",
                   help="allow multiplicity-1 points in gg_general")
    c.add_argument("--conditional", action="store_true",
                   help="fall back to the Nagata-conditional bound")
    c.add_argument("--cap", type=int, default=DEFAULT_DEGREE_CAP,
                   help="max degree of (-1)-classes searched when r >= 9")
    c.add_argument("--json", action="store_true", help="(output is always JSON)")
    c.set_defaults(func=cmd_check)

    r = sub.add_parser("reduce", help="reduce a class to the fundamental domain")
    r.add_argument("cls", metavar="CLASS")
    r.add_argument("--json", action="store_true", help="(output is always JSON)")
    r.set_defaults(func=cmd_reduce)

    e = sub.add_parser("exceptional", help="test or enumerate (-1)-classes")
    e.add_argument("cls", nargs="?", metavar="CLASS")
    e.add_argument("--enumerate", nargs=1, metavar="r=N")
    e.add_argument("--patterns", action="store_true",
                   help="list sorted representatives only")
    e.add_argument("--cap", type=int, default=DEFAULT_DEGREE_CAP,
                   help="degree cap, used when r >= 9")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_exceptional)

    m = sub.add_parser("mindeg", help="smallest degree a certifier accepts")
    m.add_argument("property", choices=sorted(PROPERTIES))
    m.add_argument("--mults", help='multiplicities, e.g. "3 2 2 1"')
    m.add_argument("--uniform", nargs="+", metavar="KEY=N", help="r=.. m=..")
    m.add_argument("--mode", default="auto", help="auto or a certifier id")
    m.add_argument("--permissive", action="store_true")
    m.add_argument("--json", action="store_true", help="(output is always JSON)")
    m.set_defaults(func=cmd_mindeg)

    d = sub.add_parser("dim", help="dimension of a linear system over F_p")
    d.add_argument("cls", metavar="CLASS")
    d.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    d.add_argument("--seed", type=int, default=None,
                   help=f"defaults to ${SEED_ENV} or 0")
    d.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    d.add_argument("--json", action="store_true", help="(output is always JSON)")
    d.set_defaults(func=cmd_dim)

    rp = sub.add_parser("repro", help="replay worked examples against golden files")
    rp.add_argument("--only", metavar="ID", help="run a single case")
    rp.add_argument("--golden-dir", help="directory of golden JSON files")
    rp.add_argument("--json", action="store_true")
    rp.add_argument("--list", action="store_true", help="list case ids and exit")
    rp.set_defaults(func=cmd_repro)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage; 2 means Conditional here
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    if getattr(args, "list", False):
        for case in repro.CASES:
            print(f"{case.id}  {case.description}")
        return EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
