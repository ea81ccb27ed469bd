"""Command-line interface; JSON on stdout, human-readable text on stderr.

Exit codes: 0 success, 2 validation error, 3 runtime failure (for example too
many erasures), 4 verification failure (``verify`` only).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .bounds import HlrcParams, hlrc_bound
from .code import SCHEMA, build_code, code_from_dict, code_to_dict, encode, format_matrix, make_plan
from .errors import HlrcError, ValidationError
from .gf import field_new
from .nests import build_nest_system, split_values
from .oracle import ENUM_CAP, verify_instance
from .poly import Poly
from .repair import plan_repair, repair
from .simfail import Scenario, simulate

EXIT_OK, EXIT_VALIDATION, EXIT_RUNTIME, EXIT_VERIFY = 0, 2, 3, 4


def _coeffs(text: str) -> list[int]:
    try:
        return [int(c) for c in text.split(",") if c.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps({"schema": SCHEMA, **obj}, sort_keys=False) + "\n")


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"cannot read JSON from {path}: {exc}") from exc


def _field_and_pair(args):
    F = field_new(args.p, args.e, args.modulus)
    return F, Poly(F, tuple(args.f)), Poly(F, tuple(args.h))


def cmd_search(args) -> int:
    F, f, h = _field_and_pair(args)
    values = split_values(F, f, h)
    nests = build_nest_system(F, f, h).to_dict() if values else []
    _emit({"field": F.to_dict(), "split_values": values, "ell": len(values), "nests": nests})
    return EXIT_OK


def cmd_build(args) -> int:
    F, f, h = _field_and_pair(args)
    code = build_code(make_plan(f, h, args.lam, args.s, args.ell))
    desc = code_to_dict(code, include_matrix=args.matrix == "json")
    if args.matrix == "text":
        print(format_matrix(code.generator), file=sys.stderr)
    sys.stdout.write(json.dumps(desc) + "\n")
    return EXIT_OK


def cmd_encode(args) -> int:
    code = code_from_dict(_read_json(args.code))
    if args.message is not None:
        message = args.message
    else:
        payload = _read_json(args.input)
        message = payload["message"] if isinstance(payload, dict) else payload
    _emit({"codeword": encode(code, message)})
    return EXIT_OK


def cmd_repair(args) -> int:
    code = code_from_dict(_read_json(args.code))
    payload = _read_json(args.input)
    word = payload.get("word", payload.get("codeword")) if isinstance(payload, dict) else payload
    if not isinstance(word, list):
        raise ValidationError("repair input must be a JSON array (null marks an erasure)")
    erased = [c for c, v in enumerate(word) if v is None]
    plan = plan_repair(code, erased)
    fixed = repair(code, word)
    _emit({"codeword": fixed, "plan": plan.to_dict()})
    return EXIT_OK


def cmd_verify(args) -> int:
    code = code_from_dict(_read_json(args.code))
    report = verify_instance(code, cap=args.cap, mode=args.mode)
    for c in report.checks:
        print(f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}", file=sys.stderr)
    _emit(report.to_dict())
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_bound(args) -> int:
    params = HlrcParams(n=args.n, k=args.k, b=args.b, a=args.a, lam=args.lam)
    _emit(hlrc_bound(params, args.d).to_dict())
    return EXIT_OK


def cmd_simulate(args) -> int:
    code = code_from_dict(_read_json(args.code))
    if args.scenario:
        data = _read_json(args.scenario)
        if args.seed is not None:
            data["seed"] = args.seed
        sc = Scenario.from_dict(data)
    else:
        mix = []
        for item in args.mix.split(","):
            name, _, weight = item.partition("=")
            mix.append((name.strip(), float(weight or 1)))
        sc = Scenario(args.seed if args.seed is not None else 0, args.rounds, tuple(mix))
    report = simulate(code, sc, jobs=args.jobs)
    _emit({"scenario": sc.to_dict(), "report": report.to_dict()})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hlrc", description="Hierarchical locally recoverable codes from nested polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    def pair_args(p):
        p.add_argument("--p", type=int, required=True, help="field characteristic")
        p.add_argument("--e", type=int, default=1, help="extension degree")
        p.add_argument("--modulus", type=_coeffs, default=None, help="ascending coefficients of the modulus")
        p.add_argument("--f", type=_coeffs, required=True, help="ascending coefficients of f")
        p.add_argument("--h", type=_coeffs, required=True, help="ascending coefficients of h")

    def code_arg(p):
        p.add_argument("--code", required=True, help="code descriptor JSON file ('-' for stdin)")

    p = sub.add_parser("search", help="totally split values and nests of f(h(X))")
    pair_args(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("build", help="construct a code and print its descriptor")
    pair_args(p)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--lambda", dest="lam", type=int, default=2)
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--matrix", choices=("none", "json", "text"), default="none")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("encode", help="encode a message")
    code_arg(p)
    p.add_argument("--message", type=_coeffs, default=None, help="comma-separated message symbols")
    p.add_argument("--input", default="-", help="message JSON (array or {\"message\": [...]})")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("repair", help="fill erased (null) symbols of a word")
    code_arg(p)
    p.add_argument("--input", default="-", help="word JSON with null at erased positions")
    p.set_defaults(func=cmd_repair)

    p = sub.add_parser("verify", help="brute-force cross-check of a code")
    code_arg(p)
    p.add_argument("--cap", type=int, default=ENUM_CAP, help="maximum messages to enumerate")
    p.add_argument("--mode", choices=("auto", "paranoid", "early"), default="auto")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", help="Singleton-type bounds for given parameters")
    for name in ("n", "k", "b", "a"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.add_argument("--d", type=int, default=None, help="actual distance, to test optimality")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("simulate", help="seeded failure simulation")
    code_arg(p)
    p.add_argument("--scenario", default=None, help="scenario JSON file")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--rounds", type=int, default=1000)
    p.add_argument("--mix", default="single=1", help="e.g. single=8,lambda_burst_same_nest=1,scattered(8)=1")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except HlrcError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except (KeyError, TypeError, ValueError) as exc:
        print(f"error: malformed input: {exc!r}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
