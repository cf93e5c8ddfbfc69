"""Command-line interface.

Exit codes: 0 success / invariant / all checks pass, 1 a check failed or a
counterexample was found, 2 unparsable input or option out of range,
3 input parsed but failed validation.
"""

import argparse
import json
import sys

from ._checks import ATOL, DomainError, InvalidInstanceError, StructuralError
from .capacity import validate_capacity
from .integral import grid_oracle, seminormed_integral
from .invariance import check_invariance, synthesize_counterexample, verify_witness
from .semicopula import MIN, PRODUCT, validate_semicopula
from .serialize import (
    capacity_from_json,
    dumps,
    instance_from_json,
    semicopula_from_descriptor,
    verdict_to_json,
    witness_from_json,
    witness_to_json,
)

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INVALID = 0, 1, 2, 3


class CLIError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _load_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc.strerror}", EXIT_PARSE) from None
    except json.JSONDecodeError as exc:
        raise CLIError(f"{path}: malformed JSON ({exc})", EXIT_PARSE) from None


def _parse(builder, *args):
    """Run a parser; map bad structure to exit 2 and out-of-range values to exit 3."""
    try:
        return builder(*args)
    except DomainError as exc:
        raise CLIError(str(exc), EXIT_INVALID) from None
    except (StructuralError, ValueError, TypeError, AttributeError) as exc:
        raise CLIError(str(exc), EXIT_PARSE) from None


def _semicopula(args):
    if getattr(args, "sugeno", False):
        return MIN
    if getattr(args, "shilkret", False):
        return PRODUCT
    return _parse(semicopula_from_descriptor, args.semicopula)


def _checked_semicopula(args):
    s = _semicopula(args)
    report = validate_semicopula(s, args.resolution)
    if not report.passed:
        v = report.violations[0]
        raise CLIError(f"not a semicopula: {v.axiom} violated at {v.point}", EXIT_INVALID)
    return s


def _instance(path):
    inst = _parse(instance_from_json, _load_json(path))
    try:
        return inst.validate()
    except InvalidInstanceError as exc:
        raise CLIError(str(exc), EXIT_INVALID) from None


def _emit(args, payload):
    text = dumps(payload)
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_integrate(args):
    inst = _instance(args.instance)
    result = seminormed_integral(_semicopula(args), inst)
    _emit(args, result.to_dict())
    return EXIT_OK


def cmd_validate(args):
    if args.capacity is None and args.semicopula is None:
        raise CLIError("validate needs --capacity and/or --semicopula", EXIT_PARSE)
    out = {}
    if args.capacity is not None:
        data = _load_json(args.capacity)
        if not isinstance(data, dict) or "points" not in data or "capacity" not in data:
            raise CLIError("capacity file needs 'points' and 'capacity' fields", EXIT_PARSE)
        capacity = _parse(capacity_from_json, data["points"], data["capacity"])
        out["capacity"] = validate_capacity(capacity).to_dict()
    if args.semicopula is not None:
        s = _parse(semicopula_from_descriptor, args.semicopula)
        out["semicopula"] = validate_semicopula(s, args.resolution).to_dict()
    _emit(args, out)
    return EXIT_OK if all(r["passed"] for r in out.values()) else EXIT_FAIL


def cmd_check(args):
    s = _checked_semicopula(args)
    verdict = check_invariance(s, args.resolution, args.samples, args.seed, args.max_points)
    _emit(args, verdict_to_json(verdict))
    return EXIT_OK if verdict.invariant else EXIT_FAIL


def cmd_synthesize(args):
    s = _checked_semicopula(args)
    witness = synthesize_counterexample(s, args.resolution)
    _emit(args, None if witness is None else witness_to_json(witness))
    return EXIT_OK


def cmd_oracle_compare(args):
    if not 0.0 < args.step <= 0.01:
        raise CLIError(f"--step must lie in (0, 0.01], got {args.step}", EXIT_PARSE)
    s = _semicopula(args)
    inst = _instance(args.instance)
    exact = seminormed_integral(s, inst).value
    oracle = grid_oracle(s, inst, args.step)
    diff = abs(exact - oracle)
    _emit(args, {"exact": exact, "oracle": oracle, "difference": diff})
    return EXIT_OK if diff <= ATOL else EXIT_FAIL


def cmd_verify(args):
    witness = _parse(witness_from_json, _load_json(args.certificate))
    try:
        witness.instance.validate()
        lhs, rhs, gap = verify_witness(witness)
    except (InvalidInstanceError, DomainError) as exc:
        raise CLIError(str(exc), EXIT_INVALID) from None
    ok = abs(lhs - witness.lhs) <= ATOL and abs(rhs - witness.rhs) <= ATOL and abs(gap - witness.gap) <= ATOL
    _emit(args, {"lhs": lhs, "rhs": rhs, "gap": gap, "reproduced": ok})
    return EXIT_OK if ok else EXIT_FAIL


def _positive_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _resolution(text):
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"resolution must be >= 2, got {text}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="semint", description="Seminormed integrals on finite spaces and their translation invariance."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, semicopula_required=True):
        p.add_argument("-o", "--output", help="write JSON here instead of stdout")
        if semicopula_required is not None:
            p.add_argument("--resolution", type=_resolution, default=64, help="lattice steps per axis (default 64)")
            p.add_argument(
                "--semicopula",
                required=semicopula_required,
                help="family name (min, product, lukasiewicz, drastic) or a JSON descriptor",
            )

    p = sub.add_parser("integrate", help="evaluate I(mu, f) on an instance file")
    p.add_argument("instance")
    common(p, semicopula_required=None)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--semicopula")
    group.add_argument("--sugeno", action="store_true", help="use the minimum (Sugeno integral)")
    group.add_argument("--shilkret", action="store_true", help="use the product (Shilkret integral)")
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("validate", help="check capacity and/or semicopula axioms")
    p.add_argument("--capacity", help="JSON file with 'points' and 'capacity'")
    common(p, semicopula_required=False)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("check", help="decide translation invariance of a semicopula")
    common(p)
    p.add_argument("--samples", type=_positive_int, default=1000, help="random instances in phase 2")
    p.add_argument("--seed", type=int, default=0, help="seed for phase 2 (default 0)")
    p.add_argument("--max-points", type=int, choices=range(1, 17), default=6, metavar="N")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("synthesize", help="build a counterexample certificate")
    common(p)
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("oracle-compare", help="exact evaluator versus dense-grid oracle")
    p.add_argument("instance")
    common(p)
    p.add_argument("--step", type=float, default=1e-3)
    p.set_defaults(func=cmd_oracle_compare)

    p = sub.add_parser("verify", help="recompute a counterexample certificate")
    p.add_argument("certificate")
    common(p, semicopula_required=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"semint: error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
