"""Command-line front end with machine-readable output.

Seven subcommands expose the library: classify, decompose, enumerate-pr,
validate, assumption-check, counterexample, and orbit-shift.  Output is
JSON (sorted keys) or TSV, selected by --format or the POLYWEIGHT_FORMAT
environment variable; repeated identical requests produce byte-identical
output.  Exit codes: 0 success, 2 malformed request, 3 domain error,
4 precondition violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from ._kernels import BACKEND_NAME
from .affine import check_shift_bijection, shift_bound_a
from .classify import (
    ClassificationContext,
    decompose,
    enumerate_Pr,
    go_even_counterexample,
    in_Pr,
    is_polynomial,
    is_restricted,
)
from .errors import (
    DecompositionUnavailable,
    DomainError,
    PreconditionError,
)
from .groups import parse_group_spec, validate_datum
from .lattice import is_prime
from .phi import check_assumption

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_PRECONDITION = 4

_FORMATS = ("json", "tsv")


class RequestError(ValueError):
    """A request that violates the CLI grammar or its invariants."""


def _parse_weight(text, ambient_dim):
    try:
        weight = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise RequestError(
            f"weight {text!r} is not a comma-separated integer list"
        ) from None
    if len(weight) != ambient_dim:
        raise RequestError(
            f"weight has {len(weight)} coordinates; the group needs "
            f"{ambient_dim}"
        )
    return weight


def _require_prime(p):
    if not is_prime(p):
        raise RequestError(f"p must be prime, got {p}")
    return p


def _require_positive(value, name):
    if value < 1:
        raise RequestError(f"{name} must be a positive integer, got {value}")
    return value


def _require_prime_power(value):
    if value < 2:
        raise RequestError(f"--prpower must be a prime power, got {value}")
    base = next(q for q in range(2, value + 1) if value % q == 0)
    reduced = value
    while reduced % base == 0:
        reduced //= base
    if reduced != 1:
        raise RequestError(f"--prpower must be a prime power, got {value}")
    return value


def _group_for(args):
    try:
        return parse_group_spec(args.group)
    except ValueError as exc:
        raise RequestError(str(exc)) from None


def _context_for(args):
    datum = _group_for(args)
    _require_prime(args.p)
    _require_positive(args.r, "r")
    return ClassificationContext(datum, args.p, args.r)


def _weights(values):
    return [list(v) for v in values]


def _cmd_classify(args):
    ctx = _context_for(args)
    weight = _parse_weight(args.weight, ctx.datum.ambient_dim)
    result = {
        "weight": list(weight),
        "phi": list(ctx.phi(weight)),
        "is_polynomial": is_polynomial(weight, ctx),
        "is_restricted": is_restricted(weight, ctx),
        "in_Pr": in_Pr(weight, ctx),
    }
    try:
        split = decompose(weight, ctx)
    except DecompositionUnavailable as exc:
        result.update(
            is_simple_polynomial=False,
            lambda0=None,
            lambda_tilde=None,
            note=str(exc),
        )
    else:
        result.update(
            is_simple_polynomial=is_polynomial(split.lambda_tilde, ctx),
            lambda0=list(split.lambda0),
            lambda_tilde=list(split.lambda_tilde),
            note="",
        )
    return ctx, result


def _cmd_decompose(args):
    ctx = _context_for(args)
    weight = _parse_weight(args.weight, ctx.datum.ambient_dim)
    split = decompose(weight, ctx)
    return ctx, {
        "weight": list(weight),
        "lambda0": list(split.lambda0),
        "lambda_tilde": list(split.lambda_tilde),
        "phi_lambda0": list(ctx.phi(split.lambda0)),
        "phi_lambda_tilde": list(ctx.phi(split.lambda_tilde)),
    }


def _cmd_enumerate(args):
    ctx = _context_for(args)
    elements = enumerate_Pr(ctx)
    return ctx, {"count": len(elements), "elements": _weights(elements)}


def _cmd_validate(args):
    datum = _group_for(args)
    report = validate_datum(datum)
    return datum, {
        "a": report.a,
        "b": report.b,
        "c_lower": report.c_lower,
        "c_upper": report.c_upper,
        "d": report.d,
        "all_ok": report.all_ok,
        "witnesses": list(report.witnesses),
    }


def _cmd_assumption(args):
    datum = _group_for(args)
    _require_prime(args.p)
    _require_positive(args.r, "r")
    _require_positive(args.jobs, "--jobs")
    if args.box_radius is not None:
        _require_positive(args.box_radius, "--box-radius")
    report = check_assumption(
        datum, args.p, args.r, box_radius=args.box_radius, jobs=args.jobs
    )
    return datum, {
        "box_radius": report.box_radius,
        "all_ok": report.all_ok,
        "properties": [
            {
                "name": verdict.name,
                "ok": verdict.ok,
                "checked": verdict.checked,
                "witness": verdict.witness,
                "skipped": verdict.skipped,
            }
            for verdict in report.properties
        ],
    }


def _cmd_counterexample(args):
    _require_prime_power(args.prpower)
    report = go_even_counterexample(args.prpower)
    return None, {
        "prpow": report.prpow,
        "lambda0": list(report.lam0),
        "lambda_tilde": list(report.lam_tilde),
        "phi_lambda0": list(report.phi_lam0),
        "phi_lambda0_shifted": list(report.phi_lam0_shifted),
        "phi_lambda_tilde": list(report.phi_lam_tilde),
        "witness": None if report.witness is None else list(report.witness),
        "weyl_order": report.weyl_order,
    }


def _cmd_orbit_shift(args):
    ctx = _context_for(args)
    weight = _parse_weight(args.weight, ctx.datum.ambient_dim)
    _require_positive(args.box_radius, "--box-radius")
    if args.shift_i < 0:
        raise RequestError(f"--shift-i must be >= 0, got {args.shift_i}")
    bound = shift_bound_a(weight, ctx)
    outcome = check_shift_bijection(weight, args.shift_i, ctx, args.box_radius)
    return ctx, {
        "weight": list(weight),
        "shift_i": args.shift_i,
        "box_radius": args.box_radius,
        "shift_bound": bound,
        "ok": outcome.ok,
        "counterexample": (
            None
            if outcome.counterexample is None
            else list(outcome.counterexample)
        ),
        "orbit_size": outcome.orbit_size,
    }


_COMMANDS = {
    "classify": _cmd_classify,
    "decompose": _cmd_decompose,
    "enumerate-pr": _cmd_enumerate,
    "validate": _cmd_validate,
    "assumption-check": _cmd_assumption,
    "counterexample": _cmd_counterexample,
    "orbit-shift": _cmd_orbit_shift,
}


def _metadata(args, target):
    meta = {
        "command": args.command,
        "version": __version__,
        "backend": BACKEND_NAME,
    }
    if target is None:
        return meta
    datum = target.datum if isinstance(target, ClassificationContext) else target
    meta["group"] = datum.spec_string
    meta["kernel_basis"] = _weights(datum.lattice.kernel_basis)
    if isinstance(target, ClassificationContext):
        meta["p"] = target.p
        meta["r"] = target.r
    return meta


def _render_value(value):
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        if value and isinstance(value[0], list):
            return " ".join(",".join(str(c) for c in row) for row in value)
        return ",".join(str(c) for c in value)
    return str(value)


def _render_tsv(result):
    if "elements" in result:
        lines = ["\t".join(str(c) for c in row) for row in result["elements"]]
    elif "properties" in result:
        lines = [
            "\t".join(
                (
                    prop["name"],
                    _render_value(prop["ok"]),
                    str(prop["checked"]),
                    prop["witness"],
                )
            )
            for prop in result["properties"]
        ]
        lines.append("all_ok\t" + _render_value(result["all_ok"]))
    else:
        lines = [
            f"{key}\t{_render_value(result[key])}" for key in sorted(result)
        ]
    return "\n".join(lines) + "\n"


def _render(args, target, result):
    if args.format == "tsv":
        return _render_tsv(result)
    payload = _metadata(args, target)
    payload["result"] = result
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _add_group_args(sub, with_modulus=True):
    sub.add_argument(
        "--group", required=True,
        help="group spec: gl:N | gsp:N | go:N | levi:N1,N2,...",
    )
    if with_modulus:
        sub.add_argument("--p", type=int, required=True, help="prime")
        sub.add_argument(
            "--r", type=int, required=True, help="positive exponent"
        )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="polyweight",
        description="Polynomial weight classification for classical "
        "similitude groups.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    parser.add_argument(
        "--format",
        choices=_FORMATS,
        default=os.environ.get("POLYWEIGHT_FORMAT", "json"),
        help="output format (env POLYWEIGHT_FORMAT; default json)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser(
        "classify", help="membership predicates and decomposition summary"
    )
    _add_group_args(sub)
    sub.add_argument("--weight", required=True, help="comma-separated integers")

    sub = commands.add_parser(
        "decompose", help="base digit plus p^r-multiple split"
    )
    _add_group_args(sub)
    sub.add_argument("--weight", required=True, help="comma-separated integers")

    sub = commands.add_parser(
        "enumerate-pr", help="all digit-set classes as canonical reps"
    )
    _add_group_args(sub)

    sub = commands.add_parser(
        "validate", help="construction-hypothesis verdicts for a datum"
    )
    _add_group_args(sub, with_modulus=False)

    sub = commands.add_parser(
        "assumption-check", help="certify the functional's properties on a box"
    )
    _add_group_args(sub)
    sub.add_argument("--box-radius", type=int, default=None)
    sub.add_argument("--jobs", type=int, default=1)

    sub = commands.add_parser(
        "counterexample",
        help="even orthogonal rank-8 witness-failure scenario",
    )
    sub.add_argument(
        "--prpower", type=int, required=True, help="prime power p^r"
    )

    sub = commands.add_parser(
        "orbit-shift", help="shift-bijection check on an orbit slice"
    )
    _add_group_args(sub)
    sub.add_argument("--weight", required=True, help="comma-separated integers")
    sub.add_argument("--shift-i", type=int, required=True)
    sub.add_argument("--box-radius", type=int, default=6)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format not in _FORMATS:
        print(
            f"error: unknown output format {args.format!r}", file=sys.stderr
        )
        return EXIT_PARSE
    try:
        target, result = _COMMANDS[args.command](args)
        rendered = _render(args, target, result)
    except RequestError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    sys.stdout.write(rendered)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
