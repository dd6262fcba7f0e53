"""Command-line front end.

Four commands: ``check`` decides feasibility, ``radius`` computes the
minimal sup-norm bound, ``matrices`` emits the assembled matrices, and
``selftest`` runs the oracle suites.  Exit codes are the shell contract:
0 success or feasible, 1 infeasible or failed selftest, 2 input error,
3 numerical failure.

Machine format is one line of JSON with sorted keys and no timing, so a
fixed input and seed give byte-identical output.  Human format rounds to
six significant digits and appends the elapsed time.
"""

import argparse
import json
import sys
import time

import numpy as np

from .errors import InstanceError, ParseError, PickjetError
from .feasibility import check, minimal_radius
from .instance import load_instance
from .kernels import gamma_matrix, gram_matrix
from .matrices import adjoint_matrix, coeff_matrix, contraction_matrix, pick_matrix
from .oracle import DEFAULT_SEED, RNG_ALGORITHM, run_selftest

# Canonical matrix names in output order, with the one-letter aliases used
# in formulas accepted on the command line.
MATRIX_BUILDERS = {
    "gamma": gamma_matrix,
    "coeff": coeff_matrix,
    "pick": pick_matrix,
    "gram": gram_matrix,
    "adjoint": adjoint_matrix,
    "contraction": contraction_matrix,
}
MATRIX_ALIASES = {
    "Gamma": "gamma",
    "C": "coeff",
    "A": "pick",
    "G": "gram",
    "D": "adjoint",
    "S": "contraction",
}
# Relative size of the asymmetry injected by --inject-failure; far above the
# cross-check defect tolerance, so the harness must report failures.
INJECTED_ASYMMETRY = 1e-6


def matrix_to_dict(m) -> dict:
    """Wire form of a square matrix: row-major [re, im] pairs."""
    a = np.asarray(m)
    return {
        "dim": int(a.shape[0]),
        "entries": [[float(z.real), float(z.imag)] for z in a.ravel()],
    }


def matrix_from_dict(doc) -> np.ndarray:
    """Parse the wire form back into a complex matrix, strictly."""
    if not isinstance(doc, dict) or set(doc) != {"dim", "entries"}:
        raise ParseError("matrix: expected an object with fields 'dim' and 'entries'")
    dim = doc["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise ParseError(f"matrix: 'dim' must be a positive integer, got {dim!r}")
    entries = doc["entries"]
    if not isinstance(entries, list) or len(entries) != dim * dim:
        raise ParseError(f"matrix: expected {dim * dim} entries")
    out = np.empty((dim, dim), dtype=np.complex128)
    for k, pair in enumerate(entries):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or any(isinstance(v, bool) or not isinstance(v, (int, float)) for v in pair)
        ):
            raise ParseError(f"matrix: entry {k} is not an [re, im] pair")
        out[k // dim, k % dim] = complex(pair[0], pair[1])
    return out


def _format_complex(z: complex) -> str:
    return f"{z.real:.6g}{z.imag:+.6g}i"


def _emit_machine(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _emit_human(lines, started: float) -> None:
    for line in lines:
        print(line)
    print(f"time_ms: {(time.perf_counter() - started) * 1e3:.3f}")


def _cmd_check(args) -> int:
    started = time.perf_counter()
    verdict = check(load_instance(args.path), tol=args.tol)
    if args.format == "machine":
        _emit_machine(
            {
                "command": "check",
                "feasible": verdict.feasible,
                "lambda_min": verdict.lambda_min,
                "tolerance": verdict.tolerance_used,
                "boundary": verdict.boundary,
                "warnings": list(verdict.warnings),
            }
        )
    else:
        lines = [
            f"lambda_min: {verdict.lambda_min:.6g}",
            f"tolerance: {verdict.tolerance_used:.6g}",
            f"boundary: {'yes' if verdict.boundary else 'no'}",
            f"verdict: {'feasible' if verdict.feasible else 'infeasible'}",
        ]
        lines.extend(f"warning: {w}" for w in verdict.warnings)
        _emit_human(lines, started)
    return 0 if verdict.feasible else 1


def _cmd_radius(args) -> int:
    started = time.perf_counter()
    report = minimal_radius(load_instance(args.path))
    if args.format == "machine":
        _emit_machine(
            {
                "command": "radius",
                "rho_star": report.rho_star,
                "certifying_eig": report.certifying_eig,
                "lambda_min_at_rho": report.lambda_min_at_rho,
            }
        )
    else:
        _emit_human(
            [
                f"rho_star: {report.rho_star:.6g}",
                f"certifying_eig: {report.certifying_eig:.6g}",
                f"lambda_min_at_rho: {report.lambda_min_at_rho:.6g}",
            ],
            started,
        )
    return 0


def _parse_only(value):
    if value is None:
        return list(MATRIX_BUILDERS)
    names = []
    for raw in value.split(","):
        name = raw.strip()
        name = MATRIX_ALIASES.get(name, name)
        if name not in MATRIX_BUILDERS:
            choices = sorted(MATRIX_BUILDERS) + sorted(MATRIX_ALIASES)
            raise ParseError(f"unknown matrix {raw!r}; choose from {', '.join(choices)}")
        if name not in names:
            names.append(name)
    return names


def _cmd_matrices(args) -> int:
    started = time.perf_counter()
    names = _parse_only(args.only)
    instance = load_instance(args.path)
    computed = {name: MATRIX_BUILDERS[name](instance) for name in names}
    if args.format == "machine":
        _emit_machine(
            {
                "command": "matrices",
                "matrices": {name: matrix_to_dict(m) for name, m in computed.items()},
            }
        )
    else:
        lines = []
        for name in names:
            m = computed[name]
            lines.append(f"{name} ({m.shape[0]}x{m.shape[1]}):")
            for row in m:
                lines.append("  " + "  ".join(_format_complex(z) for z in row))
        _emit_human(lines, started)
    return 0


def _cmd_selftest(args) -> int:
    started = time.perf_counter()
    inject = INJECTED_ASYMMETRY if args.inject_failure else 0.0
    report = run_selftest(seed=args.seed, count=args.count, inject_asymmetry=inject)
    if args.format == "machine":
        _emit_machine(
            {
                "command": "selftest",
                "algorithm": report.algorithm,
                "seed": report.seed,
                "count": report.count,
                "all_passed": report.all_passed,
                "suites": [
                    {"name": s.name, "passed": s.passed, "failed": s.failed}
                    for s in report.suites
                ],
            }
        )
    else:
        lines = [f"algorithm: {report.algorithm}", f"seed: {report.seed}"]
        for s in report.suites:
            lines.append(f"suite {s.name}: passed={s.passed} failed={s.failed}")
        lines.append(f"result: {'pass' if report.all_passed else 'FAIL'}")
        _emit_human(lines, started)
    return 0 if report.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pickjet",
        description="Feasibility and minimal sup-norm bound for analytic "
        "interpolation with prescribed Taylor jets on the unit disc.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format",
            choices=("human", "machine"),
            default="human",
            help="human-readable report or one-line JSON",
        )

    p = sub.add_parser("check", help="decide whether the data is feasible")
    p.add_argument("path", help="instance JSON file")
    p.add_argument("--tol", type=float, default=None, help="absolute PSD tolerance override")
    add_format(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("radius", help="compute the minimal sup-norm bound")
    p.add_argument("path", help="instance JSON file")
    add_format(p)
    p.set_defaults(func=_cmd_radius)

    p = sub.add_parser("matrices", help="emit the assembled matrices")
    p.add_argument("path", help="instance JSON file")
    p.add_argument(
        "--only",
        default=None,
        help="comma-separated subset: gamma, coeff, pick, gram, adjoint, "
        "contraction (aliases Gamma, C, A, G, D, S)",
    )
    add_format(p)
    p.set_defaults(func=_cmd_matrices)

    p = sub.add_parser("selftest", help="run the oracle consistency suites")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="base RNG seed")
    p.add_argument("--count", type=int, default=100, help="cases per suite")
    p.add_argument(
        "--inject-failure",
        action="store_true",
        help="perturb one criterion entry to confirm the harness reports failures",
    )
    add_format(p)
    p.set_defaults(func=_cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InstanceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PickjetError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
