"""Command-line front end.

JSON goes to stdout, diagnostics and timings to stderr, so reruns with the
same flags and seed print byte-identical output.  Exit codes: 0 success,
1 window instability, 2 input error, 3 identity violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from .cech import DEFAULT_WINDOW, UnstableError, euler_identity_checks, homology_dims, line_bundle_cohomology
from .checks import SUITES, run_suite
from .pairing import pairing_matrix
from .parse import NotGlobalError, PiSyntaxError, canonical, parse_pi_spec

EXIT_OK, EXIT_UNSTABLE, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2, 3
EXPECTED_EULER = 4


def _mode(args) -> str:
    return "exact" if args.exact else "modular"


def _emit(payload: dict, fmt: str, table) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        sys.stdout.write(table(payload))


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _homology_table(d: dict) -> str:
    lines = [f"pi = {d['pi']}   window W = {d['window']}   stable = {d['stable']}"]
    lines.append("k    " + " ".join(f"{k:>4}" for k in range(len(d["dims"]))))
    lines.append("dim  " + " ".join(f"{x:>4}" for x in d["dims"]))
    lines.append(f"euler = {d['euler']}")
    return "\n".join(lines) + "\n"


def cmd_homology(args) -> int:
    pi = parse_pi_spec(args.pi)
    t0 = time.perf_counter()
    report = homology_dims(pi, args.window, mode=_mode(args), seed=args.seed)
    _note(f"homology: {time.perf_counter() - t0:.2f}s")
    payload = {
        "pi": canonical(pi),
        "window": report.window,
        "dims": report.dims,
        "stable": report.stable,
        "euler": report.euler,
    }
    _emit(payload, args.format, _homology_table)
    if not report.stable:
        _note(f"unstable: W={args.window} gives {report.dims}, W={args.window + 2} gives {report.dims_next}")
        return EXIT_UNSTABLE
    return EXIT_OK


def _check_table(d: dict) -> str:
    lines = [f"suite {d['suite']}  trials {d['trials']}  seed {d['seed']}"]
    for r in d["results"]:
        mark = "pass" if r["passed"] == r["trials"] else "FAIL"
        lines.append(f"  {mark}  {r['passed']:>4}/{r['trials']:<4} {r['identity']}")
        if "counterexample" in r:
            lines.append("        counterexample: " + "; ".join(r["counterexample"]))
    return "\n".join(lines) + "\n"


def cmd_check(args) -> int:
    if args.trials < 0:
        raise ValueError("--trials must be nonnegative")
    t0 = time.perf_counter()
    results = run_suite(args.suite, args.trials, args.seed, args.max_degree)
    _note(f"check: {time.perf_counter() - t0:.2f}s")
    payload = {
        "suite": args.suite,
        "trials": args.trials,
        "seed": args.seed,
        "max_degree": args.max_degree,
        "results": [r.as_dict() for r in results],
        "ok": all(r.ok for r in results),
    }
    _emit(payload, args.format, _check_table)
    for r in results:
        if not r.ok:
            _note(f"identity violated: {r.name}; minimized counterexample: {r.as_dict()['counterexample']}")
    return EXIT_OK if payload["ok"] else EXIT_VIOLATION


def _euler_table(d: dict) -> str:
    c = d["identity_checks"]
    lines = [f"pi = {d['pi']}   chi_KB = {d['euler']}   expected {d['expected']}"]
    lines.append("chi(Omega^0), chi(Omega^1), chi(Omega^2) = " + ", ".join(map(str, c["chi_omega"])))
    lines.append(f"sum (-1)^j chi(Omega^j) = {c['sum_chi_omega']}   chi(X) = {c['chi_X']}")
    lines.append(
        "chi(wedge^i T (x) Omega^2), i = 0, 1, 2: "
        + ", ".join(map(str, c["chi_polyvector_canonical"]))
        + f"   alternating sum = {c['sum_chi_polyvector_canonical']}"
    )
    return "\n".join(lines) + "\n"


def cmd_euler(args) -> int:
    pi = parse_pi_spec(args.pi)
    t0 = time.perf_counter()
    report = homology_dims(pi, args.window, mode=_mode(args), seed=args.seed)
    _note(f"euler: {time.perf_counter() - t0:.2f}s")
    checks = euler_identity_checks()
    payload = {
        "pi": canonical(pi),
        "window": report.window,
        "euler": report.euler,
        "expected": EXPECTED_EULER,
        "stable": report.stable,
        "identity_checks": checks,
    }
    _emit(payload, args.format, _euler_table)
    if not report.stable:
        _note("unstable: euler characteristic not certified at this window")
        return EXIT_UNSTABLE
    if report.euler != EXPECTED_EULER or not checks["pass"]:
        return EXIT_VIOLATION
    return EXIT_OK


def _pairing_table(d: dict) -> str:
    lines = [f"pi = {d['pi']}   k = {d['k']}   rank {d['rank']}   nondegenerate = {d['nondegenerate']}"]
    if not d["matrix"]:
        lines.append("(empty matrix)")
    width = max((len(x) for row in d["matrix"] for x in row), default=1)
    for row in d["matrix"]:
        lines.append("  " + " ".join(x.rjust(width) for x in row))
    return "\n".join(lines) + "\n"


def cmd_pairing(args) -> int:
    pi = parse_pi_spec(args.pi)
    if not 0 <= args.k <= 4:
        raise ValueError("--k must lie in 0..4")
    t0 = time.perf_counter()
    pm = pairing_matrix(pi, args.k, args.window, seed=args.seed, mode=_mode(args))
    _note(f"pairing: {time.perf_counter() - t0:.2f}s")
    payload = {"pi": canonical(pi), **pm.as_dict()}
    _emit(payload, args.format, _pairing_table)
    return EXIT_OK if pm.nondegenerate else EXIT_VIOLATION


def _linebundle_table(d: dict) -> str:
    cf = tuple(d["closed_form"])
    ce = tuple(d["cech"])
    return f"O({d['a']},{d['b']}): closed form {cf}  Cech {ce}  agree = {d['agree']}\n"


def cmd_linebundle(args) -> int:
    payload = line_bundle_cohomology(args.a, args.b, mode="exact" if args.exact else "auto")
    _emit(payload, args.format, _linebundle_table)
    return EXIT_OK if payload["agree"] else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kbhomology",
        description="Exact Koszul-Brylinski homology of Poisson structures q d2^d1 on CP1 x CP1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, pi=True, window=True):
        if pi:
            p.add_argument("--pi", required=True, help="expression in z1, z2; nine comma-separated coefficients; "
                           "or a preset: zero, constant, product, random(SEED)")
        if window:
            p.add_argument("--window", type=int, default=DEFAULT_WINDOW, help="weight box radius W (default 8)")
        p.add_argument("--format", choices=("json", "table"), default="json")
        p.add_argument("--exact", action="store_true", help="exact ranks instead of two-prime modular ranks")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("homology", help="dimensions of H_0..H_4")
    common(p)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("check", help="randomized identity suites")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--max-degree", type=int, default=2, help="exponent bound for random Laurent polynomials")
    common(p, pi=False, window=False)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("euler", help="Euler characteristic and identity table")
    common(p)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("pairing", help="pairing matrix between H_k and H_{4-k}")
    common(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_pairing)

    p = sub.add_parser("linebundle", help="cohomology of O(a, b): closed form vs Cech")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    common(p, pi=False, window=False)
    p.set_defaults(func=cmd_linebundle)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PiSyntaxError, NotGlobalError) as exc:
        _note(f"input error: {exc}")
        return EXIT_INPUT
    except UnstableError as exc:
        _note(str(exc))
        return EXIT_UNSTABLE
    except ValueError as exc:
        _note(f"input error: {exc}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
