"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 argument error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from progdisc import chains, discrim, jordan, oracle
from progdisc.symbasis import ProblemSize

SCHEMA_VERSION = "1.0"
OUTPUT_DIR_ENV = "PROGDISC_OUTPUT_DIR"

EXIT_OK, EXIT_VERIFY, EXIT_ARGS, EXIT_IO = 0, 1, 2, 3


class ArgumentError(Exception):
    pass


def fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def number(x) -> dict:
    """Serialize a value as ``{"exact": "p/q" | null, "float": x}``."""
    if isinstance(x, (int, Fraction)):
        return {"exact": str(Fraction(x)), "float": float(x)}
    return {"exact": None, "float": float(x)}


def parse_eta(text: str) -> Fraction | float:
    """``p/q`` literals give exact priors; decimals are parsed as binary64."""
    try:
        value: Fraction | float = Fraction(text) if "/" in text else float(text)
    except (ValueError, ZeroDivisionError):
        raise ArgumentError(f"cannot parse prior {text!r}") from None
    if not 0 <= value <= 1:
        raise ArgumentError(f"prior {text} outside [0, 1]")
    return value


def make_size(n: int, m: int) -> ProblemSize:
    try:
        return ProblemSize(n, m)
    except ValueError as exc:
        raise ArgumentError(str(exc)) from None


def record(command: str, parameters: dict, results, provenance: dict | None = None) -> dict:
    out = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": parameters,
        "results": results,
    }
    if provenance is not None:
        out["provenance"] = provenance
    return out


def to_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt_float(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def to_json(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def resolve_output(path: str) -> Path:
    p = Path(path)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not p.is_absolute():
        p = Path(base) / p
    return p


def emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    try:
        resolve_output(output).write_text(text)
    except OSError as exc:
        raise OSError(f"cannot write {output}: {exc.strerror or exc}") from exc


# -- commands -----------------------------------------------------------------


def cmd_spectrum(args) -> int:
    size = make_size(args.n, args.m)
    spec = jordan.spectrum(size)
    rows = [[k, kappa, mult] for k, (kappa, mult) in enumerate(spec.entries)]
    if args.format == "csv":
        text = to_csv(
            ["k", "kappa_exact", "kappa_float", "multiplicity"],
            [[k, str(kappa), float(kappa), mult] for k, kappa, mult in rows],
        )
    else:
        results = [{"k": k, "kappa": number(kappa), "multiplicity": mult} for k, kappa, mult in rows]
        text = to_json(record("spectrum", {"n": size.n, "m": size.m}, results))
    emit(text, args.output)
    return EXIT_OK


def cmd_chains(args) -> int:
    size = make_size(args.n, args.m)
    if args.N is not None and not 0 <= args.N <= size.N_max:
        raise ArgumentError(f"N must lie in [0, {size.N_max}]")
    Ns = [args.N] if args.N is not None else range(size.N_max + 1)
    results = [chains.chain_pair_to_dict(chains.build_chain_pair(N, size)) for N in Ns]
    emit(to_json(record("chains", {"n": size.n, "m": size.m, "N": args.N}, results)), args.output)
    return EXIT_OK


def _report_results(rep: discrim.DiscriminationReport) -> dict:
    lo, hi = rep.validity_interval
    return {
        "Q_L": number(rep.Q_L),
        "P": number(rep.P_success),
        "P_E": number(rep.P_E),
        "validity_interval": [number(lo), number(hi)],
        "eta_in_validity": rep.eta_in_validity,
        "label": rep.label,
        "per_pair": [
            {
                "k": p.k,
                "kappa": number(p.kappa),
                "multiplicity": p.multiplicity,
                "branch": p.branch,
                "q": number(p.q),
            }
            for p in rep.per_pair
        ],
    }


def _cmd_report(command: str, args) -> int:
    size = make_size(args.n, args.m)
    eta = parse_eta(args.eta)
    rep = discrim.report(size, eta)
    if args.format == "csv":
        text = to_csv(
            ["n", "m", "eta", "Q_L", "P", "P_E", "eta_in_validity"],
            [[size.n, size.m, float(eta), float(rep.Q_L), float(rep.P_success), rep.P_E, rep.eta_in_validity]],
        )
    else:
        params = {"n": size.n, "m": size.m, "eta": number(eta)}
        text = to_json(record(command, params, _report_results(rep)))
    emit(text, args.output)
    return EXIT_OK


def cmd_unambiguous(args) -> int:
    return _cmd_report("unambiguous", args)


def cmd_min_error(args) -> int:
    return _cmd_report("min-error", args)


def scan_grid(eta_min: Fraction | float, eta_max: Fraction | float, steps: int) -> list[Fraction]:
    lo, hi = Fraction(eta_min), Fraction(eta_max)
    return [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]


def cmd_scan(args) -> int:
    size = make_size(args.n, args.m)
    eta_min, eta_max = parse_eta(args.eta_min), parse_eta(args.eta_max)
    if args.steps < 2:
        raise ArgumentError("--steps must be at least 2")
    if eta_min == eta_max:
        raise ArgumentError("--eta-min and --eta-max must differ")
    rows = []
    for eta in scan_grid(eta_min, eta_max, args.steps):
        q, p, valid = discrim.unambiguous(size, eta)
        rows.append((eta, q, p, discrim.min_error(size, eta), valid))
    if args.format == "csv":
        text = to_csv(
            ["eta", "Q_L", "P", "P_E", "in_validity"],
            [[float(e), float(q), float(p), pe, v] for e, q, p, pe, v in rows],
        )
    else:
        params = {"n": size.n, "m": size.m, "eta_min": number(eta_min), "eta_max": number(eta_max), "steps": args.steps}
        results = [
            {"eta": number(e), "Q_L": number(q), "P": number(p), "P_E": number(pe), "in_validity": v}
            for e, q, p, pe, v in rows
        ]
        text = to_json(record("scan", params, results))
    emit(text, args.output)
    return EXIT_OK


def mc_tolerance(samples: int, base: float = 5e-3) -> float:
    return max(base, 5.0 / math.sqrt(samples))


def verify_size(size: ProblemSize, samples: int, seed: int, tol: float) -> list[dict]:
    """Run every oracle comparison for one problem size."""
    checks = []

    def add(name, deviation, tolerance, status=None):
        if status is None:
            status = "pass" if deviation <= tolerance else "fail"
        checks.append(
            {"check": name, "n": size.n, "m": size.m, "deviation": float(deviation), "tolerance": tolerance, "status": status}
        )

    pairs = chains.all_chain_pairs(size)
    add("chain_sizes_sum", abs(sum(c.size_L for c in pairs) - size.D), 0.0)
    add("mirror_symmetry", sum(not chains.verify_mirror(c) for c in pairs), 0.0)
    add("invariant_gram_vs_formula", float(max(abs(chains.invariant_from_gram(c) - chains.invariant_S(c.N, size)) for c in pairs)), 0.0)
    add(
        "kappa_closed_vs_invariants",
        float(max(abs(jordan.kappa_closed(k, size) - jordan.kappa_from_invariants(k, size)) for k in range(1, size.n + 1))),
        0.0,
    )
    spec = jordan.spectrum(size)
    closed_abs = [float(abs(kappa)) for kappa in spec.kappas]
    chain_dev = max(
        float(np.max(np.abs(jordan.jordan_numeric(c) - closed_abs[: c.size_L]))) for c in pairs
    )
    add("chain_svd_vs_closed", chain_dev, tol)
    add("global_svd_vs_spectrum", float(np.max(np.abs(oracle.global_jordan_svd(size) - spec.abs_multiset()))), tol)
    grid = [i / 10 for i in range(11)]
    add("helstrom_vs_min_error", max(abs(oracle.helstrom_numeric(size, e) - discrim.min_error(size, e)) for e in grid), 1e-9)
    lo, hi = discrim.validity_interval(size)
    inside = [e for e in np.linspace(float(lo), float(hi), 21)]
    add(
        "validity_closed_form",
        max(abs(float(discrim.unambiguous(size, e)[1]) - float(discrim.success_validity_form(size, e))) for e in inside),
        1e-12,
    )
    mc_tol = mc_tolerance(samples)
    for side in (1, 2):
        dev = float(np.max(np.abs(oracle.rho_montecarlo(side, size, samples, seed) - oracle.rho_exact(side, size))))
        status = "inconclusive" if mc_tol > 0.05 else None
        add(f"montecarlo_rho{side}", dev, mc_tol, status)
    return checks


def cmd_verify(args) -> int:
    if args.n_max < 1 or args.m_max < 1:
        raise ArgumentError("--n-max and --m-max must be at least 1")
    if args.samples < 1:
        raise ArgumentError("--samples must be at least 1")
    checks = []
    for n in range(1, args.n_max + 1):
        for m in range(1, args.m_max + 1):
            checks.extend(verify_size(ProblemSize(n, m), args.samples, args.seed, args.tol))
    passed = all(c["status"] != "fail" for c in checks)
    provenance = {
        "seed": args.seed,
        "samples": args.samples,
        "tolerances": {"exact_vs_numeric": args.tol, "helstrom": 1e-9, "montecarlo": mc_tolerance(args.samples)},
    }
    params = {"n_max": args.n_max, "m_max": args.m_max}
    results = {"passed": passed, "checks": checks}
    emit(to_json(record("verify", params, results, provenance)), args.output)
    return EXIT_OK if passed else EXIT_VERIFY


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="progdisc",
        description="Optimal discrimination of unknown qubits with n program and m data copies.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        p.add_argument("--n", type=int, required=True, help="program copies per register")
        p.add_argument("--m", type=int, required=True, help="data copies")
        if fmt:
            p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--output", help=f"write here instead of stdout (relative to ${OUTPUT_DIR_ENV} if set)")

    p = sub.add_parser("spectrum", help="Jordan inner products and multiplicities")
    common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("chains", help="mirror-symmetric closed chains as JSON")
    common(p, fmt=False)
    p.add_argument("--N", type=int, help="single total index (default: all)")
    p.set_defaults(func=cmd_chains)

    for name, func in (("unambiguous", cmd_unambiguous), ("min-error", cmd_min_error)):
        p = sub.add_parser(name, help=f"{name} discrimination report")
        common(p)
        p.add_argument("--eta", default="1/2", help="prior of rho_1, decimal or p/q")
        p.set_defaults(func=func)

    p = sub.add_parser("scan", help="tabulate Q_L, P, P_E over a grid of priors")
    common(p)
    p.add_argument("--eta-min", default="0")
    p.add_argument("--eta-max", default="1")
    p.add_argument("--steps", type=int, default=101)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="run the dense oracle comparisons")
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--m-max", type=int, default=3)
    p.add_argument("--samples", type=int, default=200_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-10, help="exact-vs-numeric tolerance")
    p.add_argument("--output")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ArgumentError as exc:
        print(f"progdisc: error: {exc}", file=sys.stderr)
        return EXIT_ARGS
    except OSError as exc:
        print(f"progdisc: error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
