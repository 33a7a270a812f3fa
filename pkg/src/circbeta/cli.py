"""Command-line interface.

Subcommands: ``sample`` (write ensemble draws to CSV/JSONL), ``validate``
(run verification suites, emit a JSON report), ``eval`` (print closed-form
values), ``hist`` (histogram CSV plus a rendered figure from a batch file),
and ``matrix`` (dump operator matrices as JSON for debugging).

Exit codes: 0 success, 1 validation failure, 2 usage or parameter error,
3 I/O failure.  Relative output paths resolve against $CIRCBETA_OUTDIR when
that variable is set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

import numpy as np

from . import __version__
from .cmv import build_cmv, build_hessenberg, matrix_to_json_dict
from .ensembles import EnsembleSpec, averaged_alphas, expected_charpoly, partition_circular, sample_circular, sample_jacobi, selberg_value
from .distributions import dirichlet_moment
from .errors import ParameterDomainError
from .io import batch_statistic, histogram_rows, read_batch, write_batch, write_histogram_csv
from .opuc import VerblunskySeq
from .rng import RngStream
from .szego_map import geronimus
from .validation import run_suite

_STAT_RANGES = {"angle": (0.0, 2.0 * np.pi), "eigenvalue": (-2.0, 2.0)}


def _out_path(path: str) -> str:
    base = os.environ.get("CIRCBETA_OUTDIR")
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def _add_ensemble_args(p):
    p.add_argument("--n", type=int, required=True, help="number of particles")
    p.add_argument("--beta", type=float, required=True, help="inverse temperature, > 0")
    p.add_argument("--a", type=float, default=None, help="exponent of (2-x); Jacobi only")
    p.add_argument("--b", type=float, default=None, help="exponent of (2+x); Jacobi only")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="circbeta", description=__doc__.split("\n")[0])
    ap.add_argument("--version", action="version", version=f"circbeta {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("sample", help="draw from an ensemble and write a batch file")
    ps.add_argument("ensemble", choices=["circular", "jacobi"])
    _add_ensemble_args(ps)
    ps.add_argument("--count", type=int, required=True, help="number of draws")
    ps.add_argument("--seed", type=int, required=True, help="64-bit seed")
    ps.add_argument("--stream-id", type=int, default=0, help="independent stream index")
    ps.add_argument("--emit-alphas", action="store_true", help="include coefficient rows (jsonl only)")
    ps.add_argument("--out", required=True, help="output file")
    ps.add_argument("--format", choices=["csv", "jsonl"], default="csv")

    pv = sub.add_parser("validate", help="run verification suites and write a JSON report")
    pv.add_argument("suite", choices=["identities", "ensembles", "integrals", "jacobians", "all"])
    pv.add_argument("--fast", action="store_true", help="reduced ensemble-comparison grid")
    pv.add_argument("--seed", type=int, default=1, help="seed for the randomized checks")
    pv.add_argument("--tol", action="append", default=[], metavar="NAME=VALUE",
                    help="override one check's threshold (repeatable)")
    pv.add_argument("--out", default=None, help="report path (default: stdout)")
    pv.add_argument("--fig", action="store_true", help="also render a summary figure next to the report")

    pe = sub.add_parser("eval", help="print closed-form values")
    esub = pe.add_subparsers(dest="quantity", required=True)
    ep = esub.add_parser("partition", help="circular partition function")
    ep.add_argument("--n", type=int, required=True)
    ep.add_argument("--beta", type=float, required=True)
    es = esub.add_parser("selberg", help="Selberg integral over [0,1]^n")
    es.add_argument("--n", type=int, required=True)
    es.add_argument("--x", type=float, required=True)
    es.add_argument("--y", type=float, required=True)
    es.add_argument("--z", type=float, required=True)
    ec = esub.add_parser("charpoly", help="expected characteristic polynomial")
    ec.add_argument("--n", type=int, required=True)
    ec.add_argument("--beta", type=float, required=True)
    ec.add_argument("--a", type=float, required=True)
    ec.add_argument("--b", type=float, required=True)
    ed = esub.add_parser("dirichlet", help="simplex moment E[prod mu_j^p_j]")
    ed.add_argument("--p", required=True, help="comma-separated exponents, each > -1")

    ph = sub.add_parser("hist", help="histogram a batch file (CSV + figure)")
    ph.add_argument("--input", required=True, help="batch file (csv or jsonl)")
    ph.add_argument("--stat", choices=["angle", "gap", "eigenvalue"], required=True)
    ph.add_argument("--bins", type=int, default=50)
    ph.add_argument("--range", type=float, nargs=2, default=None, metavar=("LO", "HI"))
    ph.add_argument("--out", required=True, help="histogram CSV path")
    ph.add_argument("--no-fig", action="store_true", help="skip the rendered figure")

    pm = sub.add_parser("matrix", help="dump an operator matrix as JSON")
    pm.add_argument("kind", choices=["cmv-l", "cmv-m", "cmv-lm", "cmv-ml", "hessenberg", "jacobi"])
    src = pm.add_mutually_exclusive_group(required=True)
    src.add_argument("--alphas", help="comma-separated coefficients; 're+imj' entries allowed")
    src.add_argument("--expected", action="store_true",
                     help="use the averaged Jacobi-model coefficients for (--n, --beta, --a, --b)")
    pm.add_argument("--n", type=int, default=None)
    pm.add_argument("--beta", type=float, default=None)
    pm.add_argument("--a", type=float, default=0.0)
    pm.add_argument("--b", type=float, default=0.0)
    pm.add_argument("--out", required=True)
    return ap


def _poly_str(coeffs) -> str:
    """Human form with 15 significant digits, highest degree first."""
    deg = len(coeffs) - 1
    parts = []
    for k in range(deg, -1, -1):
        c = float(np.real(coeffs[k]))
        if k < deg and c == 0.0:
            continue
        mag = f"{abs(c):.15g}"
        var = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if k == deg:
            parts.append(var if deg > 0 else mag)
        else:
            sign = " - " if c < 0 else " + "
            parts.append(sign + (mag if k == 0 else (f"{mag}*{var}" if mag != "1" else var)))
    return "".join(parts)


def _cmd_sample(args) -> int:
    spec = EnsembleSpec(
        n=args.n, beta=args.beta, a=args.a, b=args.b,
        seed=RngStream(args.seed, args.stream_id),
    )
    t0 = time.time()
    if args.ensemble == "circular":
        batch = sample_circular(spec, args.count, keep_alphas=args.emit_alphas)
    else:
        batch = sample_jacobi(spec, args.count, keep_alphas=args.emit_alphas)
    out = _out_path(args.out)
    write_batch(batch, out, args.format)
    dt = time.time() - t0
    rate = args.count / dt if dt > 0 else float("inf")
    print(f"wrote {args.count} {args.ensemble} draws (n={args.n}, beta={args.beta:g}) "
          f"to {out} in {dt:.2f}s ({rate:.0f} draws/s)")
    return 0


def _cmd_validate(args) -> int:
    overrides = {}
    for item in args.tol:
        if "=" not in item:
            print(f"error: --tol expects NAME=VALUE, got {item!r}", file=sys.stderr)
            return 2
        name, _, val = item.partition("=")
        try:
            overrides[name] = float(val)
        except ValueError:
            print(f"error: --tol value for {name!r} is not a number: {val!r}", file=sys.stderr)
            return 2
    report = run_suite(args.suite, seed=args.seed, fast=args.fast, tol_overrides=overrides)
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        out = _out_path(args.out)
        with open(out, "w") as fh:
            fh.write(text + "\n")
        if args.fig:
            from .plotting import save_report_figure

            save_report_figure(report, os.path.splitext(out)[0] + ".png")
    else:
        print(text)
    width = max(len(c["name"]) for c in report["checks"])
    for c in report["checks"]:
        cmp_sym = "<=" if c["comparison"] == "le" else ">="
        print(f"{'PASS' if c['passed'] else 'FAIL'}  {c['name']:<{width}}  "
              f"{c['value']:.3e} {cmp_sym} {c['tolerance']:.3e}  [{c['seconds']:.1f}s]",
              file=sys.stderr)
    print(f"{'PASS' if report['passed'] else 'FAIL'}  suite={report['suite']}", file=sys.stderr)
    return 0 if report["passed"] else 1


def _cmd_eval(args) -> int:
    if args.quantity == "partition":
        print(f"{partition_circular(args.n, args.beta):.15g}")
    elif args.quantity == "selberg":
        print(f"{selberg_value(args.n, args.x, args.y, args.z):.15g}")
    elif args.quantity == "charpoly":
        poly = expected_charpoly(args.n, args.beta, args.a, args.b)
        print(_poly_str(poly.coeffs))
    elif args.quantity == "dirichlet":
        p = [float(tok) for tok in args.p.split(",") if tok.strip()]
        print(f"{dirichlet_moment(p):.15g}")
    return 0


def _cmd_hist(args) -> int:
    try:
        batch = read_batch(args.input)
    except ValueError as exc:
        print(f"error: malformed input file: {exc}", file=sys.stderr)
        return 3
    values = batch_statistic(batch, args.stat)
    if args.range is not None:
        lo, hi = args.range
    else:
        lo, hi = _STAT_RANGES.get(args.stat, (None, None))
        if args.stat == "eigenvalue" and batch.kind == "circular":
            lo, hi = 0.0, 2.0 * np.pi
    rows = histogram_rows(values, args.bins, lo, hi)
    out = _out_path(args.out)
    write_histogram_csv(rows, out)
    made = out
    if not args.no_fig:
        from .plotting import save_histogram_figure

        fig_path = os.path.splitext(out)[0] + ".png"
        title = f"{args.stat} histogram ({batch.count} draws, n={batch.eigenvalues.shape[1]})"
        save_histogram_figure(rows, args.stat, fig_path, title)
        made = f"{out} and {fig_path}"
    print(f"wrote {made}")
    return 0


def _parse_alpha_list(text: str) -> VerblunskySeq:
    vals = [complex(tok.strip().replace(" ", "")) for tok in text.split(",") if tok.strip()]
    return VerblunskySeq(np.array(vals, dtype=complex))


def _cmd_matrix(args) -> int:
    if args.expected:
        if args.n is None or args.beta is None:
            print("error: --expected needs --n and --beta", file=sys.stderr)
            return 2
        v = VerblunskySeq(averaged_alphas(args.n, args.beta, args.a, args.b))
    else:
        v = _parse_alpha_list(args.alphas)
    if args.kind == "jacobi":
        payload = geronimus(v).to_json_dict()
    elif args.kind == "hessenberg":
        payload = matrix_to_json_dict(build_hessenberg(v).H)
    else:
        op = build_cmv(v)
        mat = {"cmv-l": op.L, "cmv-m": op.M, "cmv-lm": op.lm, "cmv-ml": op.ml}[args.kind]
        payload = matrix_to_json_dict(mat)
    out = _out_path(args.out)
    with open(out, "w") as fh:
        json.dump({"kind": args.kind, "matrix": payload}, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {out}")
    return 0


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    handlers = {
        "sample": _cmd_sample,
        "validate": _cmd_validate,
        "eval": _cmd_eval,
        "hist": _cmd_hist,
        "matrix": _cmd_matrix,
    }
    try:
        return handlers[args.command](args)
    except ParameterDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
