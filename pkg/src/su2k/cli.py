"""Command-line interface: model dumps, axiom verification, certificates, synthesis.

Exit codes: 0 on success (all checks passing), 1 when a computation finds a
failing check, 2 on usage errors.  All outputs are deterministic given the
flags and seed; JSON carries exact strings next to float renderings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import numpy as np

from .errors import DomainError, IntegrityError
from .model import get_model, label_str
from .synth import SearchConfig, error_profile, synthesize
from .universality import certificate
from . import regression

_PRECISION_ENV = "SU2K_PRECISION"


def _parse_k_range(text: str, minimum: int) -> list[int]:
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError:
        raise DomainError(f"bad level or range {text!r} (expected like '4' or '3..12')")
    if lo > hi:
        raise DomainError(f"empty level range {text!r}")
    if lo < minimum:
        raise DomainError(f"level must be >= {minimum} for this command, got {lo}")
    return list(range(lo, hi + 1))


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


# -- model ------------------------------------------------------------------------


def cmd_model(args) -> int:
    ks = _parse_k_range(args.k, minimum=0)
    if len(ks) != 1:
        raise DomainError("the model command takes a single level, not a range")
    model = get_model(ks[0])
    payload = model.json_payload()
    if args.format == "json":
        _write_output(_json_text(payload), args.output)
    elif args.format == "text":
        lines = [f"level k={model.k} (root order {model.N}), {len(model.labels)} anyon types"]
        lines.append("labels: " + ", ".join(payload["labels"]))
        for a in model.labels:
            for b in model.labels:
                if a <= b:
                    channels = ", ".join(label_str(c) for c in model.fusion(a, b))
                    lines.append(f"  {label_str(a)} x {label_str(b)} = {channels}")
        lines.append("dims:  " + ", ".join(f"{d:.10f}" for d in payload["dims"]["float"]))
        lines.append("spins: " + ", ".join(f"{re:+.6f}{im:+.6f}i" for re, im in payload["spins"]["float"]))
        _write_output("\n".join(lines) + "\n", args.output)
    else:
        raise DomainError(f"model output format {args.format!r} not supported (json or text)")
    return 0


# -- verify ------------------------------------------------------------------------


def cmd_verify(args) -> int:
    ks = _parse_k_range(args.k, minimum=0)
    precision = args.precision or int(os.environ.get(_PRECISION_ENV, "53"))
    mode = args.mode
    all_pass = True
    results = []
    for k in ks:
        model = get_model(k)
        reports = [
            model.verify_fusion_axioms(),
            model.verify_unitarity(),
            model.verify_pentagon(mode, tol=args.tol, precision=precision),
            model.verify_hexagon(mode, tol=args.tol, precision=precision),
        ]
        try:
            model.spins_dims_smatrix()
            integrity = "holds"
        except IntegrityError as exc:
            integrity = f"FAILS ({exc})"
            all_pass = False
        ok = all(r.holds for r in reports) and integrity == "holds"
        all_pass = all_pass and ok
        results.append((k, reports, integrity, ok))
    if args.format == "json":
        payload = [
            {
                "k": k,
                "checks": [
                    {
                        "name": r.name,
                        "mode": r.mode,
                        "instances": r.checked,
                        "holds": r.holds,
                        "max_residual": r.max_residual,
                        "counterexamples": [list(map(str, f)) for f in r.failures[:5]],
                    }
                    for r in reports
                ],
                "spins_dims_smatrix": integrity,
                "all_hold": ok,
            }
            for k, reports, integrity, ok in results
        ]
        _write_output(_json_text({"schema": "su2k/verify-v1", "levels": payload}), args.output)
    else:
        lines = []
        for k, reports, integrity, ok in results:
            lines.append(f"k={k}: {'all hold' if ok else 'FAILURES'}")
            for r in reports:
                lines.append(f"  {r.summary()}")
            lines.append(f"  spins/dims/S-matrix integrity: {integrity}")
        _write_output("\n".join(lines) + "\n", args.output)
    return 0 if all_pass else 1


# -- universality --------------------------------------------------------------------


def cmd_universality(args) -> int:
    ks = _parse_k_range(args.k, minimum=2)
    certificates = [certificate(k, max_phi=args.max_order_bound) for k in ks]
    if args.format == "json":
        payload = {
            "schema": "su2k/certificates-v1",
            "certificates": [c.json_payload() for c in certificates],
        }
        _write_output(_json_text(payload), args.output)
    elif args.format == "csv":
        header = ["k", "cosThetaA", "cosThetaB", "orderA", "orderB", "trW", "verdict"]
        rows = [c.csv_row() for c in certificates]
        _write_output(_csv_text(header, rows), args.output)
    else:
        lines = []
        for c in certificates:
            detail = "" if c.reason is None else f"  ({c.reason})"
            lines.append(f"k={c.k}: {c.verdict}{detail}")
        _write_output("\n".join(lines) + "\n", args.output)
    return 0


# -- synth ---------------------------------------------------------------------------


def _load_target(path: str) -> np.ndarray:
    if not os.path.exists(path):
        raise DomainError(f"target file {path!r} does not exist")
    try:
        with open(path, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
        entries = payload["entries"]
        matrix = np.array(
            [[complex(re, im) for re, im in row] for row in entries], dtype=complex
        )
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"target file {path!r} is not a matrix JSON: {exc}")
    if matrix.shape != (2, 2):
        raise DomainError(f"target must be 2x2, got shape {matrix.shape}")
    return matrix


def cmd_synth(args) -> int:
    ks = _parse_k_range(args.k, minimum=2)
    if len(ks) != 1:
        raise DomainError("the synth command takes a single level, not a range")
    if (args.target is None) == (args.profile_samples is None):
        raise DomainError("give exactly one of --target FILE or --profile-samples N")
    config = SearchConfig(
        k=ks[0],
        max_depth=args.max_depth,
        beam_width=args.beam_width,
        tolerance=args.tol,
        dedup_resolution=args.grid,
        max_states=args.max_states,
        seed=args.seed,
    )
    if args.profile_samples is not None:
        rows = error_profile(config, args.profile_samples)
        header = ["depth", "explored", "distinct", "best_error", "mean_error"]
        table = [[r.depth, r.explored, r.distinct, repr(r.best_error), repr(r.mean_error)] for r in rows]
        if args.format == "json":
            payload = {
                "schema": "su2k/profile-v1",
                "k": config.k,
                "samples": args.profile_samples,
                "seed": config.seed,
                "rows": [
                    {
                        "depth": r.depth,
                        "explored": r.explored,
                        "distinct": r.distinct,
                        "best_error": r.best_error,
                        "mean_error": r.mean_error,
                        "max_error": r.max_error,
                    }
                    for r in rows
                ],
            }
            _write_output(_json_text(payload), args.output)
        else:
            _write_output(_csv_text(header, table), args.output)
        return 0
    target = _load_target(args.target)
    result = synthesize(config, target)
    if args.format == "json":
        payload = {
            "schema": "su2k/synth-v1",
            "k": config.k,
            "max_depth": config.max_depth,
            "beam_width": config.beam_width,
            "partial": result.partial,
            "explored": result.explored,
            "distinct": result.distinct,
            "rows": [
                {"depth": d, "best_error": e, "best_word": w}
                for d, e, w in zip(result.depths, result.best_errors, result.best_words)
            ],
        }
        _write_output(_json_text(payload), args.output)
    else:
        header = ["depth", "explored", "distinct", "best_error", "best_word"]
        table = [
            [d, result.explored, result.distinct, repr(e), w]
            for d, e, w in zip(result.depths, result.best_errors, result.best_words)
        ]
        _write_output(_csv_text(header, table), args.output)
    if result.partial:
        print("warning: state cap reached; result is partial", file=sys.stderr)
    return 0


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="su2k",
        description="Anyon-model data, braid representations, and double-braiding "
        "universality certificates for the level-k theories.",
    )
    parser.add_argument(
        "--paper-regression",
        action="store_true",
        help="run the built-in suite of published reference values and exit",
    )
    sub = parser.add_subparsers(dest="command")

    p_model = sub.add_parser("model", help="dump the anyon-model data for one level")
    p_model.add_argument("--k", required=True, help="level, e.g. 2")
    p_model.add_argument("--format", default="json", choices=["json", "text"])
    p_model.add_argument("--output", default=None, help="write to this path instead of stdout")
    p_model.set_defaults(func=cmd_model)

    p_verify = sub.add_parser("verify", help="verify the model axioms for a level range")
    p_verify.add_argument("--k", required=True, help="level or range, e.g. 2..12")
    p_verify.add_argument("--tol", type=float, default=1e-9)
    p_verify.add_argument("--precision", type=int, default=None,
                          help=f"float precision in bits (default: ${_PRECISION_ENV} or 53)")
    p_verify.add_argument("--mode", default="auto", choices=["auto", "exact", "float"])
    p_verify.add_argument("--format", default="text", choices=["text", "json"])
    p_verify.add_argument("--output", default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_univ = sub.add_parser("universality", help="density certificates for a level range")
    p_univ.add_argument("--k", required=True, help="level or range, e.g. 3..30")
    p_univ.add_argument("--format", default="text", choices=["text", "json", "csv"])
    p_univ.add_argument("--max-order-bound", type=int, default=None,
                        help="override the phi(m) bound of the order search")
    p_univ.add_argument("--output", default=None)
    p_univ.set_defaults(func=cmd_universality)

    p_synth = sub.add_parser("synth", help="double-braid synthesis search")
    p_synth.add_argument("--k", required=True, help="level, e.g. 3")
    p_synth.add_argument("--target", default=None, help="JSON file with a 2x2 target matrix")
    p_synth.add_argument("--profile-samples", type=int, default=None,
                         help="profile seeded Haar targets instead of one file target")
    p_synth.add_argument("--max-depth", type=int, default=10)
    p_synth.add_argument("--beam-width", type=int, default=0)
    p_synth.add_argument("--tol", type=float, default=1e-9)
    p_synth.add_argument("--grid", type=float, default=1e-6, help="dedup grid resolution")
    p_synth.add_argument("--max-states", type=int, default=2_000_000)
    p_synth.add_argument("--seed", type=int, default=20240301)
    p_synth.add_argument("--format", default="csv", choices=["csv", "json"])
    p_synth.add_argument("--output", default=None)
    p_synth.set_defaults(func=cmd_synth)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.paper_regression:
        if args.command is not None:
            parser.error("--paper-regression does not combine with a subcommand")
        return 1 if regression.run() else 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IntegrityError as exc:
        print(f"integrity failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
