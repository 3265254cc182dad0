"""Command-line front end.

Subcommands
-----------
verify       check the even-dimensional no-linked-pair configuration for a given k
parity       linked-count parity over a point file or random configurations
alternation  alternating-subset count table (closed form vs brute force)
witness      separating hyperplane or intersection witness for two label sets
sample       draw a random general-position configuration and write it to a file
plot         SVG picture of a 5-point planar configuration and its segment parities

Exit codes: 0 success, 2 verification failure, 3 degeneracy or sampling
failure, 64 usage error.  ``--workers`` (default from LINKPARITY_WORKERS)
never changes report content, only wall time.  JSON reports contain no
timestamps or worker counts, so identical inputs give byte-identical files.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import os
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from fractions import Fraction

from . import __version__
from .combinatorics import (
    alternates,
    alternating_count_bruteforce,
    alternating_count_closed_form,
    combinations_colex,
)
from .configuration import (
    Configuration,
    load_points,
    moment_curve,
    sample_random_configuration,
    save_points,
)
from .errors import ContractError, DegeneracyError, SamplingError
from .intersection import intersect_complementary, separating_hyperplane_moment
from .linking import (
    counterexample_document,
    dumps_canonical,
    link_report_document,
    total_linked_parity,
    verify_counterexample,
)
from .ratmat import format_rational, parse_rational

EXIT_OK = 0
EXIT_VERIFY_FAIL = 2
EXIT_DEGENERACY = 3
EXIT_USAGE = 64

WORKERS_ENV = "LINKPARITY_WORKERS"


@dataclass(frozen=True)
class RunManifest:
    """Everything needed to reproduce a run bit-for-bit."""

    command: str
    parameters: dict
    seeds: tuple[int, ...]
    tool_version: str
    input_hashes: dict
    timestamp: str

    def document(self) -> dict:
        # timestamp stays out of serialized reports so reruns are byte-identical
        return {
            "command": self.command,
            "parameters": self.parameters,
            "seeds": list(self.seeds),
            "tool_version": self.tool_version,
            "input_hashes": self.input_hashes,
        }


def _hash_file(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        digest.update(handle.read())
    return digest.hexdigest()


def _manifest(command: str, parameters: dict, seeds=(), inputs=()) -> RunManifest:
    return RunManifest(
        command=command,
        parameters=parameters,
        seeds=tuple(seeds),
        tool_version=__version__,
        input_hashes={path: _hash_file(path) for path in inputs},
        timestamp=datetime.now(timezone.utc).isoformat(),
    )


def _usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _parse_labels(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ContractError(f"expected comma-separated integers, got {text!r}")


def _resolve_workers(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get(WORKERS_ENV)
    if env is None:
        return 1
    try:
        return int(env)
    except ValueError:
        raise ContractError(f"{WORKERS_ENV} must be an integer, got {env!r}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="linkparity", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="verify the no-linked-pair configuration")
    p_verify.add_argument("-k", "--k", type=int, required=True, dest="k")
    p_verify.add_argument("--json", metavar="PATH", help="write the JSON report here")
    p_verify.add_argument("--workers", type=int, default=None)

    p_parity = sub.add_parser("parity", help="linked-count parity check")
    p_parity.add_argument("--input", metavar="PATH", help="point-set file")
    p_parity.add_argument("--random", nargs=2, type=int, metavar=("N", "D"))
    p_parity.add_argument("--trials", type=int, default=1)
    p_parity.add_argument("--seed", type=int, default=0)
    p_parity.add_argument("--bound", type=int, default=1000)
    p_parity.add_argument("--json", metavar="PATH")
    p_parity.add_argument("--workers", type=int, default=None)

    p_alt = sub.add_parser("alternation", help="alternating-count table")
    p_alt.add_argument("--k", type=int, default=None)
    p_alt.add_argument("--subset", metavar="I", help="comma-separated labels")
    p_alt.add_argument("--n", type=int, default=None, help="universe size for --subset")
    p_alt.add_argument("--csv", metavar="PATH", help="write CSV here (default stdout)")

    p_wit = sub.add_parser("witness", help="separating hyperplane or intersection witness")
    p_wit.add_argument("--P", required=True, metavar="LABELS")
    p_wit.add_argument("--Q", required=True, metavar="LABELS")
    p_wit.add_argument("--d", type=int, required=True)
    p_wit.add_argument("--params", metavar="RATIONALS",
                       help="comma-separated curve parameters (default 1..n)")

    p_sample = sub.add_parser("sample", help="sample a random configuration to a file")
    p_sample.add_argument("--n", type=int, required=True)
    p_sample.add_argument("--d", type=int, required=True)
    p_sample.add_argument("--seed", type=int, default=0)
    p_sample.add_argument("--bound", type=int, default=1000)
    p_sample.add_argument("--out", required=True, metavar="PATH")

    p_plot = sub.add_parser("plot", help="SVG for the planar 5-point case")
    p_plot.add_argument("--input", metavar="PATH")
    p_plot.add_argument("--k", type=int, default=None, help="use the moment-curve configuration (k=1)")
    p_plot.add_argument("--out", required=True, metavar="PATH")

    return parser


# --------------------------------- verify ----------------------------------


def cmd_verify(args) -> int:
    if args.k < 1:
        return _usage(f"k must be >= 1, got {args.k}")
    workers = _resolve_workers(args.workers)
    manifest = _manifest("verify", {"k": args.k})
    try:
        result = verify_counterexample(args.k, workers=workers)
    except DegeneracyError as exc:
        print(f"degeneracy: {exc}", file=sys.stderr)
        return EXIT_DEGENERACY
    report = result.report
    print(
        f"k={args.k}: n={report.n} points in R^{report.dimension}, "
        f"{len(report.per_subset)} subsets, total linked = {report.total_linked}"
    )
    status = "PASS" if result.ok else "FAIL"
    print(f"all counts even and n1=n2=n3=n4: {status} ({manifest.timestamp})")
    for failure in result.failures:
        print(f"  failure: {failure}", file=sys.stderr)
    if args.json:
        document = counterexample_document(result, manifest=manifest.document())
        with open(args.json, "w", encoding="ascii") as handle:
            handle.write(dumps_canonical(document))
        print(f"report written to {args.json}")
    return EXIT_OK if result.ok else EXIT_VERIFY_FAIL


# --------------------------------- parity ----------------------------------


def cmd_parity(args) -> int:
    if (args.input is None) == (args.random is None):
        return _usage("exactly one of --input or --random is required")
    workers = _resolve_workers(args.workers)
    configs: list[tuple[str, Configuration]] = []
    seeds: list[int] = []
    if args.input is not None:
        try:
            config = load_points(args.input)
        except (OSError, ValueError) as exc:
            return _usage(f"cannot read point set {args.input}: {exc}")
        manifest = _manifest("parity", {"input": args.input}, inputs=[args.input])
        configs.append((args.input, config))
    else:
        n, d = args.random
        if args.trials < 1:
            return _usage(f"--trials must be >= 1, got {args.trials}")
        manifest = _manifest(
            "parity",
            {"n": n, "d": d, "trials": args.trials, "seed": args.seed, "bound": args.bound},
            seeds=range(args.seed, args.seed + args.trials),
        )
        try:
            for trial in range(args.trials):
                seed = args.seed + trial
                seeds.append(seed)
                configs.append(
                    (f"seed={seed}", sample_random_configuration(n, d, seed, args.bound))
                )
        except SamplingError as exc:
            print(f"sampling failed: {exc}", file=sys.stderr)
            return EXIT_DEGENERACY

    documents = []
    all_even = True
    try:
        for name, config in configs:
            report = total_linked_parity(config, workers=workers)
            all_even = all_even and report.parity_ok
            print(
                f"{name}: total linked = {report.total_linked} "
                f"({'even' if report.parity_ok else 'ODD'})"
            )
            documents.append(link_report_document(report))
    except DegeneracyError as exc:
        print(f"degeneracy: {exc} (offending subset: {exc.labels})", file=sys.stderr)
        return EXIT_DEGENERACY
    if args.json:
        payload = {"command": "parity", "reports": documents, "manifest": manifest.document()}
        with open(args.json, "w", encoding="ascii") as handle:
            handle.write(dumps_canonical(payload))
    return EXIT_OK if all_even else EXIT_VERIFY_FAIL


# ------------------------------- alternation --------------------------------


def _breakdown_row(subset, n) -> tuple[list, bool]:
    breakdown = alternating_count_closed_form(subset, n)
    brute = alternating_count_bruteforce(subset, n)
    ok = breakdown.count == brute and brute % 2 == 0
    blocks = " ".join(str(b) for b in breakdown.block_sizes) if breakdown.block_sizes else ""
    row = [
        " ".join(str(v) for v in subset),
        breakdown.case_tag.value,
        blocks,
        breakdown.count,
    ]
    return row, ok


def cmd_alternation(args) -> int:
    if (args.k is None) == (args.subset is None):
        return _usage("exactly one of --k or --subset is required")
    rows = []
    all_ok = True
    try:
        if args.k is not None:
            if args.k < 1:
                return _usage(f"--k must be >= 1, got {args.k}")
            n = 2 * args.k + 3
            for subset in combinations_colex(tuple(range(1, n + 1)), args.k + 1):
                row, ok = _breakdown_row(subset, n)
                rows.append(row)
                all_ok = all_ok and ok
        else:
            if args.n is None:
                return _usage("--subset requires --n")
            subset = _parse_labels(args.subset)
            row, ok = _breakdown_row(subset, args.n)
            rows.append(row)
            all_ok = all_ok and ok
    except ContractError as exc:
        return _usage(str(exc))

    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(["I", "case", "block_sizes", "count"])
    writer.writerows(rows)
    if args.csv:
        with open(args.csv, "w", encoding="ascii", newline="") as handle:
            handle.write(buffer.getvalue())
    else:
        sys.stdout.write(buffer.getvalue())
    return EXIT_OK if all_ok else EXIT_VERIFY_FAIL


# --------------------------------- witness ----------------------------------


def cmd_witness(args) -> int:
    try:
        p_labels = _parse_labels(args.P)
        q_labels = _parse_labels(args.Q)
        d = args.d
        if d < 2 or d % 2 != 0:
            return _usage(f"--d must be even and >= 2, got {d}")
        if set(p_labels) & set(q_labels):
            return _usage(f"P and Q overlap: {sorted(set(p_labels) & set(q_labels))}")
        if len(p_labels) != len(q_labels) or len(p_labels) != d // 2 + 1:
            return _usage(f"|P| and |Q| must both be d/2 + 1 = {d // 2 + 1}")
        n = max(p_labels + q_labels)
        if args.params is not None:
            params = tuple(parse_rational(tok) for tok in args.params.split(","))
            if len(params) < n:
                return _usage(f"need at least {n} parameters, got {len(params)}")
            n = len(params)
        else:
            params = tuple(Fraction(i) for i in range(1, n + 1))

        if alternates(p_labels, q_labels):
            config = moment_curve(n, d, params)
            result = intersect_complementary(config, p_labels, q_labels)
            assert result.intersects and result.point is not None
            print(f"P={sorted(p_labels)} and Q={sorted(q_labels)} alternate; hulls intersect at:")
            print("  point: " + " ".join(format_rational(x) for x in result.point))
            print("  coeffs over P: " + " ".join(format_rational(c) for c in result.coeffs_first))
            print("  coeffs over Q: " + " ".join(format_rational(c) for c in result.coeffs_second))
            return EXIT_OK

        witness = separating_hyperplane_moment(p_labels, q_labels, params, d)
        print(f"separating hyperplane for P={sorted(p_labels)} vs Q={sorted(q_labels)} (d={d}):")
        print("  coefficients: " + " ".join(format_rational(c) for c in witness.coefficients))
        print(f"  offset: {format_rational(witness.offset)}")
        print("  midpoint roots: " + " ".join(format_rational(r) for r in witness.midpoint_roots))
        print("  filler roots: " + (" ".join(format_rational(r) for r in witness.filler_roots) or "(none)"))
        print(f"  bicolored gaps: {witness.bicolored_count}")
        for label in sorted(p_labels + q_labels):
            side = "P" if label in p_labels else "Q"
            value = witness.value_at(params[label - 1])
            print(f"  p({format_rational(params[label - 1])}) = {format_rational(value)}  [{side}]")
        return EXIT_OK
    except ContractError as exc:
        return _usage(str(exc))
    except DegeneracyError as exc:
        print(f"degeneracy: {exc}", file=sys.stderr)
        return EXIT_DEGENERACY


# ---------------------------------- sample ----------------------------------


def cmd_sample(args) -> int:
    try:
        config = sample_random_configuration(args.n, args.d, args.seed, args.bound)
    except ContractError as exc:
        return _usage(str(exc))
    except SamplingError as exc:
        print(f"sampling failed: {exc}", file=sys.stderr)
        return EXIT_DEGENERACY
    save_points(config, args.out)
    print(f"wrote {args.out}: {config.provenance.describe()}")
    return EXIT_OK


# ----------------------------------- plot -----------------------------------


def _svg_document(config: Configuration, linked: set) -> str:
    width = height = 640
    margin = 60.0
    xs = [float(p[0]) for p in config.points]
    ys = [float(p[1]) for p in config.points]
    span_x = max(xs) - min(xs) or 1.0
    span_y = max(ys) - min(ys) or 1.0
    scale = min((width - 2 * margin) / span_x, (height - 2 * margin) / span_y)

    def place(point):
        x = margin + (float(point[0]) - min(xs)) * scale
        y = height - margin - (float(point[1]) - min(ys)) * scale
        return x, y

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for first, second in combinations_colex(tuple(config.labels), 2):
        color = "#c0392b" if (first, second) in linked else "#27ae60"
        swidth = 3 if (first, second) in linked else 1
        x1, y1 = place(config.point(first))
        x2, y2 = place(config.point(second))
        parts.append(
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
            f'stroke="{color}" stroke-width="{swidth}"/>'
        )
    for label in config.labels:
        x, y = place(config.point(label))
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="6" fill="#2c3e50"/>')
        parts.append(
            f'<text x="{x + 10:.2f}" y="{y - 10:.2f}" font-size="18" '
            f'font-family="sans-serif">{label}</text>'
        )
    parts.append(
        f'<text x="{margin}" y="{height - 15}" font-size="14" font-family="sans-serif">'
        f"{len(linked)} linked segment(s); red = linked, green = unlinked</text>"
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_plot(args) -> int:
    if (args.input is None) == (args.k is None):
        return _usage("exactly one of --input or --k is required")
    if args.k is not None:
        if args.k != 1:
            return _usage("plotting is implemented for the planar case only (k=1)")
        config = moment_curve(5, 2)
    else:
        try:
            config = load_points(args.input)
        except (OSError, ValueError) as exc:
            return _usage(f"cannot read point set {args.input}: {exc}")
    if config.dimension != 2 or config.n != 5:
        return _usage("plot needs 5 points in the plane")
    try:
        report = total_linked_parity(config)
    except DegeneracyError as exc:
        print(f"degeneracy: {exc}", file=sys.stderr)
        return EXIT_DEGENERACY
    with open(args.out, "w", encoding="ascii") as handle:
        handle.write(_svg_document(config, set(report.linked_subsets)))
    print(f"wrote {args.out}: total linked = {report.total_linked}")
    return EXIT_OK


# ----------------------------------------------------------------------------


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "verify": cmd_verify,
        "parity": cmd_parity,
        "alternation": cmd_alternation,
        "witness": cmd_witness,
        "sample": cmd_sample,
        "plot": cmd_plot,
    }
    try:
        return handlers[args.command](args)
    except ContractError as exc:
        return _usage(str(exc))
    except OSError as exc:
        return _usage(str(exc))


if __name__ == "__main__":
    sys.exit(main())
