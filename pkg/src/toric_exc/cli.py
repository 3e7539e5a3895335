"""Command line front end.

Six subcommands: build, verify, cohomology, figure, gram, certificate.
All take --dim for the even ambient dimension. Exit codes: 0 means the
requested check passed or the object was emitted, 1 means a verification
failed, 2 means the invocation itself was malformed.

Heavy sweeps are kept off the default path: the cohomology oracle over
all ordered pairs is only run in full for dim 2 and 4, larger dimensions
fall back to a seeded 500-pair sample unless --allow-large forces the
full sweep. TORIC_EXC_THREADS splits oracle sweeps across processes;
output is sorted, so the thread count never changes what is printed.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from .cohomology import cohomology
from .collection import (
    Report,
    apply_mutation,
    build_Fn,
    build_Gn,
    collection_from_dict,
    collection_to_dict,
    expected_size,
    gram_matrix,
    verify_exceptional,
    verify_stability,
)
from .fan import build_Vn
from .picard import DivisorClass
from .windows import (
    KoszulEscape,
    WallMismatch,
    WindowViolation,
    build_certificate,
    certificate_to_dict,
    verify_walls,
)

WHATS = ("exceptional", "stability", "cardinality", "generation", "walls")
METHODS = ("inequalities", "forbidden", "oracle")
FORMATS = ("text", "json", "csv")
DEFAULT_SAMPLE = 500
REPORT_SCHEMA = "toric-exc/report/1"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.dim < 2 or args.dim % 2:
        return _usage("n must be even")
    handler = {
        "build": cmd_build,
        "verify": cmd_verify,
        "cohomology": cmd_cohomology,
        "figure": cmd_figure,
        "gram": cmd_gram,
        "certificate": cmd_certificate,
    }[args.command]
    return handler(args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toric-exc",
        description="Exceptional collections of line bundles on "
                    "centrally-symmetric toric Fano varieties.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=FORMATS):
        p.add_argument("--dim", type=int, required=True,
                       help="even ambient dimension n")
        p.add_argument("--format", choices=fmt, default="text")
        p.add_argument("--out", help="write the payload to this file")
        p.add_argument("--allow-large", action="store_true",
                       help="permit sweeps that take minutes or more")

    p = sub.add_parser("build", help="emit the standard collection (or the fan)")
    common(p)
    p.add_argument("--fan", action="store_true", help="emit the fan instead")

    p = sub.add_parser("verify", help="run one of the verifiers")
    common(p, fmt=("text", "json"))
    p.add_argument("--what", choices=WHATS, default="exceptional")
    p.add_argument("--method", choices=METHODS, default="inequalities")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for pair sampling (default 0)")
    p.add_argument("--sample", type=int,
                   help="check only this many sampled ordered pairs")
    p.add_argument("--mutate",
                   help="damage the collection first: drop:IDX, add:c,J, swap:I,J")
    p.add_argument("--full-report", action="store_true",
                   help="include every pair verdict in the payload")

    p = sub.add_parser("cohomology", help="cohomology of one divisor class")
    common(p)
    p.add_argument("--coeffs", required=True,
                   help="comma-separated h,d_0,...,d_n")

    p = sub.add_parser("figure", help="emit the admissible (c, l) point set")
    common(p)

    p = sub.add_parser("gram", help="Euler pairing matrix of the collection")
    common(p)

    p = sub.add_parser("certificate", help="emit the generation certificate")
    common(p, fmt=("text", "json"))
    return parser


def _usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)


def _dumps(payload) -> str:
    return json.dumps(payload, indent=2)


# -- build ---------------------------------------------------------------------


def cmd_build(args) -> int:
    n = args.dim
    if args.fan:
        fan = build_Vn(n)
        if args.format == "csv":
            return _usage("the fan has no csv form; use json or text")
        payload = {"schema": "toric-exc/fan/1", "rank": fan.rank,
                   "rays": [list(r) for r in fan.rays],
                   "cones": [sorted(c) for c in fan.max_cones]}
        if args.format == "json":
            _emit(args, _dumps(payload))
        else:
            lines = [f"rank {fan.rank}, {fan.nrays} rays, "
                     f"{len(fan.max_cones)} maximal cones"]
            lines += [f"ray {i}: {r}" for i, r in enumerate(fan.rays)]
            lines += [f"cone: {sorted(c)}" for c in fan.max_cones]
            _emit(args, "\n".join(lines))
        return 0
    collection = build_Gn(n)
    if args.format == "json":
        _emit(args, _dumps(collection_to_dict(collection)))
    elif args.format == "csv":
        from .picard import parse_F
        lines = ["block,ell,c,J"]
        for bi, block in enumerate(collection.blocks):
            for m in block.members:
                c, j = parse_F(m)
                lines.append(f"{bi},{block.ell},{c},{'-'.join(map(str, sorted(j)))}")
        _emit(args, "\n".join(lines))
    else:
        lines = [f"collection for dim {n}: {collection.size} members "
                 f"in {len(collection.blocks)} blocks"]
        from .picard import parse_F
        for bi, block in enumerate(collection.blocks):
            parts = []
            for m in block.members:
                c, j = parse_F(m)
                label = ",".join(map(str, sorted(j)))
                parts.append(f"F({c},{{{label}}})")
            lines.append(f"block {bi} (l = {block.ell}): " + "  ".join(parts))
        _emit(args, "\n".join(lines))
    return 0


# -- verify ----------------------------------------------------------------------


def sample_pairs(size: int, count: int, seed: int):
    """count distinct ordered pairs drawn without replacement, or None for all."""
    universe = size * (size - 1)
    if count >= universe:
        return None
    rng = random.Random(seed)
    pairs = []
    for p in rng.sample(range(universe), count):
        i, r = divmod(p, size - 1)
        pairs.append((i, r + (r >= i)))
    return pairs


def _verify_worker(payload):
    data, method, chunk = payload
    report = verify_exceptional(collection_from_dict(data), method, sample=chunk)
    return report.pairs_checked, report.violations


def _run_pair_sweep(collection, method, sample, full_report, threads) -> Report:
    if threads <= 1 or full_report:
        return verify_exceptional(collection, method, sample=sample,
                                  full_report=full_report)
    if sample is None:
        size = collection.size
        sample = [(i, j) for i in range(size) for j in range(size) if i != j]
        sampled = False
    else:
        sampled = True
    data = collection_to_dict(collection)
    chunks = [sample[k::threads] for k in range(threads)]
    checked = 0
    violations = []
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for part_checked, part_violations in pool.map(
                _verify_worker, [(data, method, c) for c in chunks if c]):
            checked += part_checked
            violations.extend(part_violations)
    violations.sort(key=lambda v: (v.source, v.target))
    return Report(
        n=collection.n, method=method, size=collection.size,
        expected=expected_size(collection.n), pairs_checked=checked,
        violations=tuple(violations), sampled=sampled)


def cmd_verify(args) -> int:
    n = args.dim
    what = args.what
    if what == "walls":
        if args.mutate:
            return _usage("the wall check has no collection to mutate")
        try:
            check = verify_walls(n)
        except WallMismatch as exc:
            payload = {"schema": REPORT_SCHEMA, "what": what, "n": n,
                       "ok": False, "error": str(exc)}
            _emit_report(args, payload, f"wall check FAILED: {exc}")
            return 1
        payload = {"schema": REPORT_SCHEMA, "what": what, "n": n, "ok": True,
                   "circuits": check.circuit_count, "pairs": check.pair_count,
                   "sign_choices": check.sign_choice_count}
        _emit_report(args, payload,
                     f"wall check ok: {check.circuit_count} circuits "
                     f"({check.pair_count} antipodal pairs, "
                     f"{check.sign_choice_count} slot choices)")
        return 0

    collection = build_Gn(n)
    if args.mutate:
        try:
            collection = apply_mutation(collection, args.mutate)
        except ValueError as exc:
            return _usage(str(exc))

    if what == "cardinality":
        ok = collection.size == expected_size(n)
        payload = {"schema": REPORT_SCHEMA, "what": what, "n": n, "ok": ok,
                   "size": collection.size, "expected": expected_size(n)}
        _emit_report(args, payload,
                     f"cardinality {'ok' if ok else 'FAILED'}: "
                     f"{collection.size} members, expected {expected_size(n)}")
        return 0 if ok else 1

    if what == "stability":
        report = verify_stability(collection)
        payload = {"schema": REPORT_SCHEMA, "what": what, "n": n,
                   "ok": report.ok, "failures": list(report.failures)}
        _emit_report(args, payload, f"stability {report.headline()}")
        return 0 if report.ok else 1

    if what == "generation":
        try:
            certificate = build_certificate(n, collection)
        except (WindowViolation, KoszulEscape) as exc:
            payload = {"schema": REPORT_SCHEMA, "what": what, "n": n,
                       "ok": False, "error": str(exc)}
            _emit_report(args, payload, f"generation FAILED: {exc}")
            return 1
        pieces = sum(len(r.pieces) for r in certificate.walls)
        payload = {"schema": REPORT_SCHEMA, "what": what, "n": n, "ok": True,
                   "walls": len(certificate.walls), "pieces": pieces,
                   "base_case": certificate.base_case}
        _emit_report(args, payload,
                     f"generation ok: {len(certificate.walls)} walls, "
                     f"{pieces} pieces, base case {certificate.base_case}")
        return 0

    # what == "exceptional"
    method = args.method
    sample = None
    if args.sample is not None:
        if args.sample <= 0:
            return _usage("--sample must be positive")
        sample = sample_pairs(collection.size, args.sample, args.seed)
    elif method == "oracle" and n >= 6 and not args.allow_large:
        sample = sample_pairs(collection.size, DEFAULT_SAMPLE, args.seed)
    if method == "forbidden" and n >= 8 and not args.allow_large:
        return _usage("the forbidden-cone sweep is slow for dim >= 8; "
                      "pass --allow-large to run it")
    threads = int(os.environ.get("TORIC_EXC_THREADS", "1"))
    report = _run_pair_sweep(collection, method, sample, args.full_report,
                             threads)
    payload = _report_payload(report, what)
    _emit_report(args, payload, _report_text(report))
    return 0 if report.ok else 1


def _report_payload(report: Report, what: str) -> dict:
    def pair_dict(r):
        return {"source": r.source, "target": r.target,
                "relation": r.relation, "ok": r.ok, "detail": r.detail}

    payload = {"schema": REPORT_SCHEMA, "what": what, "n": report.n,
               "ok": report.ok, "method": report.method, "size": report.size,
               "expected": report.expected, "complete": report.complete,
               "pairs_checked": report.pairs_checked, "sampled": report.sampled,
               "violations": [pair_dict(v) for v in report.violations]}
    if report.pair_results is not None:
        payload["pair_results"] = [pair_dict(r) for r in report.pair_results]
    return payload


def _report_text(report: Report) -> str:
    lines = [f"members: {report.size} (expected {report.expected})",
             f"method: {report.method}",
             f"pairs checked: {report.pairs_checked}"
             + (" (sampled)" if report.sampled else "")]
    for v in report.violations[:5]:
        lines.append(f"violation {v.source}->{v.target} ({v.relation}): {v.detail}")
    if len(report.violations) > 5:
        lines.append(f"... and {len(report.violations) - 5} more violations")
    lines.append("result: ok" if report.ok else "result: FAILED")
    return "\n".join(lines)


def _emit_report(args, payload, text) -> None:
    if args.format == "json":
        _emit(args, _dumps(payload))
    else:
        _emit(args, text)


# -- cohomology --------------------------------------------------------------------


def cmd_cohomology(args) -> int:
    n = args.dim
    try:
        coeffs = tuple(int(x) for x in args.coeffs.split(","))
    except ValueError:
        return _usage("--coeffs wants comma-separated integers")
    if len(coeffs) != n + 2:
        return _usage(f"--coeffs wants {n + 2} integers for dim {n}")
    graded = cohomology(build_Vn(n), DivisorClass(coeffs))
    if args.format == "json":
        _emit(args, _dumps({"schema": "toric-exc/cohomology/1", "n": n,
                            "coeffs": list(coeffs), "h": list(graded.ranks),
                            "euler": graded.euler}))
    elif args.format == "csv":
        lines = ["degree,rank"] + [f"{p},{r}" for p, r in enumerate(graded.ranks)]
        _emit(args, "\n".join(lines))
    else:
        terms = "  ".join(f"h^{p} = {r}" for p, r in enumerate(graded.ranks))
        _emit(args, f"{terms}  (euler {graded.euler})")
    return 0


# -- figure ------------------------------------------------------------------------

FIGURE_NOTE = ("note: listing derivations with multiplicity would show 27 "
               "tokens, with (4, 8) and (4, 9) each appearing twice; the 25 "
               "distinct pairs are emitted once each")


def cmd_figure(args) -> int:
    n = args.dim
    points = build_Fn(n)
    note = FIGURE_NOTE if n == 8 else None
    if note:
        print(note, file=sys.stderr)
    if args.format == "json":
        payload = {"schema": "toric-exc/figure/1", "n": n,
                   "points": [[c, ell] for c, ell in points]}
        if note:
            payload["note"] = note
        _emit(args, _dumps(payload))
    elif args.format == "csv":
        _emit(args, "\n".join(["c,ell"] + [f"{c},{ell}" for c, ell in points]))
    else:
        _emit(args, "\n".join(f"c = {c:3d}  l = {ell}" for c, ell in points))
    return 0


# -- gram --------------------------------------------------------------------------


def cmd_gram(args) -> int:
    n = args.dim
    if n >= 6 and not args.allow_large:
        return _usage("the Euler pairing sweep is slow for dim >= 6; "
                      "pass --allow-large to run it")
    matrix = gram_matrix(build_Gn(n))
    if args.format == "json":
        _emit(args, _dumps({"schema": "toric-exc/gram/1", "n": n,
                            "matrix": [list(row) for row in matrix]}))
    elif args.format == "csv":
        _emit(args, "\n".join(",".join(map(str, row)) for row in matrix))
    else:
        width = max(len(str(x)) for row in matrix for x in row)
        _emit(args, "\n".join(" ".join(f"{x:{width}d}" for x in row)
                              for row in matrix))
    return 0


# -- certificate -------------------------------------------------------------------


def cmd_certificate(args) -> int:
    n = args.dim
    try:
        certificate = build_certificate(n)
    except (WindowViolation, KoszulEscape) as exc:
        print(f"certificate construction failed: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        _emit(args, _dumps(certificate_to_dict(certificate)))
    else:
        lines = [f"generation certificate for dim {n}: "
                 f"{len(certificate.walls)} walls, gauge d = {certificate.d}, "
                 f"base case {certificate.base_case}"]
        for record in certificate.walls:
            pieces = ", ".join(
                f"a = {p.a} ({p.branch}, {len(p.components)} terms)"
                for p in record.pieces)
            lines.append(f"J = {sorted(record.J)}: window {record.window}, "
                         f"wall range {record.wall_range}: {pieces}")
        _emit(args, "\n".join(lines))
    return 0
