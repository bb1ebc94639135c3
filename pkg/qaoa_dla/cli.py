import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path
from typing import Any

from qaoa_dla.batch import run_batch, write_csv, write_jsonl
from qaoa_dla.classify.pipeline import AnalysisOptions, analyze
from qaoa_dla.config import get_settings
from qaoa_dla.errors import DlaError, UnsupportedSizeError
from qaoa_dla.graphs.enumerate import enumerate_connected
from qaoa_dla.graphs.families import generate_family
from qaoa_dla.graphs.maxcut import brute_maxcut
from qaoa_dla.graphs.sampling import PRNG_ID, sample_er
from qaoa_dla.graphs.subdivision import reduce_to_subdivision
from qaoa_dla.instances.formats import emit_edgelist, emit_mqlib
from qaoa_dla.instances.records import InstanceRecord, load_instance
from qaoa_dla.logging import configure_logging
from qaoa_dla.pauli.closure import lie_closure, multiangle_generators, qaoa_generators
from qaoa_dla.schemas import DlaReportOut
from qaoa_dla.splitting.certificate import certify_asym_subdivision, verify_certificate
from qaoa_dla.splitting.partition import bfs_splitting, split_generators
from qaoa_dla.splitting.recursive import check_free_recursive

EXIT_OK = 0
EXIT_INSTANCE_ERROR = 1
EXIT_USAGE = 2


def print_json(payload: Any) -> None:
    print(json.dumps(payload, indent=2))


def load(args: argparse.Namespace) -> InstanceRecord:
    record = load_instance(args.file, args.format, ignore_weights=args.ignore_weights)
    return replace(record, graph=record.graph.without_uniform_weights())


def emit(graph, fmt: str) -> str:
    return emit_edgelist(graph) if fmt == "edgelist" else emit_mqlib(graph)


def cmd_analyze(args: argparse.Namespace) -> int:
    record = load(args)
    opts = AnalysisOptions(brute_force=args.brute_force, max_closure_qubits=args.max_closure_qubits)
    report = analyze(record.graph, opts, instance_id=record.id)
    print(DlaReportOut.from_report(report, prng_id=record.prng_id).model_dump_json(indent=2))
    return EXIT_OK


def cmd_batch(args: argparse.Namespace) -> int:
    opts = AnalysisOptions(brute_force=args.brute_force, max_closure_qubits=args.max_closure_qubits)
    result = run_batch(
        args.paths,
        opts,
        threads=args.threads,
        fmt=args.format,
        ignore_weights=args.ignore_weights,
        include_timings=args.timings,
    )
    writer = write_csv if args.output == "csv" else write_jsonl
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as stream:
            writer(result.rows, stream)
    else:
        writer(result.rows, sys.stdout)
    print(result.summary.model_dump_json(), file=sys.stderr)
    if args.strict and result.has_errors:
        return EXIT_INSTANCE_ERROR
    return EXIT_OK


def cmd_sample_er(args: argparse.Namespace) -> int:
    out_dir = Path(args.out_dir) if args.out_dir else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    for i in range(args.count):
        seed = args.seed + i
        graph = sample_er(args.n, args.p, seed)
        text = f"# prng={PRNG_ID} seed={seed}\n" + emit(graph, args.format)
        if out_dir:
            suffix = "txt" if args.format == "mqlib" else "edges"
            (out_dir / f"er_n{args.n}_p{args.p}_s{seed}.{suffix}").write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    record = load(args)
    sub = reduce_to_subdivision(record.graph.unweighted())
    payload: dict[str, Any] = {
        "instance_id": record.id,
        "n": sub.original.n,
        "m": sub.original.m,
        "subdivided_n": sub.subdivided.n,
        "subdivided_m": sub.subdivided.m,
        "vertex_delta": sub.vertex_delta,
        "maxcut_delta": None,
        "verified": None,
    }
    try:
        delta = brute_maxcut(sub.subdivided).value - brute_maxcut(sub.original).value
    except UnsupportedSizeError:
        pass
    else:
        payload["maxcut_delta"] = delta
        payload["verified"] = delta == sub.vertex_delta
    if args.emit:
        Path(args.emit).write_text(emit(sub.subdivided, args.format), encoding="utf-8")
    print_json(payload)
    return EXIT_OK if payload["verified"] is not False else EXIT_INSTANCE_ERROR


def cmd_closure(args: argparse.Namespace) -> int:
    record = load(args)
    graph = record.graph
    if args.generators == "multiangle":
        generators = multiangle_generators(graph.unweighted())
    elif args.generators == "split":
        generators = split_generators(graph, bfs_splitting(graph))
    else:
        generators = qaoa_generators(graph)
    cap = args.max_qubits or args.max_closure_qubits
    basis = lie_closure(generators, args.max_dim, max_qubits=cap)
    print_json({"instance_id": record.id, "generators": args.generators, "n": graph.n, "dimension": basis.dimension})
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    for graph in enumerate_connected(args.n):
        print(" ".join(f"{u}-{v}" for u, v in graph.edges))
    return EXIT_OK


def cmd_families(args: argparse.Namespace) -> int:
    sys.stdout.write(emit(generate_family(args.spec), args.format))
    return EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    record = load(args)
    cert = certify_asym_subdivision(record.graph)
    if args.verify:
        verify_certificate(record.graph, cert, replay=not args.structural_only)
    sys.stdout.write(cert.to_text())
    return EXIT_OK


def cmd_check_free(args: argparse.Namespace) -> int:
    record = load(args)
    free = check_free_recursive(record.graph, args.cap)
    print_json({"instance_id": record.id, "n": record.graph.n, "cap": args.cap, "free": free})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("mqlib", "edgelist"), default="mqlib")
    common.add_argument("--ignore-weights", action="store_true")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=None, help="0 means one per CPU")
    common.add_argument("--output", choices=("json", "csv"), default="json")
    common.add_argument("--max-closure-qubits", type=int, default=None)
    common.add_argument("--strict", action="store_true", help="exit 1 when any instance fails")
    common.add_argument("--log-level", default=None)

    parser = argparse.ArgumentParser(prog="qaoa-dla", description="QAOA-MaxCut dynamical Lie algebra analysis")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze_cmd = sub.add_parser("analyze", parents=[common], help="Analyze one instance, JSON report to stdout")
    analyze_cmd.add_argument("file")
    analyze_cmd.add_argument("--brute-force", action="store_true", help="allow the closure oracle")
    analyze_cmd.set_defaults(func=cmd_analyze)

    batch = sub.add_parser("batch", parents=[common], help="Analyze many instances")
    batch.add_argument("paths", nargs="*", help="files or directories")
    batch.add_argument("--out", help="write rows here instead of stdout")
    batch.add_argument("--brute-force", action="store_true", help="allow the closure oracle")
    batch.add_argument("--timings", action="store_true", help="include per-stage timings in rows")
    batch.set_defaults(func=cmd_batch)

    sample = sub.add_parser("sample-er", parents=[common], help="Sample Erdos-Renyi instances")
    sample.add_argument("--n", type=int, required=True)
    sample.add_argument("--p", type=float, required=True)
    sample.add_argument("--count", type=int, default=1)
    sample.add_argument("--out-dir")
    sample.set_defaults(func=cmd_sample_er)

    reduce = sub.add_parser("reduce", parents=[common], help="Reduce to an asymmetric subdivision and check MaxCut")
    reduce.add_argument("file")
    reduce.add_argument("--emit", help="write the subdivided instance here")
    reduce.set_defaults(func=cmd_reduce)

    closure = sub.add_parser("closure", parents=[common], help="Brute-force Lie closure dimension")
    closure.add_argument("file")
    closure.add_argument("--max-qubits", type=int, default=None)
    closure.add_argument("--max-dim", type=int, default=None)
    closure.add_argument("--generators", choices=("qaoa", "multiangle", "split"), default="qaoa")
    closure.set_defaults(func=cmd_closure)

    enum = sub.add_parser("enumerate", parents=[common], help="Connected graphs up to isomorphism")
    enum.add_argument("--n", type=int, required=True)
    enum.set_defaults(func=cmd_enumerate)

    families = sub.add_parser("families", parents=[common], help="Emit a named family, e.g. Spider(1,2,3)")
    families.add_argument("--spec", required=True)
    families.set_defaults(func=cmd_families)

    certify = sub.add_parser("certify", parents=[common], help="Freeness certificate of an asymmetric subdivision")
    certify.add_argument("file")
    certify.add_argument("--verify", action="store_true")
    certify.add_argument("--structural-only", action="store_true", help="skip algebraic replay when verifying")
    certify.set_defaults(func=cmd_certify)

    check = sub.add_parser("check-free", parents=[common], help="Recursive freeness check")
    check.add_argument("file")
    check.add_argument("--cap", type=int, default=None)
    check.set_defaults(func=cmd_check_free)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level or get_settings().log_level, stream=sys.stderr)
    try:
        return args.func(args)
    except DlaError as exc:
        print(json.dumps({"code": exc.code, "message": exc.message, "context": exc.context}, default=str), file=sys.stderr)
        return EXIT_INSTANCE_ERROR
    except OSError as exc:
        print(json.dumps({"code": "IO_ERROR", "message": str(exc)}), file=sys.stderr)
        return EXIT_INSTANCE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
