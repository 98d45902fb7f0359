"""Command-line front end.

Exit codes: 0 verified/success, 1 refuted, 2 usage error, 3 caps refusal,
4 internal-consistency fault.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
import traceback

from .bounds import improved_bound, n0_threshold
from .certify import (
    SCHEMA_VERSION,
    STRUCTURED,
    TEXT,
    TOOL_VERSION,
    VERIFIED,
    RunConfig,
    cmd_check_duality,
    cmd_report_class,
    cmd_verify_l_trace_minimal,
    cmd_verify_t_optimal,
    cmd_verify_trace_minimal,
    construct_summary,
    report_render_text,
    report_to_json,
)
from .enumeration import Caps, GraphClassSpec, enumerate_by_edges, enumerate_regular, spool_class
from .errors import CapsExceededError, Graph6Error, InternalConsistencyError
from .graphs import complement, extend_g0, from_graph6, h_family, join_power, to_graph6
from .linalg import spanning_tree_count
from .sequences import adjacency_sequence, gap_sequence, laplacian_sequence

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_CAPS = 3
EXIT_INTERNAL = 4


def _default_workers() -> int:
    env = os.environ.get("TREEOPT_WORKERS")
    if env is not None:
        value = int(env)  # bad values surface as a usage error
        if value < 1:
            raise ValueError(f"TREEOPT_WORKERS must be positive, got {env!r}")
        return value
    return os.cpu_count() or 1


def _config(ns) -> RunConfig:
    workers = ns.workers if ns.workers is not None else _default_workers()
    if workers < 1:
        raise ValueError("--workers must be positive")
    fmt = STRUCTURED if ns.format == "structured" else TEXT
    return RunConfig(worker_count=workers, caps=Caps(override=ns.caps_override),
                     output_path=getattr(ns, "out", None), format=fmt)


def _emit_payload(config: RunConfig, payload: dict, text: str) -> None:
    if config.format == STRUCTURED:
        payload.setdefault("schema_version", SCHEMA_VERSION)
        payload.setdefault("tool_version", TOOL_VERSION)
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text)


def _emit_certificate(config: RunConfig, cert) -> int:
    sys.stdout.write(cert.to_json() if config.format == STRUCTURED
                     else cert.render_text())
    return EXIT_OK if cert.verdict == VERIFIED else EXIT_REFUTED


def _run_count(ns) -> int:
    config = _config(ns)
    g = from_graph6(ns.g6)
    t = spanning_tree_count(g)
    _emit_payload(config,
                  {"command": "count", "graph6": ns.g6, "n": str(g.n),
                   "m": str(g.m), "t": str(t)},
                  f"t = {t}\n")
    return EXIT_OK


def _run_seq(ns) -> int:
    config = _config(ns)
    g = from_graph6(ns.g6)
    if ns.k < 1:
        raise ValueError("--k must be at least 1")
    seq = (laplacian_sequence if ns.kind == "lap" else adjacency_sequence)(g, ns.k)
    vals = " ".join(str(v) for v in seq.values)
    _emit_payload(config,
                  {"command": "seq", "kind": ns.kind, "graph6": ns.g6,
                   "k": str(ns.k), "values": [str(v) for v in seq.values]},
                  f"{ns.kind} traces k=1..{ns.k}: {vals}\n")
    return EXIT_OK


def _run_gaps(ns) -> int:
    config = _config(ns)
    g = from_graph6(ns.g6)
    if ns.k < 1:
        raise ValueError("--k must be at least 1")
    gaps = gap_sequence(g, ns.k)
    vals = " ".join(str(v) for v in gaps.values)
    _emit_payload(config,
                  {"command": "gaps", "graph6": ns.g6, "k": str(ns.k),
                   "values": [str(v) for v in gaps.values]},
                  f"gaps k=1..{ns.k}: {vals}\n")
    return EXIT_OK


def _run_verify(ns) -> int:
    config = _config(ns)
    g = from_graph6(ns.g6)
    if ns.mode == "t-optimal":
        if ns.m is None:
            raise ValueError("verify t-optimal needs --m")
        cert = cmd_verify_t_optimal(g, ns.n, ns.m, config)
    else:
        if ns.d is None:
            raise ValueError(f"verify {ns.mode} needs --d")
        cmd = (cmd_verify_trace_minimal if ns.mode == "trace-min"
               else cmd_verify_l_trace_minimal)
        cert = cmd(g, ns.n, ns.d, config)
    return _emit_certificate(config, cert)


def _run_duality(ns) -> int:
    config = _config(ns)
    cert = cmd_check_duality(ns.n, ns.d, config)
    return _emit_certificate(config, cert)


def _run_construct(ns) -> int:
    config = _config(ns)
    if ns.family == "h":
        if ns.n is None:
            raise ValueError("construct h needs --n")
        g = h_family(ns.n)
    elif ns.family == "g0pq":
        if ns.g6 is None or ns.d is None or ns.p is None or ns.q is None:
            raise ValueError("construct g0pq needs --g6, --d, --p, --q")
        g = extend_g0(from_graph6(ns.g6), ns.d, ns.p, ns.q)
    elif ns.family == "join-power":
        if ns.g6 is None or ns.k is None:
            raise ValueError("construct join-power needs --g6 and --k")
        g = join_power(from_graph6(ns.g6), ns.k)
    else:  # complement
        if ns.g6 is None:
            raise ValueError("construct complement needs --g6")
        g = complement(from_graph6(ns.g6))
    s = construct_summary(g)
    text = (f"{s['graph6']}\n"
            f"n={s['n']} m={s['m']} degrees {s['degree_min']}..{s['degree_max']} "
            f"girth {s['girth']}\n")
    _emit_payload(config, {"command": "construct", "family": ns.family, **s}, text)
    return EXIT_OK


def _run_enumerate(ns) -> int:
    config = _config(ns)
    if ns.klass == "r":
        if ns.d is None:
            raise ValueError("--class r needs --d")
        spec = GraphClassSpec("regular", ns.n, d=ns.d)
    else:
        if ns.m is None:
            raise ValueError("--class s needs --m")
        spec = GraphClassSpec("edges", ns.n, m=ns.m)
    if ns.out:
        count = spool_class(spec, ns.out, config.caps, config.worker_count)
        _emit_payload(config,
                      {"command": "enumerate", "out": ns.out, "count": str(count),
                       "class_spec": {k: str(v) for k, v in spec.to_dict().items()}},
                      f"{count} classes written to {ns.out}\n")
        return EXIT_OK
    if spec.kind == "regular":
        stream = enumerate_regular(ns.n, ns.d, config.caps, config.worker_count)
    else:
        stream = enumerate_by_edges(ns.n, ns.m, config.caps, config.worker_count)
    forms = [to_graph6(g) for g in stream.graphs]
    lines = "".join(f"{f}\n" for f in forms)
    payload = {"command": "enumerate", "count": str(len(stream)),
               "class_spec": {k: str(v) for k, v in spec.to_dict().items()},
               "graphs": forms}
    if stream.warning:
        payload["warning"] = stream.warning
        if config.format == TEXT:
            print(f"warning: {stream.warning}", file=sys.stderr)
    _emit_payload(config, payload, lines)
    return EXIT_OK


def _run_bound(ns) -> int:
    config = _config(ns)
    g = from_graph6(ns.g6)
    report = improved_bound(g, ns.c)
    payload = {
        "command": "bound",
        "graph6": ns.g6,
        "c_used": str(report.c_used),
        "bound_value": repr(report.bound_value),
        "exact_t": str(report.exact_t),
        "slack": repr(report.slack),
        "equality_flag": report.equality_flag,
        "connected_complement": report.connected_complement,
    }
    text = (f"bound (c={report.c_used}): {report.bound_value!r}\n"
            f"exact t(complement): {report.exact_t}\n"
            f"slack: {report.slack!r}\n"
            f"equality: {report.equality_flag}\n"
            f"connected complement: {report.connected_complement}\n")
    _emit_payload(config, payload, text)
    return EXIT_OK


def _run_report(ns) -> int:
    config = _config(ns)
    report = cmd_report_class(ns.n, ns.m, config)
    sys.stdout.write(report_to_json(report) if config.format == STRUCTURED
                     else report_render_text(report))
    return EXIT_OK


def _run_threshold(ns) -> int:
    config = _config(ns)
    value = n0_threshold(ns.g0_order, ns.d, ns.c)
    _emit_payload(config,
                  {"command": "threshold", "g0_order": str(ns.g0_order),
                   "d": str(ns.d), "c": str(ns.c), "n0": str(value)},
                  f"n0 = {value}\n")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=int, default=None,
                        help="worker processes (default: TREEOPT_WORKERS or all cores)")
    common.add_argument("--format", choices=["text", "structured"], default="text")
    common.add_argument("--caps-override", action="store_true",
                        help="raise the enumeration size caps one notch")

    parser = argparse.ArgumentParser(prog="treeopt",
                                     description="exact spanning-tree toolkit")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("count", parents=[common], help="spanning-tree count")
    p.add_argument("--g6", required=True)
    p.set_defaults(func=_run_count)

    p = sub.add_parser("seq", parents=[common], help="trace sequence prefix")
    p.add_argument("--kind", choices=["lap", "adj"], required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--g6", required=True)
    p.set_defaults(func=_run_seq)

    p = sub.add_parser("gaps", parents=[common], help="gap sequence prefix")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--g6", required=True)
    p.set_defaults(func=_run_gaps)

    p = sub.add_parser("verify", parents=[common], help="minimality/optimality certificates")
    p.add_argument("mode", choices=["trace-min", "ltrace-min", "t-optimal"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--g6", required=True)
    p.set_defaults(func=_run_verify)

    p = sub.add_parser("duality", parents=[common],
                       help="L-trace minima vs complemented trace minima")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=_run_duality)

    p = sub.add_parser("construct", parents=[common], help="named graph constructions")
    p.add_argument("family", choices=["h", "g0pq", "join-power", "complement"])
    p.add_argument("--n", type=int)
    p.add_argument("--g6")
    p.add_argument("--d", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(func=_run_construct)

    p = sub.add_parser("enumerate", parents=[common], help="isomorphism classes of a class")
    p.add_argument("--class", dest="klass", choices=["r", "s"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--out", help="spool to file with a resumable checkpoint")
    p.set_defaults(func=_run_enumerate)

    p = sub.add_parser("bound", parents=[common], help="spanning-tree upper bound")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--g6", required=True)
    p.set_defaults(func=_run_bound)

    p = sub.add_parser("report", parents=[common], help="rank a class by tree count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=_run_report)

    p = sub.add_parser("threshold", parents=[common], help="family size threshold")
    p.add_argument("--g0-order", dest="g0_order", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.set_defaults(func=_run_threshold)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    try:
        return ns.func(ns)
    except (Graph6Error, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CapsExceededError as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_CAPS
    except InternalConsistencyError as e:
        print(f"internal fault: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception:
        traceback.print_exc()
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
