"""Command-line front end.

Commands: ``recognize`` (decide and certify), ``certify`` (emit just the
witness poset), ``verify`` (check a certificate against a graph), ``oracle``
(brute-force membership at small sizes), ``gen`` (corpus generators).

Exit codes: 0 for acceptance / successful verification, 1 for a rejection
or mismatch, 2 for usage and format errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from cigraph import chordal as chordal_mod
from cigraph import cographs as cograph_mod
from cigraph import generate, io, oracle
from cigraph.errors import ContractViolation
from cigraph.graphs import Graph, is_connected
from cigraph.posets import Poset, ci_graph_mismatch

SCHEMA_VERSION = 1


def _load_graph(path: str, fmt: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    if fmt == "graph6":
        return io.parse_graph6(text)
    return io.parse_edge_list(text)


def _names(g: Graph) -> list[str]:
    return list(g.labels) if g.labels else [str(v) for v in range(g.n)]


def _fmt_vertices(g: Graph, vs) -> str:
    names = _names(g)
    return " ".join(names[v] for v in vs)


def _certificate_json(p: Optional[Poset]):
    if p is None:
        return None
    return {
        "elements": p.n,
        "covers": [list(c) for c in p.covers],
        "ranks": list(p.ranks) if p.ranks is not None else None,
    }


def _decomposition_json(d):
    if d is None:
        return None
    return {
        "parts": [
            {"c1": list(c1), "c2": list(c2), "c3": list(c3)} for c1, c2, c3 in d.parts
        ],
        "universal": list(d.universal),
    }


def _chordal_result_json(v: chordal_mod.ChordalVerdict):
    return {
        "status": v.status,
        "reason": v.reason,
        "witness": list(v.witness) if v.witness is not None else None,
        "certificate": _certificate_json(v.certificate),
    }


def _cograph_result_json(v: cograph_mod.CographVerdict):
    return {
        "status": v.status,
        "reason": v.reason,
        "witness": list(v.witness) if v.witness is not None else None,
        "certificate": _certificate_json(v.certificate),
        "decomposition": _decomposition_json(v.decomposition),
        "cotree": cograph_mod.format_cotree(v.cotree) if v.cotree else None,
    }


def _run_pipelines(g: Graph, pipeline: str, use_mcs: bool):
    """Per-pipeline verdicts plus the overall accepted flag."""
    results = {}
    certificates = []
    if pipeline in ("auto", "chordal"):
        v = chordal_mod.recognize_chordal_ci(g, use_mcs=use_mcs)
        results["chordal"] = v
        if v.certificate is not None:
            certificates.append(v.certificate)
    run_cograph = pipeline == "cograph"
    if pipeline == "auto":
        chordal_v = results["chordal"]
        run_cograph = (
            chordal_v.status == chordal_mod.NOT_CHORDAL
            or cograph_mod.build_cotree(g) is not None
        )
    if run_cograph:
        v = cograph_mod.recognize_ci_cograph(g)
        results["cograph"] = v
        if v.certificate is not None:
            certificates.append(v.certificate)
    if (
        "chordal" in results
        and "cograph" in results
        and results["chordal"].status != chordal_mod.NOT_CHORDAL
        and results["cograph"].status != cograph_mod.NOT_COGRAPH
        and results["chordal"].accepted != results["cograph"].accepted
    ):
        raise AssertionError(
            "chordal and cograph pipelines disagree on a chordal cograph"
        )
    accepted = any(v.accepted for v in results.values())
    return results, accepted, certificates


def _oracle_verdict(g: Graph, args) -> Optional[Poset]:
    limit = args.oracle_max_n
    if g.n > limit:
        raise ValueError(
            f"oracle pipeline limited to {limit} vertices (graph has {g.n}); "
            "raise --oracle-max-n up to 7 if intended"
        )
    workers = getattr(args, "workers", 1)
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        edges = list(g.edges())
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(oracle.search_chunk, g.n, edges, workers, i)
                for i in range(workers)
            ]
            found = [f.result() for f in futures]
        for covers in found:  # smallest chunk index wins: deterministic
            if covers is not None:
                return Poset(g.n, [tuple(c) for c in covers])
        return None
    return oracle.is_ci_graph_bruteforce(g)


def _print_text_result(g: Graph, kind: str, v) -> None:
    line = f"{kind}: {v.status}"
    if v.reason:
        line += f" ({v.reason})"
    print(line)
    if v.witness:
        print(f"  witness: {_fmt_vertices(g, v.witness)}")
    if v.certificate is not None:
        print(
            f"  certificate: {v.certificate.n} elements, "
            f"{len(v.certificate.covers)} covers"
        )


def cmd_recognize(args) -> int:
    g = _load_graph(args.path, args.format)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "recognize",
        "input": {"n": g.n, "m": g.m},
        "pipeline": args.pipeline,
    }
    if not is_connected(g):
        doc.update(status="not_connected", results={}, accepted=False)
        if args.output == "structured":
            print(json.dumps(doc, indent=2))
        elif args.output == "text":
            print("not_connected: C-I graphs are connected")
        return 1
    if args.pipeline == "oracle":
        cert = _oracle_verdict(g, args)
        accepted = cert is not None
        doc["results"] = {
            "oracle": {
                "status": "ci" if accepted else "not_ci",
                "certificate": _certificate_json(cert),
            }
        }
        doc["accepted"] = accepted
        certs = [cert] if cert is not None else []
    else:
        results, accepted, certs = _run_pipelines(g, args.pipeline, args.mcs)
        doc["results"] = {
            kind: (
                _chordal_result_json(v)
                if isinstance(v, chordal_mod.ChordalVerdict)
                else _cograph_result_json(v)
            )
            for kind, v in results.items()
        }
        doc["accepted"] = accepted
    if args.output == "structured":
        print(json.dumps(doc, indent=2))
    elif args.output == "dot":
        if certs:
            print(io.hasse_dot(certs[0], labels=g.labels), end="")
    else:
        if args.pipeline == "oracle":
            status = "ci" if doc["accepted"] else "not_ci"
            print(f"oracle: {status}")
        else:
            for kind, v in results.items():
                _print_text_result(g, kind, v)
        print(f"verdict: {'accepted' if doc['accepted'] else 'rejected'}")
    return 0 if doc["accepted"] else 1


def cmd_certify(args) -> int:
    g = _load_graph(args.path, args.format)
    if not is_connected(g):
        print("not_connected: C-I graphs are connected", file=sys.stderr)
        return 1
    if args.pipeline == "oracle":
        cert = _oracle_verdict(g, args)
    else:
        _, _, certs = _run_pipelines(g, args.pipeline, args.mcs)
        cert = certs[0] if certs else None
    if cert is None:
        print("rejected: no certificate for this input", file=sys.stderr)
        return 1
    if args.output == "structured":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "certify",
            "input": {"n": g.n, "m": g.m},
            "certificate": _certificate_json(cert),
        }
        print(json.dumps(doc, indent=2))
    elif args.output == "dot":
        print(io.hasse_dot(cert, labels=g.labels), end="")
    else:
        print(io.format_poset(cert), end="")
    return 0


def cmd_verify(args) -> int:
    g = _load_graph(args.graph, args.format)
    cert = io.parse_poset(Path(args.certificate).read_text())
    if not cert.validate():
        print(f"invalid certificate: {cert.violation()}", file=sys.stderr)
        return 1
    if cert.n != g.n:
        print(
            f"mismatch: certificate has {cert.n} elements, graph has {g.n}",
            file=sys.stderr,
        )
        return 1
    pair = ci_graph_mismatch(cert, g)
    if pair is None:
        print("verified: certificate generates the graph")
        return 0
    print(f"mismatch at pair ({pair[0]}, {pair[1]})", file=sys.stderr)
    return 1


def cmd_oracle(args) -> int:
    g = _load_graph(args.path, args.format)
    if not is_connected(g):
        print("not_connected: C-I graphs are connected", file=sys.stderr)
        return 1
    cache = {}
    cache_path = Path(args.cache) if args.cache else None
    key = io.format_graph6(g)
    if cache_path and cache_path.exists():
        cache = json.loads(cache_path.read_text())
    if key in cache:
        entry = cache[key]
        cert = (
            Poset(g.n, [tuple(c) for c in entry["covers"]])
            if entry["covers"] is not None
            else None
        )
    else:
        cert = _oracle_verdict(g, args)
        if cache_path:
            cache[key] = {
                "ci": cert is not None,
                "covers": [list(c) for c in cert.covers] if cert else None,
            }
            cache_path.write_text(json.dumps(cache, indent=2))
    if args.output == "structured":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "oracle",
            "input": {"n": g.n, "m": g.m},
            "accepted": cert is not None,
            "certificate": _certificate_json(cert),
        }
        print(json.dumps(doc, indent=2))
    elif cert is not None:
        print(io.format_poset(cert), end="")
    else:
        print("not_ci: no poset generates this graph")
    return 0 if cert is not None else 1


def cmd_gen(args) -> int:
    kind = args.kind
    size = args.size
    if size < 1:
        raise ValueError("size must be at least 1")
    if kind == "path":
        g = generate.path_graph(size)
    elif kind == "complete":
        g = generate.complete_graph(size)
    elif kind == "fan":
        g = generate.fan(size)
    elif kind == "bowtie-chain":
        g = generate.bowtie_chain(size)
    else:  # random-ci
        g, _ = generate.random_ci(size, seed=args.seed)
    if args.format == "graph6":
        print(io.format_graph6(g))
    else:
        print(io.format_edge_list(g), end="")
    return 0


def _add_input_flags(sub, output_choices=("text", "structured", "dot")) -> None:
    sub.add_argument(
        "--format",
        choices=("edge-list", "graph6"),
        default="edge-list",
        help="input graph format",
    )
    sub.add_argument(
        "--output",
        choices=output_choices,
        default="text",
        help="output rendering",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cigraph",
        description="recognize and certify chordal / cograph cover-incomparability graphs",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    rec = subs.add_parser("recognize", help="decide membership, with certificate")
    rec.add_argument("path", help="graph file, or - for stdin")
    rec.add_argument(
        "--pipeline",
        choices=("auto", "chordal", "cograph", "oracle"),
        default="auto",
    )
    rec.add_argument("--mcs", action="store_true", help="order vertices by MCS instead of Lex-BFS")
    rec.add_argument("--oracle-max-n", type=int, default=6, choices=range(1, 8))
    rec.add_argument("--workers", type=int, default=1)
    _add_input_flags(rec)
    rec.set_defaults(func=cmd_recognize)

    cer = subs.add_parser("certify", help="emit a witness poset")
    cer.add_argument("path")
    cer.add_argument(
        "--pipeline",
        choices=("auto", "chordal", "cograph", "oracle"),
        default="auto",
    )
    cer.add_argument("--mcs", action="store_true")
    cer.add_argument("--oracle-max-n", type=int, default=6, choices=range(1, 8))
    cer.add_argument("--workers", type=int, default=1)
    _add_input_flags(cer)
    cer.set_defaults(func=cmd_certify)

    ver = subs.add_parser("verify", help="check a certificate against a graph")
    ver.add_argument("graph")
    ver.add_argument("certificate")
    ver.add_argument(
        "--format", choices=("edge-list", "graph6"), default="edge-list"
    )
    ver.set_defaults(func=cmd_verify)

    orc = subs.add_parser("oracle", help="brute-force membership (small graphs)")
    orc.add_argument("path")
    orc.add_argument("--oracle-max-n", type=int, default=6, choices=range(1, 8))
    orc.add_argument("--workers", type=int, default=1)
    orc.add_argument("--cache", help="JSON cache file keyed by graph6 string")
    _add_input_flags(orc, output_choices=("text", "structured"))
    orc.set_defaults(func=cmd_oracle)

    gen = subs.add_parser("gen", help="generate corpus graphs")
    gen.add_argument(
        "kind", choices=("path", "complete", "fan", "bowtie-chain", "random-ci")
    )
    gen.add_argument("size", type=int)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument(
        "--format", choices=("edge-list", "graph6"), default="edge-list"
    )
    gen.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ContractViolation, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
