"""Command-line front end: construct the two graph families, analyze graphs,
and scan corpora for order-bound violations.

Subcommands: construct-even, construct-odd, analyze, spectrum, scan.
Reports are JSON on stdout and byte-identical across runs on the same input
(timings are opt-in for that reason).  Exit codes: 0 success, 1 failed
assertion or bound violation, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from circulant_lab import aut as aut_mod
from circulant_lab import graphio, kcirc, quotient
from circulant_lab.cayley import (
    CayleyLabeling,
    automorphism_from_group_automorphism,
    cayley_graph,
    left_translation,
)
from circulant_lab.errors import BadParams, CapExceeded, CirculantError, SearchTimeout
from circulant_lab.papergroups import OddElement, even_group, odd_group
from circulant_lab.perm import (
    DEFAULT_ENUMERATION_CAP,
    PermGroup,
    Permutation,
    compose,
    cycle_structure,
    is_semiregular,
    to_cycle_string,
)

CAP_ENV_VAR = "CIRCULANT_LAB_CAP"


def resolve_cap(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get(CAP_ENV_VAR)
    if env:
        return int(env)
    return DEFAULT_ENUMERATION_CAP


@dataclass
class Construction:
    family: str
    params: dict
    expected_n: int
    expected_k: int
    expected_c_order: int
    graph: graphio.Graph
    labeling: CayleyLabeling
    arc_group: PermGroup
    witness: Permutation


def build_even(m: int, p: int) -> Construction:
    group = even_group(m, p)
    S = group.connection_set()
    graph, labeling = cayley_graph(group, S)
    translations = [left_translation(group, labeling, s) for s in S]
    y_perm = automorphism_from_group_automorphism(group, labeling, group.apply_y, S)
    arc_group = PermGroup(graph.n, translations + [y_perm])
    c_elem, c_order = group.semiregular_generator()
    witness = left_translation(group, labeling, c_elem)
    expected_n = 2 * m * m * p // (3 if m % 3 == 0 else 1)
    return Construction(
        family="even",
        params={"m": m, "p": p, "alpha": group.params.alpha},
        expected_n=expected_n,
        expected_k=2 * m,
        expected_c_order=c_order,
        graph=graph,
        labeling=labeling,
        arc_group=arc_group,
        witness=witness,
    )


def build_odd(k: int) -> Construction:
    if k < 1 or k % 2 == 0:
        raise BadParams(f"k must be a positive odd integer (got {k}); "
                        "the 6k^2 family is defined for odd k only")
    group = odd_group(k)
    S = group.connection_set()
    graph, labeling = cayley_graph(group, S)
    translations = [left_translation(group, labeling, s) for s in S]
    sigma_perm = automorphism_from_group_automorphism(group, labeling, group.apply_sigma, S)
    arc_group = PermGroup(graph.n, translations + [sigma_perm])
    c_elem, c_order = group.semiregular_generator()
    # the generator lies outside R: its vertex action is
    # v -> label(r . sigma^j(element(v))), i.e. sigma-induced map then translation
    r_part = OddElement(c_elem.a, c_elem.b, c_elem.hx, c_elem.hy, 0)
    action = left_translation(group, labeling, r_part)
    for _ in range(c_elem.j):
        action = compose(sigma_perm, action)
    return Construction(
        family="odd",
        params={"k": k},
        expected_n=6 * k * k,
        expected_k=k,
        expected_c_order=c_order,
        graph=graph,
        labeling=labeling,
        arc_group=arc_group,
        witness=action,
    )


def verify_construction(cons: Construction) -> dict:
    """Re-check every claimed property of a constructed graph from scratch.

    Construction and verification share no state beyond the graph and the
    candidate permutations, which are re-validated against adjacency.  The
    arc-type comes from the full automorphism group, which may be larger
    than the assembled translations-plus-outer-automorphism group.
    """
    graph = cons.graph
    structure = cycle_structure(cons.witness)
    checks = {
        "order": graph.n == cons.expected_n,
        "cubic": graphio.is_cubic(graph),
        "connected": graphio.is_connected(graph),
        "arc_transitive": aut_mod.is_arc_transitive(graph, cons.arc_group),
        "witness_semiregular": is_semiregular(cons.witness),
        "witness_order": structure.element_order == cons.expected_c_order,
        "witness_orbit_count": len(structure.cycle_lengths) == cons.expected_k,
    }
    report = {
        "family": cons.family,
        "params": cons.params,
        "n": graph.n,
        "k": cons.expected_k,
        "checks": checks,
        "tutte_t": aut_mod.tutte_type(graph) if all(checks.values()) else None,
        "witness_order": structure.element_order,
        "witness_orbits": len(structure.cycle_lengths),
        "witness_cycles": to_cycle_string(cons.witness),
        "witness_images": list(cons.witness.images),
        "ok": all(checks.values()),
    }
    return report


def _detect_format(path: Path) -> str:
    if path.suffix.lower() in (".g6", ".graph6"):
        return "graph6"
    return "edgelist"


def _load_graphs(path: Path) -> list[tuple[int | None, graphio.Graph]]:
    """(line, graph) pairs; edge-list files hold one graph, graph6 one per line."""
    text = path.read_text()
    if _detect_format(path) == "edgelist":
        return [(None, graphio.parse_edgelist(text))]
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line == graphio.GRAPH6_HEADER:
            continue
        out.append((lineno, graphio.parse_graph6(line)))
    return out


def _analyze_graph(graph: graphio.Graph, cap: int, include_trivial: bool,
                   bound_check: bool) -> dict:
    group = aut_mod.automorphism_group(graph)
    profile = aut_mod.symmetry_profile(graph, group)
    report = kcirc.k_spectrum(graph, group, cap=cap)
    if bound_check and profile.arc_transitive and graphio.is_cubic(graph):
        report.findings = kcirc.check_order_bound(report)
    payload = {
        "profile": profile.to_json_dict(),
        "spectrum": report.to_json_dict(include_trivial=include_trivial),
    }
    nontrivial = [k for k in report.spectrum if k != graph.n]
    if nontrivial:
        k0 = nontrivial[0]
        witness_group = PermGroup(graph.n, [report.witnesses[k0]])
        q = quotient.quotient_graph(graph, witness_group)
        payload["quotient_by_smallest_k"] = {
            "k": k0,
            "orbits": q.quotient.n,
            "is_regular_cover": q.is_regular_cover,
            "has_intra_orbit_edges": q.has_intra_orbit_edges,
        }
    return payload


def cmd_construct(args, family: str) -> int:
    try:
        if family == "even":
            cons = build_even(args.m, args.p)
            default_name = f"even_m{args.m}_p{args.p}"
        else:
            cons = build_odd(args.k)
            default_name = f"odd_k{args.k}"
    except BadParams as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out_path = Path(args.out) if args.out else Path(
        default_name + (".g6" if args.format == "graph6" else ".edgelist"))
    out_path.write_text(graphio.serialize(cons.graph, args.format)
                        + ("\n" if args.format == "graph6" else ""))
    report = verify_construction(cons)
    report["graph_file"] = str(out_path)
    print(json.dumps(report, indent=2))
    return 0 if report["ok"] else 1


def cmd_analyze(args, spectrum_only: bool) -> int:
    path = Path(args.path)
    try:
        graphs = _load_graphs(path)
    except (OSError, CirculantError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not graphs:
        print(f"error: no graphs in {path}", file=sys.stderr)
        return 2
    _, graph = graphs[0]
    cap = resolve_cap(args.cap)
    try:
        payload = _analyze_graph(graph, cap, args.include_trivial_k, bound_check=True)
    except (CapExceeded, SearchTimeout) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if spectrum_only:
        payload = payload["spectrum"]
    print(json.dumps(payload, indent=2))
    return 0


def _scan_file(task) -> list[dict]:
    path_str, cap, include_trivial, bound_check, timings = task
    path = Path(path_str)
    records = []
    try:
        graphs = _load_graphs(path)
    except (OSError, CirculantError) as exc:
        return [{"source": path_str, "line": None, "skip": "parse error", "error": str(exc)}]
    for lineno, graph in graphs:
        record = {"source": path_str, "line": lineno, "n": graph.n}
        started = time.monotonic()
        record["cubic"] = graphio.is_cubic(graph)
        record["connected"] = graphio.is_connected(graph)
        if not record["cubic"]:
            record["skip"] = "not cubic"
        elif not record["connected"]:
            record["skip"] = "not connected"
        else:
            try:
                payload = _analyze_graph(graph, cap, include_trivial, bound_check)
            except (CapExceeded, SearchTimeout) as exc:
                record["skip"] = "cap exceeded"
                record["error"] = str(exc)
            else:
                record["skip"] = None
                record["aut_order"] = payload["profile"]["aut_order"]
                record["arc_transitive"] = payload["profile"]["arc_transitive"]
                record["tutte_t"] = payload["profile"]["tutte_t"]
                record["spectrum"] = payload["spectrum"]["spectrum"]
                record["findings"] = payload["spectrum"]["findings"]
                if "quotient_by_smallest_k" in payload:
                    record["quotient_by_smallest_k"] = payload["quotient_by_smallest_k"]
        if timings:
            record["elapsed_ms"] = round(1000 * (time.monotonic() - started), 3)
        records.append(record)
    return records


def cmd_scan(args) -> int:
    root = Path(args.dir)
    if not root.is_dir():
        print(f"error: {root} is not a directory", file=sys.stderr)
        return 2
    files = sorted(p for p in root.iterdir() if p.is_file())
    cap = resolve_cap(args.cap)
    tasks = [(str(p), cap, args.include_trivial_k, args.bound_check, args.timings)
             for p in files]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            per_file = list(pool.map(_scan_file, tasks))
    else:
        per_file = [_scan_file(t) for t in tasks]

    graphs = analyzed = skipped = violations = equalities = 0
    for records in per_file:
        for record in records:
            graphs += 1
            if record.get("skip"):
                skipped += 1
            else:
                analyzed += 1
                for finding in record.get("findings", []):
                    if not finding["pass"]:
                        violations += 1
                    elif record["n"] == finding["bound"]:
                        equalities += 1
            print(json.dumps(record))
    summary = {"summary": {
        "files": len(files),
        "graphs": graphs,
        "analyzed": analyzed,
        "skipped": skipped,
        "violations": violations,
        "bound_equalities": equalities,
    }}
    print(json.dumps(summary))
    return 1 if violations else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circulant-lab",
        description="Construct and analyze cubic arc-transitive k-circulant graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("construct-even", help="build the k = 2m family member for (m, p)")
    pe.add_argument("m", type=int)
    pe.add_argument("p", type=int)
    pe.add_argument("--out", help="graph file to write (default: derived name)")
    pe.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")

    po = sub.add_parser("construct-odd", help="build the order-6k^2 family member for odd k")
    po.add_argument("k", type=int)
    po.add_argument("--out", help="graph file to write (default: derived name)")
    po.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")

    for name, desc in (("analyze", "full symmetry and spectrum analysis"),
                       ("spectrum", "k-circulant spectrum only")):
        pa = sub.add_parser(name, help=desc)
        pa.add_argument("path")
        pa.add_argument("--include-trivial-k", action="store_true",
                        help="keep k = n in reports")
        pa.add_argument("--cap", type=int, default=None,
                        help=f"enumeration cap (default {DEFAULT_ENUMERATION_CAP}, "
                             f"env {CAP_ENV_VAR})")

    ps = sub.add_parser("scan", help="scan a directory of graph files")
    ps.add_argument("dir")
    ps.add_argument("--bound-check", action="store_true",
                    help="check the 6k^2 order bound; exit 1 on any violation")
    ps.add_argument("--jobs", type=int, default=1, help="parallel workers (per file)")
    ps.add_argument("--include-trivial-k", action="store_true")
    ps.add_argument("--cap", type=int, default=None)
    ps.add_argument("--timings", action="store_true",
                    help="include elapsed_ms in records (breaks byte-identical output)")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "construct-even":
        return cmd_construct(args, "even")
    if args.command == "construct-odd":
        return cmd_construct(args, "odd")
    if args.command == "analyze":
        return cmd_analyze(args, spectrum_only=False)
    if args.command == "spectrum":
        return cmd_analyze(args, spectrum_only=True)
    if args.command == "scan":
        return cmd_scan(args)
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
