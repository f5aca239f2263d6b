"""Command-line front end.

Subcommands: construct, filter, census, check, canon, isomorphic,
audit.  Graphs travel as graph6, one per line; ``-`` means stdin.
Exit codes: 0 success, 2 usage error, 3 malformed input, 4 resource
guard.  ``PLATYKIT_GUARD_OVERRIDE=1`` lifts census guards.
"""

from __future__ import annotations

import hashlib
import json
import sys
import time
from typing import IO, Iterator, List, Optional, Tuple

import click

import platykit
from platykit import constructions, generation, invariants
from platykit.graph import Graph
from platykit.graph6 import Graph6Error, decode_graph6, encode_graph6
from platykit.hamiltonicity import (
    find_hamiltonian_cycle,
    find_hamiltonian_path,
    is_homogeneously_traceable,
    is_hypohamiltonian,
    is_hypotraceable,
    is_maximally_non_hamiltonian,
    is_platypus,
    lemma2_audit,
)
from platykit.isomorphism import are_isomorphic, canonical_form, canonical_graph6

EXIT_PARSE = 3
EXIT_GUARD = 4


class _ParseAbort(Exception):
    pass


def _open_input(path: str) -> IO[str]:
    return sys.stdin if path == "-" else open(path, "r")


def _iter_lines(stream: IO[str], strict: bool) -> Iterator[Tuple[int, Optional[Graph], str]]:
    """Yield (lineno, graph-or-None, raw line); malformed lines yield None."""
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield lineno, decode_graph6(line), line
        except Graph6Error as exc:
            click.echo(f"line {lineno}: {exc}", err=True)
            if strict:
                raise _ParseAbort from exc
            yield lineno, None, line


def _write_manifest(path: Optional[str], payload: dict) -> None:
    if not path:
        return
    payload = dict(payload)
    payload["toolkit_version"] = platykit.__version__
    payload["command"] = " ".join(sys.argv)
    with open(path, "w") as f:
        json.dump(payload, f, indent=2, sort_keys=True)
        f.write("\n")


@click.group()
@click.version_option(platykit.__version__)
def main() -> None:
    """Platypus-graph toolkit: construct, check, filter, generate."""


# -- construct --------------------------------------------------------------

@main.command()
@click.argument("family")
@click.argument("params", nargs=-1)
def construct(family: str, params: Tuple[str, ...]) -> None:
    """Emit a constructed graph as graph6.

    Families: gp N K, pp N K, cycle N, complete N, dotted-prism N
    (dotted prism over the N-cycle), fixture NAME.
    """
    try:
        if family == "gp":
            n, k = (int(x) for x in params)
            g = constructions.generalized_petersen(n, k)
        elif family == "pp":
            n, k = (int(x) for x in params)
            g = constructions.petersen_prism(n, k)
        elif family == "cycle":
            (n,) = (int(x) for x in params)
            g = constructions.cycle(n)
        elif family == "complete":
            (n,) = (int(x) for x in params)
            g = constructions.complete(n)
        elif family in ("dotted-prism", "dotted_prism"):
            (n,) = (int(x) for x in params)
            g = constructions.dotted_prism(constructions.cycle(n))
        elif family == "fixture":
            (name,) = params
            g = constructions.fixture(name)
        else:
            raise ValueError(
                f"unknown family {family!r} (gp, pp, cycle, complete, dotted-prism, fixture)"
            )
    except (ValueError, TypeError) as exc:
        raise click.UsageError(str(exc))
    click.echo(encode_graph6(g))


# -- filter -----------------------------------------------------------------

def _passes(g: Graph, opts: dict) -> bool:
    if opts["cubic"] and not g.is_cubic():
        return False
    if opts["girth_min"] and invariants.girth(g) < opts["girth_min"]:
        return False
    if opts["connectivity"] and invariants.vertex_connectivity(
        g, upper_bound=opts["connectivity"]
    ) < opts["connectivity"]:
        return False
    if opts["planar"] and not invariants.is_planar(g):
        return False
    if opts["snark"] and not invariants.is_snark(g).verdict:
        return False
    if opts["platypus"] and not is_platypus(g).verdict:
        return False
    if opts["hypohamiltonian"] and not is_hypohamiltonian(g).verdict:
        return False
    return True


def _filter_block(args: Tuple[List[str], dict]) -> List[bool]:
    """Worker for parallel filtering: verdicts for one block of lines."""
    lines, opts = args
    return [_passes(decode_graph6(line), opts) for line in lines]


def _blocks(pairs, size: int):
    block: List[Tuple[int, Optional[Graph], str]] = []
    for item in pairs:
        block.append(item)
        if len(block) >= size:
            yield block
            block = []
    if block:
        yield block


@main.command(name="filter")
@click.argument("input", default="-")
@click.option("--platypus", is_flag=True)
@click.option("--hypohamiltonian", is_flag=True)
@click.option("--snark", is_flag=True)
@click.option("--planar", is_flag=True)
@click.option("--cubic", is_flag=True)
@click.option("--connectivity", type=int, default=0, help="Minimum vertex connectivity.")
@click.option("--girth-min", type=int, default=0, help="Minimum girth.")
@click.option("--jobs", type=int, default=1, help="Worker processes.")
@click.option("--manifest", type=click.Path(), default=None)
@click.option("--strict", is_flag=True, help="Abort on the first malformed line.")
def filter_cmd(input, platypus, hypohamiltonian, snark, planar, cubic,
               connectivity, girth_min, jobs, manifest, strict) -> None:
    """Keep the graphs of a graph6 stream satisfying all requested predicates.

    With --jobs N the stream is filtered in blocks by worker processes;
    output order always matches input order.
    """
    opts = dict(
        platypus=platypus, hypohamiltonian=hypohamiltonian, snark=snark,
        planar=planar, cubic=cubic, connectivity=connectivity, girth_min=girth_min,
    )
    t0 = time.time()
    digest = hashlib.sha256()
    passed = failed = bad = 0
    verdicts: List[dict] = []

    def account(lineno: int, g: Graph, raw: str, keep: bool) -> None:
        nonlocal passed, failed
        if keep:
            passed += 1
            click.echo(raw)
        else:
            failed += 1
        if manifest:
            verdicts.append(
                {"line": lineno, "canonical": canonical_graph6(g), "pass": keep}
            )

    stream = _open_input(input)
    try:
        pairs = _iter_lines(stream, strict)
        if jobs <= 1:
            for lineno, g, raw in pairs:
                digest.update(raw.encode())
                digest.update(b"\n")
                if g is None:
                    bad += 1
                    continue
                account(lineno, g, raw, _passes(g, opts))
        else:
            from concurrent.futures import ProcessPoolExecutor

            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for block in _blocks(pairs, 256):
                    good = [(no, g, raw) for no, g, raw in block if g is not None]
                    bad += len(block) - len(good)
                    for no, g, raw in block:
                        digest.update(raw.encode())
                        digest.update(b"\n")
                    chunks = [
                        [raw for _, _, raw in good[i::jobs]] for i in range(jobs)
                    ]
                    results = list(pool.map(_filter_block, [(c, opts) for c in chunks]))
                    outcome: dict = {}
                    for i, chunk_verdicts in enumerate(results):
                        for (no, g, raw), keep in zip(good[i::jobs], chunk_verdicts):
                            outcome[no] = (g, raw, keep)
                    for no in sorted(outcome):
                        g, raw, keep = outcome[no]
                        account(no, g, raw, keep)
    except _ParseAbort:
        sys.exit(EXIT_PARSE)
    finally:
        if stream is not sys.stdin:
            stream.close()
    _write_manifest(manifest, {
        "input": input,
        "input_sha256": digest.hexdigest(),
        "predicates": {k: v for k, v in opts.items() if v},
        "passed": passed,
        "failed": failed,
        "malformed": bad,
        "wall_seconds": time.time() - t0,
        "verdicts": verdicts,
        "jobs": jobs,
    })
    if bad:
        sys.exit(EXIT_PARSE)


# -- census -----------------------------------------------------------------

@main.command()
@click.argument("order", type=int)
@click.option("--girth", type=int, default=3, help="Lower bound on girth.")
@click.option("--all-graphs", is_flag=True, help="Count all graphs instead of platypuses.")
@click.option("--jobs", type=int, default=1)
@click.option("--out", type=click.Path(), default=None, help="graph6 list output path.")
@click.option("--manifest", type=click.Path(), default=None)
@click.option("--no-prunes", is_flag=True, hidden=True, help="Disable sound prunes (validation).")
def census(order, girth, all_graphs, jobs, out, manifest, no_prunes) -> None:
    """Generate the isomorph-free census for one (order, girth) cell."""
    t0 = time.time()
    try:
        if all_graphs:
            result = generation.generate_all_graphs(order, girth, jobs=jobs)
        else:
            prunes = generation.Prunes(False, False, False, False) if no_prunes \
                else generation.Prunes()
            result = generation.generate_platypuses(
                generation.GenSpec(order, girth), jobs=jobs, prunes=prunes
            )
    except generation.ResourceGuardError as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_GUARD)
    if out and result.canonical_list is not None:
        with open(out, "w") as f:
            for line in result.canonical_list:
                f.write(line + "\n")
    _write_manifest(manifest, {
        "order": order,
        "min_girth": girth,
        "target": "all_graphs" if all_graphs else "platypuses",
        "count": result.count,
        "prune_stats": {k: v for k, v in result.stats.items() if k != "wall_seconds"},
        "wall_seconds": time.time() - t0,
        "graph6_file": out,
        "jobs": jobs,
    })
    click.echo(result.count)


# -- check ------------------------------------------------------------------

@main.command()
@click.argument("input", default="-")
@click.option("--fast", is_flag=True, help="Skip the slower class predicates.")
def check(input, fast) -> None:
    """Detailed JSON report for a single graph6 graph."""
    stream = _open_input(input)
    try:
        line = next(ln for ln in (s.strip() for s in stream) if ln)
    except StopIteration:
        raise click.UsageError("no graph on input")
    finally:
        if stream is not sys.stdin:
            stream.close()
    try:
        g = decode_graph6(line)
    except Graph6Error as exc:
        click.echo(f"line 1: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    cf = canonical_form(g)
    report = {
        "graph6": line,
        "canonical_graph6": cf.graph6,
        "n": g.n,
        "m": g.num_edges(),
        "degree_min": g.min_degree(),
        "degree_max": g.max_degree(),
        "cubic": g.is_cubic(),
        "girth": (None if invariants.girth(g) == invariants.INFINITY
                  else int(invariants.girth(g))),
        "vertex_connectivity": invariants.vertex_connectivity(g) if g.n >= 2 else 0,
        "planar": invariants.is_planar(g),
        "automorphism_group_order": cf.aut_order,
    }
    cyc = find_hamiltonian_cycle(g) if g.n >= 3 else None
    report["hamiltonian"] = cyc is not None
    if cyc:
        report["hamiltonian_cycle"] = list(cyc.vertices)
    path = find_hamiltonian_path(g)
    report["traceable"] = path is not None
    plat = is_platypus(g)
    report["platypus"] = plat.verdict
    if not plat.verdict:
        report["platypus_reason"] = plat.detail
    if not fast and g.n >= 3:
        report["hypohamiltonian"] = is_hypohamiltonian(g).verdict
        report["hypotraceable"] = is_hypotraceable(g).verdict
        report["homogeneously_traceable"] = is_homogeneously_traceable(g).verdict
        report["maximally_non_hamiltonian"] = is_maximally_non_hamiltonian(g).verdict
        report["lemma2_consistent"] = lemma2_audit(g).verdict
        if g.is_cubic():
            snark = invariants.is_snark(g)
            report["snark"] = snark.verdict
            if not snark.verdict:
                report["snark_reason"] = snark.detail
    click.echo(json.dumps(report, indent=2, sort_keys=True))


# -- canon ------------------------------------------------------------------

@main.command()
@click.argument("input", default="-")
@click.option("--strict", is_flag=True)
def canon(input, strict) -> None:
    """Canonicalize a graph6 stream (one canonical line per input line)."""
    bad = 0
    stream = _open_input(input)
    try:
        for _, g, _ in _iter_lines(stream, strict):
            if g is None:
                bad += 1
                continue
            click.echo(canonical_graph6(g))
    except _ParseAbort:
        sys.exit(EXIT_PARSE)
    finally:
        if stream is not sys.stdin:
            stream.close()
    if bad:
        sys.exit(EXIT_PARSE)


# -- isomorphic ---------------------------------------------------------------

@main.command()
@click.argument("input_a")
@click.argument("input_b")
def isomorphic(input_a, input_b) -> None:
    """Compare the first graphs of two inputs; prints true/false."""
    graphs = []
    for path in (input_a, input_b):
        stream = _open_input(path)
        try:
            line = next((ln for ln in (s.strip() for s in stream) if ln), None)
            if line is None:
                raise click.UsageError(f"{path}: no graph on input")
            graphs.append(decode_graph6(line))
        except Graph6Error as exc:
            click.echo(f"{path}: {exc}", err=True)
            sys.exit(EXIT_PARSE)
        finally:
            if stream is not sys.stdin:
                stream.close()
    click.echo("true" if are_isomorphic(*graphs) else "false")


# -- audit --------------------------------------------------------------------

@main.command()
@click.argument("input", default="-")
@click.option("--manifest", type=click.Path(), default=None)
@click.option("--strict", is_flag=True)
def audit(input, manifest, strict) -> None:
    """Run the structural platypus theorems over a graph6 stream."""
    graphs = []
    bad = 0
    stream = _open_input(input)
    try:
        for _, g, _ in _iter_lines(stream, strict):
            if g is None:
                bad += 1
            else:
                graphs.append(g)
    except _ParseAbort:
        sys.exit(EXIT_PARSE)
    finally:
        if stream is not sys.stdin:
            stream.close()
    report = generation.audit_stream(graphs)
    payload = {
        "checked": report.checked,
        "skipped": [{"canonical": c, "reason": r} for c, r in report.skipped],
        "violations": [{"canonical": c, "violation": r} for c, r in report.violations],
        "malformed": bad,
    }
    _write_manifest(manifest, payload)
    click.echo(json.dumps(payload, indent=2, sort_keys=True))
    if bad:
        sys.exit(EXIT_PARSE)


if __name__ == "__main__":
    main()
