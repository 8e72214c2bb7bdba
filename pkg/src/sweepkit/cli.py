"""Command-line front end.

Every command ends stdout with a single ``RESULT ...`` line; explanations go
to stderr.  Exit codes: 0 ok, 1 verification failed, 2 usage or size error,
3 stale certificate.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from sweepkit import certificates as certs
from sweepkit.bounds import graph_bounds
from sweepkit.errors import StaleCertificate, SweepkitError, TooLarge
from sweepkit.graph import (Graph, cartesian_product, complete_graph, factor_graphs,
                            is_complete, path_graph, read_graph, write_graph)
from sweepkit.pathdecomp import (build_clique_product_decomposition,
                                 pw_clique_product_formula, validate_path_decomposition)
from sweepkit.searchgame import (decide_search_with_k, exact_search_number,
                                 sweep_strategy_product_with_path, validate_strategy)
from sweepkit.vsep import layout_to_decomposition, vertex_separation_exact


def info(msg: str) -> None:
    click.echo(msg, err=True)


def result(*values) -> None:
    click.echo("RESULT " + " ".join(str(v) for v in values))


def parse_family(spec: str) -> Graph:
    """``path:n``, ``clique:n`` or ``product:<spec>x<spec>``."""
    if spec.startswith("product:"):
        parts = spec[len("product:"):].split("x")
        if len(parts) != 2:
            raise click.UsageError(f"product spec needs exactly two factors: {spec!r}")
        return cartesian_product(parse_family(parts[0]), parse_family(parts[1]))
    kind, _, size = spec.partition(":")
    if kind not in ("path", "clique") or not size.isdigit() or int(size) < 1:
        raise click.UsageError(f"expected path:<n>, clique:<n> or product:<a>x<b>, got {spec!r}")
    return path_graph(int(size)) if kind == "path" else complete_graph(int(size))


def clique_product_shape(g: Graph) -> tuple[int, int]:
    factors = factor_graphs(g)
    if factors is None or not all(is_complete(f) for f in factors):
        raise click.UsageError("this mode needs a K_m x K_n product graph with coordinates "
                               "(see `sweepkit generate product:clique:MxClique:N`)")
    m, n = sorted(f.n for f in factors)
    if m < 2:
        raise click.UsageError("clique product formulas need both factors of order >= 2")
    return m, n


def write_cert(cert: dict, path: Path) -> None:
    path.write_text(certs.dumps(cert))
    info(f"certificate written to {path}")


def default_cert(graph_path: str, suffix: str) -> Path:
    return Path(graph_path).with_suffix(f".{suffix}.json")


class Main(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except StaleCertificate as exc:
            info(f"error: {exc}")
            ctx.exit(3)
        except TooLarge as exc:
            info(f"error: {exc}; try `sweepkit bounds` for an interval instead")
            ctx.exit(2)
        except SweepkitError as exc:
            info(f"error: {exc}")
            ctx.exit(2)


@click.group(cls=Main)
def main():
    """Pathwidth and edge-search numbers of graphs and their Cartesian products."""


@main.command()
@click.argument("spec")
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Write here instead of stdout.")
def generate(spec, output):
    """Write a path, clique or product graph in the text graph format."""
    g = parse_family(spec)
    if output:
        write_graph(g, output)
        info(f"{spec}: {g.n} vertices, {g.m} edges -> {output}")
        result(g.n, g.m)
    else:
        sys.stdout.write(g.canonical_text())


@main.command()
@click.argument("graph", type=click.Path(exists=True, dir_okay=False))
@click.option("--mode", type=click.Choice(["exact", "formula", "construct"]), default="exact",
              show_default=True)
@click.option("--cert", type=click.Path(dir_okay=False),
              help="Certificate path (default: GRAPH with .decomposition.json).")
def pathwidth(graph, mode, cert):
    """Pathwidth by subset DP, closed form, or explicit construction."""
    g = read_graph(graph)
    cert_path = Path(cert) if cert else default_cert(graph, "decomposition")
    if mode == "formula":
        m, n = clique_product_shape(g)
        info(f"K_{m} x K_{n}: closed-form pathwidth")
        result(pw_clique_product_formula(m, n))
        return
    if mode == "construct":
        m, n = clique_product_shape(g)
        d = build_clique_product_decomposition(m, n)
        if g.shape != (m, n):
            # rows and columns were generated the other way round
            d = type(d)([[(v % n) * m + v // n for v in bag] for bag in d.bags])
        info(f"K_{m} x K_{n}: {len(d)} bags")
    else:
        value, layout = vertex_separation_exact(g)
        d = layout_to_decomposition(g, layout)
        info(f"vertex separation {value}, layout {[v + 1 for v in layout.order]}")
    report = validate_path_decomposition(g, d)
    if not report.valid:
        raise AssertionError("constructed decomposition failed validation")
    write_cert(certs.decomposition_certificate(g, d), cert_path)
    result(d.width)


@main.command("search-number")
@click.argument("graph", type=click.Path(exists=True, dir_okay=False))
@click.option("--mode", type=click.Choice(["monotone", "full"]), default="monotone",
              show_default=True)
@click.option("--k", "k", type=int, help="Only decide whether K searchers suffice.")
@click.option("--cert", type=click.Path(dir_okay=False),
              help="Certificate path (default: GRAPH with .strategy.json).")
def search_number(graph, mode, k, cert):
    """Exact edge-search number with a replayable winning strategy."""
    g = read_graph(graph)
    cert_path = Path(cert) if cert else default_cert(graph, "strategy")
    if k is not None:
        strat = decide_search_with_k(g, k, mode)
        if strat is None:
            info(f"no {mode} strategy with {k} searchers")
            result("none")
            return
        value = k
    else:
        value, strat = exact_search_number(g, mode)
    report = validate_strategy(g, strat)
    info(f"{len(strat.actions)} actions, monotone replay: {report.monotone}")
    write_cert(certs.strategy_certificate(g, strat), cert_path)
    result(value)


@main.group()
def strategy():
    """Explicit strategy constructions."""


@strategy.command("sweep")
@click.argument("factor", type=click.Path(exists=True, dir_okay=False))
@click.argument("length", type=int)
@click.option("--graph-out", type=click.Path(dir_okay=False), required=True,
              help="Where to write the product FACTOR x P_LENGTH.")
@click.option("--cert", type=click.Path(dir_okay=False), required=True)
def sweep(factor, length, graph_out, cert):
    """Guard-and-walker strategy for FACTOR x P_LENGTH."""
    g = read_graph(factor)
    product = cartesian_product(g, path_graph(length))
    strat = sweep_strategy_product_with_path(g, length)
    report = validate_strategy(product, strat)
    info(f"{len(strat.actions)} actions, success {report.success}, monotone {report.monotone}")
    write_graph(product, graph_out)
    write_cert(certs.strategy_certificate(product, strat), Path(cert))
    result(strat.k)


@main.command()
@click.argument("graphs", nargs=-1, required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--cert", type=click.Path(dir_okay=False), help="Write a bounds certificate.")
@click.option("--graph-out", type=click.Path(dir_okay=False),
              help="With two inputs, also write their product.")
def bounds(graphs, cert, graph_out):
    """Certified search-number interval for GRAPH, or for the product of two graphs."""
    if len(graphs) > 2:
        raise click.UsageError("bounds takes one graph or two factors")
    g = read_graph(graphs[0])
    if len(graphs) == 2:
        g = cartesian_product(g, read_graph(graphs[1]))
        if graph_out:
            write_graph(g, graph_out)
    report = graph_bounds(g)
    for e in report.provenance:
        info(f"  {e.side:5} {e.value:4}  {e.rule}: {e.statement}")
    if cert:
        write_cert(certs.bounds_certificate(g, report), Path(cert))
    result(report.lower, report.upper)


@main.group()
def verify():
    """Re-check a certificate against a graph file."""


def _verify(kind, certificate, graph):
    cert = json.loads(Path(certificate).read_text())
    g = read_graph(graph)
    problems = certs.verify_certificate(cert, g, kind)
    for p in problems:
        info(f"violation: {p}")
    result("valid" if not problems else "invalid")
    if problems:
        sys.exit(1)


for _kind, _name in (("path-decomposition", "decomposition"), ("search-strategy", "strategy"),
                     ("bounds", "bounds")):
    def _make(kind):
        @click.argument("certificate", type=click.Path(exists=True, dir_okay=False))
        @click.argument("graph", type=click.Path(exists=True, dir_okay=False))
        def command(certificate, graph):
            _verify(kind, certificate, graph)
        command.__doc__ = f"Verify a {kind} certificate."
        return command
    verify.command(_name)(_make(_kind))


if __name__ == "__main__":
    main()
