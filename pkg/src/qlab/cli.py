"""Command-line interface over the engine, oracle, verifier, and HTTP service."""

from __future__ import annotations

import json
import sys

import click

from .gvectors import MutationPath, g_dagger_cluster, g_dagger_vector
from .laurent import ExactDivisionError, poly_text
from .oracle import InhomogeneousPolynomial, PrincipalOracle
from .quiver import (
    MalformedQuiver,
    SkewMatrix,
    UnknownVertex,
    mutate,
    quiver_dumps,
    quiver_loads,
)
from .verify import SUITES, report_dumps, report_ok, run_suites

EXIT_FAILURE = 1
EXIT_MALFORMED = 2
EXIT_UNKNOWN_VERTEX = 3


def _read_quiver(source: str) -> SkewMatrix:
    try:
        if source == "-":
            text = sys.stdin.read()
        else:
            with open(source, "rb") as fh:
                text = fh.read()
        return quiver_loads(text)
    except UnknownVertex as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_UNKNOWN_VERTEX)
    except (MalformedQuiver, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_MALFORMED)


def _parse_path(text: str) -> MutationPath:
    return MutationPath.parse(text)


def _unknown_vertex(exc: UnknownVertex):
    click.echo(f"error: {exc}", err=True)
    sys.exit(EXIT_UNKNOWN_VERTEX)


@click.group()
def main():
    """Exact quiver mutation, g-dagger vectors, and the principal-coefficients oracle."""


@main.command("mutate")
@click.option("-k", "--vertex", "k", required=True, help="Vertex label to mutate at.")
@click.argument("input", default="-")
def cmd_mutate(k: str, input: str):
    """Mutate a quiver at one vertex; reads and writes qlab-quiver-v1 JSON."""
    b = _read_quiver(input)
    try:
        click.echo(quiver_dumps(mutate(b, k)))
    except UnknownVertex as exc:
        _unknown_vertex(exc)


@main.command("gvec")
@click.option("-p", "--path", "path_text", default="", help="Mutation path literal, e.g. 1,2,1.")
@click.option("-l", "--slot", "slot", default=None, help="Vertex slot of the wanted vector.")
@click.option("--all", "want_all", is_flag=True, help="Emit the whole cluster keyed by slot.")
@click.argument("input", default="-")
def cmd_gvec(path_text: str, slot: str | None, want_all: bool, input: str):
    """g-dagger vector(s) at the end of a mutation path."""
    b = _read_quiver(input)
    path = _parse_path(path_text)
    if want_all == (slot is not None):
        click.echo("error: pass exactly one of -l/--slot or --all", err=True)
        sys.exit(EXIT_MALFORMED)
    try:
        if want_all:
            cluster = g_dagger_cluster(b, path)
            out = {l: list(cluster.vectors[l]) for l in b.vertices}
        else:
            out = list(g_dagger_vector(b, path, slot))
    except UnknownVertex as exc:
        _unknown_vertex(exc)
    click.echo(json.dumps(out, separators=(",", ":")))


@main.command("verify")
@click.option(
    "--suite",
    type=click.Choice(SUITES),
    multiple=True,
    default=("all",),
    help="Which check suites to run (repeatable).",
)
@click.option("--depth", default=8, show_default=True, help="Enumeration depth bound.")
@click.argument("input", default="-")
def cmd_verify(suite: tuple[str, ...], depth: int, input: str):
    """Run theorem checks over the enumerated exchange graph; nonzero exit on failure."""
    b = _read_quiver(input)
    try:
        report = run_suites(b, suite, depth=depth)
    except UnknownVertex as exc:
        _unknown_vertex(exc)
    click.echo(report_dumps(report))
    if not report_ok(report):
        sys.exit(EXIT_FAILURE)


@main.command("oracle")
@click.option("-p", "--path", "path_text", default="", help="Mutation path literal.")
@click.option("-l", "--slot", "slot", required=True, help="Vertex slot.")
@click.option("--check-g", is_flag=True, help="Assert agreement with the engine's vector.")
@click.argument("input", default="-")
def cmd_oracle(path_text: str, slot: str, check_g: bool, input: str):
    """Cluster variable and g-vector from the principal-coefficients oracle."""
    b = _read_quiver(input)
    path = _parse_path(path_text)
    oracle = PrincipalOracle(b)
    try:
        variable = oracle.cluster_variable(path, slot)
        g = oracle.g_vector(path, slot)
    except UnknownVertex as exc:
        _unknown_vertex(exc)
    except (ExactDivisionError, InhomogeneousPolynomial) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_FAILURE)
    click.echo(poly_text(variable))
    click.echo("g=" + json.dumps(list(g), separators=(",", ":")))
    if check_g:
        engine_g = g_dagger_vector(b, path, slot)
        if engine_g.coords != g.coords:
            click.echo(
                f"error: engine {list(engine_g)} disagrees with oracle {list(g)}",
                err=True,
            )
            sys.exit(EXIT_FAILURE)


@main.command("serve")
@click.option("--port", default=None, type=int, help="Port (default: QLAB_PORT or 8000).")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--snapshot-dir", default=None, help="Persist sessions as JSON files here.")
@click.option("--ui-dir", default=None, help="Serve a built web UI from this directory.")
def cmd_serve(port: int | None, host: str, snapshot_dir: str | None, ui_dir: str | None):
    """Run the session HTTP API (and optionally the web explorer)."""
    import os

    import uvicorn

    from .service import create_app

    if port is None:
        port = int(os.environ.get("QLAB_PORT", "8000"))
    app = create_app(snapshot_dir=snapshot_dir, ui_dir=ui_dir)
    uvicorn.run(app, host=host, port=port, log_level="info")


if __name__ == "__main__":
    main()
