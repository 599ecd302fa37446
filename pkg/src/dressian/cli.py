"""Command-line interface.

Thin wrappers over the library: load JSON documents, call one operation,
print the verbatim result in canonical JSON or a short text report.

Exit codes: 0 success, 1 error, 2 negative verdict (check found a violated
relation, indecomposable found a witness), 3 budget exhausted (partial
result still printed).
"""

from __future__ import annotations

import json
import os
import sys

import click

from . import io as dio
from .errors import DressianError
from .fan import (
    enumerate_fan,
    is_indecomposable,
    parallel_projection,
    tensor_weights,
)
from .matroid import connected_components, direct_sum, is_binary
from .polytope import octahedra, polytope_dim
from .subdivision import classify_subdivision, is_matroidal, regular_subdivision
from .tropical import (
    is_valuated,
    lineality_dim,
    stiefel,
    tree_metric_weight,
)


def _load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DressianError(f"cannot read {path}: {exc}") from exc


def _emit(data, fmt, text_lines):
    if fmt == "json":
        click.echo(json.dumps(data, indent=2))
    else:
        for line in text_lines:
            click.echo(line)


def _threads(value):
    # The library is sequential; the flag is accepted for compatibility.
    if value is None:
        value = os.environ.get("DRESSIAN_THREADS", "1")
    try:
        k = int(value)
    except ValueError:
        raise DressianError(f"invalid thread count: {value!r}")
    if k < 1:
        raise DressianError("thread count must be positive")
    return k


format_option = click.option(
    "--format", "fmt", type=click.Choice(["json", "text"]), default="text",
    help="Output format.",
)
threads_option = click.option(
    "--threads", default=None, help="Worker count (DRESSIAN_THREADS fallback)."
)
matroid_option = click.option(
    "--matroid", "matroid_path", required=True, help="Matroid JSON file."
)
budget_option = click.option(
    "--budget", default=10 ** 6, show_default=True, help="Search node limit."
)


@click.group()
def main():
    """Exact computations with matroid polytopes and local Dressians."""


def _matroid_arg(path):
    return dio.matroid_from_json(_load(path))


def _weights_arg(path, matroid):
    return dio.weights_from_json(_load(path), matroid)


@main.command()
@matroid_option
@format_option
@threads_option
def info(matroid_path, fmt, threads):
    """Basic invariants of a matroid."""
    _threads(threads)
    m = _matroid_arg(matroid_path)
    binary, _ = is_binary(m)
    data = {
        "n": m.n,
        "rank": m.d,
        "bases": len(m.bases),
        "connected_components": sorted(sorted(c) for c in connected_components(m)),
        "polytope_dim": polytope_dim(m),
        "lineality_dim": lineality_dim(m),
        "binary": binary,
        "octahedra": len(octahedra(m)),
    }
    _emit(data, fmt, [f"{k}: {v}" for k, v in data.items()])


@main.command("octahedra")
@matroid_option
@format_option
@threads_option
def octahedra_cmd(matroid_path, fmt, threads):
    """Octahedral 3-faces of the matroid polytope."""
    _threads(threads)
    m = _matroid_arg(matroid_path)
    faces = octahedra(m)
    data = {"count": len(faces), "faces": dio.octahedra_to_json(faces)}
    lines = [f"count: {len(faces)}"] + [
        f"s={list(f.s)} t={list(f.t)}" for f in faces
    ]
    _emit(data, fmt, lines)


@main.command()
@click.option("--matroid", "matroid_path", default=None, help="Matroid JSON file.")
@click.option("--weights", "weights_path", required=True, help="Weights JSON file.")
@format_option
@threads_option
def check(matroid_path, weights_path, fmt, threads):
    """Test membership in the local Dressian; exit 2 when violated."""
    _threads(threads)
    m = _matroid_arg(matroid_path) if matroid_path else None
    w = _weights_arg(weights_path, m)
    ok, bad = is_valuated(w)
    if ok:
        _emit({"valuated": True}, fmt, ["valuated: true"])
        return
    data = {
        "valuated": False,
        "violated_relation": {"s": list(bad.s), "quad": list(bad.quad)},
    }
    _emit(data, fmt, [
        "valuated: false",
        f"violated relation: s={list(bad.s)} quad={list(bad.quad)}",
    ])
    sys.exit(2)


@main.command()
@click.option("--matroid", "matroid_path", default=None, help="Matroid JSON file.")
@click.option("--weights", "weights_path", required=True, help="Weights JSON file.")
@format_option
@threads_option
def subdivide(matroid_path, weights_path, fmt, threads):
    """Regular subdivision of the matroid polytope."""
    _threads(threads)
    m = _matroid_arg(matroid_path) if matroid_path else None
    w = _weights_arg(weights_path, m)
    s = regular_subdivision(w)
    matroidal, _ = is_matroidal(s)
    classification = classify_subdivision(s) if matroidal else None
    data = dio.subdivision_to_json(s, classification)
    data["matroidal"] = matroidal
    lines = [f"cells: {len(s)}", f"matroidal: {str(matroidal).lower()}"]
    if classification is not None:
        lines.append(f"classification: {classification.kind}")
        if classification.hyperplane is not None:
            normal, rhs = classification.hyperplane
            terms = " + ".join(
                f"{'' if c == 1 else c}x{i}"
                for i, c in enumerate(normal, start=1) if c
            )
            lines.append(f"hyperplane: {terms} = {rhs}")
    _emit(data, fmt, lines)


@main.command()
@matroid_option
@budget_option
@format_option
@threads_option
def fan(matroid_path, budget, fmt, threads):
    """Enumerate the local Dressian fan; exit 3 when the budget runs out."""
    _threads(threads)
    m = _matroid_arg(matroid_path)
    result = enumerate_fan(m, budget=budget)
    data = dio.fan_to_json(result)
    lines = [
        f"maximal cones: {len(result.maximal_cones)}",
        f"lineality dim: {result.lineality_dim}",
        f"linear space: {str(result.is_linear_space).lower()}",
        f"complete: {str(result.complete).lower()}",
    ] + [f"cone dim {c.dim}: {' '.join(c.states)}" for c in result.maximal_cones]
    _emit(data, fmt, lines)
    if not result.complete:
        sys.exit(3)


@main.command()
@matroid_option
@budget_option
@format_option
@threads_option
def indecomposable(matroid_path, budget, fmt, threads):
    """Decide indecomposability; exit 2 on Decomposable, 3 on Unknown."""
    _threads(threads)
    m = _matroid_arg(matroid_path)
    v = is_indecomposable(m, budget=budget)
    data = dio.verdict_to_json(v)
    lines = [f"verdict: {v.verdict}", f"reason: {v.reason}"]
    if v.subdivision is not None:
        lines.append(f"witness cells: {len(v.subdivision)}")
    _emit(data, fmt, lines)
    if v.verdict == "Decomposable":
        sys.exit(2)
    if v.verdict == "Unknown":
        sys.exit(3)


@main.command("stiefel")
@click.option("--matrix", "matrix_path", required=True,
              help="JSON 2D array; null entries mean infinity.")
@format_option
@threads_option
def stiefel_cmd(matrix_path, fmt, threads):
    """Weight vector of tropical minors of a matrix."""
    _threads(threads)
    raw = _load(matrix_path)
    if not isinstance(raw, list):
        raise DressianError("matrix document must be a JSON array of rows")
    matrix = [
        [None if x is None else dio.rational_from_json(x) for x in row]
        for row in raw
    ]
    w = stiefel(matrix)
    _emit(dio.weights_to_json(w), fmt, _weight_lines(w))


@main.command("tree")
@click.option("--tree", "tree_path", required=True,
              help='JSON {"n": leaves, "edges": [[u, v, length], ...]}.')
@format_option
@threads_option
def tree_cmd(tree_path, fmt, threads):
    """Weight vector of a tree metric on n leaves."""
    _threads(threads)
    raw = _load(tree_path)
    try:
        n = int(raw["n"])
        edges = [
            (int(u), int(v), dio.rational_from_json(x))
            for u, v, x in raw["edges"]
        ]
    except (KeyError, TypeError, ValueError) as exc:
        raise DressianError(f"malformed tree document: {exc}") from exc
    w = tree_metric_weight(n, edges)
    _emit(dio.weights_to_json(w), fmt, _weight_lines(w))


@main.command("sum")
@click.option("--weights1", "path1", required=True, help="First weights JSON.")
@click.option("--weights2", "path2", required=True, help="Second weights JSON.")
@format_option
@threads_option
def sum_cmd(path1, path2, fmt, threads):
    """Tensor two valuated vectors onto the direct sum of their matroids."""
    _threads(threads)
    w1 = dio.weights_from_json(_load(path1))
    w2 = dio.weights_from_json(_load(path2))
    w = tensor_weights(w1, w2)
    _emit(dio.weights_to_json(w), fmt, _weight_lines(w))


@main.command("project")
@click.option("--matroid", "matroid_path", default=None, help="Matroid JSON file.")
@click.option("--weights", "weights_path", required=True, help="Weights JSON file.")
@click.option("--element", required=True, type=int, help="Kept element e.")
@click.option("--parallel-to", "other", required=True, type=int,
              help="Dropped element parallel to e.")
@format_option
@threads_option
def project_cmd(matroid_path, weights_path, element, other, fmt, threads):
    """Project a valuated vector along a parallel element pair."""
    _threads(threads)
    m = _matroid_arg(matroid_path) if matroid_path else None
    w = _weights_arg(weights_path, m)
    out = parallel_projection(w, element, other)
    _emit(dio.weights_to_json(out), fmt, _weight_lines(out))


def _weight_lines(w):
    return [
        f"{list(b)}: {dio.rational_to_json(w.values[b])}"
        for b in w.matroid.bases
    ]


def run():
    try:
        main(standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        sys.exit(1)
    except click.exceptions.Abort:
        sys.exit(1)
    except DressianError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    except SystemExit:
        raise


if __name__ == "__main__":
    run()
