"""File formats: graph and seed JSON, DOT export, report rendering.

Vertices carry names only at this layer; the core works with dense integer
indices.  Serialization is normalized (vertex order fixed, edges sorted) so
parse/serialize round-trips are byte-stable.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Sequence

from .checks import TableReport
from .graphs import Graph, make_graph
from .kan import GENERATOR_KEYS, LABEL_KEYS, FunctorSeed, seed_violations

__all__ = [
    "FormatError",
    "graph_to_obj",
    "graph_from_obj",
    "dumps_graph",
    "loads_graph",
    "graph_to_dot",
    "seed_to_obj",
    "seed_from_obj",
    "dumps_seed",
    "loads_seed",
    "default_names",
    "pair_names",
    "map_name",
    "emit_table",
    "emit_classification",
]


class FormatError(ValueError):
    """Malformed or invalid input file."""


def default_names(n: int) -> list[str]:
    return [f"v{i}" for i in range(n)]


def graph_to_obj(graph: Graph, names: Sequence[str] | None = None) -> dict:
    if names is None:
        names = default_names(graph.n)
    if len(names) != graph.n:
        raise FormatError("one name per vertex required")
    return {
        "vertices": list(names),
        "edges": sorted([names[u], names[v]] for u, v in graph.edges),
    }


def graph_from_obj(obj: Any) -> tuple[Graph, list[str]]:
    if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
        raise FormatError("graph object needs 'vertices' and 'edges'")
    names = obj["vertices"]
    if not isinstance(names, list) or not all(isinstance(s, str) for s in names):
        raise FormatError("'vertices' must be a list of strings")
    if len(set(names)) != len(names):
        raise FormatError("duplicate vertex name")
    index = {name: i for i, name in enumerate(names)}
    edges = []
    for entry in obj["edges"]:
        if not isinstance(entry, list) or len(entry) != 2:
            raise FormatError(f"edge must be a 2-element list: {entry!r}")
        a, b = entry
        if a not in index or b not in index:
            raise FormatError(f"unknown endpoint in edge {entry!r}")
        if a == b:
            raise FormatError(f"self-edge on {a!r}")
        edges.append((index[a], index[b]))
    return make_graph(len(names), edges), list(names)


def dumps_graph(graph: Graph, names: Sequence[str] | None = None) -> str:
    return json.dumps(graph_to_obj(graph, names), indent=2, sort_keys=True) + "\n"


def loads_graph(text: str) -> tuple[Graph, list[str]]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return graph_from_obj(obj)


def graph_to_dot(graph: Graph, names: Sequence[str] | None = None) -> str:
    """Undirected DOT output; implicit loops are omitted."""
    if names is None:
        names = default_names(graph.n)
    lines = ["graph G {"]
    lines.extend(f'    "{name}";' for name in names)
    for u, v in sorted(graph.edges):
        lines.append(f'    "{names[u]}" -- "{names[v]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


_LABEL_FIELD = {("s", "s"): "ss", ("s", "t"): "st", ("t", "s"): "ts", ("t", "t"): "tt"}


def seed_to_obj(seed: FunctorSeed, names: Sequence[str] | None = None) -> dict:
    if names is None:
        names = default_names(seed.gee.n)
    obj: dict = {
        "gee": graph_to_obj(seed.gee, names),
        "labels": {
            _LABEL_FIELD[key]: names[seed.labels[key]] for key in LABEL_KEYS
        },
    }
    values = {seed.labels[key] for key in LABEL_KEYS}
    if len(values) == 4 and values == set(range(seed.gee.n)):
        return obj  # actions are label-determined
    obj["actions"] = {
        key: {names[v]: names[w] for v, w in enumerate(seed.actions[key])}
        for key in GENERATOR_KEYS
    }
    return obj


def seed_from_obj(obj: Any, description: str = "") -> tuple[FunctorSeed, list[str]]:
    if not isinstance(obj, dict) or "gee" not in obj or "labels" not in obj:
        raise FormatError("seed object needs 'gee' and 'labels'")
    gee, names = graph_from_obj(obj["gee"])
    index = {name: i for i, name in enumerate(names)}
    raw_labels = obj["labels"]
    labels: dict[tuple[str, str], int] = {}
    for key in LABEL_KEYS:
        fieldname = _LABEL_FIELD[key]
        if fieldname not in raw_labels:
            raise FormatError(f"missing label {fieldname!r}")
        name = raw_labels[fieldname]
        if name not in index:
            raise FormatError(f"label {fieldname!r} names unknown vertex {name!r}")
        labels[key] = index[name]

    if "actions" in obj:
        actions: dict[str, tuple[int, ...]] = {}
        for key in GENERATOR_KEYS:
            if key not in obj["actions"]:
                raise FormatError(f"missing action {key!r}")
            table = obj["actions"][key]
            column = []
            for name in names:
                if name not in table:
                    raise FormatError(f"action {key!r} is not total: missing {name!r}")
                target = table[name]
                if target not in index:
                    raise FormatError(f"action {key!r} hits unknown vertex {target!r}")
                column.append(index[target])
            actions[key] = tuple(column)
        seed = FunctorSeed(gee, labels, actions, description)
    else:
        values = set(labels.values())
        if len(values) != 4 or values != set(range(gee.n)):
            raise FormatError("actions may be omitted only for injective total labels")
        seed = FunctorSeed.from_labels(gee, labels, description)

    problems = seed_violations(seed)
    if problems:
        raise FormatError(f"seed validation failure: {problems[0]}")
    return seed, names


def dumps_seed(seed: FunctorSeed, names: Sequence[str] | None = None) -> str:
    return json.dumps(seed_to_obj(seed, names), indent=2, sort_keys=True) + "\n"


def loads_seed(text: str, description: str = "") -> tuple[FunctorSeed, list[str]]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return seed_from_obj(obj, description)


def pair_names(xnames: Sequence[str], ynames: Sequence[str]) -> list[str]:
    """Row-major product vertex names: ``(a,b)``."""
    return [f"({a},{b})" for a in xnames for b in ynames]


def map_name(mapping: Sequence[int], xnames: Sequence[str], ynames: Sequence[str]) -> str:
    """Signature string for a map vertex of a hom graph."""
    return "{" + ",".join(f"{xnames[v]}>{ynames[w]}" for v, w in enumerate(mapping)) + "}"


# ---------------------------------------------------------------------------
# Report rendering
# ---------------------------------------------------------------------------

_TABLE_HEADER = ("Name", "Monoidal", "Symmetric", "Closed")


def emit_table(report: TableReport, fmt: str = "md") -> str:
    """Render the verdict table as markdown, CSV, or JSON (with witnesses)."""
    if fmt == "md":
        lines = [
            "| " + " | ".join(_TABLE_HEADER) + " |",
            "| " + " | ".join("---" for _ in _TABLE_HEADER) + " |",
        ]
        lines.extend("| " + " | ".join(row.cells()) + " |" for row in report.rows)
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(_TABLE_HEADER)
        for row in report.rows:
            writer.writerow(row.cells())
        return buf.getvalue()
    if fmt == "json":
        return json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n"
    raise FormatError(f"unknown format {fmt!r}")


def emit_classification(report, fmt: str = "md") -> str:
    """Render a classification report; markdown shows one row per seed."""
    if fmt == "json":
        payload = {
            "seeds": [
                {
                    "description": rec.description,
                    "functorial": rec.functorial.passed,
                    "reasons": list(rec.functorial.reasons),
                    "checks": {k: v.to_json() for k, v in rec.checks.items()},
                    "survivor": rec.survivor,
                    "certified_as": rec.certified_as,
                }
                for rec in report.records
            ],
            "survivors": [rec.description for rec in report.survivors],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if fmt == "md":
        lines = [
            "| Seed | Functorial | Unit | Survivor | Certified |",
            "| --- | --- | --- | --- | --- |",
        ]
        for rec in report.records:
            unit = rec.checks.get("unit")
            unit_cell = "-" if unit is None else ("pass" if unit.passed else "fail")
            lines.append(
                "| {} | {} | {} | {} | {} |".format(
                    rec.description,
                    "pass" if rec.functorial.passed else "fail",
                    unit_cell,
                    "yes" if rec.survivor else "no",
                    rec.certified_as or "-",
                )
            )
        lines.append("")
        names = ", ".join(rec.description for rec in report.survivors) or "none"
        lines.append(f"Survivors: {names}")
        return "\n".join(lines) + "\n"
    raise FormatError(f"unknown format {fmt!r}")
