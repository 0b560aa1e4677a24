"""Graph and poset files: JSON (primary), whitespace text (quick), DOT out.

JSON graph files look like::

    {"format_version": "1",
     "nodes": [{"id": "u", "label": "a"}, ...],
     "edges": [["u", "v"], ...]}

and poset files use ``elements`` / ``relations`` instead (a relation
[p, q] means p <= q).  The text form declares nodes first, one
``node <id> <label>`` per line, then one ``<src> <dst>`` pair per line;
``#`` starts a comment.  Saving always canonicalizes (sorted keys, sorted
node and edge lists), so load-then-save is byte-stable.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .core import LabeledDigraph, PosetDigraph, build_poset_digraph
from .errors import ParseError, PosetDistError, ValidationError
from .line_digraph import HH, HT, TT, ExtendedLineDigraph

FORMAT_VERSION = "1"
_DOT_STYLES = {HT: "solid", HH: "dashed", TT: "dotted"}

PathLike = Union[str, Path]


def load_graph(path: PathLike) -> LabeledDigraph:
    """Read a labeled digraph from a JSON or text file."""
    nodes, pairs = _load_pairs(path, kind="graph")
    try:
        return LabeledDigraph([i for i, _ in nodes], dict(nodes), pairs)
    except (ValueError, KeyError) as exc:
        raise ValidationError(f"{path}: {exc}", cause=exc) from exc


def load_poset(path: PathLike) -> PosetDigraph:
    """Read a labeled poset from a JSON or text file and build its digraph."""
    elements, relations = _load_pairs(path, kind="poset")
    try:
        return build_poset_digraph(elements, relations)
    except PosetDistError as exc:
        raise ValidationError(f"{path}: {exc}", cause=exc) from exc
    except (ValueError, KeyError) as exc:
        raise ValidationError(f"{path}: {exc}", cause=exc) from exc


def _load_pairs(path: PathLike, kind: str):
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return _parse_json(text, path, kind)
    return _parse_text(text, path)


def _parse_json(text: str, path: PathLike, kind: str):
    node_key, edge_key = (
        ("nodes", "edges") if kind == "graph" else ("elements", "relations")
    )
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", path=path, line=exc.lineno) from exc
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", path=path)
    for key in (node_key, edge_key):
        if key not in doc:
            raise ParseError(f"missing key {key!r}", path=path, field=key)
        if not isinstance(doc[key], list):
            raise ParseError(f"{key!r} must be a list", path=path, field=key)

    nodes: list[tuple[str, str]] = []
    seen: set[str] = set()
    for i, item in enumerate(doc[node_key]):
        field = f"{node_key}[{i}]"
        if not isinstance(item, dict) or "id" not in item or "label" not in item:
            raise ParseError("expected an object with id and label", path=path, field=field)
        node_id = str(item["id"])
        if node_id in seen:
            raise ParseError(f"duplicate node id {node_id!r}", path=path, field=field)
        seen.add(node_id)
        nodes.append((node_id, str(item["label"])))

    pairs: list[tuple[str, str]] = []
    for i, item in enumerate(doc[edge_key]):
        field = f"{edge_key}[{i}]"
        if not isinstance(item, list) or len(item) != 2:
            raise ParseError("expected a [source, target] pair", path=path, field=field)
        src, dst = str(item[0]), str(item[1])
        for end in (src, dst):
            if end not in seen:
                raise ParseError(f"undeclared node id {end!r}", path=path, field=field)
        pairs.append((src, dst))
    return nodes, pairs


def _parse_text(text: str, path: PathLike):
    nodes: list[tuple[str, str]] = []
    seen: set[str] = set()
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "node":
            if len(parts) != 3:
                raise ParseError("expected: node <id> <label>", path=path, line=lineno)
            if parts[1] in seen:
                raise ParseError(f"duplicate node id {parts[1]!r}", path=path, line=lineno)
            seen.add(parts[1])
            nodes.append((parts[1], parts[2]))
        else:
            if len(parts) != 2:
                raise ParseError("expected: <src> <dst>", path=path, line=lineno)
            for end in parts:
                if end not in seen:
                    raise ParseError(f"undeclared node id {end!r}", path=path, line=lineno)
            pairs.append((parts[0], parts[1]))
    return nodes, pairs


def graph_to_json(g: LabeledDigraph) -> str:
    """Canonical JSON text for a graph: sorted keys and sorted lists."""
    doc = {
        "format_version": FORMAT_VERSION,
        "nodes": [
            {"id": v, "label": g.node_labels[v]} for v in sorted(g.nodes)
        ],
        "edges": [list(e) for e in sorted(g.edges)],
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def save_graph(g: LabeledDigraph, path: PathLike) -> None:
    Path(path).write_text(graph_to_json(g))


def eld_to_dot(eld: ExtendedLineDigraph, name: str = "eld") -> str:
    """DOT text for an extended line digraph: one node per source edge,
    one styled edge per labeled edge (HT solid, HH dashed, TT dotted)."""
    def nid(e):
        return f'"{e[0]}->{e[1]}"'

    lines = [f"digraph {name} {{"]
    for e in eld.nodes:
        la, lb = eld.node_labels[e]
        lines.append(f'  {nid(e)} [label="({la},{lb})"];')
    for e, f, rel in eld.labeled_edges:
        lines.append(f"  {nid(e)} -> {nid(f)} [style={_DOT_STYLES[rel]}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
