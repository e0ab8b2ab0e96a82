"""Plain-text file formats and DOT export.

Three formats, all 0-based, ``#``-prefixed lines ignored:

* graph:    header ``graph <n>``, then one ``u v`` pair per line.
* uhg:      header ``uhg <a> <n>``, then one hyperedge per line as
            space-separated ascending vertex ids.
* ohg:      header ``ohg <a> <n>``, same but the vertex order is meaningful.

A bipartite classes file lists the side-A vertex ids, whitespace separated;
the B side is the complement.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .graphs import BipartiteGraph, Graph, OrientedHypergraph, UniformHypergraph


def _payload_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def write_graph(g: Graph, path: str | Path) -> None:
    lines = [f"graph {g.n}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    Path(path).write_text("\n".join(lines) + "\n")


def read_graph(path: str | Path) -> Graph:
    lines = _payload_lines(Path(path).read_text())
    if not lines or lines[0].split()[0] != "graph":
        raise ValueError(f"{path}: expected 'graph <n>' header")
    n = int(lines[0].split()[1])
    pairs = []
    for line in lines[1:]:
        u, v = map(int, line.split())
        pairs.append((u, v))
    return Graph.from_edges(n, pairs)


def write_hypergraph(h: UniformHypergraph, path: str | Path) -> None:
    lines = [f"uhg {h.a} {h.n}"]
    lines += [" ".join(map(str, he)) for he in h.hyperedges]
    Path(path).write_text("\n".join(lines) + "\n")


def read_hypergraph(path: str | Path) -> UniformHypergraph:
    lines = _payload_lines(Path(path).read_text())
    if not lines or lines[0].split()[0] != "uhg":
        raise ValueError(f"{path}: expected 'uhg <a> <n>' header")
    _, a, n = lines[0].split()
    hyperedges = [tuple(map(int, line.split())) for line in lines[1:]]
    return UniformHypergraph(int(a), int(n), tuple(hyperedges))


def write_oriented(o: OrientedHypergraph, path: str | Path) -> None:
    lines = [f"ohg {o.a} {o.n}"]
    lines += [" ".join(map(str, he)) for he in o.hyperedges]
    Path(path).write_text("\n".join(lines) + "\n")


def read_oriented(path: str | Path) -> OrientedHypergraph:
    lines = _payload_lines(Path(path).read_text())
    if not lines or lines[0].split()[0] != "ohg":
        raise ValueError(f"{path}: expected 'ohg <a> <n>' header")
    _, a, n = lines[0].split()
    hyperedges = [tuple(map(int, line.split())) for line in lines[1:]]
    return OrientedHypergraph(int(a), int(n), tuple(hyperedges))


def write_classes(side_a, path: str | Path) -> None:
    Path(path).write_text(" ".join(map(str, side_a)) + "\n")


def read_classes(path: str | Path) -> tuple[int, ...]:
    tokens: list[int] = []
    for line in _payload_lines(Path(path).read_text()):
        tokens.extend(int(t) for t in line.split())
    return tuple(tokens)


def read_any(path: str | Path):
    """Dispatch on the header token; returns Graph / UniformHypergraph / OrientedHypergraph."""
    lines = _payload_lines(Path(path).read_text())
    if not lines:
        raise ValueError(f"{path}: empty file")
    kind = lines[0].split()[0]
    if kind == "graph":
        return read_graph(path)
    if kind == "uhg":
        return read_hypergraph(path)
    if kind == "ohg":
        return read_oriented(path)
    raise ValueError(f"{path}: unknown header {kind!r}")


def read_bipartite(path: str | Path, classes_path: str | Path | None = None) -> BipartiteGraph:
    """Load a graph as bipartite; compute a 2-coloring when no classes file is given."""
    g = read_graph(path)
    if classes_path is None:
        return BipartiteGraph.from_graph(g)
    side_a = read_classes(classes_path)
    in_a = set(side_a)
    side_b = tuple(v for v in range(g.n) if v not in in_a)
    return BipartiteGraph(g.n, g.edges, side_a, side_b)


# ---------------------------------------------------------------------------
# DOT export


def dot_text(obj, *, name: str = "G") -> str:
    """Deterministic DOT rendering.

    Fat edges render bold and connector edges dashed (pastings); layered
    edges carry their layer index as a label. Byte-identical output for
    equal inputs.
    """
    from .constructions import BlowupGraph, PastedGraph
    from .layering import EdgeLayering

    labels: dict = {}
    styles: dict = {}
    if isinstance(obj, PastedGraph):
        g = obj.graph
        for e, lab in obj.labels.items():
            if lab == "fat":
                styles[e] = "bold"
            elif lab == "connector":
                styles[e] = "dashed"
    elif isinstance(obj, BlowupGraph):
        g = obj.graph
    elif isinstance(obj, EdgeLayering):
        g = obj.graph
        labels = {(min(a, b), max(a, b)): str(layer)
                  for (a, b), layer in obj.layer.items()}
    elif isinstance(obj, Graph):
        g = obj
    else:
        raise TypeError(f"cannot render {type(obj).__name__} as DOT")

    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for e in g.sorted_edges():
        attrs = []
        if e in styles:
            attrs.append(f"style={styles[e]}")
        if e in labels:
            attrs.append(f'label="{labels[e]}"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {e[0]} -- {e[1]}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(obj, path: str | Path) -> None:
    Path(path).write_text(dot_text(obj))


def format_cell(x) -> str:
    """CSV cell formatting: rationals as p/q, floats with 6 significant digits."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        return f"{x:.6g}"
    return str(x)
