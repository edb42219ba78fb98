"""Plain-text serialization for graphs.

The format is a minimal edge list.  Line 1 holds "n m"; the next m lines
hold one edge "i j" each with 0 <= i < j < n, listed in ascending order.
Vertex labels that differ from the default (vertex k labeled Original(k))
are recorded in trailing comment lines, so middle graphs survive a
round-trip with their edge-node provenance intact:

    # label 3 edge 0 1
    # label 7 original 2

Blank lines are ignored, as is any comment line that does not start with
"# label".  `read_graph(write_graph(g))` equals `g`, labels included.
"""

from __future__ import annotations

from .graph import EdgeNode, Graph, Original, VertexLabel


def _parse_int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ValueError(f"line {lineno}: {what} must be an integer, "
                         f"got {token!r}") from None


def _parse_label_comment(
        line: str, lineno: int) -> tuple[int, VertexLabel] | None:
    parts = line[1:].split()
    if not parts or parts[0] != "label":
        return None
    if len(parts) >= 3 and parts[2] == "original" and len(parts) == 4:
        v = _parse_int(parts[1], lineno, "label vertex")
        return v, Original(_parse_int(parts[3], lineno, "original index"))
    if len(parts) >= 3 and parts[2] == "edge" and len(parts) == 5:
        v = _parse_int(parts[1], lineno, "label vertex")
        i = _parse_int(parts[3], lineno, "edge endpoint")
        j = _parse_int(parts[4], lineno, "edge endpoint")
        try:
            return v, EdgeNode(i, j)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    raise ValueError(f"line {lineno}: malformed label comment: {line!r}")


def read_graph(text: str) -> Graph:
    """Parse the edge-list format; errors carry 1-based line numbers."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    labels: list[tuple[int, int, VertexLabel]] = []
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parsed = _parse_label_comment(line, lineno)
            if parsed is not None:
                labels.append((lineno, *parsed))
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise ValueError(
                    f"line {lineno}: header must be 'n m', got {line!r}")
            n = _parse_int(parts[0], lineno, "order")
            m = _parse_int(parts[1], lineno, "edge count")
            if n < 0 or m < 0:
                raise ValueError(f"line {lineno}: header values must be "
                                 f"nonnegative, got {line!r}")
            header = (n, m)
            continue
        if len(parts) != 2:
            raise ValueError(
                f"line {lineno}: edge line must be 'i j', got {line!r}")
        u = _parse_int(parts[0], lineno, "edge endpoint")
        v = _parse_int(parts[1], lineno, "edge endpoint")
        n = header[0]
        if u == v:
            raise ValueError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(
                f"line {lineno}: edge ({u}, {v}) out of range for order {n}")
        if u > v:
            raise ValueError(
                f"line {lineno}: edge endpoints must be ascending, "
                f"got {u} {v}")
        if (u, v) in seen:
            raise ValueError(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    if header is None:
        raise ValueError(f"line {max(last_line, 1)}: missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise ValueError(
            f"line {max(last_line, 1)}: header promises {m} edges, "
            f"found {len(edges)}")
    label_list: list[VertexLabel] = [Original(k) for k in range(n)]
    seen_label: set[int] = set()
    for lineno, v, label in labels:
        if not 0 <= v < n:
            raise ValueError(
                f"line {lineno}: label vertex {v} out of range for order {n}")
        if v in seen_label:
            raise ValueError(f"line {lineno}: duplicate label for vertex {v}")
        seen_label.add(v)
        label_list[v] = label
    return Graph(n, edges, labels=label_list)


def write_graph(g: Graph) -> str:
    """Render a graph in the edge-list format, labels included."""
    lines = [f"{g.order} {g.size}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    for v in range(g.order):
        label = g.label(v)
        if label == Original(v):
            continue
        if isinstance(label, Original):
            lines.append(f"# label {v} original {label.index}")
        else:
            lines.append(f"# label {v} edge {label.i} {label.j}")
    return "\n".join(lines) + "\n"
