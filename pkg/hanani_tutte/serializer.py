# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Write the line formats read by hanani_tutte.parsers.

Every writer yields lines without newlines; `serialize` joins and encodes
them. Output only depends on the values written, so equal inputs give
byte-identical files.
"""

from codecs import encode
from json import dumps as json_dumps


def format_end(graph, end):
    """`<eid>`, or `<eid>.a`/`<eid>.b` where the edge is a loop."""
    if graph.is_loop(end.edge):
        return str(end)
    return str(end.edge)


def _ids(values):
    return " ".join(str(value) for value in sorted(values))


def graph_lines(graph):
    for vertex in graph.vertices:
        yield f"v {vertex}"
    for edge, (u, v) in graph.edge_items():
        yield f"e {edge} {u} {v}"


def geometry_lines(drawing):
    """coord lines, and poly lines for edges that are not straight."""
    for vertex, (x, y) in sorted(drawing.coords.items()):
        yield f"coord {vertex} {x} {y}"
    for edge in drawing.graph.edges:
        points = drawing.polylines[edge]
        if len(points) > 2:
            coords = " ".join(f"{x} {y}" for x, y in points)
            yield f"poly {edge} {coords}"


def rotation_lines(graph, rotation):
    for vertex, cycle in rotation.cycles():
        yield " ".join(["rot", str(vertex)] + [format_end(graph, e) for e in cycle])


def parity_lines(parity):
    for e, f in parity:
        yield f"odd {e} {f}"


def constraint_lines(W):
    if W:
        yield "W " + _ids(W)


def preserved_lines(vertices):
    yield " ".join(["preserved"] + [str(v) for v in sorted(vertices)])


def drawing_lines(drawing, W=()):
    """A parity drawing as one self-contained file."""
    yield from graph_lines(drawing.graph)
    yield from rotation_lines(drawing.graph, drawing.rotation)
    yield from parity_lines(drawing.parity)
    yield from constraint_lines(W)


def embedding_lines(graph, result):
    """The rotation file `embed` writes, with the preserved vertices."""
    yield from rotation_lines(graph, result.rotation)
    yield from preserved_lines(result.preserved)


def verdict_lines(verdict):
    return verdict.lines()


def json_lines(records):
    for record in records:
        yield json_dumps(record, sort_keys=True)


def trace_lines(observer):
    return json_lines(observer.toJSON()["details"])


def reduction_lines(reduction):
    return json_lines(reduction.toJSON())


def serialize(lines, encoding="utf-8"):
    """Join lines to the bytes of a file."""
    text = "".join(line + "\n" for line in lines)
    return encode(text, encoding)


def write(path, lines):
    with open(path, "wb") as fh:
        fh.write(serialize(lines))
