# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Polyline drawings and their reduction to parity drawings."""

import logging
import random
from collections import namedtuple
from fractions import Fraction
from itertools import combinations

from hanani_tutte.drawing import EdgeEnd, ParityDrawing, ParityVector, RotationSystem
from hanani_tutte.errors import GeneralPositionViolation, UnknownEdge

from .primitives import Contact, on_segment, segment_contact, sort_clockwise


class Violation(namedtuple("Violation", ["kind", "edges", "point", "message"])):
    __slots__ = ()

    def __str__(self):
        return self.message


def _fmt(point):
    return "({}, {})".format(*(str(c) for c in point))


class GeometricDrawing:
    """Vertices at points, edges as polylines.

    An edge without a polyline is drawn straight. In exact mode coordinates
    are Fractions and `epsilon` is unused.
    """

    def __init__(self, graph, coords, polylines=None, exact=True, epsilon=1e-9):
        self.graph = graph
        self.exact = exact
        self.epsilon = 0 if exact else epsilon
        convert = Fraction if exact else float
        self.coords = {
            v: (convert(x), convert(y)) for v, (x, y) in coords.items()
        }
        self.polylines = {}
        polylines = polylines or {}
        for edge, (u, v) in graph.edge_items():
            if edge in polylines:
                points = [(convert(x), convert(y)) for x, y in polylines[edge]]
            elif u in self.coords and v in self.coords:
                points = [self.coords[u], self.coords[v]]
            else:
                points = []
            self.polylines[edge] = points

    def segments(self, edge):
        points = self.polylines[edge]
        return list(zip(points, points[1:]))

    def validate(self):
        violations = validate_general_position(self)
        if violations:
            raise GeneralPositionViolation(violations)


def validate_general_position(drawing):
    """All violations of general position, empty when the drawing is fine."""
    violations = []
    eps = drawing.epsilon
    graph = drawing.graph
    for vertex in graph.vertices:
        if vertex not in drawing.coords:
            violations.append(
                Violation("coords", (), None, f"vertex {vertex} has no coordinates")
            )
    if violations:
        return violations
    for v, w in combinations(graph.vertices, 2):
        if _close(drawing.coords[v], drawing.coords[w], eps):
            violations.append(
                Violation(
                    "coincident",
                    (),
                    drawing.coords[v],
                    f"vertices {v} and {w} coincide at {_fmt(drawing.coords[v])}",
                )
            )
    for edge, (u, v) in graph.edge_items():
        points = drawing.polylines[edge]
        if len(points) < 2:
            violations.append(
                Violation("polyline", (edge,), None, f"edge {edge} has no polyline")
            )
        elif points[0] != drawing.coords[u] or points[-1] != drawing.coords[v]:
            violations.append(
                Violation(
                    "endpoints",
                    (edge,),
                    points[0],
                    f"polyline of edge {edge} does not run from vertex {u} "
                    f"to vertex {v}",
                )
            )
        elif any(p == q for p, q in drawing.segments(edge)):
            violations.append(
                Violation(
                    "degenerate",
                    (edge,),
                    points[0],
                    f"polyline of edge {edge} repeats a point",
                )
            )
    if violations:
        return violations
    violations.extend(_vertex_proximity(drawing))
    violations.extend(_segment_contacts(drawing))
    return violations


def _vertex_proximity(drawing):
    eps = drawing.epsilon
    for edge, (u, v) in drawing.graph.edge_items():
        segments = drawing.segments(edge)
        last = len(segments) - 1
        for vertex, point in drawing.coords.items():
            for index, (p, q) in enumerate(segments):
                if vertex == u and index == 0 and point == p:
                    continue
                if vertex == v and index == last and point == q:
                    continue
                if on_segment(point, p, q, eps):
                    yield Violation(
                        "through-vertex",
                        (edge,),
                        point,
                        f"edge {edge} passes through vertex {vertex} "
                        f"at {_fmt(point)}",
                    )
                    break


def _close(p, q, eps):
    return abs(p[0] - q[0]) <= eps and abs(p[1] - q[1]) <= eps


def _terminal(drawing, edge, index, point):
    """Is `point` a vertex end of the polyline at segment `index`?"""
    u, v = drawing.graph.endpoints(edge)
    last = len(drawing.polylines[edge]) - 2
    return (index == 0 and point == drawing.coords[u]) or (
        index == last and point == drawing.coords[v]
    )


def _segment_contacts(drawing):
    eps = drawing.epsilon
    tagged = [
        (edge, index, segment)
        for edge in drawing.graph.edges
        for index, segment in enumerate(drawing.segments(edge))
    ]
    crossings = []
    for (e, i, (a, b)), (f, j, (c, d)) in combinations(tagged, 2):
        kind, point = segment_contact(a, b, c, d, eps)
        if kind == Contact.NONE:
            continue
        if e == f:
            consecutive = abs(i - j) == 1 and kind == Contact.TOUCH
            shared = b if j == i + 1 else a
            if consecutive and point == shared:
                continue
            if (
                kind == Contact.TOUCH
                and _terminal(drawing, e, i, point)
                and _terminal(drawing, e, j, point)
            ):
                continue
            yield Violation(
                "self-intersection",
                (e,),
                point,
                f"edge {e} intersects itself at {_fmt(point)}",
            )
            continue
        if kind == Contact.CROSSING:
            crossings.append((point, e, f))
            continue
        if (
            kind == Contact.TOUCH
            and _terminal(drawing, e, i, point)
            and _terminal(drawing, f, j, point)
        ):
            continue
        yield Violation(
            kind,
            (e, f),
            point,
            f"edges {e} and {f} {'overlap' if kind == Contact.OVERLAP else 'touch'} "
            f"at {_fmt(point)}",
        )
    yield from _concurrent_crossings(crossings, eps)


def _concurrent_crossings(crossings, eps):
    groups = []
    for point, e, f in crossings:
        for group in groups:
            if _close(group[0], point, eps):
                group[1].update((e, f))
                break
        else:
            groups.append((point, {e, f}))
    for point, edges in groups:
        if len(edges) >= 3:
            yield Violation(
                "concurrent",
                tuple(sorted(edges)),
                point,
                f"edges {sorted(edges)} cross at one point {_fmt(point)}",
            )


def crossing_parity(drawing, e, f):
    """Transversal interior crossings of e and f, mod 2."""
    for edge in (e, f):
        if edge not in drawing.polylines:
            raise UnknownEdge(edge)
    if e == f:
        return 0
    count = 0
    for a, b in drawing.segments(e):
        for c, d in drawing.segments(f):
            kind, _ = segment_contact(a, b, c, d, drawing.epsilon)
            if kind == Contact.CROSSING:
                count += 1
    return count % 2


def rotation_at(drawing, vertex):
    """Edge-ends at vertex, clockwise by the direction they leave in."""
    ends = []
    for edge in drawing.graph.incident(vertex):
        u, v = drawing.graph.endpoints(edge)
        points = drawing.polylines[edge]
        if u == vertex:
            ends.append((EdgeEnd(edge, 0), points[0], points[1]))
        if v == vertex:
            ends.append((EdgeEnd(edge, 1), points[-1], points[-2]))
    ordered = sort_clockwise(
        ends, lambda item: (item[2][0] - item[1][0], item[2][1] - item[1][1])
    )
    return [end for end, _, _ in ordered]


def to_parity_drawing(drawing):
    drawing.validate()
    graph = drawing.graph
    rotation = RotationSystem({v: rotation_at(drawing, v) for v in graph.vertices})
    odd = [
        (e, f)
        for e, f in combinations(graph.edges, 2)
        if crossing_parity(drawing, e, f)
    ]
    logging.getLogger("hanani-tutte.io").debug(
        "geometry: %d vertices, %d edges, %d odd pairs",
        len(graph),
        len(graph.edges),
        len(odd),
    )
    return ParityDrawing(graph, rotation, ParityVector(odd))


def jitter(drawing, seed, scale=1e-6):
    """Move every vertex and bend point by at most `scale` in each axis."""
    rng = random.Random(seed)
    convert = Fraction if drawing.exact else float

    def shake(point):
        return (
            point[0] + convert(rng.uniform(-scale, scale)),
            point[1] + convert(rng.uniform(-scale, scale)),
        )

    coords = {v: shake(p) for v, p in sorted(drawing.coords.items())}
    polylines = {}
    for edge, (u, v) in drawing.graph.edge_items():
        points = drawing.polylines[edge]
        bends = [shake(p) for p in points[1:-1]]
        polylines[edge] = [coords[u]] + bends + [coords[v]]
    return GeometricDrawing(
        drawing.graph,
        coords,
        polylines,
        exact=drawing.exact,
        epsilon=drawing.epsilon or 1e-9,
    )
