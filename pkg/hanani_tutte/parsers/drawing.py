# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Graph, drawing, rotation and constraint files.

All formats share one line syntax, so a drawing may be split over several
files (a graph file and a rotation file, say) and read in one go:

    v <vid>
    e <eid> <u> <v>
    coord <vid> <x> <y>
    poly <eid> <x1> <y1> ... <xn> <yn>
    rot <vid> <end> <end> ...        ends are <eid>, or <eid>.a / <eid>.b
    odd <eid> <eid>
    W <vid> ...
    preserved <vid> ...

Coordinates are decimals or p/q rationals.
"""

import logging
import re
from fractions import Fraction

from hanani_tutte.drawing import EdgeEnd, ParityDrawing, ParityVector, RotationSystem
from hanani_tutte.errors import HananiTutteError
from hanani_tutte.geometry import GeometricDrawing, jitter, to_parity_drawing
from hanani_tutte.graph import Multigraph

from .base import Junk, Parser


class DrawingParser(Parser):
    keywords = ("v", "e", "coord", "poly", "rot", "odd", "W", "preserved")


class DrawingFile:
    """Everything read from one or more directive files."""

    reId = re.compile(r"\d+\Z")
    reEnd = re.compile(r"(?P<edge>\d+)(?:\.(?P<side>[ab]))?\Z")

    def __init__(self):
        self.paths = []
        self.vertices = {}
        self.edges = {}
        self.coords = {}
        self.polylines = {}
        self.cycles = {}
        self.odd = []
        self.W = set()
        self.preserved = None
        self._graph = None
        # v and e lines another file may repeat, from with_rotation_file
        self._base = None
        self._repeatable = set()

    # reading

    def read(self, fragments):
        """Interpret directives, as yielded by iterating a DrawingParser.

        Vertices and edges are collected first, so a file may use ids it
        declares further down.
        """
        directives = []
        for fragment in fragments:
            if isinstance(fragment, Junk):
                raise fragment.error()
            directives.append(fragment)
        for directive in directives:
            if directive.keyword == "v":
                self._vertex(directive)
        for directive in directives:
            if directive.keyword == "e":
                self._edge(directive)
        for directive in directives:
            if directive.keyword not in ("v", "e"):
                getattr(self, "_" + directive.keyword.lower())(directive)
        self._graph = None
        return self

    def _id(self, directive, index, what):
        token = directive.args[index]
        if not self.reId.match(token):
            raise directive.error(f"expected {what} id, found {token!r}", index)
        return int(token)

    def _known_vertex(self, directive, index):
        vertex = self._id(directive, index, "vertex")
        if vertex not in self.vertices:
            raise directive.error(f"unknown vertex {vertex}", index)
        return vertex

    def _known_edge(self, directive, index):
        edge = self._id(directive, index, "edge")
        if edge not in self.edges:
            raise directive.error(f"unknown edge {edge}", index)
        return edge

    def _number(self, directive, index):
        token = directive.args[index]
        try:
            return Fraction(token)
        except (ValueError, ZeroDivisionError):
            raise directive.error(f"expected a number, found {token!r}", index)

    def _arity(self, directive, count, usage):
        if len(directive.args) != count:
            raise directive.error(f"expected {usage}")

    def _vertex(self, directive):
        self._arity(directive, 1, "v <vid>")
        vertex = self._id(directive, 0, "vertex")
        if ("v", vertex) in self._repeatable:
            self._repeatable.discard(("v", vertex))
            return
        if self._base is not None and vertex not in self.vertices:
            raise directive.error(f"vertex {vertex} is not in {self._base}", 0)
        if vertex in self.vertices:
            raise directive.error(f"duplicate vertex id {vertex}", 0)
        self.vertices[vertex] = directive

    def _edge(self, directive):
        self._arity(directive, 3, "e <eid> <u> <v>")
        edge = self._id(directive, 0, "edge")
        u, v = self._id(directive, 1, "vertex"), self._id(directive, 2, "vertex")
        if ("e", edge) in self._repeatable:
            if self.edges[edge] != (u, v):
                raise directive.error(
                    "edge {} joins {} and {} in {}".format(
                        edge, *self.edges[edge], self._base
                    ),
                    1,
                )
            self._repeatable.discard(("e", edge))
            return
        if self._base is not None and edge not in self.edges:
            raise directive.error(f"edge {edge} is not in {self._base}", 0)
        if edge in self.edges:
            raise directive.error(f"duplicate edge id {edge}", 0)
        for index, vertex in ((1, u), (2, v)):
            if vertex not in self.vertices:
                raise directive.error(
                    f"edge {edge} has dangling endpoint {vertex}", index
                )
        self.edges[edge] = (u, v)

    def _coord(self, directive):
        self._arity(directive, 3, "coord <vid> <x> <y>")
        vertex = self._known_vertex(directive, 0)
        if vertex in self.coords:
            raise directive.error(f"duplicate coordinates for vertex {vertex}", 0)
        self.coords[vertex] = (self._number(directive, 1), self._number(directive, 2))

    def _poly(self, directive):
        args = directive.args
        if len(args) < 5 or len(args) % 2 == 0:
            raise directive.error("expected poly <eid> <x1> <y1> ... <xn> <yn>")
        edge = self._known_edge(directive, 0)
        if edge in self.polylines:
            raise directive.error(f"duplicate polyline for edge {edge}", 0)
        numbers = [self._number(directive, i) for i in range(1, len(args))]
        self.polylines[edge] = list(zip(numbers[::2], numbers[1::2]))

    def _rot(self, directive):
        if not directive.args:
            raise directive.error("expected rot <vid> <end> ...")
        vertex = self._known_vertex(directive, 0)
        if vertex in self.cycles:
            raise directive.error(f"duplicate rotation for vertex {vertex}", 0)
        cycle = []
        for index in range(1, len(directive.args)):
            end = self._edge_end(directive, index, vertex)
            if end in cycle:
                raise directive.error(f"edge-end {end} listed twice", index)
            cycle.append(end)
        self.cycles[vertex] = cycle

    def _edge_end(self, directive, index, vertex):
        token = directive.args[index]
        m = self.reEnd.match(token)
        if m is None:
            raise directive.error(f"expected an edge-end, found {token!r}", index)
        edge = int(m.group("edge"))
        if edge not in self.edges:
            raise directive.error(f"unknown edge {edge}", index)
        u, v = self.edges[edge]
        if m.group("side") is not None:
            side = "ab".index(m.group("side"))
            if self.edges[edge][side] != vertex:
                raise directive.error(
                    f"edge-end {token} does not belong at vertex {vertex}", index
                )
            return EdgeEnd(edge, side)
        if u == v:
            raise directive.error(f"loop {edge} needs {edge}.a or {edge}.b", index)
        if vertex not in (u, v):
            raise directive.error(
                f"edge {edge} is not incident to vertex {vertex}", index
            )
        return EdgeEnd(edge, 0 if u == vertex else 1)

    def _odd(self, directive):
        self._arity(directive, 2, "odd <eid> <eid>")
        e, f = self._known_edge(directive, 0), self._known_edge(directive, 1)
        if e == f:
            raise directive.error(f"edge {e} paired with itself", 1)
        self.odd.append((e, f))

    def _w(self, directive):
        if not directive.args:
            raise directive.error("expected W <vid> ...")
        for index in range(len(directive.args)):
            self.W.add(self._known_vertex(directive, index))

    def _preserved(self, directive):
        if self.preserved is None:
            self.preserved = set()
        for index in range(len(directive.args)):
            self.preserved.add(self._known_vertex(directive, index))

    # results

    @property
    def graph(self):
        if self._graph is None:
            self._graph = Multigraph(self.vertices, self.edges)
        return self._graph

    @property
    def has_geometry(self):
        return bool(self.coords)

    @property
    def has_rotation(self):
        return bool(self.cycles)

    def rotation(self):
        return RotationSystem(
            {v: self.cycles.get(v, ()) for v in self.graph.vertices}
        )

    def geometric(self, exact=True, epsilon=1e-9):
        if not self.has_geometry:
            raise HananiTutteError("no coord lines to build a geometric drawing")
        return GeometricDrawing(
            self.graph, self.coords, self.polylines, exact=exact, epsilon=epsilon
        )

    def parity_drawing(self, exact=True, epsilon=1e-9, seed=None, scale=1e-6):
        """The drawing as rotation plus parities.

        `rot`/`odd` lines win over coordinates; with coordinates only, the
        geometry is validated (after jittering when `seed` is given).
        """
        if self.has_rotation or not self.has_geometry:
            if self.has_geometry:
                logging.getLogger("hanani-tutte.io").info(
                    "%s: rot lines given, ignoring coordinates",
                    ", ".join(self.paths),
                )
            return ParityDrawing(self.graph, self.rotation(), ParityVector(self.odd))
        geometric = self.geometric(exact, epsilon)
        if seed is not None:
            geometric = jitter(geometric, seed, scale)
        return to_parity_drawing(geometric)


def parse_files(*paths):
    """Read the given files as one DrawingFile."""
    parser = DrawingParser()
    fragments = []
    for path in paths:
        parser.readFile(path)
        fragments.extend(parser)
    result = DrawingFile()
    result.paths = list(paths)
    return result.read(fragments)


def parse_string(contents, path="<string>"):
    parser = DrawingParser()
    parser.readUnicode(contents, path)
    result = DrawingFile()
    result.paths = [path]
    return result.read(parser)


def with_rotation_file(base, path):
    """The graph of `base` with rotation lines read from another file.

    Rotation and W lines of `base` are dropped in favour of the new file.
    The new file may repeat the v and e lines of `base`, once each and with
    the same endpoints, so a complete drawing file serves as well.
    """
    parser = DrawingParser()
    parser.readFile(path)
    result = DrawingFile()
    result.paths = base.paths + [path]
    result.vertices = dict(base.vertices)
    result.edges = dict(base.edges)
    result._base = ", ".join(base.paths)
    result._repeatable = {("v", v) for v in base.vertices} | {
        ("e", e) for e in base.edges
    }
    return result.read(parser)
