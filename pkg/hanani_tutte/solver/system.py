# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""The planarity criterion as a linear system over edge-vertex moves.

A pair of edges is constrained when the edges are independent or share
exactly one endpoint in W. Each row asks that the moves touching the pair
make its parity even:

* independent e = ab, f = uv: x(e,u) + x(e,v) + x(f,a) + x(f,b) = parity
* e = wa, f = wb with w in W: x(e,b) + x(f,a) + t(e,w) + t(f,w) = parity

where t(e,w) twists e around its endpoint w, which keeps rotations.
"""

import logging
from collections import namedtuple
from itertools import combinations

from hanani_tutte.drawing import apply_moves
from hanani_tutte.errors import NotSimple

from .gf2 import GF2Matrix


class MoveVariable(namedtuple("MoveVariable", ["edge", "vertex", "twist"])):
    __slots__ = ()

    def __new__(cls, edge, vertex, twist=False):
        return super().__new__(cls, edge, vertex, twist)

    def __str__(self):
        return f"{'twist' if self.twist else 'move'} {self.edge} {self.vertex}"


Row = namedtuple("Row", ["pair", "variables", "rhs"])


class UnifiedSystem:
    def __init__(self, graph, W, variables, rows):
        self.graph = graph
        self.W = frozenset(W)
        self.variables = variables
        self.index = {variable: i for i, variable in enumerate(variables)}
        self.rows = rows
        self.matrix = GF2Matrix(len(variables))
        for row in rows:
            self.matrix.add_row([self.index[v] for v in row.variables], row.rhs)

    @property
    def constrained_pairs(self):
        return [row.pair for row in self.rows]

    def __repr__(self):
        return "UnifiedSystem({} variables, {} rows, W={})".format(
            len(self.variables), len(self.rows), sorted(self.W)
        )


def build_system(graph, W, drawing):
    if not graph.is_simple():
        raise NotSimple("the move system needs a simple graph")
    W = set(W)
    variables = [
        MoveVariable(edge, vertex)
        for edge in graph.edges
        for vertex in graph.vertices
        if vertex not in graph.endpoints(edge)
    ]
    variables.extend(
        MoveVariable(edge, w, True) for w in sorted(W) for edge in graph.incident(w)
    )
    rows = []
    for e, f in combinations(graph.edges, 2):
        a, b = graph.endpoints(e)
        u, v = graph.endpoints(f)
        common = graph.common_vertices(e, f)
        if not common:
            row = [
                MoveVariable(e, u),
                MoveVariable(e, v),
                MoveVariable(f, a),
                MoveVariable(f, b),
            ]
        elif common & W:
            (w,) = common
            row = [
                MoveVariable(e, graph.other(f, w)),
                MoveVariable(f, graph.other(e, w)),
                MoveVariable(e, w, True),
                MoveVariable(f, w, True),
            ]
        else:
            continue
        rows.append(Row((e, f), row, drawing.parity.bit(e, f)))
    return UnifiedSystem(graph, W, variables, rows)


class Verdict:
    """Outcome of a decision.

    A feasible verdict holds the moves to set and the drawing they produce;
    an infeasible one the indices of rows summing to 0 = 1.
    """

    def __init__(self, feasible, system, moves=(), certificate=(), witness=None):
        self.feasible = feasible
        self.system = system
        self.moves = list(moves)
        self.certificate = list(certificate)
        self.witness = witness

    def __bool__(self):
        return self.feasible

    def lines(self):
        if self.feasible:
            yield "feasible"
            for move in self.moves:
                yield str(move)
        else:
            yield "infeasible"
            yield "cert " + " ".join(str(i) for i in self.certificate)

    def __repr__(self):
        return f"Verdict(feasible={self.feasible}, {self.system!r})"


def decide_unified(graph, W, drawing):
    if not graph.is_simple():
        return _decide_multigraph(graph, W, drawing)
    system = build_system(graph, W, drawing)
    solution = system.matrix.solve()
    log = logging.getLogger("hanani-tutte.solver")
    log.debug(
        "system: %d variables, %d rows, rank %d",
        len(system.variables),
        len(system.rows),
        solution.rank,
    )
    if not solution.feasible:
        if not system.matrix.check_certificate(solution.certificate):
            raise AssertionError("certificate rows do not sum to 0 = 1")
        return Verdict(False, system, certificate=solution.certificate)
    moves = [system.variables[i] for i in solution.assignment]
    witness = apply_moves(drawing, moves)
    odd = [pair for pair in system.constrained_pairs if witness.parity.bit(*pair)]
    if odd:
        raise AssertionError(f"witness leaves constrained pairs {odd} odd")
    return Verdict(True, system, moves=moves, witness=witness)


def _decide_multigraph(graph, W, drawing):
    from hanani_tutte.multigraph import reduce

    reduced, reduced_drawing, reduction = reduce(graph, W, drawing)
    logging.getLogger("hanani-tutte.solver").debug(
        "solving the reduced graph: %d vertices, %d edges",
        len(reduced),
        len(reduced.edges),
    )
    return decide_unified(reduced, reduction.w_image, reduced_drawing)


def decide_strong(graph, drawing):
    return decide_unified(graph, (), drawing)


def decide_weak(graph, drawing):
    return decide_unified(graph, graph.vertices, drawing)
