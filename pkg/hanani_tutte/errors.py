# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Exceptions raised by hanani-tutte.

Everything derives from HananiTutteError, so callers can catch the whole
family. Errors that signal an unrealizable parity vector (claim checks,
weak Hanani-Tutte failures) derive from UnrealizableDrawing.
"""

import errno


class HananiTutteError(ValueError):
    pass


# graph-core


class NotConnected(HananiTutteError):
    pass


class NotTwoConnected(HananiTutteError):
    pass


class NotCutVertex(HananiTutteError):
    def __init__(self, vertex):
        super().__init__(f"vertex {vertex} is not a cut vertex")
        self.vertex = vertex


class NotSeparationPair(HananiTutteError):
    def __init__(self, pair):
        super().__init__("{%s, %s} is not a separation pair" % tuple(pair))
        self.pair = tuple(pair)


class NoPath(HananiTutteError):
    def __init__(self, source, target):
        super().__init__(f"no path between {source} and {target}")
        self.source = source
        self.target = target


class NotSubgraph(HananiTutteError):
    pass


class NotSimple(HananiTutteError):
    pass


# drawing-model


class UnknownEdge(HananiTutteError, KeyError):
    def __init__(self, edge):
        super().__init__(f"unknown edge {edge}")
        self.edge = edge

    def __str__(self):
        return self.args[0]


class UnknownVertex(HananiTutteError, KeyError):
    def __init__(self, vertex):
        super().__init__(f"unknown vertex {vertex}")
        self.vertex = vertex

    def __str__(self):
        return self.args[0]


class EndpointMove(HananiTutteError):
    def __init__(self, edge, vertex):
        super().__init__(f"vertex {vertex} is an endpoint of edge {edge}")
        self.edge = edge
        self.vertex = vertex


class NotEndpoint(HananiTutteError):
    def __init__(self, edge, vertex):
        super().__init__(f"vertex {vertex} is not an endpoint of edge {edge}")
        self.edge = edge
        self.vertex = vertex


class DegreeTooSmall(HananiTutteError):
    def __init__(self, vertex, degree):
        super().__init__(f"vertex {vertex} has degree {degree}, need at least 2")
        self.vertex = vertex
        self.degree = degree


class NotIncident(HananiTutteError):
    def __init__(self, edge, vertex):
        super().__init__(f"edge {edge} is not incident to vertex {vertex}")
        self.edge = edge
        self.vertex = vertex


class AnchorIsEdge(HananiTutteError):
    def __init__(self, edge, vertex):
        super().__init__(f"edge {edge} cannot be pulled across itself at {vertex}")
        self.edge = edge
        self.vertex = vertex


class OddEulerDefect(HananiTutteError):
    pass


class InvalidRotation(HananiTutteError):
    pass


# hypotheses and realizability


class HypothesisViolated(HananiTutteError):
    def __init__(self, problems):
        self.problems = list(problems)
        lines = [msg for _, _, msg, _ in self.problems]
        super().__init__("drawing violates the hypotheses: " + "; ".join(lines))


class UnrealizableDrawing(HananiTutteError):
    """The parity vector cannot come from an actual drawing."""

    diagnostic = None


class OddVertexAfterAdjustment(UnrealizableDrawing):
    def __init__(self, vertex, odd_pairs, diagnostic=None):
        super().__init__(
            f"vertex {vertex} still has odd pairs {sorted(odd_pairs)} "
            "after local adjustment"
        )
        self.vertex = vertex
        self.odd_pairs = sorted(odd_pairs)
        self.diagnostic = diagnostic


class ClaimAViolated(UnrealizableDrawing):
    def __init__(self, vertex, labels):
        super().__init__(
            f"no part is consecutive in the rotation of vertex {vertex}: {labels}"
        )
        self.vertex = vertex
        self.labels = labels


class ClaimBViolated(UnrealizableDrawing):
    def __init__(self, message, pair):
        super().__init__(message)
        self.pair = tuple(pair)


class WeakHTViolated(UnrealizableDrawing):
    def __init__(self, genus, diagnostic=None):
        super().__init__(f"even drawing has a rotation system of genus {genus}")
        self.genus = genus
        self.diagnostic = diagnostic


class PathNotDisjoint(HananiTutteError):
    pass


class NoIncidentFace(HananiTutteError):
    pass


class NoFaceWithEdge(HananiTutteError):
    pass


class RotationNotPreserved(HananiTutteError):
    def __init__(self, vertices):
        super().__init__(f"rotations not preserved at {sorted(vertices)}")
        self.vertices = sorted(vertices)


class ReinsertionBroken(HananiTutteError):
    pass


# oracle and generator


class BudgetExceeded(HananiTutteError):
    def __init__(self, count, budget):
        super().__init__(
            f"{count} rotation systems to enumerate exceed the budget of {budget}"
        )
        self.count = count
        self.budget = budget


class Unsatisfiable(HananiTutteError):
    pass


# input


class GeneralPositionViolation(HananiTutteError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__(
            "drawing is not in general position: "
            + "; ".join(str(v) for v in self.violations)
        )


class FormatError(HananiTutteError):
    def __init__(self, path, lineno, column, message):
        super().__init__(f"{path}:{lineno}:{column}: {message}")
        self.path = path
        self.lineno = lineno
        self.column = column
        self.message = message


class ConfigNotFound(EnvironmentError):
    def __init__(self, path):
        super().__init__(errno.ENOENT, "Configuration file not found", path)
