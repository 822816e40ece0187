# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from hanani_tutte.checks import require_hypotheses


class EmbedRequest:
    """A drawing and the vertices whose rotations must survive."""

    def __init__(self, drawing, W=()):
        self.drawing = drawing
        self.W = frozenset(W)

    @property
    def graph(self):
        return self.drawing.graph

    def check(self):
        require_hypotheses(self.drawing, self.W)
        return self

    def __repr__(self):
        return "EmbedRequest({} vertices, {} edges, W={})".format(
            len(self.graph), len(self.graph.edges), sorted(self.W)
        )


class EmbedResult:
    """A genus 0 rotation system, and the vertices whose cycles it kept."""

    def __init__(self, rotation, preserved):
        self.rotation = rotation
        self.preserved = frozenset(preserved)

    def __eq__(self, other):
        return (
            isinstance(other, EmbedResult)
            and self.rotation == other.rotation
            and self.preserved == other.preserved
        )

    def __hash__(self):
        return hash((self.rotation, self.preserved))

    def __repr__(self):
        return f"EmbedResult({self.rotation!r}, preserved={sorted(self.preserved)})"
