# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from itertools import combinations

from hanani_tutte.errors import HypothesisViolated


class HypothesisChecker:
    """Checks a parity drawing against the hypotheses of the embedder.

    The drawing must be independently even, and every vertex in W even.
    """

    def __init__(self, W=(), report_rotations=True):
        self.W = sorted(set(W))
        self.report_rotations = report_rotations

    def check(self, drawing):
        """Generator of problems found in the drawing.

        Yields tuples of
        - "error" or "info", depending on what should be reported,
        - the edge pair or vertex concerned,
        - description string to be shown in the report,
        - category.
        """
        graph = drawing.graph
        for e, f in drawing.parity:
            if graph.independent(e, f):
                yield (
                    "error",
                    (e, f),
                    f"independent edges {e} and {f} cross oddly",
                    "independent",
                )
        for w in self.W:
            if w not in graph:
                yield ("error", w, f"vertex {w} of W is not in the graph", "W")
                continue
            odd = [
                (e, f)
                for e, f in combinations(graph.incident(w), 2)
                if drawing.parity.bit(e, f)
            ]
            if odd:
                yield (
                    "error",
                    w,
                    "vertex {} of W is not even, odd pairs {}".format(
                        w, ", ".join(f"{e}/{f}" for e, f in odd)
                    ),
                    "W-even",
                )
            elif self.report_rotations:
                yield (
                    "info",
                    w,
                    "rotation at {}: {}".format(
                        w, " ".join(str(end) for end in drawing.rotation.cycle(w))
                    ),
                    "rotation",
                )


def require_hypotheses(drawing, W):
    problems = [
        problem
        for problem in HypothesisChecker(W, report_rotations=False).check(drawing)
        if problem[0] == "error"
    ]
    if problems:
        raise HypothesisViolated(problems)
