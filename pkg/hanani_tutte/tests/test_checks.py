# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

import unittest

from hanani_tutte.checks import HypothesisChecker, require_hypotheses
from hanani_tutte.drawing import ParityVector
from hanani_tutte.errors import HypothesisViolated
from hanani_tutte.generator import complete_graph, convex_drawing


class TestHypothesisChecker(unittest.TestCase):
    def setUp(self):
        self.drawing = convex_drawing(complete_graph(4))

    def test_independent(self):
        problems = list(HypothesisChecker([0]).check(self.drawing))
        self.assertEqual(
            problems,
            [
                (
                    "error",
                    (1, 4),
                    "independent edges 1 and 4 cross oddly",
                    "independent",
                ),
                ("info", 0, "rotation at 0: 0.a 2.a 1.a", "rotation"),
            ],
        )

    def test_W_even(self):
        drawing = self.drawing.replace(parity=ParityVector([(0, 1), (0, 2)]))
        checker = HypothesisChecker([0, 3], report_rotations=False)
        problems = list(checker.check(drawing))
        self.assertEqual(
            problems,
            [("error", 0, "vertex 0 of W is not even, odd pairs 0/1, 0/2", "W-even")],
        )

    def test_unknown_vertex(self):
        problems = list(HypothesisChecker([9]).check(self.drawing))
        self.assertIn(("error", 9, "vertex 9 of W is not in the graph", "W"), problems)

    def test_require(self):
        with self.assertRaises(HypothesisViolated):
            require_hypotheses(self.drawing, ())
        even = self.drawing.replace(parity=ParityVector())
        self.assertIsNone(require_hypotheses(even, even.graph.vertices))
