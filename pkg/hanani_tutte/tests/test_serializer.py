# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from fractions import Fraction
import json
import unittest

from hanani_tutte.drawing import ParityDrawing, ParityVector
from hanani_tutte.embed import EmbedResult, Observer
from hanani_tutte.geometry import GeometricDrawing
from hanani_tutte.parsers import parse_string
from hanani_tutte.serializer import (
    drawing_lines,
    embedding_lines,
    geometry_lines,
    serialize,
    trace_lines,
)
from hanani_tutte.tests import graph, rotation


DIGON = graph([(0, 1), (0, 1), (1, 1)])
DIGON_ROTATION = rotation({0: "0.a 1.a", 1: "0.b 2.a 2.b 1.b"})


class TestSerializer(unittest.TestCase):
    def test_drawing(self):
        drawing = ParityDrawing(DIGON, DIGON_ROTATION, ParityVector([(1, 0)]))
        self.assertEqual(
            list(drawing_lines(drawing, W=[1, 0])),
            [
                "v 0",
                "v 1",
                "e 0 0 1",
                "e 1 0 1",
                "e 2 1 1",
                "rot 0 0 1",
                "rot 1 0 2.a 2.b 1",
                "odd 0 1",
                "W 0 1",
            ],
        )

    def test_read_back(self):
        drawing = ParityDrawing(DIGON, DIGON_ROTATION, ParityVector([(0, 2)]))
        text = serialize(drawing_lines(drawing, W=[0])).decode("utf-8")
        parsed = parse_string(text)
        self.assertEqual(parsed.parity_drawing(), drawing)
        self.assertEqual(parsed.W, {0})

    def test_embedding(self):
        result = EmbedResult(DIGON_ROTATION, [1, 0])
        self.assertEqual(
            list(embedding_lines(DIGON, result)),
            ["rot 0 0 1", "rot 1 0 2.a 2.b 1", "preserved 0 1"],
        )
        self.assertEqual(
            list(embedding_lines(DIGON, EmbedResult(DIGON_ROTATION, []))),
            ["rot 0 0 1", "rot 1 0 2.a 2.b 1", "preserved"],
        )

    def test_geometry(self):
        g = graph([(0, 1), (1, 2)])
        coords = {0: (0, 0), 1: (Fraction(1, 2), 1), 2: (2, 0)}
        polylines = {1: [coords[1], (1, 3), coords[2]]}
        drawing = GeometricDrawing(g, coords, polylines)
        self.assertEqual(
            list(geometry_lines(drawing)),
            ["coord 0 0 0", "coord 1 1/2 1", "coord 2 2 0", "poly 1 1/2 1 1 3 2 0"],
        )

    def test_serialize(self):
        self.assertEqual(serialize(["v 0", "v 1"]), b"v 0\nv 1\n")
        self.assertEqual(serialize([]), b"")

    def test_trace(self):
        observer = Observer()
        observer.notify("case1", 0, {"vertex": 3, "parts": 2})
        observer.notify("claim", 1, {"claim": "A"})
        lines = list(trace_lines(observer))
        self.assertEqual(
            lines[0],
            '{"category": "case1", "depth": 0, "parts": 2, "step": 0, "vertex": 3}',
        )
        self.assertEqual(json.loads(lines[1])["claim"], "A")

    def test_quiet_trace(self):
        observer = Observer(quiet=1)
        observer.notify("claim", 1, {"claim": "A"})
        observer.notify("error", 1, {"message": "boom"})
        self.assertEqual(observer.summary["claim"], 1)
        self.assertEqual([r["category"] for r in observer.details], ["error"])
        self.assertTrue(observer.error)
