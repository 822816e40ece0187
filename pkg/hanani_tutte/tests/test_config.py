# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

import os
import tempfile
import unittest

from hanani_tutte.config import DEFAULTS, Config, TOMLParser, load_config
from hanani_tutte.errors import ConfigNotFound, HananiTutteError
from hanani_tutte.tests import MockTOMLParser


class TestConfig(unittest.TestCase):
    def test_defaults(self):
        config = TOMLParser().parse()
        self.assertIsInstance(config, Config)
        self.assertEqual(config.get("oracle", "budget"), 10**8)
        self.assertEqual(config["geometry"], DEFAULTS["geometry"])
        self.assertIsNot(config["geometry"], DEFAULTS["geometry"])

    def test_file(self):
        parser = MockTOMLParser(
            {
                "hanani-tutte.toml": """
[oracle]
workers = 4
[geometry]
exact = false
epsilon = 1
"""
            }
        )
        config = parser.parse("hanani-tutte.toml")
        self.assertEqual(config.get("oracle", "workers"), 4)
        self.assertEqual(config.get("oracle", "budget"), 10**8)
        self.assertIs(config.get("geometry", "exact"), False)
        self.assertIsInstance(config.get("geometry", "epsilon"), float)
        self.assertEqual(config.path, "hanani-tutte.toml")

    def test_unknown(self):
        parser = MockTOMLParser(
            {"x.toml": "[colors]\nred = 1\n[oracle]\nworkers = 2\nspeed = 3\n"}
        )
        with self.assertLogs("hanani-tutte.io", level="WARNING") as logs:
            config = parser.parse("x.toml")
        self.assertEqual(len(logs.records), 2)
        self.assertEqual(config.get("oracle", "workers"), 2)
        self.assertNotIn("colors", config.sections)

    def test_bad_value(self):
        parser = MockTOMLParser({"x.toml": '[oracle]\nworkers = "many"\n'})
        with self.assertRaises(HananiTutteError):
            parser.parse("x.toml")

    def test_defines(self):
        parser = MockTOMLParser({"x.toml": "[oracle]\nworkers = 4\n"})
        config = parser.parse(
            "x.toml",
            ["oracle.workers=2", "generator.seed=1e3", "reduce.subdivide_even=yes"],
        )
        self.assertEqual(config.get("oracle", "workers"), 2)
        self.assertEqual(config.get("generator", "seed"), 1000)
        self.assertIs(config.get("reduce", "subdivide_even"), True)

    def test_bad_defines(self):
        bad = ("oracle.nope=1", "oracle.workers", "nope", "reduce.subdivide_even=2")
        for define in bad:
            with self.assertRaises(HananiTutteError, msg=define):
                TOMLParser().parse(None, [define])

    def test_missing_file(self):
        path = os.path.join(tempfile.gettempdir(), "no-such-dir", "x.toml")
        with self.assertRaises(ConfigNotFound):
            load_config(path)

    def test_load_config(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "settings.toml")
            with open(path, "w") as fh:
                fh.write("[export]\nsize = 200\n")
            config = load_config(path, ["geometry.exact=off"])
        self.assertEqual(config.get("export", "size"), 200)
        self.assertIs(config.get("geometry", "exact"), False)
