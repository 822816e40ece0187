# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"""Mixins for parser tests.
"""

from itertools import zip_longest

from hanani_tutte.parsers import Directive


class ParserTestMixin:
    """Utility methods used by the parser tests."""

    Parser = None

    def setUp(self):
        """Create a parser for this test."""
        self.parser = self.Parser()

    def tearDown(self):
        del self.parser

    def _test(self, content, refs):
        """Compare the fragments of content with (type, text) references.

        For directives, text is the keyword and the arguments follow.
        """
        self.parser.readUnicode(content)
        fragments = list(self.parser.walk())
        for fragment, ref in zip_longest(fragments, refs):
            self.assertTrue(fragment, "excess reference fragment " + str(ref))
            self.assertTrue(ref, "excess parsed fragment " + repr(fragment))
            self.assertIsInstance(fragment, ref[0])
            if isinstance(fragment, Directive):
                self.assertEqual(fragment.keyword, ref[1])
                self.assertEqual(fragment.args, list(ref[2:]))
            else:
                self.assertEqual(fragment.all, ref[1])
