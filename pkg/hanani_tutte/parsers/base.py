# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

import re
import bisect

from hanani_tutte.errors import FormatError


class Fragment:
    """A span of a parsed file."""

    def __init__(self, ctx, span):
        self.ctx = ctx
        self.span = span

    def position(self, offset=0):
        """Get the 1-based line and column of the character
        with given offset into the fragment.

        If offset is negative, return the end of the fragment.
        """
        if offset < 0:
            pos = self.span[1]
        else:
            pos = self.span[0] + offset
        return self.ctx.linecol(pos)

    @property
    def all(self):
        return self.ctx.contents[self.span[0] : self.span[1]]

    def __repr__(self):
        return self.all


class Directive(Fragment):
    """One line of the form `keyword arg arg ...`.

    Arguments are kept as spans so errors can point at the offending token.
    """

    def __init__(self, ctx, span, keyword, arg_spans):
        super().__init__(ctx, span)
        self.keyword = keyword
        self.arg_spans = arg_spans

    @property
    def args(self):
        return [self.ctx.contents[start:end] for start, end in self.arg_spans]

    def arg_position(self, index):
        return self.ctx.linecol(self.arg_spans[index][0])

    def error(self, message, index=None):
        if index is None:
            line, column = self.position()
        else:
            line, column = self.arg_position(index)
        return FormatError(self.ctx.path, line, column, message)

    def __repr__(self):
        return f"{self.keyword} {' '.join(self.args)}"


class Comment(Fragment):
    @property
    def val(self):
        return self.all[1:].strip()


class Whitespace(Fragment):
    pass


class Junk(Fragment):
    """A line we could not make sense of."""

    def error_message(self):
        params = (self.all,) + self.position() + self.position(-1)
        return (
            'Unparsed content "%s" from line %d column %d'
            " to line %d column %d" % params
        )

    def error(self):
        line, column = self.position()
        return FormatError(self.ctx.path, line, column, self.error_message())


class Parser:
    """Line oriented directive files with `#` comments."""

    reWhitespace = re.compile("[ \t\r\n]+", re.M)
    reComment = re.compile("#[^\n]*", re.M)
    reArg = re.compile("[^ \t\r\n#]+")
    reEnd = re.compile("[ \t]*(?:#[^\n]*)?(?:\n|\\Z)")
    keywords = ()

    class Context:
        "Fixture for content and line numbers"

        def __init__(self, contents, path="<string>"):
            self.contents = contents
            self.path = path
            # cache split lines
            self._lines = None

        def linecol(self, position):
            "Returns 1-based line and column numbers."
            if self._lines is None:
                nl = re.compile("\n", re.M)
                self._lines = [m.end() for m in nl.finditer(self.contents)]

            line_offset = bisect.bisect(self._lines, position)
            line_start = self._lines[line_offset - 1] if line_offset else 0
            col_offset = position - line_start

            return line_offset + 1, col_offset + 1

    def __init__(self):
        if not hasattr(self, "encoding"):
            self.encoding = "utf-8"
        self.ctx = None
        self.reKeyword = re.compile(
            "(?P<keyword>%s)(?=[ \t\r\n#]|\\Z)"
            % "|".join(re.escape(k) for k in self.keywords),
            re.M,
        )

    def readFile(self, path):
        """Read contents from disk, with universal_newlines"""
        with open(path, encoding=self.encoding, errors="replace", newline=None) as f:
            self.readUnicode(f.read(), path)

    def readUnicode(self, contents, path="<string>"):
        self.ctx = self.Context(contents, path)

    def __iter__(self):
        return (
            fragment
            for fragment in self.walk()
            if isinstance(fragment, (Directive, Junk))
        )

    def walk(self):
        if not self.ctx:
            # loading file failed, or we just didn't load anything
            return
        ctx = self.ctx
        contents = ctx.contents

        next_offset = 0
        while next_offset < len(contents):
            fragment = self.getNext(ctx, next_offset)
            yield fragment
            next_offset = fragment.span[1]

    def getNext(self, ctx, offset):
        contents = ctx.contents
        m = self.reComment.match(contents, offset)
        if m:
            return Comment(ctx, m.span())
        m = self.reWhitespace.match(contents, offset)
        if m:
            return Whitespace(ctx, m.span())
        m = self.reKeyword.match(contents, offset)
        if m:
            return self.createDirective(ctx, m)
        return self.getJunk(ctx, offset)

    def createDirective(self, ctx, m):
        contents = ctx.contents
        offset = m.end()
        arg_spans = []
        while True:
            white = self.reWhitespace.match(contents, offset)
            if white is not None and "\n" in white.group():
                break
            start = white.end() if white else offset
            arg = self.reArg.match(contents, start)
            if arg is None:
                break
            arg_spans.append(arg.span())
            offset = arg.end()
        end = self.reEnd.match(contents, offset)
        if end is None:
            return self.getJunk(ctx, m.start())
        # the newline is left for the whitespace that follows
        stop = end.end()
        if contents[stop - 1 : stop] == "\n":
            stop -= 1
        return Directive(ctx, (m.start(), stop), m.group("keyword"), arg_spans)

    def getJunk(self, ctx, offset):
        end = ctx.contents.find("\n", offset)
        return Junk(ctx, (offset, end if end >= 0 else len(ctx.contents)))
