# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from .base import Comment, Directive, Fragment, Junk, Parser, Whitespace
from .drawing import (
    DrawingFile,
    DrawingParser,
    parse_files,
    parse_string,
    with_rotation_file,
)

__all__ = [
    "Comment",
    "Directive",
    "DrawingFile",
    "DrawingParser",
    "Fragment",
    "Junk",
    "Parser",
    "Whitespace",
    "parse_files",
    "parse_string",
    "with_rotation_file",
]
