# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from .dot import render_dot
from .svg import barycentric_layout, render_svg

__all__ = ["barycentric_layout", "render_dot", "render_svg"]
