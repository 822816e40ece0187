# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

import copy
import logging
import os

import toml

from hanani_tutte.errors import ConfigNotFound, HananiTutteError


DEFAULT_PATH = "hanani-tutte.toml"

DEFAULTS = {
    "geometry": {"epsilon": 1e-9, "exact": True, "jitter_scale": 1e-6},
    "oracle": {"budget": 10**8, "workers": 1},
    "generator": {"seed": 0, "swaps": 10},
    "reduce": {"subdivide_even": False},
    "export": {"size": 400},
}


class Config:
    """Settings by section, defaults filled in."""

    def __init__(self, sections=None, path=None):
        self.sections = copy.deepcopy(DEFAULTS)
        for name, values in (sections or {}).items():
            self.sections[name].update(values)
        self.path = path

    def get(self, section, key):
        return self.sections[section][key]

    def __getitem__(self, section):
        return self.sections[section]

    def __repr__(self):
        return f"Config({self.path!r}, {self.sections!r})"


class ParseContext:
    def __init__(self, path, defines):
        self.path = path
        self.defines = defines
        self.data = None
        self.sections = {}


def _coerce(section, key, value):
    default = DEFAULTS[section][key]
    if isinstance(default, bool):
        if isinstance(value, str):
            if value.lower() in ("1", "true", "yes", "on"):
                return True
            if value.lower() in ("0", "false", "no", "off"):
                return False
            raise HananiTutteError(f"{section}.{key}: not a boolean: {value!r}")
        return bool(value)
    try:
        if isinstance(default, int):
            return int(float(value)) if isinstance(value, str) else int(value)
        return float(value)
    except (TypeError, ValueError):
        raise HananiTutteError(f"{section}.{key}: not a number: {value!r}")


class TOMLParser:
    def parse(self, path=None, defines=()):
        ctx = self.context(path, defines)
        self.load(ctx)
        self.processSections(ctx)
        self.processDefines(ctx)
        return self.asConfig(ctx)

    def context(self, path, defines=()):
        return ParseContext(path, list(defines))

    def load(self, ctx):
        if ctx.path is None:
            ctx.data = {}
            return
        try:
            with open(ctx.path) as fin:
                ctx.data = toml.load(fin)
        except (toml.TomlDecodeError, OSError):
            raise ConfigNotFound(ctx.path)

    def processSections(self, ctx):
        assert ctx.data is not None
        for name, values in ctx.data.items():
            if name not in DEFAULTS or not isinstance(values, dict):
                logging.getLogger("hanani-tutte.io").warning(
                    "%s: ignoring unknown section %s", ctx.path, name
                )
                continue
            for key, value in values.items():
                if key not in DEFAULTS[name]:
                    logging.getLogger("hanani-tutte.io").warning(
                        "%s: ignoring unknown setting %s.%s", ctx.path, name, key
                    )
                    continue
                ctx.sections.setdefault(name, {})[key] = _coerce(name, key, value)

    def processDefines(self, ctx):
        # command line defines override the file
        for define in ctx.defines:
            name, _, value = define.partition("=")
            section, _, key = name.partition(".")
            if not value or section not in DEFAULTS or key not in DEFAULTS[section]:
                raise HananiTutteError(f"bad define {define!r}, use section.key=value")
            ctx.sections.setdefault(section, {})[key] = _coerce(section, key, value)

    def asConfig(self, ctx):
        return Config(ctx.sections, ctx.path)


def load_config(path=None, defines=()):
    """Read `path`, or hanani-tutte.toml when present, and apply defines."""
    if path is None and os.path.exists(DEFAULT_PATH):
        path = DEFAULT_PATH
    return TOMLParser().parse(path, defines)
