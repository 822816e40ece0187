# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"Commands exposed to commandlines"

import logging
import random
import sys
from argparse import ArgumentParser

from hanani_tutte import generator, serializer, version
from hanani_tutte.checks import HypothesisChecker
from hanani_tutte.config import load_config
from hanani_tutte.drawing import ParityDrawing, faces, genus
from hanani_tutte.embed import Observer, solve_and_embed
from hanani_tutte.errors import (
    ConfigNotFound,
    HananiTutteError,
    HypothesisViolated,
    UnrealizableDrawing,
)
from hanani_tutte.export import render_dot, render_svg
from hanani_tutte.oracle import oracle_report
from hanani_tutte.parsers import parse_files, with_rotation_file
from hanani_tutte.solver import decide_unified


OK, ERROR, INFEASIBLE = 0, 1, 2

GENERATED = ("planar", "multigraph", "wheel", "k5", "k33", "theta")

MULTIGRAPH_NOTE = (
    "A drawing with loops or parallel edges is not redrawn: it must already "
    "have its independent pairs and its pairs at W crossing evenly, otherwise "
    "the command reports the violated hypotheses and exits with 2."
)


def vertex_ids(value):
    """--W takes comma or space separated vertex ids."""
    return [int(token) for token in value.replace(",", " ").split()]


class HananiTutte:
    """Decide and construct planar embeddings that keep the rotations at a
    set W of vertices, from drawings where independent edges and edges at W
    cross evenly."""

    def __init__(self):
        self.parser = self.get_parser()

    def get_parser(self):
        """Get an ArgumentParser, with class docstring as description."""
        parser = ArgumentParser(description=self.__doc__)
        parser.add_argument(
            "--version", action="version", version="%(prog)s " + version
        )
        parser.add_argument(
            "-v", "--verbose", action="count", default=0, help="Make more noise"
        )
        parser.add_argument(
            "-q", "--quiet", action="count", default=0, help="Make less noise"
        )
        parser.add_argument(
            "--config", help="TOML configuration, default ./hanani-tutte.toml"
        )
        parser.add_argument(
            "-D",
            action="append",
            metavar="section.key=value",
            default=[],
            dest="defines",
            help="Overwrite configuration values",
        )
        commands = parser.add_subparsers(dest="command", metavar="command")
        commands.required = True

        def drawing_command(name, help, description=None):
            sub = commands.add_parser(name, help=help, description=description)
            sub.add_argument(
                "paths", metavar="file", nargs="+", help="drawing or rotation files"
            )
            sub.add_argument(
                "--W", type=vertex_ids, default=[], help="vertices to preserve"
            )
            sub.add_argument(
                "--jitter",
                type=int,
                metavar="seed",
                help="perturb the coordinates randomly before reading them",
            )
            return sub

        drawing_command("check", "report on the hypotheses")
        drawing_command(
            "solve", "decide feasibility by the parity system", MULTIGRAPH_NOTE
        )
        embed = drawing_command(
            "embed", "construct a planar rotation system", MULTIGRAPH_NOTE
        )
        embed.add_argument("-o", "--output", help="rotation file, default stdout")
        embed.add_argument("--trace", help="JSON lines of the recursion steps")

        verify = commands.add_parser("verify", help="check an embedding")
        verify.add_argument("graph")
        verify.add_argument("rotation")
        verify.add_argument("--W", type=vertex_ids, default=[])
        verify.add_argument("--against", help="rotation file to compare at W")

        oracle = commands.add_parser("oracle", help="exhaustive ground truth")
        oracle.add_argument("graph")
        oracle.add_argument("--W", type=vertex_ids, default=[])
        oracle.add_argument("--rot", help="rotation file prescribing W")
        oracle.add_argument("--budget", type=int)
        oracle.add_argument("--workers", type=int)

        gen = commands.add_parser("gen", help="generate a test instance")
        gen.add_argument("kind", choices=GENERATED)
        gen.add_argument("-n", type=int, default=8, help="vertices")
        gen.add_argument("-m", type=int, help="edges, default 2n - 3")
        gen.add_argument("-k", type=int, default=5, help="wheel spokes")
        gen.add_argument("--W-size", type=int, default=2, dest="W_size")
        gen.add_argument("--swaps", type=int)
        gen.add_argument("--parallel", type=int, default=2)
        gen.add_argument("--loops", type=int, default=1)
        gen.add_argument("--seed", type=int)
        gen.add_argument("-o", "--output", required=True)

        export = commands.add_parser("export", help="draw a rotation system")
        export.add_argument("graph")
        export.add_argument("rotation")
        export.add_argument("--format", choices=("svg", "dot"), default="svg")
        export.add_argument("-o", "--output", help="default stdout")
        return parser

    @classmethod
    def call(cls):
        """Entry_point for setuptools.
        The actual command handling is done in the handle() method.
        """
        cmd = cls()
        args = cmd.parser.parse_args()
        return cmd.handle(**vars(args))

    def handle(
        self, command=None, quiet=0, verbose=0, config=None, defines=[], **options
    ):
        """The instance part of the classmethod call."""
        # log as verbose or quiet as we want, warn by default
        logging_level = logging.WARNING - (verbose - quiet) * 10
        logging.basicConfig()
        logging.getLogger().setLevel(logging_level)

        try:
            self.config = load_config(config, defines)
        except ConfigNotFound as e:
            self.parser.exit(ERROR, "config file %s not found\n" % e.filename)
        except HananiTutteError as e:
            self.parser.exit(ERROR, f"{self.parser.prog}: {e}\n")
        try:
            return getattr(self, "do_" + command)(**options)
        except (HypothesisViolated, UnrealizableDrawing) as e:
            print(f"{self.parser.prog}: {e}", file=sys.stderr)
            return INFEASIBLE
        except (HananiTutteError, OSError) as e:
            print(f"{self.parser.prog}: {e}", file=sys.stderr)
            return ERROR

    def read_drawing(self, paths, jitter=None):
        parsed = parse_files(*paths)
        geometry = self.config["geometry"]
        drawing = parsed.parity_drawing(
            exact=geometry["exact"],
            epsilon=geometry["epsilon"],
            seed=jitter,
            scale=geometry["jitter_scale"],
        )
        return parsed, drawing

    def read_rotation(self, graph_path, rotation_path):
        parsed = with_rotation_file(parse_files(graph_path), rotation_path)
        if parsed.has_rotation or not parsed.has_geometry:
            return parsed, parsed.rotation()
        # a drawing given by coordinates only
        geometry = self.config["geometry"]
        drawing = parsed.parity_drawing(
            exact=geometry["exact"], epsilon=geometry["epsilon"]
        )
        return parsed, drawing.rotation

    def emit(self, lines, path=None):
        if path is None:
            for line in lines:
                print(line)
        else:
            serializer.write(path, lines)

    def do_check(self, paths, W, jitter=None):
        parsed, drawing = self.read_drawing(paths, jitter)
        errors = 0
        for level, _, message, _ in HypothesisChecker(parsed.W | set(W)).check(
            drawing
        ):
            errors += level == "error"
            print(f"{level}: {message}")
        print(f"{errors} errors")
        return INFEASIBLE if errors else OK

    def do_solve(self, paths, W, jitter=None):
        parsed, drawing = self.read_drawing(paths, jitter)
        verdict = decide_unified(drawing.graph, parsed.W | set(W), drawing)
        self.emit(serializer.verdict_lines(verdict))
        return OK if verdict.feasible else INFEASIBLE

    def do_embed(self, paths, W, jitter=None, output=None, trace=None):
        parsed, drawing = self.read_drawing(paths, jitter)
        observer = Observer()
        verdict, result = solve_and_embed(
            drawing,
            parsed.W | set(W),
            observer,
            subdivide_even=self.config.get("reduce", "subdivide_even"),
        )
        if trace is not None:
            serializer.write(trace, serializer.trace_lines(observer))
        logging.getLogger("hanani-tutte.embed").info(
            "recursion steps\n%s", observer.serializeSummary()
        )
        if result is None:
            for line in serializer.verdict_lines(verdict):
                print(line, file=sys.stderr)
            return INFEASIBLE
        self.emit(serializer.embedding_lines(drawing.graph, result), output)
        return OK

    def do_verify(self, graph, rotation, W, against=None):
        parsed, embedding = self.read_rotation(graph, rotation)
        # the parity drawing checks that every edge-end is placed
        ParityDrawing(parsed.graph, embedding)
        value = genus(embedding)
        print(f"faces {len(faces(embedding))}")
        print(f"genus {value}")
        status = OK if value == 0 else INFEASIBLE
        if against is not None:
            _, reference = self.read_rotation(graph, against)
            W = sorted(parsed.W | set(W))
            changed = [w for w in W if embedding.cycle(w) != reference.cycle(w)]
            for w in changed:
                print(f"changed {w}")
            if changed:
                status = INFEASIBLE
        return status

    def do_oracle(self, graph, W, rot=None, budget=None, workers=None):
        parsed = parse_files(graph)
        if rot is not None:
            parsed = with_rotation_file(parsed, rot)
        W = parsed.W | set(W)
        if W and not parsed.has_rotation:
            raise HananiTutteError("prescribing rotations at W needs rot lines")
        if budget is None:
            budget = self.config.get("oracle", "budget")
        if workers is None:
            workers = self.config.get("oracle", "workers")
        report = oracle_report(
            parsed.graph,
            W,
            parsed.rotation() if W else None,
            budget=budget,
            workers=workers,
        )
        print(f"count {report['count']}")
        print(f"enumerated {report['enumerated']}")
        print(f"min-genus {report['min_genus']}")
        print("feasible" if report["planar"] else "infeasible")
        return OK if report["planar"] else INFEASIBLE

    def do_gen(
        self,
        kind,
        output,
        n=8,
        m=None,
        k=5,
        W_size=2,
        swaps=None,
        parallel=2,
        loops=1,
        seed=None,
    ):
        seed = seed if seed is not None else self.config.get("generator", "seed")
        swaps = swaps if swaps is not None else self.config.get("generator", "swaps")
        m = m if m is not None else max(2 * n - 3, n - 1)
        drawing, W, expected = generate(
            kind,
            n=n,
            m=m,
            k=k,
            W_size=W_size,
            swaps=swaps,
            parallel=parallel,
            loops=loops,
            seed=seed,
        )
        serializer.write(output, serializer.drawing_lines(drawing, W))
        serializer.write(output + ".expected", [expected])
        return OK

    def do_export(self, graph, rotation, format="svg", output=None):
        parsed, embedding = self.read_rotation(graph, rotation)
        if genus(embedding):
            logging.getLogger("hanani-tutte.io").warning(
                "rotation system has genus %d, the picture will cross",
                genus(embedding),
            )
        if format == "dot":
            content = render_dot(parsed.graph, embedding)
        else:
            content = render_svg(
                parsed.graph, embedding, size=self.config.get("export", "size")
            )
        if output is None:
            sys.stdout.write(content)
        else:
            with open(output, "w") as fh:
                fh.write(content)
        return OK


def generate(kind, n=8, m=None, k=5, W_size=2, swaps=10, parallel=2, loops=1, seed=0):
    """(drawing, W, expected verdict) for the `gen` command."""
    if kind == "planar":
        drawing, W = generator.planar_instance(n, m, W_size, swaps, seed)
        return drawing, W, "feasible"
    if kind == "multigraph":
        graph, rotation = generator.planar_multigraph(n, m, parallel, loops, seed)
        rng = random.Random(seed + 2)
        W = sorted(rng.sample(list(graph.vertices), min(W_size, n)))
        drawing = ParityDrawing.embedded(graph, rotation)
        return generator.scramble(drawing, W, swaps, seed + 3), W, "feasible"
    if kind == "wheel":
        drawing = generator.convex_drawing(generator.wheel(k))
        return drawing, [], "feasible"
    if kind == "k5":
        drawing = generator.convex_drawing(generator.complete_graph(5))
        return drawing, [], "infeasible"
    if kind == "k33":
        drawing = generator.convex_drawing(generator.complete_bipartite(3, 3))
        return drawing, [], "infeasible"
    if kind == "theta":
        return generator.theta_instance(), [0, 1], "infeasible"
    raise HananiTutteError(f"unknown instance kind {kind}")
