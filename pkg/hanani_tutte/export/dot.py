# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

"Graphviz output: every vertex is a record whose ports follow its rotation"


def port(end):
    return f"e{end.edge}{'ab'[end.side]}"


def render_dot(graph, rotation, name="rotation"):
    lines = [f"graph {name} {{", "  node [shape=record];"]
    for vertex, cycle in rotation.cycles():
        if not cycle:
            lines.append(f'  v{vertex} [shape=circle, label="{vertex}"];')
            continue
        fields = "|".join(f"<{port(end)}> {end.edge}" for end in cycle)
        lines.append(f'  v{vertex} [label="{{{vertex}|{{{fields}}}}}"];')
    for edge, (u, v) in graph.edge_items():
        lines.append(f"  v{u}:e{edge}a -- v{v}:e{edge}b;")
    lines.append("}")
    return "\n".join(lines) + "\n"
