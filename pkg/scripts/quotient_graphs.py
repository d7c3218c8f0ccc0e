#!/usr/bin/env python3
"""Print the two bundled quotient graphs and their structural reports.

Both graphs describe the action of an arithmetic subgroup of GL2 on the
Bruhat-Tits tree for a function field of an elliptic curve over F_2: a
finite core plus one truncated infinite ray per cusp, with stabilizer
descriptors on vertices and edges.  For each graph the script lists the
vertices, checks the core/ray decomposition, reports the vertices that
carry an isolated cyclic stabilizer, and matches the cusps against the
orbit partition induced by the declared automorphisms of the associated
free product.  Pass --dot to dump Graphviz sources instead.

Usage:
    python3 scripts/quotient_graphs.py            # summaries, depth 3
    python3 scripts/quotient_graphs.py -d 5       # deeper ray truncation
    python3 scripts/quotient_graphs.py --dot      # Graphviz output
"""

import argparse

from gl2aut.graphs import export_dot, graph_by_name, isolated_cyclic, validate_serre
from gl2aut.words import aut_cusp_orbit_report, decl_by_name

PAIRS = [("ex1", "ex1cusp"), ("ex3", "ex3cusps")]


def summarize(name: str, decl_name: str, depth: int) -> None:
    g = graph_by_name(name, depth=depth)
    parts = validate_serre(g)
    print(f"graph {name} (depth {depth}): "
          f"{len(g.vertices)} vertices, {len(g.edges)} edges, {len(g.rays)} rays")
    for v in g.vertices:
        tag = " (core)" if v.id in parts.core else ""
        print(f"  v{v.id:<3} {v.label:<10} stab {v.stab.text():<18} "
              f"order {v.stab.order()}{tag}")
    for cusp, tail in parts.rays:
        ids = ", ".join(f"v{vid}" for vid in tail) or "(flush cut)"
        print(f"  ray toward {cusp}: tail {ids}")
    iso = isolated_cyclic(g)
    print("  isolated cyclic stabilizers:", ", ".join(v.label for v in iso) or "(none)")
    report = aut_cusp_orbit_report(decl_by_name(decl_name))
    orbit_text = " | ".join("{" + ", ".join(o) + "}" for o in report.orbits)
    print(f"  cusp orbits under the declared automorphisms: {orbit_text}")
    print()


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("-d", "--depth", type=int, default=3,
                        help="ray truncation depth (default 3)")
    parser.add_argument("--dot", action="store_true",
                        help="print Graphviz dot sources instead of summaries")
    args = parser.parse_args()
    for name, decl_name in PAIRS:
        if args.dot:
            print(export_dot(graph_by_name(name, depth=args.depth)))
        else:
            summarize(name, decl_name, args.depth)


if __name__ == "__main__":
    main()
