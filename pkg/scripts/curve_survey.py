#!/usr/bin/env python3
"""Survey all nonsingular Weierstrass curves over small finite fields.

For every coefficient tuple (a1, a2, a3, a4, a6) with nonzero discriminant
the script counts rational points, forms the numerator L(u) of the zeta
function, and derives the class-group data (h, cl2, r).  It then tallies
how often each (h, cl2, r) triple occurs, confirms the counting identity
cl2 + 2 r = L(-1) on every curve, and prints the order of the wreath
product Sym(r) x A^r attached to each observed spike count r.

Usage:
    python3 scripts/curve_survey.py            # q = 2 and q = 3
    python3 scripts/curve_survey.py -q 4 5     # larger fields (slower)
"""

import argparse
import itertools
from collections import Counter

from gl2aut.curves import (WeierstrassCurve, class_data, cs_order, ell_count,
                           enumerate_points, group_structure, lpoly_from_count)
from gl2aut.ffield import field_of_order


def survey_field(q: int) -> None:
    field = field_of_order(q)
    elems = field.elements()
    tally = Counter()
    structures = Counter()
    total = 0
    for a1, a2, a3, a4, a6 in itertools.product(elems, repeat=5):
        curve = WeierstrassCurve(field, a1, a2, a3, a4, a6)
        if not curve.is_nonsingular():
            continue
        total += 1
        points = enumerate_points(curve)
        lpoly = lpoly_from_count(len(points), q)
        data = class_data(lpoly, curve=curve, points=points)
        assert data.cl2 + 2 * data.r == ell_count(lpoly)
        tally[(data.h, data.cl2, data.r)] += 1
        structures[tuple(group_structure(curve, points))] += 1

    print(f"F_{q}: {total} nonsingular curves out of {q ** 5} coefficient tuples")
    print("  (h, cl2, r) tally:")
    for (h, cl2, r), count in sorted(tally.items()):
        print(f"    h={h:<3} cl2={cl2:<3} r={r:<2} : {count} curves")
    print("  group structures:", ", ".join(
        f"{'x'.join(map(str, s)) or '1'} ({c})" for s, c in sorted(structures.items())))
    spike_counts = sorted({r for (_, _, r) in tally})
    for r in spike_counts:
        if r >= 1:
            print(f"  wreath order for r={r}: {cs_order(r, q)}")
    print()


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("-q", type=int, nargs="+", default=[2, 3],
                        help="field orders to sweep (default: 2 3)")
    args = parser.parse_args()
    for q in args.q:
        survey_field(q)


if __name__ == "__main__":
    main()
