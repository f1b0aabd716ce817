#!/usr/bin/env python3
"""Regenerate data/alternating_upto8.json from spherogram's Rolfsen/Thistlethwaite tables.

PD codes are shifted to 1-based labels. Tags carry independent reference values:
`writhe` from spherogram's crossing signs, `gauss` a signed Gauss code read off
the link components, and `determinant` from the standard knot tables.
Flype-constructed variants are appended afterwards by `flype_variants`.
"""
import argparse
import json
import subprocess
import sys

import spherogram

KNOTS = ["3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"] + [f"7_{i}" for i in range(1, 8)] + [
    f"8_{i}" for i in range(1, 19)
]
LINKS = ["L2a1", "L4a1", "L5a1", "L6a4"]

DETERMINANT = {
    "3_1": 3, "4_1": 5, "5_1": 5, "5_2": 7, "6_1": 9, "6_2": 11, "6_3": 13,
    "7_1": 7, "7_2": 11, "7_3": 13, "7_4": 15, "7_5": 17, "7_6": 19, "7_7": 21,
    "8_1": 13, "8_2": 17, "8_3": 17, "8_4": 19, "8_5": 21, "8_6": 23, "8_7": 23, "8_8": 25, "8_9": 25,
    "8_10": 27, "8_11": 27, "8_12": 29, "8_13": 29, "8_14": 31, "8_15": 33, "8_16": 35, "8_17": 37,
    "8_18": 45, "L2a1": 2, "L4a1": 4, "L5a1": 8, "L6a4": 16,
}


def gauss_code(link):
    labels = {c: i + 1 for i, c in enumerate(link.crossings)}
    lines = []
    for component in link.link_components:
        tokens = []
        for cep in component:
            kind = "U" if cep.strand_index % 2 == 0 else "O"
            sign = "+" if cep.crossing.sign > 0 else "-"
            tokens.append(f"{kind}{labels[cep.crossing]}{sign}")
        lines.append("".join(tokens))
    return "\n".join(lines)


def entry(name):
    link = spherogram.Link(name)
    if not link.is_alternating():
        raise SystemExit(f"{name} is not alternating")
    pd = [[x + 1 for x in tup] for tup in link.PD_code()]
    return {
        "name": name,
        "pd": pd,
        "tags": {
            "components": str(len(link.link_components)),
            "determinant": str(DETERMINANT[name]),
            "writhe": str(sum(c.sign for c in link.crossings)),
            "gauss": gauss_code(link),
        },
    }


def dump(table):
    """One entry per block, one PD tuple per line."""
    blocks = []
    for e in table:
        pd = ",\n    ".join(json.dumps(t) for t in e["pd"])
        blocks.append(
            "  {\n"
            f'   "name": {json.dumps(e["name"])},\n'
            f'   "pd": [\n    {pd}\n   ],\n'
            f'   "tags": {json.dumps(e["tags"], sort_keys=True)}\n'
            "  }"
        )
    return "[\n" + ",\n".join(blocks) + "\n]\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--output", default="data/alternating_upto8.json")
    ap.add_argument("--variants", help="path to the built flype_variants helper")
    args = ap.parse_args()
    table = [entry(n) for n in KNOTS + LINKS]
    with open(args.output, "w") as f:
        f.write(dump(table))
    if args.variants:
        res = subprocess.run([args.variants, args.output], check=True, capture_output=True, text=True)
        table += json.loads(res.stdout)
        with open(args.output, "w") as f:
            f.write(dump(table))
    print(f"wrote {len(table)} entries to {args.output}", file=sys.stderr)


if __name__ == "__main__":
    main()
