#!/usr/bin/env python3
"""Tabulate the node gradings of the exceptional root systems: per-degree
dimensions for every node, and the cyclic gradings of the extended
diagrams."""

import argparse

from excalg import rootdata as rd

TYPES = (("G", 2), ("F", 4), ("E", 6), ("E", 7), ("E", 8))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--affine", action="store_true")
    args = parser.parse_args()

    for fam, rank in TYPES:
        rs = rd.build_root_system(fam, rank)
        print(f"{rs.type_name}: {len(rs.roots)} roots, dim {rs.dimension}, "
              f"marks {rs.marks}")
        for node in range(1, rank + 1):
            if args.affine:
                rep = rd.zm_grading(rs, node)
                dims = " ".join(f"{d}:{v}" for d, v in rep.dims_list())
                print(f"  node {node} (mod {rep.modulus}): {dims}")
            else:
                rep = rd.z_grading(rs, node)
                dims = " ".join(f"{d:+d}:{v}" for d, v in rep.dims_list())
                print(f"  node {node}: {dims}   g0' = {rep.zero_part_type}")
        print()


if __name__ == "__main__":
    main()
