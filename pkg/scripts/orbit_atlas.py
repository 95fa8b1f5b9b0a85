#!/usr/bin/env python3
"""Print the trivector orbit atlas: representatives, invariant records,
the closure diagram, and a random-sample classification census."""

import argparse
import itertools
import random

from excalg import forms as fm
from excalg import threeform as tf
from excalg.scalar import sc

LABELS = (
    tf.ZERO_LABEL,
    tf.RANK3_DECOMPOSABLE,
    tf.RANK5,
    tf.RANK6_TANGENT,
    tf.RANK6_GENERIC,
    tf.W1,
    tf.W2,
    tf.W3,
    tf.W4,
    tf.W5,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print("representatives and invariant records")
    print("-" * 72)
    for label in LABELS:
        if label == tf.ZERO_LABEL:
            continue
        rep = tf.representative(label)
        emb = fm.KForm(3, 7, dict(rep.terms)) if rep.n < 7 else rep
        got = tf.classify(emb, with_stabilizer=True)
        rec = got.record
        print(
            f"{label:>20}: rank {rec.support_rank}, q-rank {rec.q_rank}, "
            f"stab {rec.stab_dim}, orbit dim {49 - rec.stab_dim}   {rep.to_text()}"
        )

    print()
    print("closure diagram (orbit dimension -> covered orbit dimensions)")
    by_label = {h.label: h for h in tf.hasse_data()}
    for h in sorted(tf.hasse_data(), key=lambda e: -e.dim):
        covers = ", ".join(str(by_label[c].dim) for c in h.covers) or "-"
        print(f"  {h.dim:>2} ({h.label:<18}) -> {covers}")

    rng = random.Random(args.seed)
    census = {}
    for _ in range(args.samples):
        terms = {}
        for idx in itertools.combinations(range(1, 8), 3):
            c = rng.randint(-1, 1)
            if c:
                terms[idx] = sc(c)
        label = tf.classify(fm.KForm(3, 7, terms)).label
        census[label] = census.get(label, 0) + 1
    print()
    print(f"census of {args.samples} random integer trivectors")
    for label in LABELS:
        if label in census:
            print(f"  {label:>20}: {census[label]}")


if __name__ == "__main__":
    main()
