#!/usr/bin/env python3
"""Print the sporadic unique-minor examples at small parameters: their marked
tuples, where they sit in the classification, and the partial variants.

Usage:
    python scripts/sporadic_gallery.py [--max-k 4]
"""

import argparse
import sys

from uimlab.analysis import classify, has_uim
from uimlab.construct import marked_tuple, sporadic_function, sporadic_partial_function
from uimlab.decomp import equiv_to_ofo_determined
from uimlab.symmetry import is_invariant_under
from uimlab.tuples import IndexPair, Permutation, render_tuple


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=4)
    args = ap.parse_args()

    for k in range(2, args.max_k + 1):
        f = sporadic_function(k)
        c = classify(f)
        print(f"k={k}: arity {k + 1} table over {k} symbols")
        print(f"  category {c.category}, invariance group order "
              f"{c.inv_group_order}, unique identification minor "
              f"{'yes' if c.has_uim else 'no'}")
        print("  marked tuples:")
        for pair in IndexPair.all_pairs(k + 1):
            print(f"    {pair.render()}: {render_tuple(marked_tuple(k, pair))}")

    print()
    for k in range(2, args.max_k + 1):
        for m in range(2, k + 1):
            pf = sporadic_partial_function(k, m)
            inv = sum(
                1 for s in Permutation.all_perms(m + 1) if is_invariant_under(pf, s)
            )
            print(f"partial k={k} m={m}: {pf.defined_count} defined entries, "
                  f"unique minor {'yes' if has_uim(pf) else 'no'}, "
                  f"ofo-equivalent {'yes' if equiv_to_ofo_determined(pf) else 'no'}, "
                  f"invariance order {inv}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
