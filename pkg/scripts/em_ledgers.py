"""Generator ledgers of K(Z/2, n + sigma) and their collapsed Poincare series."""

import argparse

from c2steenrod.emspaces import compare_with_oracles, em_ledger


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--cutoff", type=int, default=12)
    args = parser.parse_args()
    for p in em_ledger(args.n, args.cutoff):
        print(p.label)
        for g in sorted(p.generators, key=lambda g: g.degree):
            print(f"  {g.degree.pretty():>10}  {g}")
        for r in p.relations:
            print(f"  relation: {r}")
    print()
    for n in range(args.n + 1):
        for c in compare_with_oracles(n, args.cutoff):
            status = "agree" if c.equal else "DIFFER"
            print(f"n={n} {c.mode:<5} {status}: {[c.engine.get(t, 0) for t in range(args.cutoff + 1)]}")


if __name__ == "__main__":
    main()
