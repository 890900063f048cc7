"""Print Sq^i Sq^n in admissible form for i = 1, 2, 3 and a range of n."""

import argparse

from c2steenrod.steenrod import Config, adem_reduce


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=12)
    parser.add_argument("--relations", choices=["printed", "coherent"], default="printed")
    args = parser.parse_args()
    cfg = Config(relations=args.relations)
    for i in (1, 2, 3):
        print(f"Sq^{i} Sq^n, n mod 4 in parentheses")
        for n in range(1, args.max_n + 1):
            if i < 2 * n:
                print(f"  n={n:<3} ({n % 4})  {adem_reduce((i, n), config=cfg)}")


if __name__ == "__main__":
    main()
