"""Count words whose normal form depends on the rewriting order.

Both relation variants are reduced leftmost-first and rightmost-first over
all words of the given lengths with letters up to --max-letter.
"""

import argparse
import itertools

from c2steenrod.steenrod import Config, adem_reduce


def survey(relations: str, lengths, max_letter: int) -> tuple[int, int, list]:
    cfg = Config(relations=relations)
    total, bad = 0, []
    for length in lengths:
        for w in itertools.product(range(1, max_letter + 1), repeat=length):
            total += 1
            if adem_reduce(w, config=cfg) != adem_reduce(w, config=cfg, strategy="rightmost"):
                bad.append(w)
    return total, len(bad), bad


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-letter", type=int, default=7)
    parser.add_argument("--max-length", type=int, default=3)
    parser.add_argument("--show", type=int, default=5, help="examples to print per variant")
    args = parser.parse_args()
    lengths = range(2, args.max_length + 1)
    for relations in ("printed", "coherent"):
        total, count, bad = survey(relations, lengths, args.max_letter)
        print(f"{relations:<9} {count} of {total} words reduce to different normal forms")
        cfg = Config(relations=relations)
        for w in bad[: args.show]:
            print(f"  {w}: leftmost {adem_reduce(w, config=cfg)}")
            print(f"  {' ' * len(str(w))}  rightmost {adem_reduce(w, config=cfg, strategy='rightmost')}")


if __name__ == "__main__":
    main()
