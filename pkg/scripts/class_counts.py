"""Count representation classes of words by leaf budget.

Compares the number of raw terms with the number of distinct classes, which
shows how quickly the central quasigroup identities collapse the word space.
"""
import argparse
import time

from quasiwords.homrep import count_raw_terms, enumerate_words


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--generators", default="a")
    ap.add_argument("--max-leaves", type=int, default=5)
    ap.add_argument("--ops", choices=("basic", "all"), default="basic")
    args = ap.parse_args()
    gens = args.generators.split(",")
    n_ops = 3 if args.ops == "basic" else 6

    raw = count_raw_terms(len(gens), args.max_leaves, n_ops)
    print(f"{'leaves':>6} {'raw terms':>12} {'classes':>10} {'new':>8} {'seconds':>8}")
    previous = 0
    for k in range(1, args.max_leaves + 1):
        start = time.perf_counter()
        classes = len(enumerate_words(gens, k, args.ops))
        elapsed = time.perf_counter() - start
        print(f"{k:>6} {sum(raw[:k + 1]):>12} {classes:>10} {classes - previous:>8} {elapsed:>8.2f}")
        previous = classes


if __name__ == "__main__":
    main()
