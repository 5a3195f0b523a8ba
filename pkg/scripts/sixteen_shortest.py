"""Write the point cloud of the shortest one-generator words as CSV and SVG."""
import argparse
from pathlib import Path

from quasiwords.numeval import shortest_words_plot


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=16)
    ap.add_argument("--out", default="results/sixteen_shortest")
    args = ap.parse_args()

    rows, csv_text, svg = shortest_words_plot(args.count)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.with_suffix(".csv").write_text(csv_text)
    out.with_suffix(".svg").write_text(svg)
    width = max(len(w) for w, _ in rows)
    for word, (x, y) in rows:
        print(f"{word:<{width}}  {float(x):>12.6f}  {float(y):>12.6f}")
    print(f"wrote {out.with_suffix('.csv')} and {out.with_suffix('.svg')}")


if __name__ == "__main__":
    main()
