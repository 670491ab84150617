"""Run every verification scan through the CLI entry point and summarize exit codes.

    python scripts/verify_all.py
"""
import time

from sdgbent.cli import main as cli

RUNS = [
    ["verify", "affine", "--n", "3", "--q", "8"],
    ["verify", "affine", "--n", "4", "--q", "4"],
    ["verify", "upper-bound", "--n", "4", "--k", "2"],
    ["verify", "quarter-blocks", "--n", "4", "--q", "4"],
    ["verify", "span", "--n", "4", "--q", "4"],
    ["verify", "span", "--n", "2", "--q", "4"],
    ["spectrum", "--n", "4", "--q", "4", "--metric", "lee"],
    ["spectrum", "--n", "4", "--q", "4", "--metric", "hamming"],
]


def main():
    codes = []
    for argv in RUNS:
        print("$ sdgbent", " ".join(argv))
        t0 = time.perf_counter()
        code = cli(argv)
        print(f"-> exit {code} in {time.perf_counter() - t0:.2f}s\n")
        codes.append(code)
    print(f"{codes.count(0)}/{len(codes)} checks passed")


if __name__ == "__main__":
    main()
