"""Span dimension of the (anti-)self-dual sign functions for several q at n = 2, 4.

    python scripts/span_by_q.py
"""
import time

from sdgbent.enumeration import enumerate_self_dual, sign_vectors_of, span_dimension


def main():
    for n in (2, 4):
        for q in (2, 4, 6, 8):
            t0 = time.perf_counter()
            row = []
            for kind in ("sd", "asd"):
                found = enumerate_self_dual(n, q, kind).found
                row.append(f"{kind}: {len(found)} functions, rank {span_dimension(sign_vectors_of(found))}")
            print(f"n={n} q={q}  " + "; ".join(row) + f"  ({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    main()
