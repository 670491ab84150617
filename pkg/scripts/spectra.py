"""Hamming and Lee distance spectra of the Maiorana-McFarland (anti-)self-dual class.

    python scripts/spectra.py --n 4 --q 4 [--q 2 ...]
"""
import argparse
from dataclasses import dataclass, field

from sdgbent.enumeration import hamming_spectrum_mm, lee_spectrum_mm


@dataclass
class Config:
    n: int = 4
    qs: list = field(default_factory=lambda: [2, 4, 6])


def show(rep):
    print(f"  {rep.metric:<8} observed {dict(sorted(rep.observed.items()))}")
    print(f"  {'':<8} predicted {rep.predicted}  contained={rep.contained}  all attained={rep.all_attained}")
    print(f"  {'':<8} same kind {rep.extra['same_kind']}  mixed {rep.extra['mixed']}")
    if rep.metric == "lee":
        print(f"  {'':<8} min nonzero {rep.min_nonzero} (predicted {rep.extra['predicted_min_nonzero']})")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--q", type=int, action="append")
    args = ap.parse_args()
    cfg = Config(n=args.n, qs=args.q or Config().qs)
    for q in cfg.qs:
        h = hamming_spectrum_mm(cfg.n, q)
        print(f"n={cfg.n} q={q}: {h.extra['family_size']} functions")
        show(h)
        show(lee_spectrum_mm(cfg.n, q))


if __name__ == "__main__":
    main()
