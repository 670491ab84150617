"""Enumerate quaternary self-dual bent functions in 4 variables and split them into orbits.

Also reports the finer classes under x -> f(Lx) + d alone, the orbit of each
listed representative, and where the two stated merging maps send them.

    python scripts/orbit_census.py [--json]
"""
import argparse
import json
import time
from collections import Counter
from dataclasses import asdict, dataclass

import numpy as np

from sdgbent.enumeration import enumerate_self_dual
from sdgbent.gbf import GBF, classify_duality
from sdgbent.groups import (ExtOrthElement, OrthMatrix, apply_symmetry, classify_orbits, extended_group_order,
                            iter_orthogonal)

# reference representatives with their expected class sizes
LISTED = [
    ("0220202022000000", 24),
    ("2022220222020200", 64),
    ("0330313133110110", 48),
    ("0330302132010110", 120),
    ("1321213122010100", 96),
    ("0220213023100000", 48),
]
MERGES = [
    ("0330302132010110", "3123231322030300", [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], "1001", 3),
    ("2022220222020200", "2123230332121210", [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], "0101", 1),
]


@dataclass
class Config:
    n: int = 4
    q: int = 4
    threads: int = 1


def linear_classes(funcs, n, q):
    """Classes under f(Lx) + d only (no translation, no twist)."""
    perms = np.array([[L.apply(x) for x in range(1 << n)] for L in iter_orthogonal(n)])
    seen, sizes = {}, []
    for f in funcs:
        if f.values in seen:
            continue
        imgs = (f.array()[perms][None] + np.arange(q)[:, None, None]) % q
        members = {tuple(int(v) for v in row) for row in imgs.reshape(-1, 1 << n)}
        for m in members:
            seen[m] = len(sizes)
        sizes.append(len(members))
    return seen, sizes


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    cfg = Config(threads=args.threads)

    t0 = time.perf_counter()
    found = enumerate_self_dual(cfg.n, cfg.q, "sd", threads=cfg.threads).found
    orbits = classify_orbits(found, cfg.n, cfg.q)
    elapsed = time.perf_counter() - t0
    where = {m.values: i for i, o in enumerate(orbits) for m in o.members}
    lin, lin_sizes = linear_classes(found, cfg.n, cfg.q)

    reps = []
    for digits, listed in LISTED:
        f = GBF.from_digits(digits, cfg.q)
        reps.append({"representative": digits, "listed_size": listed,
                     "status": classify_duality(f).kind.value,
                     "orbit_size": orbits[where[f.values]].size,
                     "linear_class_size": lin_sizes[lin[f.values]]})
    merges = []
    for src, dst, rows, c, d in MERGES:
        e = ExtOrthElement(OrthMatrix.from_lists(rows), int(c, 2), d)
        img = apply_symmetry(GBF.from_digits(src, cfg.q), e)
        merges.append({"source": src, "partner": dst, "image": img.digits(),
                       "image_orbit_size": orbits[where[img.values]].size,
                       "partner_orbit_size": orbits[where[GBF.from_digits(dst, cfg.q).values]].size,
                       "same_orbit": where[img.values] == where[GBF.from_digits(dst, cfg.q).values]})

    out = {
        "config": asdict(cfg),
        "count": len(found),
        "group_order": extended_group_order(cfg.n, cfg.q),
        "orbits": [{"canonical": o.canonical.digits(), "size": o.size} for o in orbits],
        "linear_class_sizes": sorted(lin_sizes),
        "listed_representatives": reps,
        "merging_maps": merges,
        "elapsed": round(elapsed, 3),
    }
    if args.json:
        print(json.dumps(out, indent=2))
        return
    print(f"{len(found)} self-dual functions, group order {out['group_order']}, {elapsed:.2f}s")
    print(f"{'canonical':<20}size")
    for o in out["orbits"]:
        print(f"{o['canonical']:<20}{o['size']}")
    print("classes under f(Lx)+d:", Counter(lin_sizes))
    print("\nlisted representatives:")
    for r in reps:
        print(f"  {r['representative']}  listed {r['listed_size']:>4}  orbit {r['orbit_size']:>4}  "
              f"f(Lx)+d class {r['linear_class_size']:>3}  {r['status']}")
    print("\nmerging maps:")
    for m in merges:
        print(f"  {m['source']} -> {m['image']} (orbit {m['image_orbit_size']}); "
              f"partner {m['partner']} (orbit {m['partner_orbit_size']}); same orbit: {m['same_orbit']}")


if __name__ == "__main__":
    main()
