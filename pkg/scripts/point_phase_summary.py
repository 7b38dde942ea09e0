"""Summary statistics for a point-interaction coupling sweep.

Runs the PT phase sweep over a grid of coupling matrices and prints, per
rotation-angle bin, how many cells sit in the exact phase (all bound-state
energies real) versus the broken phase (complex-conjugate pairs).  The
full per-cell table is available through `ptgauge phase-diagram`.

    python3 scripts/point_phase_summary.py --resolution 7
"""

import argparse
from collections import Counter

import numpy as np

from ptgauge.pointint import pt_phase_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--resolution", type=int, default=7,
                    help="points per sweep axis")
    ap.add_argument("--coupling-max", type=float, default=3.0)
    args = ap.parse_args()

    n = args.resolution
    c = args.coupling_max
    rows = pt_phase_sweep(np.linspace(-c, c, n), np.linspace(-c, c, n),
                          np.linspace(-c, c, n), np.linspace(-c, c, n))

    by_class = Counter(r.classification for r in rows)
    print(f"# {len(rows)} cells, classification counts: {dict(by_class)}")

    edges = np.linspace(-np.pi / 2, np.pi / 2, 9)
    print(f"{'phi bin':>22} {'cells':>7} {'all real':>9} {'conj pairs':>11}")
    for lo, hi in zip(edges[:-1], edges[1:]):
        cells = [r for r in rows if lo <= r.phi < hi]
        if not cells:
            continue
        real = sum(r.classification == "all_real" for r in cells)
        broken = sum(r.classification == "conjugate_paired" for r in cells)
        print(f"[{lo:8.4f}, {hi:8.4f}) {len(cells):7d} {real:9d} "
              f"{broken:11d}")
    n_deg = sum(r.degenerate for r in rows)
    print(f"# degenerate-angle cells: {n_deg}")


if __name__ == "__main__":
    main()
