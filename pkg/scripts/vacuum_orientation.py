"""Compare the two orientations of the vacuum eigen-relation.

The vacua are eigenvectors of e^{2 pi Q/n} e^{-iP} (e^{-iP} is the unit
rotation). The opposite orientation e^{+iP} only agrees at n = 2.
"""

import argparse
from dataclasses import dataclass

from dihedral_kinematics import coherent


@dataclass
class OrientationConfig:
    n_max: int = 12


def table(cfg: OrientationConfig) -> list[tuple[int, float, float]]:
    rows = []
    for n in range(2, cfg.n_max + 1):
        minus = max(coherent.eigen_relation_deviation(n, k, -1) for k in range(n))
        plus = max(coherent.eigen_relation_deviation(n, k, +1) for k in range(n))
        rows.append((n, minus, plus))
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max", type=int, default=12)
    args = p.parse_args()
    print(f"{'n':>3}  {'max dev, e^(-iP)':>18}  {'max dev, e^(+iP)':>18}")
    for n, minus, plus in table(OrientationConfig(args.n_max)):
        print(f"{n:3d}  {minus:18.3g}  {plus:18.3g}")


if __name__ == "__main__":
    main()
