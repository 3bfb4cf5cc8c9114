"""Print per-column multipliers of the position-phase / parity commutation.

For rotations the multiplier is the constant e^{2 pi i a m/n}; for mirrors it
is e^{2 pi i a (m - 2k)/n}, varying with the column k.
"""

import argparse
from dataclasses import dataclass

import numpy as np

from dihedral_kinematics import coherent


@dataclass
class MultiplierConfig:
    n: int = 5
    a: int = 1
    m: int = 0


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--m", type=int, default=0)
    args = p.parse_args()
    cfg = MultiplierConfig(args.n, args.a, args.m)
    np.set_printoptions(precision=4, suppress=True)
    for mirror in (False, True):
        got = coherent.column_multipliers(coherent.commutation_defect(cfg.a, cfg.m, cfg.n, mirror))
        pred = coherent.commutation_multiplier_closed_form(cfg.a, cfg.m, cfg.n, mirror)
        kind = "mirror" if mirror else "rotation"
        print(f"{kind:8s} measured  {got}")
        print(f"{kind:8s} predicted {pred}")
        print(f"{kind:8s} spread    {np.max(np.abs(got - got[0])):.3g}")


if __name__ == "__main__":
    main()
