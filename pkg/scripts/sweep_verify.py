"""Run the full invariant suite over a range of n and tabulate the worst deviation per check family."""

import argparse
import time
from collections import defaultdict
from dataclasses import dataclass

from dihedral_kinematics import verify


@dataclass
class SweepConfig:
    n_min: int = 2
    n_max: int = 12
    reps: tuple[str, ...] = ("V1", "V2")


def sweep(cfg: SweepConfig) -> tuple[dict[str, float], list[tuple[int, int, float]], list[str]]:
    worst: dict[str, float] = defaultdict(float)
    timings = []
    failures = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        t0 = time.perf_counter()
        suite = verify.run(n, cfg.reps)
        timings.append((n, len(suite.verdicts), time.perf_counter() - t0))
        for v in suite.verdicts:
            family = v.name.split(".")[-1]
            worst[family] = max(worst[family], v.deviation)
            if not v.passed:
                failures.append(f"n={n} {v.name}: {v.deviation:.3g} > {v.tol:g}")
    return dict(worst), timings, failures


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=12)
    args = p.parse_args()
    worst, timings, failures = sweep(SweepConfig(args.n_min, args.n_max))
    for n, count, dt in timings:
        print(f"n={n:3d}  {count:3d} checks  {dt:6.3f}s")
    print()
    for name in sorted(worst):
        print(f"{name:40s} {worst[name]:.3g}")
    print()
    print("all pass" if not failures else "\n".join(failures))


if __name__ == "__main__":
    main()
