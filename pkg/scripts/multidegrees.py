"""Multidegrees (a, b, c) of the congruences and of the residual decomposition
of a quadric section of the dual Grassmannian chart.

    python3 scripts/multidegrees.py --seeds 4
"""

import argparse
from dataclasses import dataclass

from linecong.algebra.ring import DEFAULT_CHARACTERISTIC
from linecong.congruence import MongeAmpereCoefficients, build_congruence, multidegree, quadric
from linecong.grassmann import gamma_ideal, plucker_ring


@dataclass
class MultidegreeConfig:
    seeds: int = 3
    characteristic: int = DEFAULT_CHARACTERISTIC


def main(cfg: MultidegreeConfig):
    p = cfg.characteristic
    for case in ("ex1", "ex2_residual", "ex3_residual"):
        B = build_congruence(case, characteristic=p).plucker_ideal
        print(f"{case:16s} {multidegree(B).as_tuple()}")
    for s in range(cfg.seeds):
        c = MongeAmpereCoefficients.random(s, p)
        B = build_congruence("quadratic", c, seed=s, characteristic=p).plucker_ideal
        full = gamma_ideal(p) + [quadric(c, plucker_ring(p))]
        print(f"quadratic[{s}]     {multidegree(B, s).as_tuple()}  section {multidegree(full, s).as_tuple()}",
              flush=True)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=MultidegreeConfig.seeds)
    ap.add_argument("--characteristic", type=int, default=DEFAULT_CHARACTERISTIC)
    main(MultidegreeConfig(**vars(ap.parse_args())))
