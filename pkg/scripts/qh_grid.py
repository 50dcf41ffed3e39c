"""Milnor and Tjurina numbers of Y^b - X^a and of random automorphic images.

    python3 scripts/qh_grid.py [--max 7] [--images 2] [--seed 0]

For every coprime pair 2 <= a < b <= max the script prints mu(f;A), nu(f) and
(a-1)(b-1) for the binomial, then for a few random images it checks that the
numbers are unchanged and that synthesis recovers the normal form.
"""

import argparse
import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from oneplace import Automorphism, Move, milnor_pencil, parse_polynomial, synthesize_automorphism, tjurina_total


@dataclass(frozen=True)
class GridConfig:
    max_exponent: int = 7
    images: int = 2
    seed: int = 0
    coefficient_range: int = 3
    max_shift_degree: int = 3
    max_moves: int = 3


def random_automorphism(rng, cfg: GridConfig):
    r = cfg.coefficient_range
    moves = []
    for _ in range(rng.randint(1, cfg.max_moves)):
        kind = rng.choice(["X", "Y", "swap"])
        if kind == "swap":
            moves.append(Move("swap"))
            continue
        scale = rng.choice([c for c in range(-r, r + 1) if c])
        shift = [Fraction(rng.randint(-r, r)) for _ in range(rng.randint(0, cfg.max_shift_degree + 1))]
        moves.append(Move(kind, Fraction(scale), tuple(shift)))
    return Automorphism(tuple(moves))


def run(cfg: GridConfig):
    rng = random.Random(cfg.seed)
    failures = 0
    print(f"{'a':>2} {'b':>2} {'mu':>4} {'nu':>4} {'(a-1)(b-1)':>10}  images")
    for a in range(2, cfg.max_exponent + 1):
        for b in range(a + 1, cfg.max_exponent + 1):
            if gcd(a, b) != 1:
                continue
            f = parse_polynomial(f"Y^{b} - X^{a}", ("X", "Y"))
            mu, nu = milnor_pencil(f), tjurina_total(f)
            verdicts = []
            for _ in range(cfg.images):
                g = random_automorphism(rng, cfg).apply(f)
                s = synthesize_automorphism(g)
                same = milnor_pencil(g) == mu and tjurina_total(g) == nu and {s.a, s.b} == {a, b}
                verdicts.append("ok" if same else "FAIL")
                failures += not same
            failures += not (mu == nu == (a - 1) * (b - 1))
            print(f"{a:>2} {b:>2} {mu:>4} {nu:>4} {(a - 1) * (b - 1):>10}  {' '.join(verdicts)}")
    return failures


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max", type=int, default=GridConfig.max_exponent)
    parser.add_argument("--images", type=int, default=GridConfig.images)
    parser.add_argument("--seed", type=int, default=GridConfig.seed)
    ns = parser.parse_args(argv)
    start = time.perf_counter()
    failures = run(GridConfig(max_exponent=ns.max, images=ns.images, seed=ns.seed))
    print(f"{failures} failures, {time.perf_counter() - start:.1f} s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
