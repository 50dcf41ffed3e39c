"""Survey mu(f;A) - nu(f) over the two S2 parametric families.

    python3 scripts/s2_survey.py [--cuspidal-range -12 4] [--nodal-step 1/2 --nodal-bound 4]

Cuspidal family: x = t^4 + a t^2, y = t^3 - 3t^2 for integer a.
Nodal family: x = (t^2-1)(t^2+a), y = (t^2-1)(t+b) for a, b on a grid.
Rows with mu - nu = 1 are marked; improper or multi-place parameters are skipped.
"""

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction

from oneplace import OnePlaceError, ParametricCurve, milnor_pencil, tjurina_total
from oneplace.algebra import univariate as up
from oneplace.curves import implicit_equation


@dataclass(frozen=True)
class SurveyConfig:
    cuspidal_low: int = -12
    cuspidal_high: int = 4
    nodal_step: Fraction = Fraction(1, 2)
    nodal_bound: Fraction = Fraction(4)


def gap(x, y):
    c = ParametricCurve(tuple(map(Fraction, x)), tuple(map(Fraction, y)))
    f = implicit_equation(c)
    return milnor_pencil(f) - tjurina_total(f)


def grid(step, bound):
    k = int(bound / step)
    return [step * i for i in range(-k, k + 1)]


def survey(cfg: SurveyConfig):
    print("cuspidal family (t^4 + a t^2, t^3 - 3t^2)")
    for a in range(cfg.cuspidal_low, cfg.cuspidal_high + 1):
        try:
            g = gap([0, 0, a, 0, 1], [0, 0, -3, 1])
        except OnePlaceError as exc:
            print(f"  a={a:>4}  skipped ({exc})")
            continue
        print(f"  a={a:>4}  mu-nu={g}{'  <- gap one' if g == 1 else ''}")
    print("nodal family ((t^2-1)(t^2+a), (t^2-1)(t+b)): parameters with mu - nu = 1")
    hits = []
    for a in grid(cfg.nodal_step, cfg.nodal_bound):
        for b in grid(cfg.nodal_step, cfg.nodal_bound):
            try:
                g = gap(up.mul([-1, 0, 1], [a, 0, 1]), up.mul([-1, 0, 1], [b, 1]))
            except OnePlaceError:
                continue
            if g == 1:
                hits.append((a, b))
    for a, b in hits:
        print(f"  a={str(a):>5}  b={str(b):>5}")
    return hits


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--cuspidal-range", type=int, nargs=2, default=(SurveyConfig.cuspidal_low, SurveyConfig.cuspidal_high))
    parser.add_argument("--nodal-step", type=Fraction, default=SurveyConfig.nodal_step)
    parser.add_argument("--nodal-bound", type=Fraction, default=SurveyConfig.nodal_bound)
    ns = parser.parse_args(argv)
    survey(SurveyConfig(*ns.cuspidal_range, ns.nodal_step, ns.nodal_bound))
    return 0


if __name__ == "__main__":
    sys.exit(main())
