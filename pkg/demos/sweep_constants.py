"""Empirical constants for the three quantitative inequalities.

    python3 demos/sweep_constants.py [--quick]

Random convex polygons (area pi) give the ratio of the relative Cheeger
deficit to zeta; random unions of at most three intervals give the Gaussian
Cheeger deficit divided by alpha_gamma^2 and by Phi(beta_gamma) in three
measure bins. Positive infima are what the inequalities predict; the exact
constants are not known in closed form.
"""

import sys

from qcheeger.experiments import sweep_gauss_constants, sweep_zeta_constant

quick = "--quick" in sys.argv
n_poly, n_sets = (50, 30) if quick else (200, 300)

z = sweep_zeta_constant(n_poly, seed=7)
s = z.summary
print(f"convex polygons: {s['count']} kept, ratio infimum {s['infimum']:.6f}, "
      f"median {s['median']:.4f}, max {s['maximum']:.4f}")

g = sweep_gauss_constants(n_sets, seed=11)
for b, stats in g.summary["bins"].items():
    print(f"measure {b}: gap/alpha^2 >= {stats['alpha']['infimum']:.4f}, "
          f"gap/Phi(beta) >= {stats['beta']['infimum']:.4f}")
print(f"({g.summary['draws']} interval sets drawn to fill the bins)")
