"""Flowers with more and more petals keep their Cheeger constant pinned
while the oscillation index blows up.

Run from the repository root:

    python3 demos/flower_counterexample.py

The flower r(t) = (1 + eps^2/2)^(-1/2) (1 + eps sin(2 j t)) always has area pi.
Its Cheeger constant is squeezed between 2 (the unit disc) and the ratio of
the largest concentric inscribed disc, neither of which depends on j. The
perimeter, however, grows linearly in j, and so does beta^2. Any inequality of
the form h - h(B) >= c beta^2 must therefore fail as j grows.
"""

import math

from qcheeger import cheeger_bracket, flower, oscillation_beta_sq, riesz_zeta

eps = 0.1
print(f"{'j':>3} {'perimeter':>10} {'h lower':>8} {'h upper':>8} {'beta^2':>8} {'zeta':>9} {'ratio':>8}")
for j in (5, 10, 15, 20, 40):
    shape = flower(j, eps)
    bounds = cheeger_bracket(shape)
    beta_sq = oscillation_beta_sq(shape).value
    zeta = riesz_zeta(shape).value
    # the upper deficit of h, measured against beta^2
    ratio = (bounds.upper - 2.0) / 2.0 / beta_sq
    print(f"{j:3d} {shape.perimeter():10.4f} {bounds.lower:8.4f} {bounds.upper:8.4f} "
          f"{beta_sq:8.4f} {zeta:9.6f} {ratio:8.4f}")

# zeta does not see the petals at all: at the symmetric center the potential
# is the integral of r(t), whose mean is independent of j
print(f"\nzeta for every j equals 2 pi (1 - (1 + eps^2/2)^(-1/2)) = "
      f"{2 * math.pi * (1 - (1 + eps * eps / 2) ** -0.5):.6f}")
