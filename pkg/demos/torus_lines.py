# Straight lines on the torus R^2 / 2Z^2 with two marked points
#
# The involution is (x, y) -> (2 - x, 2 - y), and p = (1, 1), q = (1, 0) are
# two of its fixed points.  A primitive class w = (w1, w2) is realized by a
# line -w2 x + w1 y + c = 0 (mod 2).

import sys
from math import gcd

from torelli import checks, torus


def describe(line):
    terms = [f"{k}{v}" if k not in (1, -1) else ("-" if k < 0 else "") + v
             for k, v in ((line.a, "x"), (line.b, "y")) if k]
    text = " + ".join(terms).replace("+ -", "- ")
    return text + (f" + {line.c}" if line.c else "") + " = 0"


for w in [(0, -1), (1, -1), (2, -1), (3, 5)]:
    line = torus.realize_symmetric(w)
    print(w, "->", describe(line), "invariant:", line.is_involution_invariant(), "misses p:", line.avoids([torus.P]))

# With nu(w) = 1 one invariant line misses both points.  With nu(w) = 0 we
# get a swapped pair instead, and each annulus between them holds one point.

for w in [(1, 0), (1, 2), (3, 4)]:
    z1, z2 = torus.realize_nu0_pair(w)
    print(w, describe(z1), "|", describe(z2), "occupancy:", torus.annulus_occupancy(z1, z2))

# Straightening w to e1 with an SL(2, Z) matrix gives the same answer.

for w in [(1, 2), (3, 4), (5, 2)]:
    shape, images = torus.occupancy_by_normalization(w)
    print(w, "shape mod 2:", shape, "marked points after straightening:", sorted(images))

# Every primitive class in [-20, 20]^2, all three constructions:

total = sum(1 for m in range(-20, 21) for n in range(-20, 21) if gcd(m, n) == 1)
print(f"{total} classes, {checks.torus_failures(20)} failures")

# Pass a filename to draw the pair for w = (1, 2).

if len(sys.argv) > 1:
    with open(sys.argv[1], "w") as fh:
        fh.write(torus.fundamental_domain_svg(list(torus.realize_nu0_pair((1, 2)))))
    print("wrote", sys.argv[1])
