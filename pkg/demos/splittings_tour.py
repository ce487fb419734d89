# Orthogonal splittings of H = Z^6
#
# H splits as three orthogonal rank-2 summands.  Under the reference form the
# standard splitting has Arf pattern (1, 0, 1), which makes it symmetric.

from itertools import permutations

import numpy as np

from torelli import splittings as spl

std = spl.standard_splitting()
for order in permutations(range(3)):
    s = std.permuted(order)
    print(order, spl.arf_pattern(s), "symmetric" if spl.is_symmetric_splitting(s) else "")

# Random symmetric splittings come from pushing the standard one around by
# Sp(6, Z).  canonical_form picks one of each splitting and its reversal.

rng = np.random.default_rng(7)
s = spl.random_symmetric_splitting(rng, word_length=4)
print("sample:", s.to_json())
canon, sign = spl.canonical_form(s)
print("canonical:", canon.to_json(), "sign", sign)
print("reversal sign:", spl.canonical_form(s.reversed())[1])

# project splits any class into its three components.

x = (1, 2, -1, 0, 3, 1)
parts = spl.project(x, s)
print("components of", x, ":", parts)
print("they add back up:", tuple(map(sum, zip(*parts))) == x)

# A generic class has all components nonzero and tells the splittings of a
# family apart.

family = spl.random_symmetric_family(3, seed=0, word_length=3)
gc = spl.choose_generic_class(family, seed=0)
print("generic x:", gc.x)
for comps, mults in zip(gc.components, gc.multiplicities):
    print("  ", comps, "multiplicities", mults)
