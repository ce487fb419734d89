# Linking forms and an independence certificate
#
# The standard linking form has l(b_i, a_i) = 1 and zeros elsewhere.
# Precomposing with a symplectic matrix M gives M^T L M.

from torelli import casson, splittings

base = casson.standard_linking_form()
l1 = casson.pushforward(base, casson.PSI1)
l3 = casson.pushforward(base, casson.PSI3)
for row in l1.matrix:
    print(row)

# The twist value on a genus-one side is the Gram determinant of l there.

cycle = casson.CycleDescriptor(splittings.standard_splitting())
for name, form in (("psi1", l1), ("psi3", l3)):
    print(name, [casson.morita_twist_value(form, side) for side in (cycle.gamma_side, cycle.delta_side)])
print("pairing:", casson.cycle_pairing(l1, l3, cycle))

# For several cycles, look for pairs of forms whose pairing matrix has full
# rank.  Full rank certifies that the cycles are linearly independent.

family = splittings.random_symmetric_family(4, seed=3, word_length=3)
cycles = [casson.CycleDescriptor(s) for s in family]
cert = casson.find_independence_certificate(cycles, seed=3)
print("rank", cert.rank, "after", cert.meta["candidates_tried"], "candidates")
for row in cert.value_matrix:
    print("  ", row)

# The certificate is self-contained: a round trip through JSON and an
# independent replay must agree.

replayed = casson.verify_certificate(casson.IndependenceCertificate.from_json(cert.to_json()))
print("replay:", replayed)
