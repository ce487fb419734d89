# Quadratic forms on F_2^6 and their Arf invariants
#
# A form is pinned down by its six values on a1, b1, a2, b2, a3, b3.  All 64
# choices refine the mod-2 intersection pairing, and the Arf invariant
# sorts them into two classes.

from collections import Counter

from torelli import quadratic, symplectic
from torelli.quadratic import SpQuadraticForm

forms = quadratic.enumerate_forms(3)
print("forms on F_2^6:", len(forms))
print("by Arf invariant:", dict(Counter(quadratic.arf(f) for f in forms)))

# The closed formula 2^{g-1}(2^g +- 1) gives the same split for any genus.

for g in range(1, 5):
    print(g, [quadratic.census_formula(g, v) for v in (0, 1)])

# The reference form takes value 0 on a2 and 1 on everything else in the
# basis.  Changing basis by a random symplectic matrix leaves Arf alone.

w0 = quadratic.reference_form()
for seed in range(5):
    m = symplectic.random_sp_element(seed, 10)
    basis = [symplectic.apply(m, v) for v in symplectic.standard_basis()]
    print("seed", seed, "values on new basis:", [w0(v) for v in basis], "arf:", quadratic.arf(w0, basis))

# Only one Arf-0 form has involution value 1, and it is the reference form.

hits = [f for f in quadratic.enumerate_forms(3, 0) if quadratic.birman_craggs_involution_value(f) == 1]
print("forms with involution value 1:", [f.basis_values for f in hits])
print("three-term sum agrees:", all(
    quadratic.birman_craggs_three_term(f) == quadratic.birman_craggs_involution_value(f)
    for f in quadratic.enumerate_forms(3, 0)))

# Restricting to a handle gives a genus-1 form; its Arf tells which handles
# can sit in the middle of a symmetric splitting.

for i in (1, 2, 3):
    sub = symplectic.Sublattice((symplectic.a(i), symplectic.b(i)))
    print(f"handle {i}: arf {quadratic.arf(quadratic.restrict(w0, sub))}")
