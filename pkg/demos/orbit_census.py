# Counting Sp(6, Z/2) by brute force
#
# The group order has a closed form.  Here we also build every element from
# transvections and check that the breadth-first closure lands on exactly
# that many matrices.  The result is cached, so a second run is instant.

import time

from torelli import mod2

for g in (1, 2, 3, 4):
    print(f"|Sp({2 * g}, 2)| = {mod2.sp_order_mod2(g)}")

t0 = time.perf_counter()
group, status = mod2.load_or_build(3)
print(f"{group.size} elements ({status} in {time.perf_counter() - t0:.2f} s)")
print("cache file:", mod2.cache_path(3))

# Dividing by (2g+2)! counts the Torelli orbits of hyperelliptic involutions.

print("orbits for g = 3:", mod2.hyperelliptic_orbit_count(3))
print("orbits for g = 4:", mod2.hyperelliptic_orbit_count(4))

# The group acts on the 64 quadratic forms.  Acting with every element at
# once shows two orbits, one per Arf value.

census = mod2.form_orbit_census(3, group)
print("orbit sizes by Arf value:", census)

# Packed elements are plain integers; unpack one to look at it.

code = int(group[len(group) // 2])
for row in mod2.unpack(code, 3):
    print(" ".join(map(str, row)))
