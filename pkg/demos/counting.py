# %%
# Counting orbits
#
# Orbits of the Borel subgroup of K on the flag variety are indexed by
# partitions into lists (gl(n)) or signed lists (so(n)). Four ways to count
# them should agree exactly.

from orbit_atlas.pil_spil import (SeriesTable, block_partition, count_orbits, enumerate_pil,
                                  lah_transform, series)

for family in ("A", "D", "B"):
    row = [count_orbits(family, k) for k in range(6)]
    print(family, row)

# %%
# The three partitions of {1, 2} into lists.

for p in enumerate_pil([1, 2]):
    print(p)

# %%
# Every method gives the same number.

for m in ("formula", "enumerate", "recursion", "egf"):
    print(m, count_orbits("B", 3, m))

# %%
# The type D numbers are the Lah transform of the type A numbers, and those
# in turn come from the all-ones sequence.

print(lah_transform(series("A", 7)).values)
print(series("D", 7).values)
print(lah_transform(SeriesTable("A", [1] * 7)).values)

# %%
# Splitting PIL(4) by where 4 sits gives the per-K-orbit counts.

for key, members in block_partition("A", 4).items():
    print(key, len(members))
