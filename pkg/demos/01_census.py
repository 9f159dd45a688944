# %% [markdown]
# # Counting cyclic subgroups
#
# Every element generates a cyclic subgroup, and a cyclic subgroup of order d
# has phi(d) generators. So the elements split into classes, one class per
# cyclic subgroup, and |G| - |C(G)| measures how much that splitting collapses.

# %%
from cycgroups import build_from_text, census, cyclic_subgroups, totient

g = build_from_text("D(12)")
rep = census(g)
print(f"{g.label}: order {g.n}, {rep.total_cyclic} cyclic subgroups")
for d, count in rep.rows:
    if count:
        print(f"  order {d:>2}: {count:>2} subgroup(s), {count * totient(d):>2} elements")

# %% [markdown]
# The listing is sorted by order and then by smallest generator index.

# %%
for c in cyclic_subgroups(g):
    print(c.order, c.generator, c.elements)

# %% [markdown]
# Deficiency 0 means every non-identity element is its own cyclic subgroup's
# only generator, so every element has order at most 2.

# %%
for spec in ["E(2,3)", "Z(3)", "Z(4)", "S(3)", "D(8)", "Z(6)", "Z(2) x Z(4)", "Z(2) x D(8)", "Q(8)", "M(16)"]:
    r = census(build_from_text(spec))
    print(f"{spec:<14} |G|={r.n:<3} |C(G)|={r.total_cyclic:<3} deficiency {r.deficiency}")
