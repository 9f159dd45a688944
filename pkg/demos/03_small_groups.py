# %% [markdown]
# # All groups of small order
#
# The exhaustive search fills Cayley tables cell by cell and keeps one table
# per isomorphism class. The bundled catalog builds the same classes from
# constructors and presentations; for orders up to 12 the two are matched
# one-to-one.

# %%
import time

from cycgroups import census
from cycgroups.smallgroups import catalog, enumerate_oracle, match_classes, name_of

for n in range(1, 13):
    t = time.perf_counter()
    found = enumerate_oracle(n)
    dt = time.perf_counter() - t
    match_classes(catalog(n, cross_validate=False), found)
    print(f"order {n:>2}: {len(found)} classes in {dt:5.2f}s ->", ", ".join(name_of(g) for g in found.groups))

# %% [markdown]
# Order 16 comes from the catalog. Only one of its fourteen classes has
# deficiency 2.

# %%
for g in catalog(16).groups:
    r = census(g)
    print(f"{g.label:<12} |C(G)|={r.total_cyclic:<3} deficiency {r.deficiency}")
