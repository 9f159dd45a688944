# %% [markdown]
# # Groups from presentations
#
# Coset enumeration turns generators and relators into a permutation action.
# With the trivial subgroup the action is regular, so the number of cosets is
# the group order and the permutations give a Cayley table.

# %%
from cycgroups import census, parse_presentation, realize, todd_coxeter

p = parse_presentation("< a,b | a^4, b^2 = a^2, b^-1 a b a >")
ct = todd_coxeter(p)
print(f"{len(p.generators)} generators, order {ct.order}, {ct.defined} cosets defined on the way")
for i, row in enumerate(ct.compressed()):
    print(i, row)

# %% [markdown]
# That was Q8. It has a single involution, which is why its census differs
# from D8's even though both have order 8.

# %%
q8 = realize(p, label="Q8")
print(q8.order_counts, census(q8).total_cyclic)

# %% [markdown]
# The binary tetrahedral group needs no dihedral-style relation at all.

# %%
sl23 = realize("< s,t | s t s t = s^3 = t^3 >", label="SL(2,3)")
print(sl23.n, sl23.order_counts, census(sl23).deficiency)

# %% [markdown]
# Enumeration is bounded; an infinite group runs into the coset limit.

# %%
from cycgroups import CosetLimitExceeded

try:
    todd_coxeter(parse_presentation("< a,b | a^2, b^3 >"), max_cosets=500)
except CosetLimitExceeded as e:
    print("stopped:", e)
