# %% [markdown]
# # Groups with exactly two fewer cyclic subgroups than elements
#
# Writing n_d for the number of cyclic subgroups of order d,
#
#     |G| - |C(G)| = sum over d of n_d * (phi(d) - 1).
#
# phi(d) - 1 is 0 for d <= 2, 1 for d in {3, 4, 6} and at least 3 otherwise.
# A deficiency of 2 therefore needs either one cyclic subgroup with
# phi(d) = 3 (impossible, phi is even above 2) or two with phi(d) = 2.

# %%
from cycgroups import totient

print([d for d in range(1, 200) if totient(d) == 2])

# %% [markdown]
# In a scan over every isomorphism class up to order 16 the deficiency-2
# groups are exactly these four.

# %%
from cycgroups.theorems import verify_deficiency_classification

rep = verify_deficiency_classification(2, 16)
print(rep.verdict, rep.scope)
print(sorted(w["matches"] for w in rep.witnesses if "matches" in w))

# %% [markdown]
# The 2-group branch: two cyclic subgroups of order 4 and nothing of order 3.
# At order 32 every candidate already has an element of order 8, which adds
# at least 3 to the deficiency.

# %%
from cycgroups.theorems import verify_case1_families, verify_case2_family, verify_sylow_and_core_claims

for m in (4, 5):
    r = verify_case1_families(m)
    print(m, r.verdict, [(w["group"], w["deficiency"]) for w in r.witnesses])

# %% [markdown]
# The mixed branch: one subgroup of order 3 and one of order 4 or 6. Z2^m x Z3
# shows how quickly extra order-6 subgroups appear once the 2-part grows.

# %%
r = verify_case2_family(4)
print(r.verdict, [(w["m"], w["deficiency"], w["cyclic_of_order_6"]) for w in r.witnesses])
print(verify_sylow_and_core_claims().dumps())
