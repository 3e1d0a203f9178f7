# %% [markdown]
# # Groups, cosets and CM types
#
# The Galois group is a permutation group.  Embeddings of the CM field are
# left cosets of Delta, complex conjugation acts on the right and a CM type
# picks one coset from each conjugate pair.

# %%
from cmred.catalog import build_group, parse_cycles
from cmred.cm import enumerate_cm_types, is_primitive
from cmred.perm import central_involutions, generate_group, left_cosets, subgroups_of_order

G = build_group("builtin:G40_12")
(iota,) = central_involutions(G)
print(G, "iota =", iota)

# %%
deltas = subgroups_of_order(G, 4, iota)
print(len(deltas), "candidate subgroups of order 4 avoiding iota")

# %%
delta = generate_group(parse_cycles("(3,4,8,9)", degree=10))
space = left_cosets(G, delta)
for i, rep in enumerate(space.representatives):
    print(i, rep)

# %%
types = enumerate_cm_types(space, iota)
print(len(types), "CM types,", sum(not is_primitive(t) for t in types), "imprimitive")
