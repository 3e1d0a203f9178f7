# %% [markdown]
# # Circular words
#
# A BT1 group scheme over an algebraically closed field is a multiset of
# circular words in F and V.  This script walks through canonical forms,
# duality, factoring and the a-number.

# %%
from cmred.words import (WordMultiset, c_number, canonicalize, dual,
                         enumerate_indecomposable_classes, primitive_root)

w = canonicalize("VVFFVF")
print(w, "dual:", dual(w), "c:", c_number(w))

# %% [markdown]
# Two spellings of the same circular word share one canonical form.

# %%
print(canonicalize("FFVVFVVFFV") == canonicalize("FFVFFVVFVV"))

# %% [markdown]
# A periodic word splits into copies of its root.

# %%
print(primitive_root(canonicalize("FVFVFV")))
m = WordMultiset.parse("[FVFVFV], [FF], [VV]").factored()
print(m, "self-dual:", m.is_self_dual())

# %% [markdown]
# Aperiodic classes of each length come straight from Lyndon words.

# %%
for n in range(1, 7):
    print(n, [str(x) for x in enumerate_indecomposable_classes(n)])
