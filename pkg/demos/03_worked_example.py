# %% [markdown]
# # A dimension 5 example
#
# For the group of order 40 every sigma splits the ten embeddings into
# orbits.  Those orbits give the primes over p, and each orbit, read
# against a CM type, gives a circular word.

# %%
from collections import defaultdict

from cmred.catalog import build_group
from cmred.pipeline import decomposition_text, run

G = build_group("builtin:G40_12")
records = run(G, g=5, label="G40_12")
print(len(records), "distinct records")

# %%
by_type = defaultdict(list)
for r in records:
    by_type[r.signature.label()].append(r)
for label, rows in by_type.items():
    print(label)
    for r in rows:
        print("   ", r.words, "|", decomposition_text(r.names, "unicode"), "| f =", r.f, "a =", r.a)
