# %% [markdown]
# # Dimensions 1 to 3
#
# The union over the Galois groups that occur in each dimension gives the
# complete list of decompositions of A[p] per decomposition type.

# %%
from cmred.catalog import build_group
from cmred.pipeline import decomposition_text, run

GROUPS = {
    1: ["cyclic:2"],
    2: ["cyclic:4", "dihedral:8"],
    3: ["cyclic:6", "dihedral:12", "product:alternating:4,cyclic:2", "wreath-c2:symmetric:3"],
}

for g, specs in GROUPS.items():
    rows = set()
    for spec in specs:
        for r in run(build_group(spec), g=g, label=spec):
            rows.add((r.alpha, r.beta, r.signature.label(), decomposition_text(r.names), r.f, r.a))
    print(f"dimension {g}")
    for _, _, label, text, f, a in sorted(rows):
        print(f"  {label:16} {text:32} f={f} a={a}")
