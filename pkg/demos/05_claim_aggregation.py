# %% [markdown]
# # p-rank and a-number against the decomposition type
#
# Every record contributes a pair ((f, a), (alpha, beta)).  Here the pairs
# from the dimension 4 wreath product are compared with the reference table,
# then the generic dimension 5 group is run with an explicit Delta.

# %%
from cmred.catalog import build_group, parse_cycles
from cmred.perm import generate_group
from cmred.pipeline import RunOptions, aggregate_claim, outside_claim, run

G = build_group("wreath-c2:symmetric:4")
records = run(G, g=4, options=RunOptions(subgroup_cap=500), label="C2 wr S4")
pairs = aggregate_claim(records)
print(len(records), "records,", len(pairs), "pairs, outside:", outside_claim(pairs))

# %% [markdown]
# C2 wr S5 has order 3840, beyond the subgroup search, so Delta is the
# stabilizer of a point.  One pair falls outside the reference table.

# %%
G = build_group("wreath-c2:symmetric:5")
delta = generate_group(parse_cycles(
    "(2,7);(3,8);(4,9);(5,10);(2,3)(7,8);(2,3,4,5)(7,8,9,10)", degree=10))
records = run(G, deltas=[delta], label="C2 wr S5")
print(len(records), "records, outside:", outside_claim(aggregate_claim(records)))
