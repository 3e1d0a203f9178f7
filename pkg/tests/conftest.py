import functools

from golden import decomp_key

from cmred.catalog import build_group
from cmred.pipeline import RunOptions, run


def name_token(n):
    if n.kind == "mu":
        return "mu"
    return f"{n.kind}{n.half_order}{n.a}"


def record_row(r):
    """``(signature, decomposition key, f, a)`` in the golden-table vocabulary."""
    text = " x ".join(name_token(n) for n in r.names)
    return r.signature.label("ascii"), decomp_key(text), r.f, r.a


def golden_rows(rows):
    return {(sig, decomp_key(d), f, a) for sig, d, f, a in rows}


@functools.lru_cache(maxsize=None)
def cached_group(spec):
    return build_group(spec)


@functools.lru_cache(maxsize=None)
def cached_run(spec, g, subgroup_cap=400, include_imprimitive=False):
    opts = RunOptions(subgroup_cap=subgroup_cap, include_imprimitive=include_imprimitive)
    return tuple(run(cached_group(spec), g=g, options=opts, label=spec))


# every catalog group small enough for exhaustive checks, with its dimension
SMALL_CATALOG = [
    ("cyclic:2", 1), ("cyclic:4", 2), ("dihedral:8", 2), ("cyclic:6", 3),
    ("dihedral:12", 3), ("product:alternating:4,cyclic:2", 3),
    ("wreath-c2:symmetric:3", 3), ("cyclic:10", 5), ("dihedral:20", 5),
    ("builtin:G40_12", 5),
]


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    lines = getattr(test_acceptance, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance")
        for line in lines:
            terminalreporter.write_line(line)
