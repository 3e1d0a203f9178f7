"""Enumerate admissible decompositions of A[p] for a CM Galois datum.

For each central involution ``iota``, each candidate ``Delta`` (a subgroup of
index ``2g`` avoiding ``iota``), each (primitive) CM type and each ``sigma`` in
``G``, the ``<sigma>``-orbits on ``G/Delta`` give the primes of ``K`` above
``p`` and, labelled by the CM type, a multiset of circular words.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .cm import (
    ConsistencyError,
    DecompositionSignature,
    enumerate_cm_types,
    is_primitive,
    sigma_orbits,
    signature,
    words_from_orbits,
)
from .perm import (
    DEFAULT_SUBGROUP_SEARCH_CAP,
    PermutationError,
    central_involutions,
    generate_group,
    join_subgroup,
    left_cosets,
    orbit_count,
    subgroups_of_order,
)
from .words import (
    WordMultiset,
    c_number,
    canonicalize,
    enumerate_indecomposable_classes,
    dual,
    multiset_invariants,
    pair_quasi_polarized,
)

log = logging.getLogger(__name__)

# orientation used when "auto" is requested; see tests/test_calibration.py
CALIBRATED_ORIENTATION = "forward"


class NotCMDatumError(ValueError):
    """The group has no central involution."""


@dataclass(frozen=True, order=True)
class SchemeName:
    """Name of a quasi-polarized indecomposable piece.

    ``kind`` is ``"mu"`` (the pair [F], [V]), ``"I"``, ``"J"`` or ``"raw"``.
    """

    kind: str
    half_order: int
    a: int
    words: tuple = ()

    def text(self, style="ascii"):
        if self.kind == "mu":
            return "μ_p × Z/pZ" if style == "unicode" else "mu_p x Z/pZ"
        if self.kind == "raw":
            return "Raw(" + " ".join(str(w) for w in self.words) + ")"
        if style == "unicode":
            sub = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
            return f"{self.kind}{str(self.half_order).translate(sub)},{str(self.a).translate(sub)}"
        return f"{self.kind}_{{{self.half_order},{self.a}}}"

    def __str__(self):
        return self.text()


def _piece_key(words):
    return tuple(sorted(canonicalize(w) for w in words))


_DICTIONARY_SOURCE = [
    (("F", "V"), SchemeName("mu", 1, 0)),
    (("FV",), SchemeName("I", 1, 1)),
    (("FFVV",), SchemeName("I", 2, 1)),
    (("FFFVVV",), SchemeName("I", 3, 1)),
    (("FFV", "VVF"), SchemeName("I", 3, 2)),
    (("FFFFVVVV",), SchemeName("I", 4, 1)),
    (("FFFV", "VVVF"), SchemeName("I", 4, 2)),
    (("FFVFVVFV",), SchemeName("I", 4, 3)),
    (("FFFFFVVVVV",), SchemeName("I", 5, 1)),
    (("FFFFV", "VVVVF"), SchemeName("I", 5, 2)),
    (("FFFVV", "VVVFF"), SchemeName("J", 5, 2)),
    (("FFFVFVVVFV",), SchemeName("I", 5, 3)),
    (("FFVFFVVFVV",), SchemeName("J", 5, 3)),
    (("FFVFV", "VVFVF"), SchemeName("I", 5, 4)),
]
SCHEME_DICTIONARY = {_piece_key(words): name for words, name in _DICTIONARY_SOURCE}

# (p-rank, a-number) -> decomposition types (alpha, beta) observed for g <= 5
CLAIM_TABLE = {
    (0, 1): {(1, 1)},
    (0, 2): {(2, 1), (2, 2)},
    (0, 3): {(1, 1), (3, 2), (3, 3)},
    (0, 4): {(2, 1), (2, 2), (4, 2), (4, 3), (4, 4)},
    (0, 5): {(1, 1), (3, 2), (3, 3), (5, 3), (5, 4), (5, 5)},
    (1, 0): {(2, 1)},
    (1, 1): {(3, 2)},
    (1, 2): {(4, 2), (4, 3)},
    (1, 3): {(3, 2), (5, 3), (5, 4)},
    (1, 4): {(4, 2), (4, 3), (6, 3), (6, 4), (6, 5)},
    (2, 0): {(2, 1), (4, 2)},
    (2, 1): {(3, 2), (5, 3)},
    (2, 2): {(4, 2), (4, 3), (6, 3), (6, 4)},
    (2, 3): {(5, 3), (5, 4), (7, 4), (7, 5)},
    (3, 0): {(2, 1), (4, 2), (6, 3)},
    (3, 1): {(3, 2), (5, 3), (7, 4)},
    (3, 2): {(4, 2), (4, 3), (6, 3), (6, 4), (8, 4), (8, 5)},
    (4, 0): {(2, 1), (4, 2), (6, 3), (8, 4)},
    (4, 1): {(3, 2), (5, 3), (7, 4), (9, 5)},
    (5, 0): {(2, 1), (4, 2), (6, 3), (8, 4), (10, 5)},
}
# cells whose transcription is uncertain; excluded from hard checks
CLAIM_UNCERTAIN = frozenset()


def claim_pairs():
    return {(fa, ab) for fa, abs_ in CLAIM_TABLE.items() for ab in abs_}


def name_piece(piece):
    key = _piece_key(piece)
    known = SCHEME_DICTIONARY.get(key)
    if known is not None:
        return known
    half = sum(len(w) for w in key) // 2
    a = sum(c_number(w) for w in key)
    return SchemeName("raw", half, a, key)


def name_pieces(pieces):
    return [name_piece(p) for p in pieces]


def decomposition_text(names, style="ascii"):
    """``(mu_p x Z/pZ)^2 x I_{1,1}``-style product, mu first then by size."""
    counts = {}
    for n in names:
        counts[n] = counts.get(n, 0) + 1
    parts = []
    for n in sorted(counts, key=lambda n: (n.kind != "mu", n.half_order, n.a, n.kind, n.words)):
        t = n.text(style)
        if n.kind == "mu" and (counts[n] > 1 or len(counts) > 1):
            t = f"({t})"
        if counts[n] > 1:
            t += f"^{counts[n]}"
        parts.append(t)
    return (" × " if style == "unicode" else " x ").join(parts)


@dataclass(frozen=True)
class Provenance:
    iota: str
    delta: str
    cm_type: tuple
    sigma: str

    def key(self):
        return (self.iota, self.delta, self.cm_type, self.sigma)


@dataclass(frozen=True)
class CorrespondenceRecord:
    group_label: str
    g: int
    signature: DecompositionSignature
    words: WordMultiset
    pieces: tuple
    names: tuple
    f: int
    a: int
    provenance: Provenance | None = field(default=None, compare=False)

    @property
    def alpha(self):
        return self.signature.alpha

    @property
    def beta(self):
        return self.signature.beta

    def dedup_key(self):
        return (self.alpha, self.beta, self.words.text())

    def sort_key(self):
        return (self.alpha, self.beta, self.words.text(), self.signature.profile)


@dataclass(frozen=True)
class RunOptions:
    include_imprimitive: bool = False
    dedup: bool = True
    provenance: bool = False
    subgroup_cap: int = DEFAULT_SUBGROUP_SEARCH_CAP
    orientation: str = "auto"
    threads: int | None = None
    fast_sigma: bool = False

    def resolved_orientation(self):
        return CALIBRATED_ORIENTATION if self.orientation == "auto" else self.orientation


def threads_from_env():
    raw = os.environ.get("CMRED_THREADS")
    if not raw:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"CMRED_THREADS must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"CMRED_THREADS must be a positive integer, got {raw!r}")
    return value


def _conjugacy_representatives(G):
    T = G.table
    inv = G.inverse_indices
    seen = set()
    reps = []
    for x in range(G.order):
        if x in seen:
            continue
        cls = {int(T[T[h, x], inv[h]]) for h in range(G.order)}
        seen |= cls
        reps.append(x)
    return reps


def _evaluate(G, iota, delta, g, label, options):
    """All records for one ``(iota, Delta)`` work item, in loop order."""
    orientation = options.resolved_orientation()
    space = left_cosets(G, delta)
    h0 = join_subgroup(G, iota, delta)
    h0_space = left_cosets(G, h0)
    cm_types = enumerate_cm_types(space, iota)
    if not options.include_imprimitive:
        cm_types = [t for t in cm_types if is_primitive(t)]
    if options.fast_sigma:
        sigmas = [G.elements[i] for i in _conjugacy_representatives(G)]
    else:
        sigmas = G.elements
    delta_text = ";".join(str(p) for p in delta.generators) or "()"
    out = []
    conj = space.right_action(iota)
    per_sigma = []
    for sigma in sigmas:
        cycles = sigma_orbits(space, sigma)
        beta_ref = orbit_count(h0_space, "left", sigma)
        sig = signature(cycles, conj, reference_beta=beta_ref)
        per_sigma.append((sigma, cycles, sig))
    for t in cm_types:
        for sigma, cycles, sig in per_sigma:
            raw = words_from_orbits(cycles, t, orientation)
            if raw.total_length != 2 * g or len(raw) != sig.alpha:
                raise ConsistencyError("orbit words do not cover the coset space")
            words = raw.factored()
            if not words.is_self_dual():
                raise ConsistencyError(f"word multiset {words} is not self-dual")
            pieces = tuple(pair_quasi_polarized(words))
            names = tuple(name_pieces(pieces))
            f, a = multiset_invariants(words)
            prov = None
            if options.provenance:
                prov = Provenance(str(iota), delta_text, tuple(sorted(t.members)), str(sigma))
            out.append(CorrespondenceRecord(label, g, sig, words, pieces, names, f, a, prov))
    return out


def _evaluate_packed(args):
    gens, degree, order_cap, iota, delta_gens, g, label, options = args
    G = generate_group(gens, order_cap=order_cap, degree=degree)
    delta = generate_group(delta_gens, order_cap=order_cap, degree=degree)
    return _evaluate(G, iota, delta, g, label, options)


def _merge(records, dedup):
    if not dedup:
        return sorted(records, key=lambda r: (r.sort_key(), r.provenance.key() if r.provenance else ()))
    best = {}
    for r in records:
        k = r.dedup_key()
        cur = best.get(k)
        # keep the least profile / provenance so the merge is order independent
        if cur is None or _tiebreak(r) < _tiebreak(cur):
            best[k] = r
    return sorted(best.values(), key=lambda r: r.sort_key())


def _tiebreak(r):
    return (r.signature.profile, r.provenance.key() if r.provenance else ())


def run(group, g=None, deltas=None, options=None, label=None):
    """Run the enumeration and return sorted correspondence records.

    Exactly one of ``g`` (enumerate every admissible ``Delta`` of order
    ``|G|/2g``) or ``deltas`` (explicit subgroups) is required.
    """
    options = options or RunOptions()
    label = label or "group"
    if (g is None) == (deltas is None):
        raise PermutationError("give exactly one of g or deltas")
    iotas = central_involutions(group)
    if not iotas:
        raise NotCMDatumError("not a CM Galois datum: the group has no central involution")
    work = []
    for iota in iotas:
        if deltas is None:
            if group.order % (2 * g):
                raise PermutationError(f"2g = {2 * g} does not divide |G| = {group.order}")
            cands = subgroups_of_order(group, group.order // (2 * g), iota,
                                       subgroup_search_cap=options.subgroup_cap)
            gg = g
        else:
            cands = []
            for d in deltas:
                if not d.is_subgroup_of(group):
                    raise PermutationError("Delta is not a subgroup of G")
                if iota in d:
                    continue
                cands.append(d)
            gg = None
        for delta in cands:
            dim = gg if gg is not None else group.order // delta.order // 2
            if group.order % (2 * delta.order):
                raise PermutationError("[G:Delta] is odd")
            work.append((iota, delta, dim))
    if not work:
        log.warning("no admissible Delta for %s", label)
        return []

    threads = options.threads or 1
    records = []
    if threads > 1 and len(work) > 1:
        packed = [(list(group.generators), group.degree, max(group.order, 1), iota,
                   list(delta.generators), dim, label, options)
                  for iota, delta, dim in work]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for chunk in pool.map(_evaluate_packed, packed):
                records.extend(chunk)
    else:
        for iota, delta, dim in work:
            records.extend(_evaluate(group, iota, delta, dim, label, options))
    result = _merge(records, options.dedup)
    for r in result:
        _check_record(r)
    return result


def _check_record(r):
    if r.words.total_length != 2 * r.g:
        raise ConsistencyError(f"word lengths sum to {r.words.total_length}, expected {2 * r.g}")
    if not (r.beta <= r.alpha <= 2 * r.beta):
        raise ConsistencyError(f"decomposition type {(r.alpha, r.beta)} out of range")
    f = sum(1 for n in r.names if n.kind == "mu")
    a = sum(n.a for n in r.names)
    if (f, a) != (r.f, r.a):
        raise ConsistencyError(f"invariants from names {(f, a)} differ from words {(r.f, r.a)}")
    if r.g <= 5 and any(n.kind == "raw" for n in r.names):
        raise ConsistencyError(f"unnamed piece in dimension {r.g}")
    if r.g <= 5 and (r.alpha, r.beta) not in CLAIM_TABLE.get((r.f, r.a), set()):
        log.warning("pair %s -> %s is outside the reference table",
                    (r.f, r.a), (r.alpha, r.beta))


def classification_table(g):
    """Quasi-polarized indecomposable pieces of half-order ``g``, with a-numbers.

    Self-dual aperiodic classes of length ``2g`` and unordered dual pairs of
    distinct aperiodic classes of length ``g``, sorted by (a, text).
    """
    if g < 1:
        raise ValueError("g must be positive")
    pieces = []
    for w in enumerate_indecomposable_classes(2 * g):
        if dual(w) == w:
            pieces.append((w,))
    for w in enumerate_indecomposable_classes(g):
        d = dual(w)
        if w < d:
            pieces.append((w, d))
    rows = [(p, sum(c_number(w) for w in p)) for p in pieces]
    rows.sort(key=lambda r: (r[1], ", ".join(str(w) for w in r[0])))
    return rows


def aggregate_claim(records):
    """Distinct ``((f, a), (alpha, beta))`` pairs."""
    return {((r.f, r.a), (r.alpha, r.beta)) for r in records}


def outside_claim(pairs):
    """Pairs not listed in the reference table (uncertain cells ignored)."""
    known = claim_pairs()
    return sorted(p for p in pairs if p not in known and p[0] not in CLAIM_UNCERTAIN)
