"""CM types on a coset space, orbit words and decomposition signatures."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .perm import PermutationError, overgroups, permutation_cycles
from .words import WordMultiset, canonicalize

ORIENTATIONS = ("forward", "reverse")
PAIR = "pair"
SELF = "self"

_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


class ConsistencyError(AssertionError):
    """Two independent computations of the same quantity disagree."""


@dataclass(frozen=True)
class CMType:
    space: object = field(compare=False, repr=False)
    members: frozenset
    conjugation: tuple

    @property
    def g(self):
        return len(self.members)

    @property
    def complement(self):
        return frozenset(range(len(self.conjugation))) - self.members

    def conjugate(self):
        return CMType(self.space, self.complement, self.conjugation)

    def element_indices(self):
        """Parent-group indices of every element in the member cosets."""
        return np.array(sorted(i for c in self.members for i in self.space.members[c]),
                        dtype=np.int64)


def enumerate_cm_types(space, iota, collapse_conjugates=False):
    """All ``2**g`` CM types: one coset from each ``{x, x iota}`` pair.

    With ``collapse_conjugates`` only one of each ``{S, S iota}`` is kept.
    """
    conj = space.right_action(iota)
    n = len(conj)
    if any(conj[c] == c for c in range(n)) or any(conj[conj[c]] != c for c in range(n)):
        raise PermutationError(f"{iota} does not pair the cosets freely")
    pairs = sorted({(min(c, conj[c]), max(c, conj[c])) for c in range(n)})
    out = []
    for bits in product((0, 1), repeat=len(pairs)):
        if collapse_conjugates and bits[0]:
            continue
        members = frozenset(p[b] for p, b in zip(pairs, bits))
        out.append(CMType(space, members, conj))
    return out


def stabilizer(t):
    """``{h in G : S h = S}`` where ``S`` is the union of the member cosets."""
    G = t.space.parent
    s_idx = t.element_indices()
    mask = np.zeros(G.order, dtype=bool)
    mask[s_idx] = True
    keep = mask[G.table[s_idx]].all(axis=0)
    return G.subgroup_from_indices(np.flatnonzero(keep))


def is_primitive(t):
    return stabilizer(t).order == t.space.subgroup.order


def is_primitive_by_fibers(t, candidates=None):
    """Primitivity via overgroups: imprimitive iff some ``D' > Delta`` makes
    the members a union of fibres of ``G/Delta -> G/D'``."""
    G = t.space.parent
    delta = t.space.subgroup
    if candidates is None:
        candidates = overgroups(G, delta)
    s_idx = t.element_indices()
    mask = np.zeros(G.order, dtype=bool)
    mask[s_idx] = True
    for big in candidates:
        if big.order == delta.order:
            continue
        b_idx = G.indices_of(big.elements)
        if mask[G.table[np.ix_(s_idx, b_idx)]].all():
            return False
    return True


def sigma_orbits(space, sigma):
    """Cycles of ``x Delta -> sigma x Delta``, each from its least coset id."""
    return permutation_cycles(space.left_action(sigma))


def orbit_word(cycle, members, orientation="forward"):
    letters = "".join("V" if v in members else "F" for v in cycle)
    if orientation == "reverse":
        letters = letters[::-1]
    elif orientation != "forward":
        raise ValueError(f"unknown orientation {orientation!r}")
    return canonicalize(letters)


def words_from_orbits(cycles, t, orientation="forward"):
    """Raw (unfactored) multiset: one word per cycle, V on member cosets."""
    return WordMultiset.from_words(orbit_word(c, t.members, orientation) for c in cycles)


@dataclass(frozen=True, order=True)
class DecompositionSignature:
    """Decomposition type of a prime: ``alpha`` primes above it, ``beta`` below.

    ``profile`` lists ``(degree, kind)`` with conjugate pairs first, then
    self-conjugate primes, each by decreasing degree.
    """

    alpha: int
    beta: int
    profile: tuple

    @classmethod
    def from_profile(cls, profile):
        pairs = sorted((s for s, k in profile if k == PAIR), reverse=True)
        selfs = sorted((s for s, k in profile if k == SELF), reverse=True)
        prof = tuple((s, PAIR) for s in pairs) + tuple((s, SELF) for s in selfs)
        return cls(2 * len(pairs) + len(selfs), len(pairs) + len(selfs), prof)

    @property
    def n_pairs(self):
        return self.alpha - self.beta

    @property
    def n_self(self):
        return 2 * self.beta - self.alpha

    def label(self, style="unicode"):
        """Prime pattern such as ``𝒫₁𝒫₁ᶜ𝒫₂`` (or ``P1P1cP2`` with ``style="ascii"``)."""
        kinds = [k for _, k in self.profile]
        P, c = ("𝒫", "ᶜ") if style == "unicode" else ("P", "c")
        if len(kinds) == 1:
            return P + P + c if kinds[0] == PAIR else P
        out = []
        for i, kind in enumerate(kinds, start=1):
            num = str(i).translate(_SUB) if style == "unicode" else str(i)
            out.append(P + num + (P + num + c if kind == PAIR else ""))
        return "".join(out)


def signature(cycles, conjugation, reference_beta=None):
    """Pair up cycles under conjugation and count primes.

    ``reference_beta`` (the orbit count on ``G/H_0``) is cross-checked.
    """
    owner = {}
    for i, cyc in enumerate(cycles):
        for v in cyc:
            owner[v] = i
    profile = []
    done = set()
    for i, cyc in enumerate(cycles):
        if i in done:
            continue
        images = {owner[conjugation[v]] for v in cyc}
        if len(images) != 1:
            raise ConsistencyError("conjugation does not map cycles to cycles")
        (j,) = images
        if len(cycles[j]) != len(cyc):
            raise ConsistencyError("conjugate cycles differ in length")
        done.update((i, j))
        profile.append((len(cyc), SELF if i == j else PAIR))
    sig = DecompositionSignature.from_profile(profile)
    if sig.alpha != len(cycles):
        raise ConsistencyError("alpha differs from the cycle count")
    if reference_beta is not None and reference_beta != sig.beta:
        raise ConsistencyError(
            f"beta from cycle pairing ({sig.beta}) differs from the double coset "
            f"count on G/H0 ({reference_beta})")
    return sig
