"""Finite permutation groups, stored fully enumerated.

Groups here are small (a few thousand elements at most), so every group keeps
its complete sorted element list and, on demand, a dense multiplication table
indexed by element position.  All subgroup, coset and orbit computations run on
element indices against that table.

Composition convention: ``p * q`` is the map ``i -> p(q(i))`` (apply ``q``
first).  With this convention the right cosets ``Delta g`` of a right-acting
system such as GAP correspond exactly to our left cosets ``g Delta``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import count
from math import gcd

import numpy as np

DEFAULT_ORDER_CAP = 10_000
DEFAULT_SUBGROUP_SEARCH_CAP = 400


class PermutationError(ValueError):
    """Rejected input: degree mismatch, non-membership, bad arguments."""


class CapacityError(RuntimeError):
    """A computation would exceed a configured size cap."""


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of ``{0, ..., n-1}``; ``images[i]`` is the image of ``i``.

    Points are 0-based internally and 1-based in cycle notation.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if not images:
            raise PermutationError("permutation degree must be positive")
        if sorted(images) != list(range(len(images))):
            raise PermutationError(f"{images} is not a permutation")
        object.__setattr__(self, "images", images)

    @classmethod
    def _raw(cls, images):
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        return p

    @classmethod
    def identity(cls, degree):
        if degree < 1:
            raise PermutationError("permutation degree must be positive")
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles, degree=None):
        """Build from 1-based disjoint or overlapping cycles, applied left to right."""
        cycles = [tuple(c) for c in cycles]
        top = max((max(c) for c in cycles if c), default=1)
        degree = top if degree is None else degree
        if degree < top:
            raise PermutationError(f"degree {degree} is smaller than point {top}")
        images = list(range(degree))
        for cyc in cycles:
            if len(set(cyc)) != len(cyc):
                raise PermutationError(f"repeated point in cycle {cyc}")
            if any(x < 1 for x in cyc):
                raise PermutationError(f"cycle {cyc} has a non-positive point")
            step = list(range(degree))
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                step[a - 1] = b - 1
            # left-to-right: apply the earlier factor first
            images = [step[x] for x in images]
        return cls._raw(tuple(images))

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point]

    def __mul__(self, other):
        return compose(self, other)

    def __pow__(self, k):
        result = Permutation.identity(self.degree)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = result * base
        return result

    def inverse(self):
        return inverse(self)

    def is_identity(self):
        return all(i == x for i, x in enumerate(self.images))

    def order(self):
        return element_order(self)

    def cycles(self):
        """Nontrivial cycles, 1-based, each starting at its least point."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start + 1]
            seen.add(start)
            x = self.images[start]
            while x != start:
                seen.add(x)
                cyc.append(x + 1)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self):
        return f"Permutation({self})"


def _check_degrees(p, q):
    if p.degree != q.degree:
        raise PermutationError(f"degree mismatch: {p.degree} vs {q.degree}")


def compose(p, q):
    """Return ``p * q``: first apply ``q``, then ``p``."""
    _check_degrees(p, q)
    pi = p.images
    return Permutation._raw(tuple(pi[x] for x in q.images))


def inverse(p):
    inv = [0] * p.degree
    for i, x in enumerate(p.images):
        inv[x] = i
    return Permutation._raw(tuple(inv))


def element_order(p):
    """Least ``k >= 1`` with ``p**k`` the identity (lcm of cycle lengths)."""
    result = 1
    for cyc in p.cycles():
        result = result * len(cyc) // gcd(result, len(cyc))
    return result


class FiniteGroup:
    """A permutation group with its full element list.

    Elements are sorted lexicographically by image sequence; all positional
    indices (``index_of``, ``table``) refer to that order.
    """

    def __init__(self, degree, generators, elements):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(sorted(elements))
        self._index = {p: i for i, p in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise PermutationError("duplicate group elements")

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p):
        return p in self._index

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.degree == other.degree and self.elements == other.elements

    def __hash__(self):
        return hash((self.degree, self.elements))

    def __repr__(self):
        gens = ", ".join(map(str, self.generators)) or "()"
        return f"<FiniteGroup order={self.order} degree={self.degree} gens=[{gens}]>"

    @property
    def identity(self):
        return Permutation.identity(self.degree)

    def index_of(self, p):
        try:
            return self._index[p]
        except KeyError:
            raise PermutationError(f"{p} is not an element of the group") from None

    def indices_of(self, perms):
        return np.array(sorted(self.index_of(p) for p in perms), dtype=np.int64)

    @cached_property
    def array(self):
        return np.array([p.images for p in self.elements], dtype=np.int64)

    @cached_property
    def table(self):
        """``table[i, j]`` is the index of ``elements[i] * elements[j]``."""
        E = self.array
        n, d = E.shape
        T = np.empty((n, n), dtype=np.int32)
        if d ** d < 2 ** 62:
            weights = d ** np.arange(d - 1, -1, -1, dtype=np.int64)
            # lex order on images equals numeric order of these codes
            codes = E @ weights
            for i in range(n):
                T[i] = np.searchsorted(codes, E[i][E] @ weights)
        else:
            for i, p in enumerate(self.elements):
                for j, q in enumerate(self.elements):
                    T[i, j] = self._index[p * q]
        return T

    @cached_property
    def identity_index(self):
        return self._index[self.identity]

    @cached_property
    def inverse_indices(self):
        return np.array([self._index[inverse(p)] for p in self.elements], dtype=np.int64)

    @cached_property
    def element_orders(self):
        return np.array([element_order(p) for p in self.elements], dtype=np.int64)

    def is_abelian(self):
        return all(a * b == b * a for a in self.generators for b in self.generators)

    def subgroup_from_indices(self, indices, generators=None):
        """Wrap a closed set of element indices as a FiniteGroup."""
        indices = np.asarray(indices)
        elems = [self.elements[i] for i in indices]
        if generators is None:
            generators = elems
        return FiniteGroup(self.degree, generators, elems)

    def is_subgroup_of(self, other):
        return self.degree == other.degree and all(p in other for p in self.elements)


def generate_group(generators, order_cap=DEFAULT_ORDER_CAP, degree=None):
    """Enumerate the group generated by ``generators``.

    An empty generator list needs ``degree`` and yields the trivial group.
    """
    generators = list(generators)
    if order_cap < 1:
        raise PermutationError("order_cap must be positive")
    degrees = {p.degree for p in generators}
    if degree is not None:
        degrees.add(degree)
    if len(degrees) > 1:
        raise PermutationError(f"generators have mixed degrees {sorted(degrees)}")
    if not degrees:
        raise PermutationError("degree is required for an empty generator list")
    (n,) = degrees
    ident = Permutation.identity(n)
    seen = {ident}
    frontier = [ident]
    gens = [g.images for g in generators if not g.is_identity()]
    while frontier:
        nxt = []
        for x in frontier:
            xi = x.images
            for g in gens:
                y = Permutation._raw(tuple(xi[k] for k in g))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > order_cap:
                        raise CapacityError(
                            f"group closure exceeds order_cap={order_cap}")
        frontier = nxt
    return FiniteGroup(n, generators, seen)


def _closure(table, start, gens, limit=None):
    """Indices of the closure of ``start`` (containing identity) under right
    multiplication by ``gens``, or ``None`` once it grows past ``limit``."""
    mask = np.zeros(table.shape[0], dtype=bool)
    start = np.asarray(start, dtype=np.int64)
    mask[start] = True
    total = int(mask.sum())
    frontier = np.flatnonzero(mask)
    gens = np.asarray(gens, dtype=np.int64)
    while frontier.size:
        prod = np.unique(table[np.ix_(frontier, gens)].ravel())
        new = prod[~mask[prod]]
        if not new.size:
            break
        mask[new] = True
        total += new.size
        if limit is not None and total > limit:
            return None
        frontier = new
    return np.flatnonzero(mask)


def _double_coset_mask(table, h_idx, x):
    """Boolean mask of ``H x H`` for index array ``h_idx``."""
    mask = np.zeros(table.shape[0], dtype=bool)
    left = table[h_idx, x]
    mask[table[np.ix_(left, h_idx)].ravel()] = True
    return mask


def center(g):
    gens = list(g.generators)
    elems = [z for z in g.elements if all(z * s == s * z for s in gens)]
    return FiniteGroup(g.degree, elems, elems)


def central_involutions(g):
    """Central elements of order exactly 2, in element order."""
    return [z for z in center(g).elements if element_order(z) == 2]


def _cyclic_indices(g, x):
    T = g.table
    out = [g.identity_index]
    y = x
    while y != g.identity_index:
        out.append(y)
        y = int(T[y, x])
    return np.array(sorted(out), dtype=np.int64)


def subgroups_of_order(g, m, exclude=None, subgroup_search_cap=DEFAULT_SUBGROUP_SEARCH_CAP):
    """All subgroups of order ``m`` not containing ``exclude``.

    Bottom-up: start from cyclic subgroups of order dividing ``m`` and extend
    by single elements while the closure order still divides ``m``.  Every
    subgroup of order ``m`` arises along some chain of such extensions, so the
    search is complete.  A subgroup containing ``exclude`` only extends to
    subgroups that also contain it, so such branches are pruned.
    """
    if m < 1 or g.order % m:
        raise PermutationError(f"{m} does not divide the group order {g.order}")
    if g.order > subgroup_search_cap:
        raise CapacityError(
            f"group order {g.order} exceeds subgroup_search_cap={subgroup_search_cap}; "
            "supply Delta generators explicitly or raise the cap")
    if exclude is not None:
        if exclude not in g:
            raise PermutationError(f"{exclude} is not an element of the group")
        if exclude.is_identity():
            return []
    bad = None if exclude is None else g.index_of(exclude)
    T = g.table
    orders = g.element_orders
    e = g.identity_index
    candidates = [int(x) for x in np.flatnonzero(m % orders == 0)
                  if x != e and x != bad]

    found = {}
    frontier = {}
    trivial = np.array([e], dtype=np.int64)
    found[trivial.tobytes()] = (trivial, ())
    for x in candidates:
        idx = _cyclic_indices(g, x)
        key = idx.tobytes()
        if bad is not None and bad in idx:
            continue
        if key not in found:
            found[key] = (idx, (x,))
            frontier[key] = found[key]

    while frontier:
        nxt = {}
        for key in sorted(frontier):
            h_idx, gens = frontier[key]
            if h_idx.size == m:
                continue
            visited = np.zeros(g.order, dtype=bool)
            visited[h_idx] = True
            for x in candidates:
                if visited[x]:
                    continue
                visited |= _double_coset_mask(T, h_idx, x)
                k_idx = _closure(T, h_idx, list(gens) + [x], limit=m)
                if k_idx is None or m % k_idx.size:
                    continue
                if bad is not None and bad in k_idx:
                    continue
                kkey = k_idx.tobytes()
                if kkey not in found:
                    found[kkey] = (k_idx, gens + (x,))
                    nxt[kkey] = found[kkey]
        frontier = nxt

    hits = sorted((tuple(idx), gens) for idx, gens in found.values() if idx.size == m)
    return [g.subgroup_from_indices(idx, [g.elements[i] for i in gens])
            for idx, gens in hits]


def join_subgroup(g, a, h):
    """Smallest subgroup of ``g`` containing ``a`` and ``h``."""
    if a not in g:
        raise PermutationError(f"{a} is not an element of the group")
    if not h.is_subgroup_of(g):
        raise PermutationError("h is not a subgroup of g")
    gens = [a] + [s for s in h.generators if not s.is_identity()]
    idx = _closure(g.table, [g.identity_index], [g.index_of(s) for s in gens])
    return g.subgroup_from_indices(idx, gens)


def overgroups(g, h):
    """All subgroups ``k`` with ``h <= k <= g``, including both ends."""
    if not h.is_subgroup_of(g):
        raise PermutationError("h is not a subgroup of g")
    T = g.table
    h_idx = g.indices_of(h.elements)
    h_gens = tuple(g.index_of(s) for s in h.generators)
    found = {h_idx.tobytes(): (h_idx, h_gens)}
    frontier = [found[h_idx.tobytes()]]
    while frontier:
        nxt = []
        for k_idx, gens in frontier:
            visited = np.zeros(g.order, dtype=bool)
            visited[k_idx] = True
            for x in range(g.order):
                if visited[x]:
                    continue
                visited |= _double_coset_mask(T, k_idx, x)
                new = _closure(T, k_idx, list(gens) + [x])
                key = new.tobytes()
                if key not in found:
                    found[key] = (new, gens + (x,))
                    nxt.append(found[key])
        frontier = nxt
    hits = sorted((tuple(idx), gens) for idx, gens in found.values())
    return [g.subgroup_from_indices(idx, [g.elements[i] for i in gens])
            for idx, gens in hits]


@dataclass(frozen=True, eq=False)
class CosetSpace:
    """Left cosets ``x H`` of ``subgroup`` in ``parent``.

    ``coset_of[i]`` is the coset id of parent element ``i``; cosets are
    numbered in increasing order of their least element, which is also the
    stored representative.
    """

    parent: FiniteGroup
    subgroup: FiniteGroup
    representatives: tuple
    members: tuple
    coset_of: np.ndarray

    @property
    def index(self):
        return len(self.representatives)

    def __len__(self):
        return self.index

    def coset(self, i):
        return [self.parent.elements[j] for j in self.members[i]]

    def coset_id(self, p):
        return int(self.coset_of[self.parent.index_of(p)])

    def left_action(self, sigma):
        """Coset permutation ``x H -> sigma x H`` as a tuple of ids."""
        s = self.parent.index_of(sigma)
        T = self.parent.table
        reps = np.array([m[0] for m in self.members], dtype=np.int64)
        return tuple(int(c) for c in self.coset_of[T[s, reps]])

    def right_action(self, tau):
        """Coset permutation ``x H -> x H tau``; raises if not well defined."""
        t = self.parent.index_of(tau)
        T = self.parent.table
        out = []
        for i, mem in enumerate(self.members):
            targets = np.unique(self.coset_of[T[np.asarray(mem), t]])
            if targets.size != 1:
                raise PermutationError(
                    f"right multiplication by {tau} is not well defined on coset {i}")
            out.append(int(targets[0]))
        return tuple(out)


def left_cosets(g, h):
    if not h.is_subgroup_of(g):
        raise PermutationError("h is not a subgroup of g")
    T = g.table
    h_idx = g.indices_of(h.elements)
    coset_of = np.full(g.order, -1, dtype=np.int64)
    reps, members = [], []
    cid = count()
    for x in range(g.order):
        if coset_of[x] >= 0:
            continue
        mem = np.sort(T[x, h_idx]).astype(np.int64)
        coset_of[mem] = next(cid)
        reps.append(g.elements[x])
        members.append(tuple(int(i) for i in mem))
    return CosetSpace(g, h, tuple(reps), tuple(members), coset_of)


def permutation_cycles(perm):
    """Cycles of a permutation given as a tuple, each from its least point."""
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = perm[x]
        out.append(tuple(cyc))
    return out


def orbit_count(space, action, actor):
    """Number of orbits of ``<actor>`` on the cosets.

    ``action`` is ``"left"`` (``x H -> actor x H``) or ``"right"``
    (``x H -> x H actor``, checked for well-definedness).
    """
    if action == "left":
        perm = space.left_action(actor)
    elif action == "right":
        perm = space.right_action(actor)
    else:
        raise PermutationError(f"unknown action {action!r}")
    return len(permutation_cycles(perm))


def double_cosets(g, left, right):
    """Explicit partition of ``g`` into double cosets ``left x right``."""
    L = [g.index_of(p) for p in left.elements]
    R = [g.index_of(p) for p in right.elements]
    T = g.table
    assigned = np.zeros(g.order, dtype=bool)
    parts = []
    for x in range(g.order):
        if assigned[x]:
            continue
        block = set()
        for a in L:
            ax = T[a, x]
            for b in R:
                block.add(int(T[ax, b]))
        assigned[list(block)] = True
        parts.append(frozenset(block))
    return parts
