"""Circular words over the alphabet {F, V}.

A class is stored as its lexicographically least rotation with ``F < V``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

ALPHABET = "FV"


class WordError(ValueError):
    pass


def least_rotation(s):
    """Start index of the least rotation of ``s`` (Booth's algorithm, O(n))."""
    n = len(s)
    ss = s + s
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        c = ss[j]
        i = fail[j - k - 1]
        while i != -1 and c != ss[k + i + 1]:
            if c < ss[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if c != ss[k + i + 1]:
            if c < ss[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k


def naive_canonical(s):
    """Minimum over all rotations; O(n^2) reference for tests."""
    return min(s[i:] + s[:i] for i in range(len(s)))


def _clean(raw):
    if isinstance(raw, CircularWordClass):
        return raw.letters
    text = "".join(raw).strip()
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1].strip()
    if not text:
        raise WordError("empty word")
    bad = set(text) - set(ALPHABET)
    if bad:
        raise WordError(f"word {raw!r} contains symbols other than F, V: {sorted(bad)}")
    return text


@dataclass(frozen=True, order=True)
class CircularWordClass:
    letters: str

    @property
    def length(self):
        return len(self.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return f"[{self.letters}]"

    def __repr__(self):
        return f"CircularWordClass({self.letters!r})"


def canonicalize(raw):
    """Class of ``raw``: a string like ``"VF"`` or ``"[FFVV]"``, or a letter sequence."""
    s = _clean(raw)
    k = least_rotation(s)
    return CircularWordClass(s[k:] + s[:k])


def dual(w):
    swapped = w.letters.translate(str.maketrans("FV", "VF"))
    return canonicalize(swapped)


def reverse(w):
    return canonicalize(w.letters[::-1])


def primitive_root(w):
    """``(root, mu)`` with ``w = [root^mu]`` and ``root`` aperiodic."""
    s = w.letters
    t = len(s)
    for d in range(1, t + 1):
        if t % d == 0 and s[d:] + s[:d] == s:
            return canonicalize(s[:d]), t // d
    raise AssertionError("unreachable")


def is_indecomposable(w):
    return primitive_root(w)[1] == 1


def c_number(w):
    """Count of cyclic positions where F is followed by V."""
    s = w.letters
    return sum(1 for i in range(len(s)) if s[i] == "F" and s[(i + 1) % len(s)] == "V")


F_CLASS = CircularWordClass("F")
V_CLASS = CircularWordClass("V")


@dataclass(frozen=True)
class WordMultiset:
    """Multiset of word classes; ``entries`` is sorted by (length, letters)."""

    entries: tuple

    @classmethod
    def from_words(cls, words):
        counts = Counter(canonicalize(w) for w in words)
        return cls.from_counts(counts)

    @classmethod
    def from_counts(cls, counts):
        items = [(w, int(m)) for w, m in counts.items() if m]
        if any(m < 0 for _, m in items):
            raise WordError("negative multiplicity")
        items.sort(key=lambda e: (e[0].length, e[0].letters))
        return cls(tuple(items))

    @classmethod
    def parse(cls, text):
        """Parse ``"[F], [V], [FV]"`` (brackets optional, comma separated)."""
        parts = [p for p in text.replace(" ", "").split(",") if p]
        return cls.from_words(parts)

    def counts(self):
        return Counter(dict(self.entries))

    def words(self):
        out = []
        for w, m in self.entries:
            out.extend([w] * m)
        return out

    @property
    def total_length(self):
        return sum(w.length * m for w, m in self.entries)

    def __len__(self):
        return sum(m for _, m in self.entries)

    def multiplicity(self, w):
        return dict(self.entries).get(canonicalize(w), 0)

    def dual(self):
        return WordMultiset.from_counts(Counter({dual(w): m for w, m in self.entries}))

    def is_self_dual(self):
        return self.dual() == self

    def factored(self):
        """Replace each ``[u^mu]`` by ``mu`` copies of ``[u]``."""
        counts = Counter()
        for w, m in self.entries:
            root, mu = primitive_root(w)
            counts[root] += m * mu
        return WordMultiset.from_counts(counts)

    def text(self):
        return ", ".join(str(w) for w in self.words())

    def __str__(self):
        return self.text()


def multiset_invariants(m):
    """``(f, a)``: p-rank as multiplicity of ``[F]``, a-number as sum of c-numbers."""
    for w, _ in m.entries:
        if not is_indecomposable(w):
            raise WordError(f"{w} is decomposable; factor the multiset first")
    f = m.multiplicity(F_CLASS)
    a = sum(mult * c_number(w) for w, mult in m.entries)
    return f, a


def lyndon_words(n):
    """Lyndon words of length exactly ``n`` over F < V, in lex order (Duval)."""
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == n:
            yield "".join(ALPHABET[i] for i in w)
        while len(w) < n:
            w.append(w[-m])
        while w and w[-1] == len(ALPHABET) - 1:
            w.pop()


def enumerate_indecomposable_classes(n):
    """All aperiodic classes of length ``n``, sorted."""
    if n < 1:
        raise WordError("length must be positive")
    # the least rotation of an aperiodic word is exactly a Lyndon word
    return [CircularWordClass(s) for s in lyndon_words(n)]


def pair_quasi_polarized(m):
    """Split a self-dual multiset of indecomposable classes into pieces.

    Each piece is ``(w,)`` for a self-dual class or ``(u, dual(u))`` with
    ``u < dual(u)``.
    """
    counts = m.counts()
    for w in counts:
        if not is_indecomposable(w):
            raise WordError(f"{w} is decomposable; factor the multiset first")
    pieces = []
    for w in sorted(counts, key=lambda x: (x.length, x.letters)):
        k = counts[w]
        if not k:
            continue
        d = dual(w)
        if d == w:
            pieces.extend([(w,)] * k)
            counts[w] = 0
            continue
        if counts.get(d, 0) != k:
            raise WordError(
                f"multiset is not self-dual: {w} has multiplicity {k} "
                f"but its dual {d} has {counts.get(d, 0)}")
        pair = (w, d) if w < d else (d, w)
        pieces.extend([pair] * k)
        counts[w] = counts[d] = 0
    return pieces
