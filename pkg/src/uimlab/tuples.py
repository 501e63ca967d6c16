"""Tuples over a finite alphabet, dense encodings, index maps, the
pair-collapsing maps behind identification minors, and the string functions
``ofo`` (order of first occurrence) and ``supp`` (support).

Symbols and positions are 0-based internally; the rendering helpers produce
the 1-based form used in human-facing output, so e.g. internal ``(0, 0, 1)``
prints as ``(1,1,2)``.
"""

from dataclasses import dataclass
from itertools import permutations as _perms
from itertools import product as _product

__all__ = [
    "Alphabet",
    "IndexMap",
    "IndexPair",
    "Permutation",
    "all_tuples",
    "apply_index_map",
    "collapse_map",
    "decode",
    "encode",
    "enumerate_repeat_free",
    "has_repeat",
    "ofo",
    "parse_tuple",
    "render_tuple",
    "supp",
]


@dataclass(frozen=True)
class Alphabet:
    """A finite alphabet of ``size`` symbols, represented as ``range(size)``."""

    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError(f"alphabet size must be >= 1, got {self.size}")

    @property
    def symbols(self) -> range:
        return range(self.size)


def _size(alphabet) -> int:
    # Alphabet or a bare integer size, interchangeably.
    k = alphabet.size if isinstance(alphabet, Alphabet) else int(alphabet)
    if k < 1:
        raise ValueError(f"alphabet size must be >= 1, got {k}")
    return k


@dataclass(frozen=True)
class IndexMap:
    """A map from positions ``0..source-1`` to positions ``0..target-1``.

    Tuples are pulled back along it (see :func:`apply_index_map`): a tuple of
    length ``target`` yields one of length ``source``.
    """

    source: int
    target: int
    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if self.source < 0 or self.target < 0:
            raise ValueError("arities must be nonnegative")
        if len(self.images) != self.source:
            raise ValueError(
                f"expected {self.source} images, got {len(self.images)}"
            )
        for v in self.images:
            if not 0 <= v < self.target:
                raise ValueError(f"image {v} out of range 0..{self.target - 1}")

    def after(self, inner: "IndexMap") -> "IndexMap":
        """Function composition ``self ∘ inner``."""
        if inner.target != self.source:
            raise ValueError(
                f"cannot compose: inner target {inner.target} != source {self.source}"
            )
        return IndexMap(
            inner.source, self.target, tuple(self.images[v] for v in inner.images)
        )


@dataclass(frozen=True)
class Permutation:
    """A bijection on positions ``0..degree-1``, in one-line notation.

    >>> Permutation((1, 2, 0)).one_line()
    '[2,3,1]'
    """

    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation in one-line notation: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    # IndexMap-shaped aliases so apply_index_map accepts either type.
    @property
    def source(self) -> int:
        return len(self.images)

    @property
    def target(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def rotation(cls, n: int, offset: int) -> "Permutation":
        """The cyclic shift sending position ``j`` to ``(j + offset) mod n``."""
        return cls(tuple((j + offset) % n for j in range(n)))

    @classmethod
    def all_perms(cls, n: int):
        """All degree-``n`` permutations in lexicographic one-line order."""
        for im in _perms(range(n)):
            yield cls(im)

    def inverse(self) -> "Permutation":
        out = [0] * len(self.images)
        for i, v in enumerate(self.images):
            out[v] = i
        return Permutation(tuple(out))

    def after(self, inner: "Permutation") -> "Permutation":
        """Composition ``self ∘ inner`` (apply ``inner`` first)."""
        if inner.degree != self.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[v] for v in inner.images))

    def as_index_map(self) -> IndexMap:
        return IndexMap(self.degree, self.degree, self.images)

    def pair_image(self, pair: "IndexPair") -> "IndexPair":
        """The unordered image ``{self(lo), self(hi)}`` of a pair of positions."""
        a, b = self.images[pair.lo], self.images[pair.hi]
        return IndexPair(min(a, b), max(a, b))

    def one_line(self) -> str:
        """1-based one-line rendering, e.g. ``[2,3,1]``."""
        return "[" + ",".join(str(v + 1) for v in self.images) + "]"


@dataclass(frozen=True)
class IndexPair:
    """An unordered pair of distinct positions, stored with ``lo < hi``."""

    lo: int
    hi: int

    def __post_init__(self):
        if not 0 <= self.lo < self.hi:
            raise ValueError(f"need 0 <= lo < hi, got ({self.lo}, {self.hi})")

    @classmethod
    def all_pairs(cls, n: int):
        """All pairs of positions below ``n``, lexicographically."""
        for lo in range(n - 1):
            for hi in range(lo + 1, n):
                yield cls(lo, hi)

    @classmethod
    def parse(cls, text: str) -> "IndexPair":
        """Parse a 1-based pair like ``2,4`` or ``{2,4}``."""
        parts = text.strip().strip("{}()").split(",")
        if len(parts) != 2:
            raise ValueError(f"expected two comma-separated positions, got {text!r}")
        a, b = (int(p) - 1 for p in parts)
        if a == b:
            raise ValueError(f"positions must be distinct, got {text!r}")
        return cls(min(a, b), max(a, b))

    def render(self) -> str:
        """1-based rendering, e.g. ``{2,4}``."""
        return "{%d,%d}" % (self.lo + 1, self.hi + 1)


def encode(t, alphabet) -> int:
    """Dense index of ``t``: big-endian base ``k``, first coordinate most
    significant, so lexicographic tuple order equals index order.

    >>> encode((1, 0), 2)
    2
    """
    k = _size(alphabet)
    index = 0
    for x in t:
        if not 0 <= x < k:
            raise ValueError(f"symbol {x} out of range for alphabet of size {k}")
        index = index * k + x
    return index


def decode(index: int, arity: int, alphabet):
    """Inverse of :func:`encode` for fixed arity and alphabet."""
    k = _size(alphabet)
    if not 0 <= index < k**arity:
        raise ValueError(f"index {index} out of range for {arity} symbols over {k}")
    out = [0] * arity
    for pos in range(arity - 1, -1, -1):
        index, out[pos] = divmod(index, k)
    return tuple(out)


def all_tuples(alphabet, arity: int):
    """Iterate the full tuple space in encode-index order."""
    return _product(range(_size(alphabet)), repeat=arity)


def apply_index_map(t, m):
    """Pull ``t`` back along ``m``: component ``j`` of the result is
    ``t[m.images[j]]``.  Accepts an :class:`IndexMap` or a :class:`Permutation`.

    >>> apply_index_map((7, 8), IndexMap(3, 2, (0, 1, 1)))
    (7, 8, 8)
    """
    if len(t) != m.target:
        raise ValueError(f"tuple length {len(t)} != map target arity {m.target}")
    return tuple(t[j] for j in m.images)


def collapse_map(pair: IndexPair, n: int) -> IndexMap:
    """The surjection from ``n`` positions to ``n - 1`` that sends ``pair.hi``
    onto ``pair.lo`` and shifts the higher positions down by one.

    Pulling an ``(n-1)``-tuple back along it inserts a duplicate of its
    ``pair.lo`` entry at position ``pair.hi``; the only two-element fiber is
    the one over ``pair.lo``, namely ``{pair.lo, pair.hi}``.
    """
    if n < 2:
        raise ValueError(f"need arity >= 2, got {n}")
    if pair.hi >= n:
        raise ValueError(f"pair {pair.render()} out of range for arity {n}")
    images = tuple(
        l if l < pair.hi else (pair.lo if l == pair.hi else l - 1) for l in range(n)
    )
    return IndexMap(n, n - 1, images)


def ofo(t):
    """The subsequence keeping only the first occurrence of each element.

    Works on any iterable of hashable symbols; always returns a tuple.

    >>> "".join(ofo("balloon"))
    'balon'
    """
    seen = set()
    out = []
    for x in t:
        if x not in seen:
            seen.add(x)
            out.append(x)
    return tuple(out)


def supp(t) -> frozenset:
    """The set of elements occurring in ``t``; undefined on the empty tuple."""
    fs = frozenset(t)
    if not fs:
        raise ValueError("supp is undefined on the empty tuple")
    return fs


def has_repeat(t) -> bool:
    return len(set(t)) < len(t)


def enumerate_repeat_free(alphabet, max_len: int):
    """All repeat-free tuples of length ``0..min(max_len, k)``, each exactly
    once, shortest first and lexicographic within each length."""
    k = _size(alphabet)
    out = []
    for length in range(min(max_len, k) + 1):
        out.extend(_perms(range(k), length))
    return out


def render_tuple(t) -> str:
    """1-based display form: internal ``(0,0,1,2,3)`` prints as ``(1,1,2,3,4)``."""
    return "(" + ",".join(str(x + 1) for x in t) + ")"


def parse_tuple(text: str, alphabet):
    """Parse a 1-based rendering like ``(1,1,2)`` back to internal symbols."""
    k = _size(alphabet)
    body = text.strip().strip("()")
    if not body:
        return ()
    out = []
    for part in body.split(","):
        x = int(part) - 1
        if not 0 <= x < k:
            raise ValueError(f"symbol {part.strip()} out of 1..{k}")
        out.append(x)
    return tuple(out)
