"""Factoring tables through the first-occurrence map (``ofo``) and through the
support map (``supp``), deciding equivalence to such factorizations, and the
anchored equivalences between identification minors.

A table is *ofo-determined* when its value depends only on the order of first
occurrence of its input's symbols, i.e. it is constant on every ofo fiber; it
is *supp-determined* when the value depends only on the set of symbols.
"""

from dataclasses import dataclass, field
from itertools import combinations, permutations

from .ftable import FunctionTable, PartialFunctionTable, TableFormatError
from .tuples import (
    IndexPair,
    Permutation,
    all_tuples,
    collapse_map,
    enumerate_repeat_free,
    ofo,
    render_tuple,
)

__all__ = [
    "OfoTable",
    "SuppTable",
    "anchored_minor_equivalence",
    "compose_ofo",
    "compose_supp",
    "equiv_to_ofo_determined",
    "ofo_decompose",
    "ofo_table_from_json_obj",
    "ofo_table_to_json_obj",
    "supp_decompose",
    "supp_table_from_json_obj",
    "supp_table_to_json_obj",
]


def _ofo_domain(domain_size: int, max_len: int):
    """Repeat-free tuples of length 1..max_len, shortest first then lex."""
    return [t for t in enumerate_repeat_free(domain_size, max_len) if t]


def _supp_domain(domain_size: int, max_size: int):
    """Nonempty symbol subsets of size <= max_size, smallest first then lex."""
    out = []
    for size in range(1, min(max_size, domain_size) + 1):
        out.extend(frozenset(c) for c in combinations(range(domain_size), size))
    return out


@dataclass
class OfoTable:
    """A value for every repeat-free tuple of length ``1..max_len``.

    ``unconstrained`` lists the keys whose fiber missed the decomposed table's
    domain; they carry the canonical filler 0 and are excluded from equality.
    """

    domain_size: int
    codomain_size: int
    max_len: int
    entries: dict
    unconstrained: frozenset = field(default_factory=frozenset, compare=False)

    def __post_init__(self):
        if not 1 <= self.max_len <= self.domain_size:
            raise ValueError(
                f"max_len must be in 1..{self.domain_size}, got {self.max_len}"
            )
        expected = set(_ofo_domain(self.domain_size, self.max_len))
        if set(self.entries) != expected:
            raise ValueError("entries must cover exactly the repeat-free tuples")
        for key, v in self.entries.items():
            if not 0 <= v < self.codomain_size:
                raise ValueError(f"entry for {render_tuple(key)} out of range: {v}")

    def __call__(self, r):
        return self.entries[tuple(r)]

    @classmethod
    def from_values(cls, domain_size, codomain_size, max_len, values):
        """Build from values listed in canonical key order."""
        keys = _ofo_domain(domain_size, max_len)
        if len(values) != len(keys):
            raise ValueError(f"expected {len(keys)} values, got {len(values)}")
        return cls(domain_size, codomain_size, max_len, dict(zip(keys, values)))


@dataclass
class SuppTable:
    """A value for every nonempty symbol set of size ``1..max_size``."""

    domain_size: int
    codomain_size: int
    max_size: int
    entries: dict
    unconstrained: frozenset = field(default_factory=frozenset, compare=False)

    def __post_init__(self):
        if not 1 <= self.max_size <= self.domain_size:
            raise ValueError(
                f"max_size must be in 1..{self.domain_size}, got {self.max_size}"
            )
        expected = set(_supp_domain(self.domain_size, self.max_size))
        if set(self.entries) != expected:
            raise ValueError("entries must cover exactly the nonempty symbol sets")
        for key, v in self.entries.items():
            if not 0 <= v < self.codomain_size:
                raise ValueError(f"entry for {set(key)} out of range: {v}")

    def __call__(self, s):
        return self.entries[frozenset(s)]

    @classmethod
    def from_values(cls, domain_size, codomain_size, max_size, values):
        keys = _supp_domain(domain_size, max_size)
        if len(values) != len(keys):
            raise ValueError(f"expected {len(keys)} values, got {len(values)}")
        return cls(domain_size, codomain_size, max_size, dict(zip(keys, values)))

    @classmethod
    def constant(cls, domain_size, codomain_size, max_size, value):
        keys = _supp_domain(domain_size, max_size)
        return cls(domain_size, codomain_size, max_size, {s: value for s in keys})


def compose_ofo(f_star: OfoTable, arity: int) -> FunctionTable:
    """The arity-``arity`` table sending ``t`` to ``f_star(ofo(t))``."""
    if arity < 1:
        raise ValueError(f"arity must be >= 1, got {arity}")
    k = f_star.domain_size
    if f_star.max_len < min(arity, k):
        raise ValueError(
            f"ofo table covers lengths up to {f_star.max_len}, need {min(arity, k)}"
        )
    entries = f_star.entries
    vals = tuple(entries[ofo(t)] for t in all_tuples(k, arity))
    return FunctionTable(k, f_star.codomain_size, arity, vals)


def compose_supp(f_prime: SuppTable, arity: int) -> FunctionTable:
    """The arity-``arity`` table sending ``t`` to ``f_prime(supp(t))``."""
    if arity < 1:
        raise ValueError(f"arity must be >= 1, got {arity}")
    k = f_prime.domain_size
    if f_prime.max_size < min(arity, k):
        raise ValueError(
            f"supp table covers sizes up to {f_prime.max_size}, need {min(arity, k)}"
        )
    entries = f_prime.entries
    vals = tuple(entries[frozenset(t)] for t in all_tuples(k, arity))
    return FunctionTable(k, f_prime.codomain_size, arity, vals)


def ofo_decompose(f):
    """Factor ``f`` through ``ofo`` if possible.

    Returns an :class:`OfoTable` ``f_star`` with ``f == f_star ∘ ofo`` on the
    domain of ``f`` iff ``f`` is constant on every ofo fiber that meets its
    domain, else ``None``.  Keys whose fiber misses the domain get value 0 and
    are flagged unconstrained.  Accepts total and partial tables.
    """
    k, b, n = f.domain_size, f.codomain_size, f.arity
    seen = {}
    for t, v in zip(all_tuples(k, n), f.values):
        if v is None:
            continue
        key = ofo(t)
        if seen.setdefault(key, v) != v:
            return None
    max_len = min(n, k)
    entries = {}
    free = []
    for r in _ofo_domain(k, max_len):
        if r in seen:
            entries[r] = seen[r]
        else:
            entries[r] = 0
            free.append(r)
    return OfoTable(k, b, max_len, entries, frozenset(free))


def supp_decompose(f):
    """Factor ``f`` through ``supp`` if possible (same contract as
    :func:`ofo_decompose`, with symbol sets for keys)."""
    k, b, n = f.domain_size, f.codomain_size, f.arity
    seen = {}
    for t, v in zip(all_tuples(k, n), f.values):
        if v is None:
            continue
        key = frozenset(t)
        if seen.setdefault(key, v) != v:
            return None
    max_size = min(n, k)
    entries = {}
    free = []
    for s in _supp_domain(k, max_size):
        if s in seen:
            entries[s] = seen[s]
        else:
            entries[s] = 0
            free.append(s)
    return SuppTable(k, b, max_size, entries, frozenset(free))


def equiv_to_ofo_determined(f):
    """Search argument permutations for an ofo-determined table equivalent to
    ``f``.

    Returns the lexicographically least ``(sigma, f_star)`` such that ``f``
    equals ``compose_ofo(f_star, n)`` precomposed with the pullback of
    ``sigma``, or ``None``.  For a partial ``f`` the witness table is partial
    on the transported domain.
    """
    n, k, b = f.arity, f.domain_size, f.codomain_size
    partial = isinstance(f, PartialFunctionTable)
    domain = list(all_tuples(k, n))
    for sig in permutations(range(n)):
        inv = [0] * n
        for i, v in enumerate(sig):
            inv[v] = i
        vals = []
        for u in domain:
            idx = 0
            for j in inv:
                idx = idx * k + u[j]
            vals.append(f.values[idx])
        table_cls = PartialFunctionTable if partial else FunctionTable
        f_star = ofo_decompose(table_cls(k, b, n, tuple(vals)))
        if f_star is not None:
            return Permutation(sig), f_star
    return None


def anchored_minor_equivalence(f, pair_i: IndexPair, pair_j: IndexPair):
    """Equivalence witness between two identification minors that keeps the
    merged positions aligned.

    Searches bijections ``pi`` of the collapsed positions constrained by
    ``pi(pair_j.lo) == pair_i.lo`` and returns the lexicographically least one
    with ``f`` at ``a`` collapsed along ``pair_i`` equal to ``f`` at ``a``
    permuted by ``pi`` and collapsed along ``pair_j``, for every ``a``; or
    ``None``.
    """
    n, k = f.arity, f.domain_size
    if n < 2:
        raise ValueError("needs arity >= 2")
    d_i = collapse_map(pair_i, n)
    d_j = collapse_map(pair_j, n)
    values = f.values
    domain = list(all_tuples(k, n - 1))
    lhs = []
    for a in domain:
        idx = 0
        for j in d_i.images:
            idx = idx * k + a[j]
        lhs.append(values[idx])
    positions = [p for p in range(n - 1) if p != pair_j.lo]
    candidates = [v for v in range(n - 1) if v != pair_i.lo]
    for combo in permutations(candidates):
        im = [0] * (n - 1)
        im[pair_j.lo] = pair_i.lo
        for p, v in zip(positions, combo):
            im[p] = v
        composite = [im[x] for x in d_j.images]
        for a, lv in zip(domain, lhs):
            idx = 0
            for j in composite:
                idx = idx * k + a[j]
            if values[idx] != lv:
                break
        else:
            return Permutation(tuple(im))
    return None


# ---------------------------------------------------------------------------
# JSON forms (keys are comma-joined 0-based symbols, matching the table files)

def ofo_table_to_json_obj(t: OfoTable) -> dict:
    return {
        "kind": "ofo_table",
        "domain_size": t.domain_size,
        "codomain_size": t.codomain_size,
        "max_len": t.max_len,
        "entries": {",".join(map(str, key)): v for key, v in t.entries.items()},
        "unconstrained": sorted(
            ",".join(map(str, key)) for key in t.unconstrained
        ),
    }


def ofo_table_from_json_obj(obj) -> OfoTable:
    try:
        entries = {
            tuple(int(p) for p in key.split(",")): v
            for key, v in obj["entries"].items()
        }
        free = frozenset(
            tuple(int(p) for p in key.split(","))
            for key in obj.get("unconstrained", [])
        )
        return OfoTable(
            obj["domain_size"], obj["codomain_size"], obj["max_len"], entries, free
        )
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise TableFormatError(f"bad ofo table object: {exc}") from exc


def supp_table_to_json_obj(t: SuppTable) -> dict:
    return {
        "kind": "supp_table",
        "domain_size": t.domain_size,
        "codomain_size": t.codomain_size,
        "max_size": t.max_size,
        "entries": {",".join(map(str, sorted(key))): v for key, v in t.entries.items()},
    }


def supp_table_from_json_obj(obj) -> SuppTable:
    try:
        entries = {
            frozenset(int(p) for p in key.split(",")): v
            for key, v in obj["entries"].items()
        }
        return SuppTable(
            obj["domain_size"], obj["codomain_size"], obj["max_size"], entries
        )
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise TableFormatError(f"bad supp table object: {exc}") from exc
