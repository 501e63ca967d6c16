"""Whole-table classification and the search harness.

Classification answers, for one table: does it have a unique identification
minor (all pair-collapsing minors equivalent), is it totally symmetric,
2-set-transitive, ofo-/supp-determined, equivalent to an ofo-determined
table, and what is its invariance group order.  Tables fall into one of four
categories: ``2ST`` (2-set-transitive), ``OFO-EQ`` (equivalent to an
ofo-determined table but not 2ST), ``OTHER`` (unique identification minor
through neither route), and ``NOT-UIM``.

The search harness classifies a complete table space (or a seeded sample of
one) and reports category counts plus every OTHER witness verbatim.  OTHER
witnesses of arity above domain_size + 1 are flagged prominently: no such
table is expected to exist, and finding one would be the interesting outcome,
not an error.  Reports are deterministic given (parameters, seed); the
fingerprint hashes everything except wall-clock timing.
"""

import hashlib
import math
import os
import random
import time
from collections import Counter
from dataclasses import dataclass, field, replace
from itertools import permutations, product
from multiprocessing import get_context

from . import construct, decomp, ftable, symmetry
from .ftable import FunctionTable, canonical_dumps
from .tuples import (
    IndexPair,
    Permutation,
    all_tuples,
    apply_index_map,
    collapse_map,
    ofo,
    render_tuple,
)

__all__ = [
    "CATEGORIES",
    "Classification",
    "EXHAUSTIVE_GUARD",
    "RestrictionSummary",
    "SearchReport",
    "SuiteReport",
    "TableClassifier",
    "classify",
    "has_uim",
    "sample_index",
    "search",
    "suite_names",
    "verify_suite",
]

CATEGORIES = ("2ST", "OFO-EQ", "OTHER", "NOT-UIM")

# Largest table space an exhaustive run will enumerate.
EXHAUSTIVE_GUARD = 1 << 24

# Largest single table (k**n entries) the harness will materialize.
TABLE_SIZE_GUARD = 1 << 20


@dataclass(frozen=True)
class RestrictionSummary:
    """The same tests run on the table restricted to its repeat tuples."""

    ofo_determined: bool
    equiv_ofo_determined: bool
    two_set_transitive: bool
    two_set_transitive_degenerate: bool
    inv_group_order: int


@dataclass(frozen=True)
class Classification:
    has_uim: bool
    totally_symmetric: bool
    two_set_transitive: bool
    two_set_transitive_degenerate: bool
    ofo_determined: bool
    equiv_ofo_determined: bool
    supp_determined: bool
    inv_group_order: int
    category: str
    restriction: RestrictionSummary | None = None


def _categorize(uim: bool, two_set_transitive: bool, equiv_ofo: bool) -> str:
    if not uim:
        return "NOT-UIM"
    if two_set_transitive:
        return "2ST"
    if equiv_ofo:
        return "OFO-EQ"
    return "OTHER"


class TableClassifier:
    """Precomputed index machinery for classifying every table of one shape.

    Value vectors are handled as ``bytes`` (when the codomain fits) so a sweep
    over b**(k**n) tables stays cheap; canonical minor forms and fiber
    constancy results are memoized across the sweep.
    """

    def __init__(self, domain_size: int, codomain_size: int, arity: int):
        if arity < 2:
            raise ValueError("classification needs arity >= 2")
        k, b, n = domain_size, codomain_size, arity
        self.domain_size, self.codomain_size, self.arity = k, b, n
        self.size = k**n
        if self.size > TABLE_SIZE_GUARD:
            raise ValueError(f"table size {self.size} exceeds guard {TABLE_SIZE_GUARD}")
        self.pack = bytes if b <= 256 else tuple

        domain = list(all_tuples(k, n))
        sub_domain = list(all_tuples(k, n - 1))

        self.perms = list(permutations(range(n)))
        self.perm_remaps = [
            [self._encode(tuple(t[j] for j in sig), k) for t in domain]
            for sig in self.perms
        ]

        self.pairs = list(IndexPair.all_pairs(n))
        self.minor_remaps = []
        for pair in self.pairs:
            images = collapse_map(pair, n).images
            self.minor_remaps.append(
                [self._encode(tuple(a[j] for j in images), k) for a in sub_domain]
            )

        self.sub_perm_remaps = [
            [self._encode(tuple(a[j] for j in sig), k) for a in sub_domain]
            for sig in permutations(range(n - 1))
        ]

        by_ofo = {}
        by_supp = {}
        for i, t in enumerate(domain):
            by_ofo.setdefault(ofo(t), []).append(i)
            by_supp.setdefault(frozenset(t), []).append(i)
        self.ofo_fibers = [v for v in by_ofo.values() if len(v) > 1]
        self.supp_fibers = [v for v in by_supp.values() if len(v) > 1]

        pair_index = {(p.lo, p.hi): i for i, p in enumerate(self.pairs)}
        self.pair_actions = []
        for sig in self.perms:
            action = tuple(
                pair_index[tuple(sorted((sig[p.lo], sig[p.hi])))] for p in self.pairs
            )
            self.pair_actions.append(action)
        self.n_pairs = len(self.pairs)

        self._canon_cache = {}
        self._ofo_det_cache = {}

    @staticmethod
    def _encode(t, k):
        idx = 0
        for x in t:
            idx = idx * k + x
        return idx

    def pack_values(self, values):
        return self.pack(values)

    def minor_values(self, vals):
        return [self.pack(map(vals.__getitem__, remap)) for remap in self.minor_remaps]

    def canonical_form(self, vals):
        """Least permuted image: equal forms = equivalent equal-arity tables."""
        c = self._canon_cache.get(vals)
        if c is None:
            c = min(
                self.pack(map(vals.__getitem__, remap))
                for remap in self.sub_perm_remaps
            )
            self._canon_cache[vals] = c
        return c

    def has_uim(self, vals) -> bool:
        minors = self.minor_values(vals)
        first = self.canonical_form(minors[0])
        return all(self.canonical_form(m) == first for m in minors[1:])

    def invariant_perm_ids(self, vals):
        out = []
        for s, remap in enumerate(self.perm_remaps):
            for i, j in enumerate(remap):
                if vals[i] != vals[j]:
                    break
            else:
                out.append(s)
        return out

    def two_set_transitive(self, inv_ids) -> bool:
        first = self.pairs[0]
        base = (first.lo, first.hi)
        assert base == (0, 1)
        orbit = {self.pair_actions[s][0] for s in inv_ids}
        return len(orbit) == self.n_pairs

    def ofo_determined(self, vals) -> bool:
        r = self._ofo_det_cache.get(vals)
        if r is None:
            r = self._constant_on(vals, self.ofo_fibers)
            self._ofo_det_cache[vals] = r
        return r

    def supp_determined(self, vals) -> bool:
        return self._constant_on(vals, self.supp_fibers)

    @staticmethod
    def _constant_on(vals, fibers) -> bool:
        for fiber in fibers:
            first = vals[fiber[0]]
            for i in fiber:
                if vals[i] != first:
                    return False
        return True

    def equiv_ofo_determined(self, vals) -> bool:
        for remap in self.perm_remaps:
            if self.ofo_determined(self.pack(map(vals.__getitem__, remap))):
                return True
        return False

    def classify_values(self, values) -> Classification:
        vals = self.pack(values)
        uim = self.has_uim(vals)
        inv_ids = self.invariant_perm_ids(vals)
        two_set = self.two_set_transitive(inv_ids)
        equiv_ofo = self.equiv_ofo_determined(vals)
        return Classification(
            has_uim=uim,
            totally_symmetric=len(inv_ids) == len(self.perms),
            two_set_transitive=two_set,
            two_set_transitive_degenerate=self.arity == 2,
            ofo_determined=self.ofo_determined(vals),
            equiv_ofo_determined=equiv_ofo,
            supp_determined=self.supp_determined(vals),
            inv_group_order=len(inv_ids),
            category=_categorize(uim, two_set, equiv_ofo),
        )


_classifiers = {}


def _classifier(domain_size, codomain_size, arity) -> TableClassifier:
    key = (domain_size, codomain_size, arity)
    ctx = _classifiers.get(key)
    if ctx is None:
        ctx = _classifiers[key] = TableClassifier(*key)
    return ctx


def has_uim(f) -> bool:
    """All identification minors of ``f`` pairwise equivalent.

    Decided by searching equal-arity equivalence witnesses against the first
    minor (equivalence is transitive).  Accepts total tables and partial
    tables defined on the repeat tuples.
    """
    if f.arity < 2:
        raise ValueError("identification minors need arity >= 2")
    pairs = list(IndexPair.all_pairs(f.arity))
    minors = [ftable.identification_minor(f, p) for p in pairs]
    first = minors[0]
    return all(
        ftable.are_equivalent_same_arity(first, m) is not None for m in minors[1:]
    )


def _classify_restriction(pf) -> RestrictionSummary:
    n = pf.arity
    inv = [s for s in Permutation.all_perms(n) if symmetry.is_invariant_under(pf, s)]
    orbit = {s.pair_image(IndexPair(0, 1)) for s in inv}
    return RestrictionSummary(
        ofo_determined=decomp.ofo_decompose(pf) is not None,
        equiv_ofo_determined=decomp.equiv_to_ofo_determined(pf) is not None,
        two_set_transitive=len(orbit) == n * (n - 1) // 2,
        two_set_transitive_degenerate=n == 2,
        inv_group_order=len(inv),
    )


def classify(f: FunctionTable) -> Classification:
    """Full classification of a total table.

    When the arity does not exceed the alphabet size, the repeat-free part of
    the domain carries no minor information, so the same tests on the
    restriction to repeat tuples are attached as a sub-record.
    """
    ctx = _classifier(f.domain_size, f.codomain_size, f.arity)
    c = ctx.classify_values(f.values)
    if f.arity <= f.domain_size:
        c = replace(c, restriction=_classify_restriction(ftable.restrict_to_repeats(f)))
    return c


# ---------------------------------------------------------------------------
# Search harness

@dataclass
class SearchReport:
    domain_size: int
    codomain_size: int
    arity: int
    mode: str
    seed: int | None
    sample_count: int | None
    total_space: int
    classified: int
    counts: dict
    other_witnesses: list
    flagged_counterexamples: bool
    elapsed_seconds: float

    def to_json_obj(self, include_timing: bool = True) -> dict:
        obj = {
            "parameters": {
                "domain_size": self.domain_size,
                "codomain_size": self.codomain_size,
                "arity": self.arity,
                "mode": self.mode,
                "seed": self.seed,
                "sample_count": self.sample_count,
            },
            "total_space": self.total_space,
            "classified": self.classified,
            "counts": {cat: self.counts.get(cat, 0) for cat in CATEGORIES},
            "other_witnesses": self.other_witnesses,
            "flagged_counterexamples": self.flagged_counterexamples,
        }
        if include_timing:
            obj["elapsed_seconds"] = self.elapsed_seconds
        return obj

    def fingerprint(self) -> str:
        """SHA-256 over the canonical JSON form, timing excluded."""
        payload = canonical_dumps(self.to_json_obj(include_timing=False))
        return hashlib.sha256(payload.encode()).hexdigest()


def sample_index(seed: int, j: int, total: int) -> int:
    """Table index of sample ``j``: a Mersenne Twister seeded with the string
    ``"{seed}:{j}"`` draws fixed-width integers and the first one below
    ``total`` is taken (rejection keeps the draw uniform).  Each sample is
    independently computable, so parallel order cannot change results."""
    nbits = max(1, (total - 1).bit_length())
    rng = random.Random(f"{seed}:{j}")
    while True:
        v = rng.getrandbits(nbits)
        if v < total:
            return v


def _index_to_values(index: int, codomain_size: int, length: int):
    out = [0] * length
    for pos in range(length - 1, -1, -1):
        index, out[pos] = divmod(index, codomain_size)
    return tuple(out)


def _search_chunk(args):
    k, b, n, mode, seed, total, start, end = args
    ctx = _classifier(k, b, n)
    counts = Counter()
    witnesses = []
    for slot in range(start, end):
        index = slot if mode == "exhaustive" else sample_index(seed, slot, total)
        values = _index_to_values(index, b, ctx.size)
        c = ctx.classify_values(values)
        if (c.two_set_transitive or c.equiv_ofo_determined) and not c.has_uim:
            raise RuntimeError(
                f"classification inconsistency at table {index}: "
                f"category preconditions guarantee a unique identification minor"
            )
        counts[c.category] += 1
        if c.category == "OTHER":
            witnesses.append({"table_index": index, "values": list(values)})
    return dict(counts), witnesses


def _thread_count(threads) -> int:
    if threads is None:
        threads = int(os.environ.get("UIMLAB_THREADS", "1"))
    return max(1, min(int(threads), os.cpu_count() or 1))


def _spot_check_invariance(ctx: TableClassifier, mode, seed, total, samples,
                           rounds: int = 100) -> None:
    """Classification must agree between a table and any argument-permuted
    copy; checked on seeded random (table, permutation) pairs."""
    rng = random.Random(f"{0 if seed is None else seed}:invariance-spot-check")
    b = ctx.codomain_size
    for _ in range(rounds):
        if mode == "exhaustive":
            index = rng.randrange(total)
        else:
            index = sample_index(seed, rng.randrange(samples), total)
        vals = ctx.pack(_index_to_values(index, b, ctx.size))
        remap = ctx.perm_remaps[rng.randrange(len(ctx.perms))]
        permuted = ctx.pack(map(vals.__getitem__, remap))
        c1 = ctx.classify_values(vals)
        c2 = ctx.classify_values(permuted)
        if (c1.category, c1.has_uim) != (c2.category, c2.has_uim):
            raise RuntimeError(
                f"classification is not permutation-invariant at table {index}"
            )


def search(domain_size: int, codomain_size: int, arity: int,
           mode: str = "exhaustive", seed: int | None = None,
           samples: int | None = None, threads: int | None = None) -> SearchReport:
    """Classify a complete table space, or a seeded sample of one.

    Exhaustive mode enumerates every table index below b**(k**n) (guarded at
    ``EXHAUSTIVE_GUARD``); sampled mode draws ``samples`` indices via
    :func:`sample_index`.  Work may be split across processes; chunks are
    merged in index order, so reports are identical for any thread count.
    """
    k, b, n = domain_size, codomain_size, arity
    if n < 2:
        raise ValueError("search needs arity >= 2")
    if k**n > TABLE_SIZE_GUARD:
        raise ValueError(f"table size {k ** n} exceeds guard {TABLE_SIZE_GUARD}")
    total = b ** (k**n)
    if mode == "exhaustive":
        if total > EXHAUSTIVE_GUARD:
            raise ValueError(
                f"space of {total} tables exceeds the exhaustive guard "
                f"{EXHAUSTIVE_GUARD}; use sampled mode"
            )
        slots = total
    elif mode == "sampled":
        if samples is None or samples < 1:
            raise ValueError("sampled mode needs a positive sample count")
        if seed is None:
            seed = 0
        slots = samples
    else:
        raise ValueError(f"unknown mode {mode!r}")

    threads = _thread_count(threads)
    started = time.perf_counter()
    chunk = max(1, math.ceil(slots / threads))
    jobs = [
        (k, b, n, mode, seed, total, lo, min(lo + chunk, slots))
        for lo in range(0, slots, chunk)
    ]
    if len(jobs) == 1:
        results = [_search_chunk(jobs[0])]
    else:
        with get_context("fork").Pool(len(jobs)) as pool:
            results = pool.map(_search_chunk, jobs)

    counts = Counter()
    witnesses = []
    for part_counts, part_witnesses in results:
        counts.update(part_counts)
        witnesses.extend(part_witnesses)
    witnesses.sort(key=lambda w: w["table_index"])
    deduped = []
    for w in witnesses:
        if not deduped or deduped[-1]["table_index"] != w["table_index"]:
            deduped.append(w)

    ctx = _classifier(k, b, n)
    _spot_check_invariance(ctx, mode, seed, total, samples)

    return SearchReport(
        domain_size=k,
        codomain_size=b,
        arity=n,
        mode=mode,
        seed=seed,
        sample_count=samples if mode == "sampled" else None,
        total_space=total,
        classified=slots,
        counts={cat: counts.get(cat, 0) for cat in CATEGORIES},
        other_witnesses=deduped,
        flagged_counterexamples=bool(deduped) and n > k + 1,
        elapsed_seconds=time.perf_counter() - started,
    )


# ---------------------------------------------------------------------------
# Verification suites: each replays one of the library's exhaustive
# identities and reports the first counterexample, if any.

@dataclass
class SuiteReport:
    suite: str
    params: dict
    checked: int
    passed: bool
    counterexample: str | None
    elapsed_seconds: float

    def to_json_obj(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "checked": self.checked,
            "passed": self.passed,
            "counterexample": self.counterexample,
            "elapsed_seconds": self.elapsed_seconds,
        }


def _suite_ofo_identities(params):
    """ofo is idempotent, an associative string function, and a homomorphism
    onto first-occurrence products: checked over all short strings."""
    k = params.get("k", 3)
    max_len = params.get("max_len", 4)
    triple_total = params.get("triple_total", 6)
    est = (k ** triple_total) * (triple_total + 1) * (triple_total + 2) // 2
    if est > 5_000_000:
        raise ValueError("ofo-identities guard exceeded; shrink k or triple_total")
    checked = 0
    for length in range(max_len + 1):
        for t in product(range(k), repeat=length):
            checked += 1
            if ofo(ofo(t)) != ofo(t):
                return checked, f"idempotence fails at {render_tuple(t)}"
    for la in range(triple_total + 1):
        for lb in range(triple_total - la + 1):
            for u in product(range(k), repeat=la):
                for v in product(range(k), repeat=lb):
                    checked += 1
                    if ofo(ofo(u) + ofo(v)) != ofo(u + v):
                        return checked, (
                            f"product identity fails at u={render_tuple(u)}, "
                            f"v={render_tuple(v)}"
                        )
    for la in range(triple_total + 1):
        for lb in range(triple_total - la + 1):
            for lc in range(triple_total - la - lb + 1):
                for u in product(range(k), repeat=la):
                    for v in product(range(k), repeat=lb):
                        for w in product(range(k), repeat=lc):
                            checked += 1
                            if ofo(u + ofo(v) + w) != ofo(u + v + w):
                                return checked, (
                                    f"associativity fails at u={render_tuple(u)}, "
                                    f"v={render_tuple(v)}, w={render_tuple(w)}"
                                )
    return checked, None


def _suite_collapse_insertion(params):
    """Collapsing inserts a repeat after a first occurrence, so it never
    changes the ofo image."""
    max_domain = params.get("k", 3)
    max_arity = params.get("n", 5)
    checked = 0
    for k in range(1, max_domain + 1):
        for n in range(2, max_arity + 1):
            for pair in IndexPair.all_pairs(n):
                dm = collapse_map(pair, n)
                for t in all_tuples(k, n - 1):
                    checked += 1
                    if ofo(t) != ofo(apply_index_map(t, dm)):
                        return checked, (
                            f"k={k}, n={n}, pair={pair.render()}, t={render_tuple(t)}"
                        )
    return checked, None


def _suite_ofo_factor_minors(params):
    """Every identification minor of an ofo-determined table is the same
    table one arity down: exact equality, over every factor table."""
    k = params.get("k", 2)
    b = params.get("b", 2)
    arities = params.get("arities", (3, 4))
    checked = 0
    for n in arities:
        max_len = min(n, k)
        keys = decomp._ofo_domain(k, max_len)
        for assignment in product(range(b), repeat=len(keys)):
            f_star = decomp.OfoTable.from_values(k, b, max_len, assignment)
            f = decomp.compose_ofo(f_star, n)
            expected = decomp.compose_ofo(f_star, n - 1)
            for pair in IndexPair.all_pairs(n):
                checked += 1
                minor = ftable.identification_minor(f, pair)
                if minor.values != expected.values:
                    return checked, (
                        f"n={n}, pair={pair.render()}, factor values={assignment}"
                    )
    return checked, None


def _suite_collapse_permutation(params):
    """The induced permutation on collapsed positions satisfies both of its
    defining identities, for every (permutation, pair)."""
    max_arity = params.get("n", 6)
    checked = 0
    for n in range(2, max_arity + 1):
        for sigma in Permutation.all_perms(n):
            for pair in IndexPair.all_pairs(n):
                checked += 1
                tau, pre = symmetry.collapse_permutation(sigma, pair)
                lhs = tau.as_index_map().after(collapse_map(pre, n))
                rhs = collapse_map(pair, n).after(sigma.as_index_map())
                if lhs.images != rhs.images or tau.images[pre.lo] != pair.lo:
                    return checked, f"n={n}, sigma={sigma.one_line()}, pair={pair.render()}"
    return checked, None


def _suite_support_equivalences(params):
    """Above arity domain_size + 1, three table classes coincide: totally
    symmetric ofo-determined, 2-set-transitive ofo-determined, and
    supp-determined; and members admit anchored minor equivalences for every
    pair of pairs."""
    k = params.get("k", 2)
    b = params.get("b", 2)
    n = params.get("n", 4)
    if n <= k + 1:
        raise ValueError(f"requires arity > domain_size + 1, got n={n}, k={k}")
    total = b ** (k**n)
    if total > EXHAUSTIVE_GUARD:
        raise ValueError("space exceeds the exhaustive guard")
    ctx = _classifier(k, b, n)
    ts_ofo = []
    tst_ofo = []
    supp_det = []
    checked = 0
    for index in range(total):
        vals = ctx.pack(_index_to_values(index, b, ctx.size))
        checked += 1
        det = ctx.ofo_determined(vals)
        if det:
            inv_ids = ctx.invariant_perm_ids(vals)
            if len(inv_ids) == len(ctx.perms):
                ts_ofo.append(index)
            if ctx.two_set_transitive(inv_ids):
                tst_ofo.append(index)
        if ctx.supp_determined(vals):
            supp_det.append(index)
    if not (ts_ofo == tst_ofo == supp_det):
        return checked, (
            f"class sizes differ: ts&ofo={len(ts_ofo)}, 2st&ofo={len(tst_ofo)}, "
            f"supp={len(supp_det)}"
        )
    for index in supp_det:
        f = FunctionTable(k, b, n, _index_to_values(index, b, ctx.size))
        for pair_i in IndexPair.all_pairs(n):
            for pair_j in IndexPair.all_pairs(n):
                checked += 1
                if decomp.anchored_minor_equivalence(f, pair_i, pair_j) is None:
                    return checked, (
                        f"table {index}: no anchored witness for "
                        f"{pair_i.render()}, {pair_j.render()}"
                    )
    return checked, None


def _suite_sporadic_total(params):
    """The total sporadic family: value alpha exactly on the marked tuples,
    unique identification minor, no equivalence to an ofo-determined table,
    and (for domain size > 2) trivial invariance group."""
    ks = params.get("ks", (2, 3, 4))
    alpha = params.get("alpha", 1)
    beta = params.get("beta", 0)
    checked = 0
    for k in ks:
        f = construct.sporadic_function(k, alpha, beta)
        marked = {construct.marked_tuple(k, p) for p in IndexPair.all_pairs(k + 1)}
        for t, v in zip(all_tuples(k, k + 1), f.values):
            checked += 1
            want = alpha if t in marked else beta
            if v != want:
                return checked, f"k={k}: wrong value at {render_tuple(t)}"
        checked += 1
        if not has_uim(f):
            return checked, f"k={k}: identification minors are not all equivalent"
        checked += 1
        if decomp.equiv_to_ofo_determined(f) is not None:
            return checked, f"k={k}: unexpectedly equivalent to an ofo-determined table"
        if k >= 3:
            checked += 1
            if symmetry.invariance_group(f).order != 1:
                return checked, f"k={k}: invariance group is not trivial"
    return checked, None


def _suite_sporadic_partial(params):
    """The partial sporadic family on repeat tuples: every identification
    minor equivalent to the ofo-determined indicator, no equivalence to a
    partial ofo-determined table, and no 2-set-transitivity once the base
    arity reaches 3."""
    cases = params.get("cases", ((3, 2), (4, 3), (4, 2)))
    alpha = params.get("alpha", 1)
    beta = params.get("beta", 0)
    checked = 0
    for k, m in cases:
        pf = construct.sporadic_partial_function(k, m, alpha, beta)
        b = max(alpha, beta) + 1
        keys = decomp._ofo_domain(k, m)
        target_star = decomp.OfoTable(
            k, b, m,
            {key: (alpha if key == tuple(range(m)) else beta) for key in keys},
        )
        expected = decomp.compose_ofo(target_star, m)
        for pair in IndexPair.all_pairs(m + 1):
            checked += 1
            minor = ftable.identification_minor(pf, pair)
            if ftable.are_equivalent_same_arity(minor, expected) is None:
                return checked, f"k={k}, m={m}: minor for {pair.render()} is off"
        checked += 1
        if decomp.equiv_to_ofo_determined(pf) is not None:
            return checked, (
                f"k={k}, m={m}: unexpectedly equivalent to a partial "
                f"ofo-determined table"
            )
        if m >= 3:
            checked += 1
            inv = [
                s for s in Permutation.all_perms(m + 1)
                if symmetry.is_invariant_under(pf, s)
            ]
            orbit = {s.pair_image(IndexPair(0, 1)) for s in inv}
            if len(orbit) == (m + 1) * m // 2:
                return checked, f"k={k}, m={m}: restriction is 2-set-transitive"
    return checked, None


def _suite_two_set_transitive_uim(params):
    """Every 2-set-transitive table has a unique identification minor."""
    k = params.get("k", 2)
    b = params.get("b", 2)
    arities = params.get("arities", (3, 4))
    checked = 0
    for n in arities:
        total = b ** (k**n)
        if total > EXHAUSTIVE_GUARD:
            raise ValueError("space exceeds the exhaustive guard")
        ctx = _classifier(k, b, n)
        for index in range(total):
            vals = ctx.pack(_index_to_values(index, b, ctx.size))
            if ctx.two_set_transitive(ctx.invariant_perm_ids(vals)):
                checked += 1
                if not ctx.has_uim(vals):
                    return checked, f"n={n}, table {index}"
    return checked, None


_SUITES = {
    "ofo-identities": _suite_ofo_identities,
    "lemma-ofodeltaI": _suite_collapse_insertion,
    "prop-ofominor": _suite_ofo_factor_minors,
    "lemma-hatsigma": _suite_collapse_permutation,
    "prop-suppord": _suite_support_equivalences,
    "prop-42": _suite_sporadic_total,
    "prop-52": _suite_sporadic_partial,
    "uim-2st": _suite_two_set_transitive_uim,
}


def suite_names():
    return sorted(_SUITES)


def verify_suite(name: str, **params) -> SuiteReport:
    """Run one verification suite; ``passed`` means zero counterexamples."""
    fn = _SUITES.get(name)
    if fn is None:
        raise ValueError(f"unknown suite {name!r}; choose from {suite_names()}")
    started = time.perf_counter()
    checked, counterexample = fn(params)
    return SuiteReport(
        suite=name,
        params=params,
        checked=checked,
        passed=counterexample is None,
        counterexample=counterexample,
        elapsed_seconds=time.perf_counter() - started,
    )
