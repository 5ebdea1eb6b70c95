"""Exhaustive and randomized verification surveys over small digraphs.

Exhaustive mode sweeps every labeled pair-type assignment of a given order
with vectorized kernels: indecomposability is decided twice (splitter
closure and subset enumeration, which must agree), criticality and the
structural audits run on top, and every defect-one find is recorded by
canonical code.  Random mode samples assignments from a seeded generator
and runs the same audits one graph at a time, plus one-pair mutants of the
family members of that order.  Chunking is fixed by sample count, never by
worker count, so reports are reproducible at any parallelism.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from multiprocessing import get_context
from typing import Callable, Iterable, Optional

import numpy as np

from .classifier import (
    CRITICAL,
    DECOMPOSABLE,
    MINUS_K_CRITICAL,
    MINUS_ONE_CRITICAL,
    OUT_OF_SCOPE_ORDER,
    THEOREM_VIOLATION,
    classify,
)
from .core import Digraph, DigraphError, canonical_code, mask_of, pair_type
from .criticality import check_lemma21, critical_vertices
from .families import MAX_ENUM_ORDER, enum_family_members
from .modular import (
    SUBSET_ORACLE_BOUND,
    TheoremViolation,
    _prime_mask,
    check_outside_rules,
    extend_by_two,
    is_indecomposable,
    nontrivial_intervals,
    outside_partition,
    small_indecomposable_around,
)

EXHAUSTIVE_BOUND = 5
EXHAUSTIVE_LONG_RUN_BOUND = 6
RANDOM_ORDER_BOUND = 12
EXHAUSTIVE_CHUNK = 1 << 18
RANDOM_CHUNK = 2000

AUDIT_NAMES = (
    "indec_dual_route",
    "outside_partition",
    "extension_rules",
    "two_vertex_extension",
    "small_indecomposable",
    "critical_vertex_rules",
    "family_classification",
    "kernel_reference",
)

_REVERSED_DIGIT = np.array([0, 2, 1, 3], dtype=np.uint8)


@dataclass
class SurveyReport:
    """Aggregated survey outcome.

    Every field except elapsed is deterministic for a fixed (order, mode,
    samples, seed) regardless of worker count.  verdict_counts always sums
    to visited; audits maps audit name to {'checked': n, 'failed': n};
    defect_one_codes lists the canonical codes (hex, deduplicated, sorted)
    of every defect-one graph encountered.
    """

    order: int
    mode: str
    visited: int
    verdict_counts: dict
    audits: dict
    defect_one_codes: tuple
    seeds: tuple
    samples: int
    mutants: int
    workers: int
    elapsed: float

    @property
    def failures(self) -> int:
        return sum(t["failed"] for t in self.audits.values()) + self.verdict_counts.get(
            THEOREM_VIOLATION, 0
        )

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "mode": self.mode,
            "visited": self.visited,
            "verdicts": dict(sorted(self.verdict_counts.items())),
            "audits": {k: dict(v) for k, v in sorted(self.audits.items())},
            "defect_one_codes": list(self.defect_one_codes),
            "seeds": list(self.seeds),
            "samples": self.samples,
            "mutants": self.mutants,
            "workers": self.workers,
            "elapsed": round(self.elapsed, 3),
            "ok": self.ok,
        }


def _new_tallies() -> dict:
    return {name: {"checked": 0, "failed": 0} for name in AUDIT_NAMES}


def _merge_chunk(acc: dict, part: dict) -> None:
    acc["visited"] += part["visited"]
    for verdict, count in part["verdicts"].items():
        acc["verdicts"][verdict] = acc["verdicts"].get(verdict, 0) + count
    for name, tally in part["audits"].items():
        acc["audits"][name]["checked"] += tally["checked"]
        acc["audits"][name]["failed"] += tally["failed"]
    acc["codes"] |= part["codes"]
    acc["mutants"] += part.get("mutants", 0)


def _finish_report(
    acc: dict,
    order: int,
    mode: str,
    seeds: tuple,
    samples: int,
    workers: int,
    started: float,
) -> SurveyReport:
    return SurveyReport(
        order=order,
        mode=mode,
        visited=acc["visited"],
        verdict_counts=acc["verdicts"],
        audits=acc["audits"],
        defect_one_codes=tuple(sorted(acc["codes"])),
        seeds=seeds,
        samples=samples,
        mutants=acc["mutants"],
        workers=workers,
        elapsed=time.time() - started,
    )


# -- vectorized exhaustive kernel ---------------------------------------------------


class _Kernel:
    """Pair-type tensor over a block of same-order graphs.

    t[g, x, y] holds the type digit of the ordered pair (x, y) in graph g.
    Subset primality is decided by interval enumeration; the whole-graph
    closure route is implemented independently in closure_prime().
    """

    def __init__(self, order: int, digits: np.ndarray):
        self.n = order
        self.count = digits.shape[0]
        self.pairs = list(itertools.combinations(range(order), 2))
        self.digits = digits
        t = np.zeros((self.count, order, order), dtype=np.uint8)
        for p, (x, y) in enumerate(self.pairs):
            col = digits[:, p]
            t[:, x, y] = col
            t[:, y, x] = _REVERSED_DIGIT[col]
        self.t = t
        self._uniform: dict = {}
        self._prime: dict = {}

    def uniform(self, z: int, members: tuple) -> np.ndarray:
        """True where vertex z relates identically to every member."""
        key = (z, members)
        got = self._uniform.get(key)
        if got is None:
            got = np.ones(self.count, dtype=bool)
            for s in members[1:]:
                got = got & (self.t[:, z, s] == self.t[:, z, members[0]])
            self._uniform[key] = got
        return got

    def interval_within(self, universe: tuple, members: tuple) -> np.ndarray:
        """True where members form an interval of the graph induced on
        universe."""
        acc = np.ones(self.count, dtype=bool)
        inside = set(members)
        for z in universe:
            if z not in inside:
                acc = acc & self.uniform(z, members)
        return acc

    def subset_prime(self, subset: Iterable[int]) -> np.ndarray:
        """Subset-enumeration route: no nontrivial interval inside."""
        key = tuple(sorted(subset))
        got = self._prime.get(key)
        if got is None:
            if len(key) <= 2:
                got = np.ones(self.count, dtype=bool)
            else:
                decomposable = np.zeros(self.count, dtype=bool)
                for size in range(2, len(key)):
                    for members in itertools.combinations(key, size):
                        decomposable |= self.interval_within(key, members)
                got = ~decomposable
            self._prime[key] = got
        return got

    def closure_prime(self) -> np.ndarray:
        """Splitter-closure route for the whole graph: indecomposable iff
        the closure of every seed pair reaches all vertices."""
        n, count = self.n, self.count
        result = np.ones(count, dtype=bool)
        for x, y in self.pairs:
            closed = np.zeros((count, n), dtype=bool)
            closed[:, x] = True
            closed[:, y] = True
            for _ in range(n):
                grew = False
                for z in range(n):
                    # z splits the closed set when it relates to some member
                    # differently than it relates to seed x
                    differs = (self.t[:, z, :] != self.t[:, z, x : x + 1]) & closed
                    splits = differs.any(axis=1) & ~closed[:, z]
                    if splits.any():
                        closed[:, z] |= splits
                        grew = True
                if not grew:
                    break
            result &= closed.sum(axis=1) == n
        return result

    def graph_at(self, row: int) -> Digraph:
        out_rows = [0] * self.n
        for p, (x, y) in enumerate(self.pairs):
            d = int(self.digits[row, p])
            if d in (1, 3):
                out_rows[x] |= 1 << y
            if d in (2, 3):
                out_rows[y] |= 1 << x
        return Digraph(self.n, out_rows)


def _kernel_partition_audit(k: _Kernel, tallies: dict) -> None:
    """Vectorized partition-uniqueness and extension-bullet audits over
    every subset of size 3 or 4 inducing an indecomposable subgraph."""
    n = k.n
    for size in (3, 4):
        if size > n - 1:
            continue
        for xs in itertools.combinations(range(n), size):
            eligible = k.subset_prime(xs)
            count = int(eligible.sum())
            if count == 0:
                continue
            outside = tuple(v for v in range(n) if v not in xs)
            bracket = {}
            cells = {}
            ext = {}
            for z in outside:
                bracket[z] = k.uniform(z, xs)
                hits = bracket[z].astype(np.int8)
                for u in xs:
                    match = np.ones(k.count, dtype=bool)
                    for w in xs:
                        if w != u:
                            match &= k.t[:, w, u] == k.t[:, w, z]
                    cells[(z, u)] = match
                    hits += match
                ext[z] = k.subset_prime(xs + (z,))
                hits += ext[z]
                tallies["outside_partition"]["checked"] += count
                tallies["outside_partition"]["failed"] += int(
                    (eligible & (hits != 1)).sum()
                )
            for x, y in itertools.permutations(outside, 2):
                uni = tuple(sorted(xs + (x, y)))
                hyp_base = eligible & ~k.subset_prime(uni)
                for u in xs:
                    hyp = hyp_base & cells[(x, u)] & ~cells[(y, u)]
                    checked = int(hyp.sum())
                    if checked:
                        ok = k.interval_within(uni, tuple(sorted((u, x))))
                        tallies["extension_rules"]["checked"] += checked
                        tallies["extension_rules"]["failed"] += int(
                            (hyp & ~ok).sum()
                        )
                hyp = hyp_base & bracket[x] & ~bracket[y]
                checked = int(hyp.sum())
                if checked:
                    ok = k.interval_within(uni, tuple(sorted(xs + (y,))))
                    tallies["extension_rules"]["checked"] += checked
                    tallies["extension_rules"]["failed"] += int((hyp & ~ok).sum())
            for x, y in itertools.combinations(outside, 2):
                uni = tuple(sorted(xs + (x, y)))
                hyp = eligible & ~k.subset_prime(uni) & ext[x] & ext[y]
                checked = int(hyp.sum())
                if checked:
                    ok = k.interval_within(uni, tuple(sorted((x, y))))
                    tallies["extension_rules"]["checked"] += checked
                    tallies["extension_rules"]["failed"] += int((hyp & ~ok).sum())


def _kernel_existence_audits(k: _Kernel, whole: np.ndarray, tallies: dict) -> None:
    """Vectorized audits of the two existence statements: a two-vertex
    extension keeping a subset indecomposable, and a small indecomposable
    subgraph around each vertex."""
    n = k.n
    for size in (3, 4):
        if n - size < 2:
            continue
        for xs in itertools.combinations(range(n), size):
            eligible = whole & k.subset_prime(xs)
            count = int(eligible.sum())
            if count == 0:
                continue
            outside = tuple(v for v in range(n) if v not in xs)
            success = np.zeros(k.count, dtype=bool)
            for x, y in itertools.combinations(outside, 2):
                success |= k.subset_prime(tuple(sorted(xs + (x, y))))
            tallies["two_vertex_extension"]["checked"] += count
            tallies["two_vertex_extension"]["failed"] += int(
                (eligible & ~success).sum()
            )
    if n >= 5:
        for a in range(n):
            success = np.zeros(k.count, dtype=bool)
            others = [v for v in range(n) if v != a]
            for extra in (3, 4):
                if extra > len(others):
                    continue
                for rest in itertools.combinations(others, extra):
                    success |= k.subset_prime(tuple(sorted((a,) + rest)))
            if n == 5:
                success |= whole
            tallies["small_indecomposable"]["checked"] += int(whole.sum())
            tallies["small_indecomposable"]["failed"] += int((whole & ~success).sum())


def _kernel_critical_audit(
    k: _Kernel, whole: np.ndarray, noncrit: list, tallies: dict
) -> None:
    """Vectorized degree and forced-interval audit for critical vertices."""
    n = k.n
    if n < 5:
        return
    edge = {}
    for x, y in itertools.combinations(range(n), 2):
        edge[(x, y)] = k.subset_prime(tuple(v for v in range(n) if v not in (x, y)))
    for x in range(n):
        critical = whole & ~noncrit[x]
        count = int(critical.sum())
        if count == 0:
            continue
        nbrs = [y for y in range(n) if y != x]
        degree = np.zeros(k.count, dtype=np.int8)
        for y in nbrs:
            e = edge[(min(x, y), max(x, y))]
            degree += e
        failed = critical & (degree > 2)
        rest = tuple(v for v in range(n) if v != x)
        for y in nbrs:
            e = edge[(min(x, y), max(x, y))]
            cond = critical & (degree == 1) & e
            if cond.any():
                claim = tuple(v for v in rest if v != y)
                failed |= cond & ~k.interval_within(rest, claim)
        for y, z in itertools.combinations(nbrs, 2):
            ey = edge[(min(x, y), max(x, y))]
            ez = edge[(min(x, z), max(x, z))]
            cond = critical & (degree == 2) & ey & ez
            if cond.any():
                failed |= cond & ~k.interval_within(rest, tuple(sorted((y, z))))
        tallies["critical_vertex_rules"]["checked"] += count
        tallies["critical_vertex_rules"]["failed"] += int(failed.sum())


def _exhaustive_chunk(args: tuple) -> dict:
    order, lo, hi, sample_stride = args
    pairs = list(itertools.combinations(range(order), 2))
    idx = np.arange(lo, hi, dtype=np.int64)
    digits = np.empty((idx.shape[0], len(pairs)), dtype=np.uint8)
    for p in range(len(pairs)):
        digits[:, p] = (idx >> (2 * p)) & 3
    k = _Kernel(order, digits)
    tallies = _new_tallies()

    closure = k.closure_prime()
    oracle = k.subset_prime(tuple(range(order)))
    tallies["indec_dual_route"]["checked"] += k.count
    tallies["indec_dual_route"]["failed"] += int((closure != oracle).sum())
    whole = oracle

    noncrit = [
        k.subset_prime(tuple(v for v in range(order) if v != x))
        for x in range(order)
    ]
    defect = np.zeros(k.count, dtype=np.int8)
    for x in range(order):
        defect += noncrit[x]

    verdicts = {
        DECOMPOSABLE: int((~whole).sum()),
        CRITICAL: int((whole & (defect == 0)).sum()),
        MINUS_K_CRITICAL: int((whole & (defect >= 2)).sum()),
        OUT_OF_SCOPE_ORDER: int((whole & (defect == 1)).sum()),
    }

    _kernel_partition_audit(k, tallies)
    _kernel_existence_audits(k, whole, tallies)
    _kernel_critical_audit(k, whole, noncrit, tallies)

    codes = set()
    for row in np.nonzero(whole & (defect == 1))[0]:
        codes.add(canonical_code(k.graph_at(int(row))).hex())

    # tie the kernels back to the per-graph reference implementations on a
    # deterministic sample of rows
    for row in range(0, k.count, sample_stride):
        g = k.graph_at(row)
        ok = True
        ref_prime = is_indecomposable(g)
        if ref_prime != bool(closure[row]) or ref_prime != bool(oracle[row]):
            ok = False
        if order <= SUBSET_ORACLE_BOUND:
            if (len(nontrivial_intervals(g)) == 0) != ref_prime:
                ok = False
        if ref_prime:
            report = critical_vertices(g)
            if report.defect != int(defect[row]):
                ok = False
            expected = (
                CRITICAL
                if report.defect == 0
                else MINUS_K_CRITICAL
                if report.defect >= 2
                else OUT_OF_SCOPE_ORDER
                if order < 7
                else None
            )
            got = classify(g)
            if expected is not None and got.verdict != expected:
                ok = False
        else:
            if classify(g).verdict != DECOMPOSABLE:
                ok = False
        tallies["kernel_reference"]["checked"] += 1
        tallies["kernel_reference"]["failed"] += 0 if ok else 1

    return {
        "visited": k.count,
        "verdicts": verdicts,
        "audits": tallies,
        "codes": codes,
        "mutants": 0,
    }


def survey_exhaustive(
    order: int,
    *,
    workers: int = 1,
    long_run: bool = False,
    on_chunk: Optional[Callable[[dict], None]] = None,
    sample_stride: int = 4096,
) -> SurveyReport:
    """Audit every labeled pair-type assignment of the given order."""
    bound = EXHAUSTIVE_LONG_RUN_BOUND if long_run else EXHAUSTIVE_BOUND
    if not 3 <= order <= bound:
        raise DigraphError(
            f"survey_exhaustive: order must be in 3..{bound}"
            + ("" if long_run else " (pass long_run for 6)")
        )
    started = time.time()
    total = 4 ** (order * (order - 1) // 2)
    chunks = [
        (order, lo, min(lo + EXHAUSTIVE_CHUNK, total), sample_stride)
        for lo in range(0, total, EXHAUSTIVE_CHUNK)
    ]
    acc = {
        "visited": 0,
        "verdicts": {},
        "audits": _new_tallies(),
        "codes": set(),
        "mutants": 0,
    }
    for part, spec in zip(_run_chunks(_exhaustive_chunk, chunks, workers), chunks):
        _merge_chunk(acc, part)
        if on_chunk is not None:
            on_chunk(
                {
                    "chunk": [spec[1], spec[2]],
                    "visited": part["visited"],
                    "failures": sum(t["failed"] for t in part["audits"].values()),
                }
            )
    return _finish_report(acc, order, "exhaustive", (), 0, workers, started)


# -- per-graph audits (random mode) ----------------------------------------------------


def _audit_graph(
    g: Digraph, audits: tuple, tallies: dict, codes: set
) -> str:
    """Run the selected audits on one graph; returns its verdict name."""
    prime = is_indecomposable(g)
    if "indec_dual_route" in audits and g.n <= SUBSET_ORACLE_BOUND:
        oracle = len(nontrivial_intervals(g)) == 0
        tallies["indec_dual_route"]["checked"] += 1
        if oracle != prime:
            tallies["indec_dual_route"]["failed"] += 1
    if "outside_partition" in audits or "extension_rules" in audits:
        out, inn = g.out_rows, g.in_rows
        for size in (3, 4):
            if size > g.n - 1:
                continue
            for xs in itertools.combinations(range(g.n), size):
                if not _prime_mask(out, inn, mask_of(xs)):
                    continue
                if "outside_partition" in audits:
                    tallies["outside_partition"]["checked"] += 1
                    try:
                        outside_partition(g, xs)
                    except TheoremViolation:
                        tallies["outside_partition"]["failed"] += 1
                if "extension_rules" in audits:
                    try:
                        fired = check_outside_rules(g, xs)
                        tallies["extension_rules"]["checked"] += fired
                    except TheoremViolation:
                        tallies["extension_rules"]["failed"] += 1
    if not prime:
        return DECOMPOSABLE
    out, inn = g.out_rows, g.in_rows
    if "two_vertex_extension" in audits:
        for size in (3, 4):
            if g.n - size < 2:
                continue
            for xs in itertools.combinations(range(g.n), size):
                if not _prime_mask(out, inn, mask_of(xs)):
                    continue
                tallies["two_vertex_extension"]["checked"] += 1
                try:
                    extend_by_two(g, xs)
                except TheoremViolation:
                    tallies["two_vertex_extension"]["failed"] += 1
    if "small_indecomposable" in audits and g.n >= 5:
        for a in range(g.n):
            tallies["small_indecomposable"]["checked"] += 1
            try:
                small_indecomposable_around(g, a)
            except TheoremViolation:
                tallies["small_indecomposable"]["failed"] += 1
    if "critical_vertex_rules" in audits and g.n >= 5:
        results = check_lemma21(g)
        tallies["critical_vertex_rules"]["checked"] += len(results)
        tallies["critical_vertex_rules"]["failed"] += sum(
            1 for ok in results.values() if not ok
        )
    report = critical_vertices(g)
    if report.defect == 0:
        return CRITICAL
    if report.defect >= 2:
        return MINUS_K_CRITICAL
    codes.add(canonical_code(g).hex())
    if g.n < 7:
        return OUT_OF_SCOPE_ORDER
    outcome = classify(g)
    tallies["family_classification"]["checked"] += 1
    if outcome.verdict == THEOREM_VIOLATION:
        tallies["family_classification"]["failed"] += 1
    return outcome.verdict


def _random_graph(order: int, pairs: list, rng) -> Digraph:
    out_rows = [0] * order
    for p, (x, y) in enumerate(pairs):
        d = int(rng.integers(0, 4))
        if d in (1, 3):
            out_rows[x] |= 1 << y
        if d in (2, 3):
            out_rows[y] |= 1 << x
    return Digraph(order, out_rows)


def _random_chunk(args: tuple) -> dict:
    order, seed, chunk_index, count, audits = args
    rng = np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(chunk_index,)))
    )
    pairs = list(itertools.combinations(range(order), 2))
    tallies = _new_tallies()
    verdicts: dict = {}
    codes: set = set()
    for _ in range(count):
        g = _random_graph(order, pairs, rng)
        verdict = _audit_graph(g, audits, tallies, codes)
        verdicts[verdict] = verdicts.get(verdict, 0) + 1
    return {
        "visited": count,
        "verdicts": verdicts,
        "audits": tallies,
        "codes": codes,
        "mutants": 0,
    }


def _mutant_chunk(args: tuple) -> dict:
    order, seed, chunk_index, audits = args
    rng = np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(chunk_index,)))
    )
    pairs = list(itertools.combinations(range(order), 2))
    tallies = _new_tallies()
    verdicts: dict = {}
    codes: set = set()
    members = enum_family_members(order)
    for member in members:
        g = member.graph
        p = int(rng.integers(0, len(pairs)))
        x, y = pairs[p]
        old = int(pair_type(g, x, y))
        new = int(rng.integers(0, 3))
        if new >= old:
            new += 1
        out_rows = list(g.out_rows)
        out_rows[x] &= ~(1 << y)
        out_rows[y] &= ~(1 << x)
        if new in (1, 3):
            out_rows[x] |= 1 << y
        if new in (2, 3):
            out_rows[y] |= 1 << x
        mutant = Digraph(order, out_rows)
        verdict = _audit_graph(mutant, audits, tallies, codes)
        verdicts[verdict] = verdicts.get(verdict, 0) + 1
    return {
        "visited": len(members),
        "verdicts": verdicts,
        "audits": tallies,
        "codes": codes,
        "mutants": len(members),
    }


def survey_random(
    order: int,
    samples: int,
    seed: int,
    *,
    workers: int = 1,
    audits: Optional[tuple] = None,
    mutate_members: bool = True,
    on_chunk: Optional[Callable[[dict], None]] = None,
) -> SurveyReport:
    """Audit seeded random assignments, plus one-pair mutants of every
    family member of the order (when any exist)."""
    if not 3 <= order <= RANDOM_ORDER_BOUND:
        raise DigraphError(f"survey_random: order must be in 3..{RANDOM_ORDER_BOUND}")
    if samples < 0:
        raise DigraphError("survey_random: samples must be nonnegative")
    if audits is None:
        audits = AUDIT_NAMES
    started = time.time()
    chunks = []
    index = 0
    remaining = samples
    while remaining > 0:
        size = min(RANDOM_CHUNK, remaining)
        chunks.append((order, seed, index, size, tuple(audits)))
        remaining -= size
        index += 1
    specs = [(_random_chunk, c) for c in chunks]
    if mutate_members and 7 <= order <= MAX_ENUM_ORDER:
        specs.append((_mutant_chunk, (order, seed, index, tuple(audits))))
    acc = {
        "visited": 0,
        "verdicts": {},
        "audits": _new_tallies(),
        "codes": set(),
        "mutants": 0,
    }
    runners = [fn for fn, _ in specs]
    args = [a for _, a in specs]
    for i, part in enumerate(_run_mixed_chunks(runners, args, workers)):
        _merge_chunk(acc, part)
        if on_chunk is not None:
            on_chunk(
                {
                    "chunk": i,
                    "visited": part["visited"],
                    "mutants": part.get("mutants", 0),
                    "failures": sum(t["failed"] for t in part["audits"].values()),
                }
            )
    return _finish_report(
        acc, order, "random", (seed,), samples, workers, started
    )


def _dispatch_mixed(packed: tuple) -> dict:
    fn, args = packed
    return fn(args)


def _run_chunks(fn: Callable, chunk_args: list, workers: int):
    return _run_mixed_chunks([fn] * len(chunk_args), chunk_args, workers)


def _run_mixed_chunks(fns: list, chunk_args: list, workers: int):
    packed = list(zip(fns, chunk_args))
    if workers <= 1 or len(packed) <= 1:
        for item in packed:
            yield _dispatch_mixed(item)
        return
    with get_context("fork").Pool(workers) as pool:
        yield from pool.imap(_dispatch_mixed, packed)


# -- generator/classifier round trip -----------------------------------------------------


@dataclass
class RoundtripReport:
    """Per-order tallies of members whose classification matched."""

    orders: tuple
    members: dict = field(default_factory=dict)
    matched: dict = field(default_factory=dict)
    violations: tuple = ()
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations and all(
            self.matched[o] == self.members[o] for o in self.members
        )

    def to_json(self) -> dict:
        return {
            "orders": list(self.orders),
            "members": {str(o): c for o, c in sorted(self.members.items())},
            "matched": {str(o): c for o, c in sorted(self.matched.items())},
            "violations": [list(v) for v in self.violations],
            "elapsed": round(self.elapsed, 3),
            "ok": self.ok,
        }


def roundtrip_check(orders: Iterable[int]) -> RoundtripReport:
    """Classify every generated member of each order; report mismatches."""
    wanted = tuple(orders)
    for order in wanted:
        if not 7 <= order <= MAX_ENUM_ORDER:
            raise DigraphError(
                f"roundtrip_check: order {order} outside 7..{MAX_ENUM_ORDER}"
            )
    started = time.time()
    report = RoundtripReport(orders=wanted)
    violations = []
    for order in wanted:
        members = enum_family_members(order)
        matched = 0
        for member in members:
            outcome = classify(member.graph)
            if outcome.verdict == MINUS_ONE_CRITICAL:
                matched += 1
            else:
                violations.append(
                    (order, member.family, repr(member.params), outcome.verdict)
                )
        report.members[order] = len(members)
        report.matched[order] = matched
    report.violations = tuple(violations)
    report.elapsed = time.time() - started
    return report
