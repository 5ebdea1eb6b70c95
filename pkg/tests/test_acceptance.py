"""Acceptance suite: ten end-to-end criteria, one test and one printed
pass/fail line each.

Shared corpora are built once per module: the exhaustive order-4 and
order-5 sweeps, and a seeded random corpus of 10^4 graphs of orders 6..8
audited with every structural check enabled.
"""

from __future__ import annotations

import time

import numpy as np
import pytest

from indecomp.classifier import (
    MINUS_ONE_CRITICAL,
    OUT_OF_SCOPE_ORDER,
    THEOREM_VIOLATION,
    classify,
)
from indecomp.core import complement, dual, find_isomorphism
from indecomp.criticality import (
    critical_vertices,
    indecomposability_graph,
    recognize_shape,
    support,
)
from indecomp.families import (
    enum_family_members,
    gen_H,
    gen_Q5,
    gen_R,
    gen_T,
    gen_U,
    gen_V,
)
from indecomp.harness import (
    _random_graph,
    roundtrip_check,
    survey_exhaustive,
    survey_random,
)
from indecomp.modular import is_indecomposable

CORPUS_SEED = 20260819


def _verdict(num: int, ok: bool, detail: str, elapsed: float) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"[{status}] criterion {num:2d} ({elapsed:6.1f}s): {detail}", flush=True)
    assert ok, f"criterion {num}: {detail}"


@pytest.fixture(scope="module")
def exhaustive4():
    return survey_exhaustive(4)


@pytest.fixture(scope="module")
def exhaustive5():
    return survey_exhaustive(5)


@pytest.fixture(scope="module")
def random_corpus():
    plan = ((6, 4000), (7, 3000), (8, 3000))
    return {
        order: survey_random(
            order, samples, CORPUS_SEED + order, mutate_members=False
        )
        for order, samples in plan
    }


def _tally(reports, name):
    checked = sum(r.audits[name]["checked"] for r in reports)
    failed = sum(r.audits[name]["failed"] for r in reports)
    return checked, failed


def test_criterion_01_dual_route_exhaustive(exhaustive4, exhaustive5):
    started = time.time()
    checked, failed = _tally((exhaustive4, exhaustive5), "indec_dual_route")
    runtime = exhaustive4.elapsed + exhaustive5.elapsed
    ok = (
        checked == 4**6 + 4**10
        and failed == 0
        and exhaustive4.visited == 4**6
        and exhaustive5.visited == 4**10
        and runtime <= 60.0
    )
    _verdict(
        1,
        ok,
        f"closure vs subset oracle on {checked} graphs of orders 4..5, "
        f"{failed} disagreements, sweeps took {runtime:.1f}s",
        time.time() - started,
    )


def test_criterion_02_partition_and_extension_rules(exhaustive5, random_corpus):
    started = time.time()
    reports = (exhaustive5, *random_corpus.values())
    part_checked, part_failed = _tally(reports, "outside_partition")
    rule_checked, rule_failed = _tally(reports, "extension_rules")
    sampled = sum(r.visited for r in random_corpus.values())
    ok = (
        part_checked > 0
        and rule_checked > 0
        and part_failed == 0
        and rule_failed == 0
        and sampled == 10_000
    )
    _verdict(
        2,
        ok,
        f"partition property x{part_checked}, extension rules x{rule_checked}, "
        f"0 violations over all order-5 graphs and {sampled} samples of orders 6..8",
        time.time() - started,
    )


def test_criterion_03_existence_operations(exhaustive5, random_corpus):
    started = time.time()
    reports = (exhaustive5, *random_corpus.values())
    ext_checked, ext_failed = _tally(reports, "two_vertex_extension")
    small_checked, small_failed = _tally(reports, "small_indecomposable")
    ok = (
        ext_checked > 0
        and small_checked > 0
        and ext_failed == 0
        and small_failed == 0
    )
    _verdict(
        3,
        ok,
        f"two-vertex extension x{ext_checked} and local indecomposable "
        f"search x{small_checked}, 0 theorem-violation diagnostics",
        time.time() - started,
    )


def test_criterion_04_critical_vertex_rules(exhaustive5, random_corpus):
    started = time.time()
    reports = (exhaustive5, *random_corpus.values())
    checked, failed = _tally(reports, "critical_vertex_rules")
    ok = checked > 0 and failed == 0
    _verdict(
        4,
        ok,
        f"critical-vertex degree and interval rules x{checked}, {failed} violations",
        time.time() - started,
    )


def test_criterion_05_named_graph_claims():
    started = time.time()
    problems = []
    for n in range(2, 9):
        r = gen_R(n)
        report = critical_vertices(r)
        if report.noncritical != (2 * n,):
            problems.append(f"gen_R({n}) noncritical")
        if find_isomorphism(r, dual(r)) is None:
            problems.append(f"gen_R({n}) autodual")
        ig = indecomposability_graph(r)
        sup = support(ig)
        shape = recognize_shape(ig, restricted_to=sup.component)
        if sup.isolated != (2 * n,) or shape.kind != "path" or shape.path_edges != 2 * n - 1:
            problems.append(f"gen_R({n}) deletion-graph shape")
        h = gen_H(n)
        report = critical_vertices(h)
        if report.noncritical != (0,):
            problems.append(f"gen_H({n}) noncritical")
        shape = recognize_shape(indecomposability_graph(h))
        if shape.kind != "cycle" or shape.cycle_vertices != 2 * n + 1:
            problems.append(f"gen_H({n}) deletion-graph shape")
        for fn in (gen_T, gen_U, gen_V):
            if critical_vertices(fn(n)).defect != 0:
                problems.append(f"{fn.__name__}({n}) criticality")
    elapsed = time.time() - started
    ok = not problems and elapsed <= 30.0
    _verdict(
        5,
        ok,
        f"gen_R/gen_H/gen_T/gen_U/gen_V claims for n in 2..8"
        + (f"; problems: {problems[:4]}" if problems else ""),
        elapsed,
    )


def test_criterion_06_shape_trichotomy():
    started = time.time()
    problems = []
    graphs_seen = 0
    for order in range(7, 12):
        for member in enum_family_members(order):
            for label, g in (
                ("base", member.graph),
                ("complement", complement(member.graph)),
                ("dual", dual(member.graph)),
            ):
                graphs_seen += 1
                ig = indecomposability_graph(g)
                sup = support(ig)
                if sup.component is None:
                    problems.append((order, member.family, label, "no component"))
                    continue
                shape = recognize_shape(ig, restricted_to=sup.component)
                if shape.kind == "cycle":
                    if shape.cycle_vertices % 2 == 0 or shape.cycle_vertices != g.n:
                        problems.append((order, member.family, label, "cycle"))
                elif shape.kind == "path":
                    if shape.path_edges < 2:
                        problems.append((order, member.family, label, "short path"))
                elif shape.kind == "star_tree":
                    noncrit = critical_vertices(g).noncritical
                    lengths = shape.branch_lengths
                    odd = [b for b in lengths if b % 2 == 1]
                    if (
                        noncrit != (shape.source,)
                        or any(b < 2 for b in lengths)
                        or len(odd) > 1
                        or any(b < 3 for b in odd)
                    ):
                        problems.append((order, member.family, label, "star tree"))
                else:
                    problems.append((order, member.family, label, shape.kind))
    elapsed = time.time() - started
    ok = not problems and elapsed <= 300.0
    _verdict(
        6,
        ok,
        f"deletion-graph shape trichotomy on {graphs_seen} graphs "
        f"(members of orders 7..11 with complements and duals)"
        + (f"; problems: {problems[:3]}" if problems else ""),
        elapsed,
    )


def test_criterion_07_roundtrip():
    started = time.time()
    report = roundtrip_check(range(7, 11))
    mismatch = 0
    extra = 0
    for order in range(7, 11):
        for member in enum_family_members(order):
            for g in (complement(member.graph), dual(member.graph)):
                extra += 1
                if classify(g).verdict != MINUS_ONE_CRITICAL:
                    mismatch += 1
    elapsed = time.time() - started
    total = sum(report.members.values())
    ok = report.ok and mismatch == 0 and elapsed <= 600.0
    _verdict(
        7,
        ok,
        f"classify recovered a family match for {total} members of orders "
        f"7..10 plus {extra} explicit complements/duals, "
        f"{len(report.violations) + mismatch} failures",
        elapsed,
    )


def test_criterion_08_falsification_sampling():
    started = time.time()
    sampled = survey_random(
        7,
        100_000,
        CORPUS_SEED,
        audits=("family_classification",),
        mutate_members=True,
    )
    mutants8 = survey_random(
        8,
        0,
        CORPUS_SEED + 1,
        audits=("family_classification",),
        mutate_members=True,
    )
    elapsed = time.time() - started
    violations = sampled.verdict_counts.get(THEOREM_VIOLATION, 0) + \
        mutants8.verdict_counts.get(THEOREM_VIOLATION, 0)
    checked, failed = _tally((sampled, mutants8), "family_classification")
    ok = (
        sampled.samples == 100_000
        and sampled.mutants == 340
        and mutants8.mutants == 574
        and checked > 0
        and failed == 0
        and violations == 0
    )
    _verdict(
        8,
        ok,
        f"100000 random order-7 graphs plus {sampled.mutants + mutants8.mutants} "
        f"one-pair family mutants of orders 7..8: {checked} defect-one finds "
        f"classified, {violations} theorem violations",
        elapsed,
    )


def test_criterion_09_q5_boundary():
    started = time.time()
    q = gen_Q5()
    report = critical_vertices(q)
    ig = indecomposability_graph(q)
    outcome = classify(q)
    ok = (
        report.defect == 1
        and not ig.edges
        and outcome.verdict == OUT_OF_SCOPE_ORDER
    )
    _verdict(
        9,
        ok,
        f"boundary graph: defect {report.defect}, {len(ig.edges)} deletion-graph "
        f"edges, verdict '{outcome.verdict}'",
        time.time() - started,
    )


def test_criterion_10_symmetry_invariance():
    started = time.time()
    per_order = 2000
    mismatches = 0
    seen = 0
    for order in range(5, 10):
        rng = np.random.Generator(
            np.random.PCG64(np.random.SeedSequence(CORPUS_SEED, spawn_key=(order,)))
        )
        pairs = [(x, y) for x in range(order) for y in range(x + 1, order)]
        found = 0
        while found < per_order:
            g = _random_graph(order, pairs, rng)
            if not is_indecomposable(g):
                continue
            found += 1
            seen += 1
            ig = indecomposability_graph(g)
            crit = critical_vertices(g).critical
            for variant in (complement(g), dual(g)):
                if indecomposability_graph(variant).edges != ig.edges:
                    mismatches += 1
                elif critical_vertices(variant).critical != crit:
                    mismatches += 1
    elapsed = time.time() - started
    ok = seen == 10_000 and mismatches == 0
    _verdict(
        10,
        ok,
        f"deletion graph and critical set preserved under complement and dual "
        f"for {seen} seeded indecomposable graphs of orders 5..9, "
        f"{mismatches} mismatches",
        elapsed,
    )
