"""Acceptance suite: one test per criterion, each printing a pass/fail line.

The heavy sweeps run once as session fixtures and are shared between
criteria.  Run with `pytest tests/test_acceptance.py -v -s` to see the
per-criterion lines and timings.
"""

import random
import time

import pytest

from p5house import census
from p5house.modular import find_proper_homogeneous_set
from p5house.oracle import PatternKind, find_induced, is_class_member
from p5house.skewpart import lemma_violations
from p5house.divide import unify
from p5house.decomposer import decompose, recompose, verify_tree
from p5house.generator import GenConfig, generate, random_composable_pair
from p5house.treedoc import tree_to_document

ALL_PATTERNS = (PatternKind.P5, PatternKind.HOUSE, PatternKind.C5)


class _Collector:
    def __init__(self):
        self.skew_events = []
        self.factor_events = []

    def on_skew_decomposition(self, work, sp, d, case):
        self.skew_events.append((work, sp, d, case))

    def on_factor(self, work, divide, pair):
        self.factor_events.append((work, divide, pair))


def _report(name, ok, detail):
    status = "PASS" if ok else "FAIL"
    print(f"{status} {name}: {detail}")
    assert ok, f"{name}: {detail}"


@pytest.fixture(scope="session")
def sweep6():
    collector = _Collector()
    t0 = time.time()
    result = census.run_sweep(6, triple=False, observer=collector)
    return result, collector, time.time() - t0


@pytest.fixture(scope="session")
def sweep6_triple():
    collector = _Collector()
    t0 = time.time()
    result = census.run_sweep(6, triple=True, observer=collector)
    return result, collector, time.time() - t0


def test_criterion_1_exhaustive_grammar_equivalence(sweep6):
    """Over all labeled graphs on up to six vertices, decompose succeeds
    exactly on the oracle-certified members, every tree verifies, and
    recomposition is label-exact."""
    result, _, elapsed = sweep6
    total = sum(r.total for r in result.rows)
    for r in result.rows:
        expected = 1 << (r.n * (r.n - 1) // 2)
        assert r.total == expected, f"n={r.n}: enumerated {r.total} of {expected}"
    members = sum(r.members for r in result.rows)
    _report(
        "criterion 1 (exhaustive grammar equivalence)",
        result.mismatch_count == 0,
        f"{total} labeled graphs (n<=6), {members} members, "
        f"{result.mismatch_count} mismatches, {elapsed:.1f}s",
    )


def test_criterion_2_triple_class_mode(sweep6_triple):
    """Same sweep with the pentagon forbidden: zero mismatches and no
    pentagon leaf in any tree (the sweep itself flags any)."""
    result, _, elapsed = sweep6_triple
    members = sum(r.members for r in result.rows)
    _report(
        "criterion 2 (triple-class mode)",
        result.mismatch_count == 0,
        f"{members} members, {result.mismatch_count} mismatches, {elapsed:.1f}s",
    )


def test_criterion_3_pentagon_trichotomy():
    """Every prime member on up to seven labeled vertices containing an
    induced pentagon is exactly the pentagon."""
    t0 = time.time()
    exceptions = []
    checked = 0
    with_c5 = 0

    def consider(g):
        nonlocal checked, with_c5
        checked += 1
        if find_induced(g, PatternKind.C5) is None:
            return
        with_c5 += 1
        if find_proper_homogeneous_set(g) is not None:
            return
        is_pentagon = g.n == 5 and g.is_connected() and all(g.degree(v) == 2 for v in g.vertices)
        if not is_pentagon:
            exceptions.append(g.edges())

    base_masks = []
    pairs6 = census.pair_table(6)
    for n in range(7):
        for g in census.labeled_graphs(n):
            if is_class_member(g):
                consider(g)
                if n == 6:
                    base_masks.append(
                        sum(1 << k for k, (i, j) in enumerate(pairs6) if g.has_edge(i, j))
                    )
    for g in census.extend_members(6, base_masks):
        consider(g)
    _report(
        "criterion 3 (pentagon trichotomy, n<=7)",
        not exceptions,
        f"{checked} members checked, {with_c5} contain a pentagon, "
        f"{len(exceptions)} exceptions, {time.time()-t0:.1f}s",
    )


def test_criterion_4_composition_closure():
    """1,000 seeded random composable pairs: whenever both sides avoid a
    pattern, so does their unification."""
    t0 = time.time()
    rng = random.Random(0xC0FFEE)
    failures = 0
    checks = 0
    for _ in range(1000):
        pair = random_composable_pair(rng)
        glued = unify(pair)
        for kind in ALL_PATTERNS:
            if find_induced(pair.g1, kind) is None and find_induced(pair.g2, kind) is None:
                checks += 1
                if find_induced(glued, kind) is not None:
                    failures += 1
    _report(
        "criterion 4 (composition preserves freeness)",
        failures == 0,
        f"1000 pairs, {checks} pattern checks, {failures} failures, {time.time()-t0:.1f}s",
    )


def test_criterion_5_factorizations_stay_free(sweep6):
    """At least 1,000 factorizations produced by decompose: both factors of
    every one are free of all three patterns."""
    t0 = time.time()
    _, collector, _ = sweep6
    events = list(collector.factor_events)
    seed = 0
    while len(events) < 1000:
        seed += 1
        g, _ = generate(
            GenConfig(
                seed=seed,
                max_depth=4,
                leaf_size=(2, 6),
                weights={"split": 1.0, "pentagon": 0.5, "subst": 3.0, "sgu": 3.0, "cosgu": 3.0},
            )
        )
        local = _Collector()
        decompose(g, observer=local)
        events.extend(local.factor_events)
    failures = 0
    for _, _, pair in events:
        for part in (pair.g1, pair.g2):
            for kind in ALL_PATTERNS:
                if find_induced(part, kind) is not None:
                    failures += 1
    _report(
        "criterion 5 (factors stay pattern-free)",
        failures == 0,
        f"{len(events)} factorizations ({len(collector.factor_events)} from the sweep, "
        f"rest from {seed} generated members), {failures} failures, {time.time()-t0:.1f}s",
    )


def test_criterion_6_unification_counterexample_fixture():
    """The path/house fixture: the unification is house-free although its
    second factor is a house, and its edge set matches exactly."""
    from test_divide import remark_pair

    pair = remark_pair()
    glued = unify(pair)
    expected = {(0, 4), (0, 1), (0, 2), (1, 3), (1, 4), (2, 4), (3, 4)}
    ok = (
        set(glued.edges()) == expected
        and find_induced(glued, PatternKind.HOUSE) is None
        and find_induced(pair.g2, PatternKind.HOUSE) is not None
        and is_class_member(glued)
    )
    _report(
        "criterion 6 (counterexample fixture)",
        ok,
        f"unified edges {sorted(glued.edges())}, house-free with a house factor",
    )


def test_criterion_7_skew_partition_lemma_suite(sweep6, sweep6_triple):
    """Every skew decomposition constructed during the exhaustive sweeps
    passes every applicable lemma assertion."""
    t0 = time.time()
    violations = 0
    seen = 0
    for _, collector, _ in (sweep6, sweep6_triple):
        for work, sp, d, case in collector.skew_events:
            seen += 1
            violations += len(lemma_violations(work, d))
    _report(
        "criterion 7 (skew-partition lemma suite)",
        seen > 0 and violations == 0,
        f"{seen} decompositions re-checked, {violations} violations, {time.time()-t0:.1f}s",
    )


def test_criterion_8_generator_soundness():
    """500 generated graphs across depths 1..4: all pass the oracle, all
    trees verify, and regeneration from the same seed is byte-identical."""
    t0 = time.time()
    bad_member = bad_verify = bad_repeat = 0
    pentagon_free_checked = 0
    for i in range(500):
        depth = 1 + i % 4
        cfg = GenConfig(seed=10_000 + i, max_depth=depth, leaf_size=(1, 6))
        g, t = generate(cfg)
        if not is_class_member(g):
            bad_member += 1
        rep = verify_tree(t, g)
        if not rep.ok or recompose(t) != g:
            bad_verify += 1
        if rep.leaf_counts["pentagon"] == 0:
            pentagon_free_checked += 1
            if not is_class_member(g, triple=True):
                bad_member += 1
        g2, t2 = generate(cfg)
        if tree_to_document(t2, g2) != tree_to_document(t, g):
            bad_repeat += 1
    ok = bad_member == bad_verify == bad_repeat == 0
    _report(
        "criterion 8 (generator soundness)",
        ok,
        f"500 samples ({pentagon_free_checked} pentagon-free), "
        f"{bad_member} membership / {bad_verify} verification / {bad_repeat} determinism "
        f"failures, {time.time()-t0:.1f}s",
    )


def test_criterion_9_random_large_members():
    """200 generated members with 15..40 vertices decompose, verify, and
    recompose; the oracle re-certifies 20 of them in full."""
    t0 = time.time()
    failures = 0
    collected = 0
    spot_checked = 0
    seed = 0
    while collected < 200:
        seed += 1
        if seed > 5000:
            pytest.fail("could not collect 200 members in the size window")
        g, _ = generate(
            GenConfig(
                seed=900_000 + seed,
                max_depth=4,
                leaf_size=(2, 6),
                weights={"split": 1.0, "pentagon": 0.5, "subst": 3.0, "sgu": 3.0, "cosgu": 3.0},
            )
        )
        if not 15 <= g.n <= 40:
            continue
        collected += 1
        tree = decompose(g)
        if recompose(tree) != g or not verify_tree(tree, g).ok:
            failures += 1
        if collected % 10 == 0:
            spot_checked += 1
            if not is_class_member(g):
                failures += 1
    _report(
        "criterion 9 (random large members)",
        failures == 0,
        f"200 members (15 <= n <= 40) decomposed and verified, "
        f"{spot_checked} full oracle re-certifications, {failures} failures, "
        f"{time.time()-t0:.1f}s",
    )
