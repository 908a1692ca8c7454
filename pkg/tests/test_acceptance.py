"""Acceptance criteria 1-8, one PASS/FAIL line each.

Lines are collected in ``RESULTS`` and printed at the end of the pytest run
(see ``conftest.py``); running this file directly prints them as well.
Pinned tolerances: zero counterexamples everywhere, the wall-time ceilings
below, at least 100 pullback squares for criterion 8, and search bound 9 for
the central witness track.
"""

from __future__ import annotations

import time

import pytest

from galoiskit.algebra import are_isomorphic
from galoiskit.completions import (
    abelianize,
    group_complete_commutative,
    group_complete_general,
    ring_complete,
    verify_universal_property,
)
from galoiskit.enumeration import (
    enumerate_abelian_groups,
    enumerate_groups,
    enumerate_monoids,
    enumerate_rings,
    enumerate_semirings,
)
from galoiskit.surveys import LEMMA_B_ORDER_CAP, run_survey

MAX_ORDER = 3
CENTRAL_SEARCH_BOUND = 9
PROBE_BOUND = 4
CRITERION_1_SECONDS = 5 * 60
CRITERION_5_SECONDS = 10 * 60
MIN_PULLBACK_SQUARES = 100
LEMMA_PRODUCT_BOUND = 8

RESULTS: dict[str, str] = {}


def record(key: str, ok: bool, detail: str) -> None:
    RESULTS[key] = f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}"


def summarize(report) -> str:
    return f"{report.survey}/{report.ctx}: {report.instances} instances, {len(report.counterexamples)} counterexamples"


def test_criterion_1_trivial_split_iff_special_homogeneous():
    start = time.perf_counter()
    r = run_survey("trivial-vs-special-homogeneous", "MonGp", MAX_ORDER)
    elapsed = time.perf_counter() - start
    ok = r.passed and elapsed <= CRITERION_1_SECONDS
    record("1", ok, f"{summarize(r)}, {elapsed:.1f}s")
    assert r.passed, r.counterexamples
    assert elapsed <= CRITERION_1_SECONDS


def test_criterion_2_normal_central_special_homogeneous_groups():
    r = run_survey("normal-central-equivalence", "MonGp", MAX_ORDER, search_bound=CENTRAL_SEARCH_BOUND)
    agree = r.tallies["witness-track-agrees"]["false"] == 0
    record("2", r.passed and agree, f"{summarize(r)}, witness track (bound {CENTRAL_SEARCH_BOUND}) never contradicts")
    assert r.passed, r.counterexamples
    assert agree


def test_criterion_3_abelian_core_dual_route():
    r = run_survey("gamma-ab-prop66", "MonAb", MAX_ORDER, search_bound=CENTRAL_SEARCH_BOUND)
    record("3", r.passed, summarize(r))
    assert r.passed, r.counterexamples


def test_criterion_4_product_lemma_enumerable_scope():
    r = run_survey("ab-product-lemma", "MonAb", LEMMA_PRODUCT_BOUND)
    covered = r.passed and r.instances > 0
    detail = f"{summarize(r)}; B enumerated up to order {LEMMA_B_ORDER_CAP}"
    if r.notes:
        # the full criterion is reported by the coverage test below
        RESULTS.setdefault("4", f"criterion 4: FAIL  {detail}; not covered: N = 1 with |B| in 6..8")
    else:
        record("4", covered, detail)
    assert r.passed, r.counterexamples


@pytest.mark.xfail(strict=True, reason="monoids of order 6-8 cannot be enumerated at desk scale")
def test_criterion_4_product_lemma_full_scope():
    r = run_survey("ab-product-lemma", "MonAb", LEMMA_PRODUCT_BOUND)
    assert not r.notes, r.notes


def test_criterion_5_normalisation_universal():
    start = time.perf_counter()
    r = run_survey("norm-universal", "MonAb", MAX_ORDER, probe_bound=PROBE_BOUND)
    elapsed = time.perf_counter() - start
    normal = r.tallies["norm-normal"]["false"] == 0 and r.tallies["norm-normal"]["inconclusive"] == 0
    universal = r.tallies["universal"]["true"] == r.instances
    ok = r.passed and normal and universal and elapsed <= CRITERION_5_SECONDS
    record("5", ok, f"{summarize(r)}, probe bound {PROBE_BOUND}, {elapsed:.1f}s")
    assert r.passed, r.counterexamples
    assert normal and universal
    assert elapsed <= CRITERION_5_SECONDS


def test_criterion_6_g7_closure():
    reports = [run_survey("g7-closure", ctx, MAX_ORDER) for ctx in ("MonGp", "MonAb")]
    ok = all(r.passed and r.tallies["implication"]["false"] == 0 for r in reports)
    undecided = sum(r.tallies["implication"]["inconclusive"] for r in reports)
    # a vertical arrow may be undecided (reflection over the bound) while the implication is still settled
    partial = sum(r.tallies[k]["inconclusive"] for r in reports for k in ("f'-normal", "f''-normal"))
    detail = "; ".join(summarize(r) for r in reports)
    record("6", ok and undecided == 0, f"{detail}; {partial} vertical verdict(s) undecided, implication settled in all")
    assert ok
    assert undecided == 0


def test_criterion_7_completion_cross_oracles():
    groups = list(enumerate_groups(6))
    abelian = list(enumerate_abelian_groups(6))
    rings = list(enumerate_rings(6))
    failures = []
    monoids = list(enumerate_monoids(4))
    for m in monoids:
        general = group_complete_general(m)
        checks = [(general, groups), (abelianize(m), abelian)]
        if m.is_commutative:
            comm = group_complete_commutative(m)
            if not are_isomorphic(comm.object, general.object):
                failures.append(("commutative vs general", m))
            checks.append((comm, groups))
        for r, probes in checks:
            if not verify_universal_property(r, probes):
                failures.append(("universal", m))
    semirings = list(enumerate_semirings(3))
    for s in semirings:
        try:
            r = ring_complete(s)
        except ValueError:
            failures.append(("representatives", s))
            continue
        if not verify_universal_property(r, rings):
            failures.append(("universal", s))
    record(
        "7",
        not failures,
        f"{len(monoids)} monoids, {len(semirings)} semirings, probes: {len(groups)} groups, "
        f"{len(abelian)} abelian groups, {len(rings)} rings; {len(failures)} failures",
    )
    assert not failures, failures


def test_criterion_8_reflector_preserves_pullbacks():
    reports = [run_survey("reflector-preserves-pullbacks", ctx, MAX_ORDER) for ctx in ("MonGp", "MonAb", "SRngRng")]
    ok = all(r.passed and r.instances >= MIN_PULLBACK_SQUARES for r in reports)
    record("8", ok, "; ".join(summarize(r) for r in reports))
    for r in reports:
        assert r.passed, r.counterexamples
        assert r.instances >= MIN_PULLBACK_SQUARES


if __name__ == "__main__":
    import sys

    status = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_") and not name.endswith("full_scope"):
            try:
                fn()
            except AssertionError:
                status = 1
    for key in sorted(RESULTS):
        print(RESULTS[key])
    sys.exit(status)
