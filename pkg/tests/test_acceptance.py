"""Acceptance criteria, one test per criterion, each reporting a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python tests/test_acceptance.py`` for the summary lines alone.
"""

import time

import pytest

from cubicbase.analysis import UNEXPLAINED, classify
from cubicbase.corpus import corpus
from cubicbase.verify import (
    SWEEP_AUT_CAP,
    colouring_checks,
    corollary_checks,
    fpr_checks,
    px_base_checks,
    px_order_checks,
    splitmerge_checks,
    spx_sweep_checks,
    star_checks,
    table1_checks,
)

RESULTS: dict[str, str] = {}


def record(key, title, checks, elapsed, limit=None):
    failed = [c for c in checks if not c.passed]
    over = limit is not None and elapsed > limit
    ok = not failed and not over
    detail = f"{len(checks) - len(failed)}/{len(checks)} checks, {elapsed:.1f}s"
    if limit is not None:
        detail += f" (limit {limit}s)"
    if failed:
        detail += "; failing: " + "; ".join(f"{c.name} (expected {c.expected}, computed {c.computed})" for c in failed)
    line = f"{'PASS' if ok else 'FAIL'} criterion {key}: {title}: {detail}"
    RESULTS[key] = line
    print(line)
    return ok, line


def timed(fn):
    t0 = time.perf_counter()
    checks = list(fn())
    return checks, time.perf_counter() - t0


def test_criterion_1_table1():
    checks, dt = timed(table1_checks)
    ok, line = record("1", "exceptional graph table", checks, dt, limit=300)
    assert ok, line


def test_criterion_2_px_aut_orders():
    checks, dt = timed(px_order_checks)
    ok, line = record("2", "Aut orders of C(r,s)", checks, dt, limit=120)
    assert ok, line


def test_criterion_3_px_base_sizes():
    checks, dt = timed(px_base_checks)
    ok, line = record("3", "base sizes of Aut(C(r,s)) and K", checks, dt)
    assert ok, line


def test_criterion_4_spx_base_sizes():
    checks, dt = timed(spx_sweep_checks)
    ok, line = record("4", "base sizes of Aut(sC(r,s))", checks, dt)
    assert ok, line


def test_criterion_5_split_merge():
    checks, dt = timed(splitmerge_checks)
    ok, line = record("5", "split/merge round trip", checks, dt)
    assert ok, line


def test_criterion_6_exceptional_pairs():
    checks, dt = timed(star_checks)
    ok, line = record("6", "exceptional pairs", checks, dt, limit=180)
    assert ok, line


def test_criterion_7_colourings():
    checks, dt = timed(colouring_checks)
    ok, line = record("7", "asymmetric sets and 3-colourings", checks, dt)
    assert ok, line


def test_criterion_8_corollaries():
    checks, dt = timed(corollary_checks)
    ok, line = record("8", "corollaries on the corpus", checks, dt)
    assert ok, line


def test_criterion_9_fpr_identity():
    checks, dt = timed(fpr_checks)
    ok, line = record("9", "fixed-point-ratio identity", checks, dt)
    assert ok, line


def test_classification_closure():
    from cubicbase.verify import Check

    def gen():
        for e in corpus():
            rep = classify(e.graph, name=e.name, aut_cap=SWEEP_AUT_CAP)
            good = rep.consistent() and rep.verdict.kind != UNEXPLAINED
            yield Check("closure", e.name, "consistent verdict", str(rep.verdict), good)

    checks, dt = timed(gen)
    ok, line = record("closure", "classify() on the built-in corpus", checks, dt)
    assert ok, line


if __name__ == "__main__":
    import sys

    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    bad = 0
    for t in tests:
        try:
            t()
        except AssertionError:
            bad += 1
    sys.exit(1 if bad else 0)
