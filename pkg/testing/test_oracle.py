import math
import time

import pytest

from choice_tools import LinearOrder, Universe, WeakOrder, generate
from choice_tools import axioms, oracle
from choice_tools.oracle import (
    brute_force_rationalize,
    brute_force_representations,
    census_size,
    correspondence_at,
    enumerate_correspondences,
    enumerate_linear_orders,
    enumerate_weak_orders,
    ordered_partition_count,
    theorem1_sweep,
)

X, Y, Z = 0, 1, 2


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 3), (3, 13), (4, 75)])
def test_weak_order_counts(n, expected):
    orders = list(enumerate_weak_orders(n))
    assert len(orders) == expected
    assert len(set(orders)) == expected
    assert ordered_partition_count(n) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_linear_order_counts(n):
    assert len(list(enumerate_linear_orders(n))) == math.factorial(n)


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 3), (3, 189), (4, 26_254_935)])
def test_census_size(n, expected):
    assert census_size(n) == expected


@pytest.mark.parametrize("n", [1, 2, 3])
def test_census_stream_is_complete_and_distinct(n):
    tables = list(enumerate_correspondences(n))
    assert len(tables) == census_size(n)
    assert len({corr.key for corr in tables}) == census_size(n)


def test_correspondence_at_matches_stream():
    for index, corr in enumerate(enumerate_correspondences(3)):
        assert correspondence_at(3, index) == corr


def test_stream_restart_matches_full_stream():
    full = list(enumerate_correspondences(3))
    assert list(enumerate_correspondences(3, start=100, stop=120)) == full[100:120]


def test_correspondence_at_out_of_range():
    with pytest.raises(ValueError):
        correspondence_at(3, 189)


def test_census_limited_to_small_universes():
    with pytest.raises(ValueError):
        list(enumerate_correspondences(5))


def test_example1_representations(example1):
    pairs = brute_force_representations(example1)
    assert len(pairs) >= 7

    y_x_z = WeakOrder.from_classes([[Y], [X], [Z]])
    for linear_order in enumerate_linear_orders(3):
        assert (y_x_z, linear_order) in pairs
    assert (WeakOrder.from_classes([[X, Y], [Z]]), LinearOrder((Z, Y, X))) in pairs

    universe = Universe.from_size(3)
    for weak_order, linear_order in pairs:
        assert generate(weak_order, linear_order, universe) == example1


def test_example2_has_no_representation(example2):
    assert brute_force_representations(example2) == []


def test_lemma1_representations(lemma1):
    pairs = brute_force_representations(lemma1)
    assert (WeakOrder.total_indifference(3), LinearOrder((X, Y, Z))) in pairs


def test_rationalize(example1, lemma1):
    assert WeakOrder.from_classes([[Y], [X], [Z]]) in brute_force_rationalize(example1)
    assert brute_force_rationalize(lemma1) == []


def test_exhaustive_sweep_n3():
    report = theorem1_sweep(3)
    assert report.scanned == 189
    assert report.ok
    assert report.discrepancies == ()
    assert report.conditions_passing == report.representable == report.recovered


def test_exhaustive_sweep_sharded_matches_single():
    single = theorem1_sweep(2)
    sharded = theorem1_sweep(2, shards=2)
    assert sharded == single


def test_sample_sweep_n4_is_seeded():
    first = theorem1_sweep(4, mode="sample", count=500, seed=7)
    second = theorem1_sweep(4, mode="sample", count=500, seed=7)
    assert first == second
    assert first.scanned == 500
    assert first.seed == 7
    assert first.ok


def test_sample_sweep_checks_each_condition_once(monkeypatch):
    calls = []
    original = axioms.check_condition1

    def counting(corr):
        calls.append(corr.key)
        return original(corr)

    monkeypatch.setattr(axioms, "check_condition1", counting)
    report = theorem1_sweep(4, mode="sample", count=200, seed=3)
    assert report.ok
    assert len(calls) == 200


def test_sample_sweep_n4_within_time_budget():
    # one million seeded tables must finish inside a minute on a single process
    theorem1_sweep(4, mode="sample", count=50, seed=1)
    count = 3000
    start = time.perf_counter()
    report = theorem1_sweep(4, mode="sample", count=count, seed=42)
    elapsed = time.perf_counter() - start
    assert report.ok
    assert elapsed / count * 1_000_000 < 60


def test_exhaustive_sweep_n4_requires_opt_in():
    with pytest.raises(ValueError, match="long running"):
        theorem1_sweep(4)


def test_sweep_rejects_bad_mode():
    with pytest.raises(ValueError):
        theorem1_sweep(2, mode="random")
    with pytest.raises(ValueError):
        theorem1_sweep(2, mode="sample", count=0)


def test_sweep_report_frame():
    frame = theorem1_sweep(2).to_frame()
    assert len(frame) == 1
    assert frame.loc[0, "scanned"] == 3
    assert frame.loc[0, "discrepancies"] == 0


def test_census_frame_columns():
    frame = oracle.census_frame(2)
    assert len(frame) == 3
    expected = ["index", "alpha", "beta", "gamma", "nbc", "warp", "cond1", "cond2", "cond3", "cond4", "cond5"]
    assert list(frame.columns) == expected + ["representable", "rationalizable"]
