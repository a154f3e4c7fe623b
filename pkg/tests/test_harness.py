import csv
import io
from fractions import Fraction

import pytest

from rainbowlruc.errors import BadParameters, BudgetExceeded, ConfigError
from rainbowlruc.generators import Family, make_stream
from rainbowlruc.harness import (
    CSV_COLUMNS,
    parse_config,
    run_instance,
    sweep,
    to_csv,
    verify_theorem,
)
from rainbowlruc.oracle import SearchBudget


def test_cycle4_adversarial():
    r = run_instance(make_stream(Family("cycle", 4)))
    assert (r.colors_online, r.rc, r.ratio) == (3, 2, Fraction(3, 2))
    assert r.theorem_bound == Fraction(3, 2)
    assert r.within_bound and r.rainbow_valid


def test_k4_adversarial():
    r = run_instance(make_stream(Family("complete", 4)))
    assert (r.colors_online, r.rc, r.ratio, r.theorem_bound) == (3, 1, 3, 3)
    assert r.within_bound


def test_path_natural():
    r = run_instance(make_stream(Family("path", 6), "natural"))
    assert (r.colors_online, r.rc, r.ratio) == (5, 5, 1)


def test_oracle_modes():
    stream = make_stream(Family("wheel", 12))
    closed = run_instance(stream, "closed_form")
    assert (closed.rc, closed.rc_source, closed.ratio) == (3, "closed_form", Fraction(11, 3))
    skipped = run_instance(stream, "skip")
    assert skipped.rc is None and skipped.ratio is None and skipped.within_bound is None
    # no closed form for small wheels: falls back to exact search
    small = run_instance(make_stream(Family("wheel", 6)), "closed_form")
    assert small.rc_source == "exact" and small.theorem_bound is None
    with pytest.raises(BadParameters):
        run_instance(stream, "guess")


def test_verify_theorem_examples():
    reports, ok = verify_theorem("T2-cycle", range(4, 10))
    assert ok
    assert [r.ratio for r in reports] == [Fraction(n - 1, -(-n // 2)) for n in range(4, 10)]
    reports, ok = verify_theorem("T3-wheel", [8, 9])
    assert ok and [r.ratio for r in reports] == [Fraction(7, 3), Fraction(8, 3)]
    reports, ok = verify_theorem("T1-star", range(3, 11))
    assert ok and all(r.ratio == 1 for r in reports)


def test_verify_theorem_errors():
    with pytest.raises(BadParameters):
        verify_theorem("T3-wheel", [7])
    with pytest.raises(BadParameters):
        verify_theorem("T9", [4])
    with pytest.raises(BudgetExceeded):
        verify_theorem("T2-cycle", [20])


@pytest.mark.parametrize("seed", range(10))
def test_order_independent_ratios(seed):
    k5 = run_instance(make_stream(Family("complete", 5), "random", seed), "closed_form")
    assert k5.ratio == 4
    tree = run_instance(make_stream(Family("tree", 9, seed=seed), "random", seed))
    assert tree.ratio == 1


def test_bipartite_reported_without_bound():
    r = run_instance(make_stream(Family("complete_bipartite", p=2, q=3), "natural"))
    assert (r.colors_online, r.rc, r.theorem_bound, r.within_bound) == (4, 2, None, None)


def test_config_and_sweep():
    config = parse_config("families = cycle\nn = 4..6\norders = adversarial\n")
    reports = sweep(config)
    assert [r.n for r in reports] == [4, 5, 6]
    text = to_csv(reports)
    rows = list(csv.reader(io.StringIO(text)))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert rows[1] == ["cycle", "4", "", "adversarial", "", "3", "2", "3", "2", "3", "2",
                       "true", "true"]


def test_sweep_seeds_reproducible():
    text = "families = cycle\nn = 5\norders = random\nseeds = 0, 1\n"
    a = to_csv(sweep(parse_config(text)))
    assert a.count("\ncycle,") == 2
    assert a == to_csv(sweep(parse_config(text)))


def test_parallel_sweep_matches_sequential():
    base = "families = cycle, complete\nn = 4..6\norders = adversarial, random\nseeds = 0..2\n"
    seq = to_csv(sweep(parse_config(base)))
    par = to_csv(sweep(parse_config(base + "workers = 3\n")))
    assert seq == par


def test_bipartite_params_column():
    config = parse_config("families = complete_bipartite\npq = 2x2, 2x3\norders = natural\n")
    rows = to_csv(sweep(config)).splitlines()[1:]
    assert [r.split(",")[2] for r in rows] == ["p=2;q=2", "p=2;q=3"]


@pytest.mark.parametrize(
    "text, field",
    [
        ("families = \n", "families"),
        ("n = 4\n", "families"),
        ("families = blob\nn = 4\n", "families"),
        ("families = cycle\nn = four\n", "n"),
        ("families = cycle\n", "n"),
        ("families = cycle\nn = 4\norders = sideways\n", "orders"),
        ("families = cycle\nn = 4\noracle = psychic\n", "oracle"),
        ("families = cycle\nn = 2\n", "n"),
        ("families = complete_bipartite\n", "pq"),
        ("families = cycle\nn = 4\ncolour = red\n", "colour"),
    ],
)
def test_config_errors(text, field):
    with pytest.raises(ConfigError, match=f"^{field}:"):
        parse_config(text)


def test_config_budget():
    config = parse_config("families = cycle\nn = 4\nbudget_edges = 5\nbudget_seconds = 2.5\n")
    assert config.budget == SearchBudget(5, 2.5)
