"""Bound formulas, applicability, strictness, and exact rational checks."""

from fractions import Fraction

import pytest

from isogame.bounds import (GraphFacts, bound_names, bounds_by_name,
                            builtin_bounds, check_all, check_bound, satisfies)
from isogame.families import complete, cycle, path
from isogame.solver import solve_both

SPECS = {spec.name: spec for spec in builtin_bounds()}


def test_builtin_bound_names():
    assert bound_names() == ("T31", "C32", "T33", "C34", "C35a", "C35b",
                             "T36", "T41", "T42")


def test_bounds_by_name_filter():
    assert [s.name for s in bounds_by_name(["T41", "T31"])] == ["T41", "T31"]
    with pytest.raises(KeyError):
        bounds_by_name(["T99"])


def test_c5_values():
    facts = GraphFacts.of(cycle(5))
    igt, igts = solve_both(cycle(5))
    assert (igt, igts) == (3, 2)
    t31 = check_bound(SPECS["T31"], facts, igt, igts)
    assert t31.applicable and t31.value == Fraction(15, 4) and t31.passed
    t33 = check_bound(SPECS["T33"], facts, igt, igts)
    assert t33.value == Fraction(14, 4) and t33.passed
    c34 = check_bound(SPECS["C34"], facts, igt, igts)
    assert c34.value == Fraction(14, 4) and not c34.strict and c34.passed


def test_p5_low_degree_rows():
    facts = GraphFacts.of(path(5))
    igt, igts = solve_both(path(5))
    assert (igt, igts) == (2, 4)
    assert not check_bound(SPECS["T31"], facts, igt, igts).applicable
    t41 = check_bound(SPECS["T41"], facts, igt, igts)
    assert t41.value == Fraction(25, 6) and t41.strict and t41.passed
    t42 = check_bound(SPECS["T42"], facts, igt, igts)
    assert t42.value == Fraction(25, 6) and not t42.strict and t42.passed


def test_k4_diameter_one_row():
    facts = GraphFacts.of(complete(4))
    igt, igts = solve_both(complete(4))
    t36 = check_bound(SPECS["T36"], facts, igt, igts)
    assert t36.applicable and t36.value == Fraction(8, 3) and t36.passed


def test_t36_not_applicable_beyond_diameter_two():
    facts = GraphFacts.of(path(5))
    assert not SPECS["T36"].applies(facts)


def test_strictness_conditions():
    c4 = GraphFacts.of(cycle(4))          # max degree 2
    k4 = GraphFacts.of(complete(4))       # degrees 3
    assert not SPECS["C32"].strict(c4)
    assert SPECS["C32"].strict(k4)
    assert not SPECS["C34"].strict(c4)
    assert SPECS["C34"].strict(k4)
    assert SPECS["T41"].strict(c4)
    assert not SPECS["T42"].strict(c4)


def test_satisfies_is_cross_multiplication():
    bound = Fraction(5, 2)
    assert satisfies(2, bound, True)
    assert not satisfies(3, bound, True)
    assert satisfies(2, bound, False)
    # a strict bound exactly attained must fail
    assert not satisfies(5, Fraction(5, 1), True)
    assert satisfies(5, Fraction(5, 1), False)


def test_check_all_recomputed_by_hand(small_connected):
    """Every pass/fail decision must equal a direct integer
    cross-multiplication, with no floats anywhere."""
    for g in small_connected[:200]:
        igt, igts = solve_both(g)
        facts = GraphFacts.of(g)
        for check in check_all(facts, igt, igts):
            if not check.applicable:
                continue
            num, den = check.value.numerator, check.value.denominator
            achieved = {"igt": igt, "igtS": igts}
            targets = ("igt", "igtS") if check.target == "both" else (check.target,)
            expected = all(
                achieved[t] * den < num if check.strict else achieved[t] * den <= num
                for t in targets)
            assert check.passed == expected
            assert isinstance(check.value, Fraction)


def test_bound_nesting(corpus_graphs):
    """T31 never exceeds C32, and C32 never exceeds the 3n/4 bound,
    wherever both of a pair apply."""
    for g in corpus_graphs[:2000]:
        facts = GraphFacts.of(g)
        if SPECS["T31"].applies(facts):
            assert SPECS["T31"].value(facts) <= SPECS["C32"].value(facts)
        if SPECS["C32"].applies(facts):
            assert SPECS["C32"].value(facts) <= SPECS["C35a"].value(facts)
