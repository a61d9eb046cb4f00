import json
import random

import pytest

from eulerquandle import alexander as alx
from eulerquandle.cycles import Pattern, iterate, pattern, profile
from eulerquandle.errors import DomainError, HypothesisViolation, ResourceError
from oracles import apply_times, cycle_type, proper_count_by_iteration

SMALL = [(2, 3, 1), (3, 2, 2), (2, 3, 2), (2, 5, 1), (4, 3, 1), (5, 2, 1), (3, 2, 1)]


def test_construction_examples():
    assert alx.euler_family(2, 3, 1).modulus == 7
    assert alx.euler_family(3, 2, 2).modulus == 80
    with pytest.raises(HypothesisViolation):
        alx.euler_family(2, 2, 1)


@pytest.mark.parametrize("args, exc", [
    ((1, 3, 1), DomainError),
    ((0, 3, 1), DomainError),
    ((2, 4, 1), DomainError),
    ((2, 3, 0), DomainError),
    ((6, 3, 1), HypothesisViolation),
    ((2, 3, 30), ResourceError),
])
def test_construction_errors(args, exc):
    with pytest.raises(exc):
        alx.euler_family(*args)


def test_descriptor_json():
    q = alx.euler_family(3, 2, 2)
    assert q.to_json() == {"n": 3, "p": 2, "k": 2, "modulus": "80"}
    assert alx.EulerFamilyQuandle.from_json(json.loads(json.dumps(q.to_json()))) == q
    with pytest.raises(DomainError):
        alx.EulerFamilyQuandle.from_json({"n": 3, "p": 2, "k": 2, "modulus": "81"})


def test_huge_modulus_is_symbolic():
    q = alx.euler_family(10, 7, 3)
    assert q.modulus == 10**343 - 1
    with pytest.raises(ResourceError):
        q.as_quandle()
    assert alx.translate_power(q, 5, 3, q.period) == 5
    assert alx.profile_formula(q).size == q.modulus


def test_translate_power_examples():
    q = alx.euler_family(2, 3, 1)
    assert alx.translate_power(q, 4, 2, 0) == 4
    assert alx.translate_power(q, 1, 0, 3) == 1
    assert all(alx.translate_power(q, a, b, 3) == a for a in range(7) for b in range(7))


@pytest.mark.parametrize("npk", SMALL)
def test_translate_power_matches_iteration(npk):
    q = alx.euler_family(*npk)
    rng = random.Random(sum(npk))
    for _ in range(200):
        a, b = rng.randrange(q.modulus), rng.randrange(q.modulus)
        l = rng.randrange(0, 4 * q.period)
        assert alx.translate_power(q, a, b, l) == apply_times(lambda x: q.op(x, b), l, a)


def test_translate_power_range_checks():
    q = alx.euler_family(2, 3, 1)
    with pytest.raises(DomainError):
        alx.translate_power(q, 7, 0, 1)
    with pytest.raises(DomainError):
        alx.translate_power(q, 0, 0, -1)


def test_cycle_length_examples():
    assert alx.cycle_length_of(alx.euler_family(2, 3, 1), 3, 3) == 1
    assert alx.cycle_length_of(alx.euler_family(2, 3, 1), 1, 0) == 3
    assert alx.cycle_length_of(alx.euler_family(3, 2, 2), 1, 0) == 4


@pytest.mark.parametrize("npk", SMALL)
def test_cycle_length_matches_walk(npk):
    q = alx.euler_family(*npk)
    lq = q.as_quandle()
    for b in (0, 1, q.modulus - 1):
        perm = lq.right_translation(b)
        for a in range(q.modulus):
            walk = next(l for l in range(1, q.modulus + 1) if iterate(perm, l, a) == a)
            assert alx.cycle_length_of(q, a, b) == walk


def test_proper_count_formula_examples():
    assert alx.proper_count_formula(alx.euler_family(2, 3, 1), 0).count == 1
    assert alx.proper_count_formula(alx.euler_family(2, 3, 1), 1).count == 6
    c = alx.proper_count_formula(alx.euler_family(3, 2, 2), 2)
    assert (c.level, c.count, c.method) == (2, 72, "formula")
    with pytest.raises(DomainError):
        alx.proper_count_formula(alx.euler_family(3, 2, 2), 3)


def test_proper_count_enumerate_examples():
    q7 = alx.euler_family(2, 3, 1)
    assert alx.proper_count_enumerate(q7, 0, 0).count == 1
    assert alx.proper_count_enumerate(q7, 0, 1).count == 6
    c = alx.proper_count_enumerate(alx.euler_family(3, 2, 2), 5, 1)
    assert (c.count, c.method) == (6, "enumeration")


@pytest.mark.parametrize("npk", SMALL)
def test_exact_cycle_length_equals_proper_solution_definition(npk):
    # proper solution: fixed by R^(p^i) but by no R^(p^j), j < i
    q = alx.euler_family(*npk)
    n, p, k = npk
    for b in (0, 2, q.modulus - 1):
        enumerated = [c.count for c in alx.proper_counts_enumerate(q, b)]
        by_definition = [proper_count_by_iteration(q.modulus, n, b, p, i) for i in range(k + 1)]
        assert enumerated == by_definition


def test_enumeration_guard():
    q = alx.euler_family(2, 3, 2)
    with pytest.raises(ResourceError):
        alx.proper_count_enumerate(q, 0, 1, guard=500)


def test_solutions_of_level_examples():
    assert alx.solutions_of_level(alx.euler_family(2, 3, 1), 0, 0) == [0]
    q = alx.euler_family(3, 2, 2)
    assert alx.solutions_of_level(q, 0, 1) == list(range(0, 80, 10))
    assert sorted(alx.solutions_of_level(q, 7, 2)) == list(range(80))


@pytest.mark.parametrize("npk", SMALL)
def test_solutions_of_level_are_the_fixed_points(npk):
    q = alx.euler_family(*npk)
    n, p, k = npk
    for b in (0, 3 % q.modulus):
        for i in range(k + 1):
            fixed = [x for x in range(q.modulus)
                     if apply_times(lambda y: q.op(y, b), p**i, x) == x]
            assert sorted(alx.solutions_of_level(q, b, i)) == fixed


def test_solutions_guard():
    with pytest.raises(ResourceError):
        alx.solutions_of_level(alx.euler_family(3, 2, 2), 0, 2, guard=50)


def test_profile_formula_examples():
    assert alx.profile_formula(alx.euler_family(2, 3, 1)) == Pattern.from_lengths([1, 3, 3])
    assert alx.profile_formula(alx.euler_family(3, 2, 2)).counts == ((1, 2), (2, 3), (4, 18))
    q = alx.euler_family(2, 3, 2)
    assert q.modulus == 511
    assert alx.profile_formula(q).counts == ((1, 1), (3, 2), (9, 56))


@pytest.mark.parametrize("npk", SMALL)
def test_profile_formula_matches_oracle_pattern(npk):
    q = alx.euler_family(*npk)
    for b in (0, 1, q.modulus // 2):
        assert list(alx.profile_formula(q).lengths) == cycle_type([q.op(x, b) for x in range(q.modulus)])


@pytest.mark.parametrize("npk", SMALL)
def test_enumerated_profile_is_singleton_formula(npk):
    q = alx.euler_family(*npk)
    prof = profile(q.as_quandle())
    assert prof.singleton
    assert prof.distinct[0] == alx.profile_formula(q)


@pytest.mark.parametrize("npk", [(2, 3, 1), (3, 2, 3), (7, 5, 2), (10, 3, 3), (2, 13, 2)])
def test_telescoping_and_divisibility(npk):
    q = alx.euler_family(*npk)
    n, p, k = npk
    counts = [alx.proper_count_formula(q, i).count for i in range(k + 1)]
    assert sum(counts) == q.modulus
    for i in range(1, k + 1):
        assert counts[i] % p**i == 0
    assert counts[k] // p**k == alx.profile_formula(q).multiplicity(p**k)


def test_count_methods_serialise():
    c = alx.proper_count_formula(alx.euler_family(10, 7, 3), 3)
    d = c.to_dict()
    assert d["method"] == "formula" and d["count"] == str(10**343 - 10**49)


def test_single_translation_pattern_for_each_b():
    q = alx.euler_family(2, 5, 1)
    lq = q.as_quandle()
    for b in range(q.modulus):
        assert pattern(lq.right_translation(b)) == alx.profile_formula(q)
