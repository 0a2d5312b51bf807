import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from test_core import systems
from vcsets.core import PartialType, SetSystem, delta_shift, trace_count
from vcsets.errors import NotMaximumError, PreconditionError
from vcsets.generators import (gen_interval_unions, gen_k_subsets, gen_nonempty_k_subsets,
                               gen_prefixes)
from vcsets.oracle import oracle_is_maximal, oracle_vc
from vcsets.vc import (all_forbidden_labels, forbidden_label, helly_consistency, is_maximal,
                       is_maximum, is_maximum_definitional, locally_consistent,
                       maximal_completion, membership_by_forbidden_labels, membership_table,
                       sauer_phi, shatters, vc_dimension)


def test_sauer_phi_values():
    assert [sauer_phi(0, n) for n in range(6)] == [1] * 6
    for d in range(6):
        assert sauer_phi(d, d + 1) == 2 ** (d + 1) - 1
    assert sauer_phi(3, 8) == 1 + 8 + 28 + 56 == 93
    assert sauer_phi(60, 200) == sum(math.comb(200, i) for i in range(61))


def test_shatters_examples():
    c = gen_k_subsets(5, 2)
    assert shatters(c, [])
    assert shatters(c, ["1", "4"])
    assert not shatters(c, ["1", "2", "3"])


def test_vc_dimension_examples():
    assert vc_dimension(SetSystem.from_masks("abc", [0])) == 0
    for n, d in [(3, 1), (6, 2), (7, 3), (5, 4)]:
        assert vc_dimension(gen_k_subsets(n, d)) == d
    intervals = gen_interval_unions(6, 1)
    assert oracle_vc(intervals) == 2
    assert vc_dimension(intervals) == 2


def test_is_maximum_examples():
    assert is_maximum(gen_k_subsets(7, 3))
    assert is_maximum(gen_interval_unions(10, 2))
    pair = SetSystem.from_sets(["1", "2"], [[], ["1", "2"]])
    assert vc_dimension(pair) == 1
    assert not is_maximum(pair)
    # {}, {1}, {1,2} is maximum after all: 3 = Phi_1(2) and every singleton is shattered
    chain = SetSystem.from_sets(["1", "2"], [[], ["1"], ["1", "2"]])
    assert is_maximum(chain) and is_maximum_definitional(chain)


def test_is_maximal_examples():
    assert is_maximal(gen_k_subsets(5, 2), 2)
    assert not is_maximal(gen_nonempty_k_subsets(5, 2), 2)
    assert is_maximal(SetSystem.from_masks(["1"], [0]), 0)
    with pytest.raises(PreconditionError):
        is_maximal(gen_k_subsets(5, 2), 3)


def test_forbidden_label_examples():
    labels = all_forbidden_labels(gen_k_subsets(4, 2))
    assert len(labels) == 4
    assert all(fl.pattern == "111" and fl.forbidden_subset == fl.witness_set for fl in labels)
    fl = forbidden_label(gen_prefixes(5), ["2", "4"])
    assert fl.pattern == "01" and fl.forbidden_subset == ("4",)
    assert [fl.pattern for fl in all_forbidden_labels(gen_prefixes(3))] == ["01"] * 3
    assert len(all_forbidden_labels(gen_k_subsets(3, 2))) == 1


def test_forbidden_label_errors():
    with pytest.raises(NotMaximumError):
        all_forbidden_labels(gen_nonempty_k_subsets(5, 2))
    with pytest.raises(PreconditionError):
        forbidden_label(gen_k_subsets(4, 2), ["1", "2"])


def test_membership_examples():
    c = gen_k_subsets(5, 2)
    assert membership_by_forbidden_labels(c, ["1", "3"])
    assert not membership_by_forbidden_labels(c, c.domain.elements)
    intervals = gen_interval_unions(6, 1)
    table = membership_table(intervals)
    assert len(table) == 64
    assert all(table[m] == (m in intervals) for m in range(64))
    assert all(membership_by_forbidden_labels(intervals, m) == (m in intervals)
               for m in range(64))


def test_helly_examples():
    c = gen_interval_unions(8, 1)
    assert helly_consistency(c, PartialType((), ""))
    assert helly_consistency(c, PartialType.from_concept(c, c.concepts[7], ["2", "5", "8"]))
    failures = 0
    for b in itertools.combinations(c.domain.elements, 5):
        for bits in itertools.product("01", repeat=5):
            p = PartialType(b, "".join(bits))
            if locally_consistent(c, p, 3) and not helly_consistency(c, p):
                failures += 1
    assert failures == 0


def test_maximal_completion_examples():
    c = gen_k_subsets(5, 2)
    assert maximal_completion(c, 2) == c
    done = maximal_completion(gen_nonempty_k_subsets(5, 2), 2)
    assert 0 in done
    assert done == gen_k_subsets(5, 2)
    assert is_maximal(done, 2)


@settings(max_examples=60, deadline=None)
@given(systems(max_n=6))
def test_sauer_bound(s):
    d = vc_dimension(s)
    for size in range(s.n + 1):
        for a in itertools.combinations(range(s.n), size):
            mask = sum(1 << i for i in a)
            assert trace_count(s, mask) <= sauer_phi(d, size)


@settings(max_examples=60, deadline=None)
@given(systems(max_n=6))
def test_fast_path_agrees_with_definition(s):
    assert is_maximum(s) == is_maximum_definitional(s)


@settings(max_examples=40, deadline=None)
@given(systems(max_n=5), st.data())
def test_delta_invariance(s, data):
    b = data.draw(st.integers(0, (1 << s.n) - 1))
    t = delta_shift(s, b)
    d = vc_dimension(s)
    assert vc_dimension(t) == d
    assert is_maximum(t) == is_maximum(s)
    assert is_maximal(t, d) == is_maximal(s, d)


@settings(max_examples=30, deadline=None)
@given(systems(max_n=5))
def test_completion_postconditions(s):
    d = vc_dimension(s)
    done = maximal_completion(s, d)
    assert vc_dimension(done) == d
    assert set(s.concepts) <= set(done.concepts)
    assert is_maximal(done, d)
    assert oracle_is_maximal(done)
    assert maximal_completion(done, d) == done
