import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vcsets.core import (Domain, PartialType, SetSystem, bitstring, delta_shift, dual,
                         from_bitstring, relabel, restrict, trace_count)
from vcsets.errors import DomainMismatchError, PreconditionError
from vcsets.generators import gen_k_subsets, gen_prefixes


@st.composite
def systems(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    masks = draw(st.sets(st.integers(0, (1 << n) - 1), min_size=1, max_size=min(24, 1 << n)))
    return SetSystem.from_masks([f"e{i}" for i in range(n)], masks)


@st.composite
def system_and_subset(draw):
    s = draw(systems())
    sub = draw(st.integers(0, (1 << s.n) - 1))
    return s, sub


def test_canonical_order_is_lexicographic_bitstrings():
    s = SetSystem.from_sets("abc", [["a"], [], ["b"], ["a", "b", "c"]])
    assert s.bitstrings() == ["000", "010", "100", "111"]


def test_bitstring_roundtrip():
    for m in range(16):
        assert from_bitstring(bitstring(m, 4)) == m


@pytest.mark.parametrize("bad", [[], ["a", "a"], ["a b"], [""]])
def test_domain_rejects_bad_identifiers(bad):
    with pytest.raises(PreconditionError):
        Domain(tuple(bad))


def test_empty_family_and_duplicates_rejected():
    with pytest.raises(PreconditionError):
        SetSystem.from_masks("ab", [])
    with pytest.raises(PreconditionError):
        SetSystem.from_masks("ab", [1, 1])
    assert len(SetSystem.from_masks("ab", [1, 1], dedup=True)) == 1


def test_restrict_identity_and_empty():
    c = gen_k_subsets(4, 2)
    full = restrict(c, c.domain.elements)
    assert full.as_system() == c
    empty = restrict(c, [])
    assert empty.patterns == frozenset({""})
    assert empty.as_system() is None


def test_restrict_singletons_example():
    c = gen_k_subsets(3, 1)
    tr = restrict(c, ["1", "2"])
    assert tr.sub_domain == ("1", "2")
    assert tr.patterns == {"00", "10", "01"}


def test_restrict_unknown_element():
    with pytest.raises(DomainMismatchError):
        restrict(gen_k_subsets(3, 1), ["9"])


def test_dual_of_single_empty_concept():
    d = dual(SetSystem.from_masks("abc", [0]))
    assert d.n == 1 and d.concepts == (0,)


def test_dual_of_prefix_chain():
    # incidence of P0..P3 on {1,2,3}, transposed by hand:
    # element 1 lies in P1,P2,P3; element 2 in P2,P3; element 3 in P3
    d = dual(gen_prefixes(3))
    assert d.domain.elements == ("c0", "c1", "c2", "c3")
    assert set(d.concept_sets()) == {
        frozenset({"c1", "c2", "c3"}), frozenset({"c2", "c3"}), frozenset({"c3"})}


def test_delta_shift_examples():
    s = SetSystem.from_sets(["1", "2"], [[], ["1"]])
    assert delta_shift(s, []) == s
    assert set(delta_shift(s, ["2"]).concept_sets()) == {frozenset({"2"}), frozenset({"1", "2"})}


def test_partial_type_helpers():
    s = gen_k_subsets(3, 1)
    p = PartialType.from_mapping(s, {"3": 0, "1": 1})
    assert p.support == ("1", "3") and p.labels == "10"
    assert p.masks(s.domain) == (0b101, 0b001)
    with pytest.raises(PreconditionError):
        PartialType(("1",), "2")


@given(system_and_subset())
def test_delta_shift_involution_and_size(pair):
    s, b = pair
    shifted = delta_shift(s, b)
    assert len(shifted) == len(s)
    assert delta_shift(shifted, b) == s


@given(systems(), st.data())
def test_restrict_monotone(s, data):
    a = data.draw(st.integers(0, (1 << s.n) - 1))
    extra = data.draw(st.integers(0, (1 << s.n) - 1))
    assert trace_count(s, a) <= trace_count(s, a | extra)
    tr = restrict(s, a)
    assert len(tr) <= min(1 << len(tr.sub_domain), len(s))


@given(systems())
def test_dual_stabilizes(s):
    once = dual(s)
    assert len(dual(once)) <= once.n
    assert len(dual(dual(once))) == len(once)


@settings(max_examples=50)
@given(systems(max_n=5), st.data())
def test_relabel_preserves_traces(s, data):
    perm = data.draw(st.permutations(range(s.n)))
    moved = relabel(s, perm)
    for size in range(s.n + 1):
        for a in itertools.combinations(s.domain.elements, size):
            assert trace_count(s, a) == trace_count(moved, a)
