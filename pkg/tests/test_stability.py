import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from test_core import systems
from vcsets.errors import PreconditionError
from vcsets.core import SetSystem, delta_shift, popcount, relabel
from vcsets.generators import gen_interval_unions, gen_k_subsets, gen_prefixes
from vcsets.oracle import oracle_ladder, oracle_normal_form_radius
from vcsets.stability import LadderWitness, is_stable_family, ladder_index, stable_normal_form


def test_ladder_singletons():
    for n in (3, 4, 6):
        c = gen_k_subsets(n, 1)
        assert oracle_ladder(c) == 2
        length, w = ladder_index(c, 5)
        assert length == 2 and w.holds(c)
    length, w = ladder_index(gen_k_subsets(3, 1), 5)
    assert w.points == ("1", "2")
    assert w.witnesses == (0, 0b001)


def test_ladder_prefixes_use_every_point():
    # a_i = i with c_j = {1..j-1} satisfies a_i in c_j iff i < j, so the
    # whole chain is a ladder; the chain-of-traces oracle agrees
    c = gen_prefixes(6)
    assert oracle_ladder(c) == 6
    length, w = ladder_index(c, 6)
    assert length == 6
    assert w.points == ("1", "2", "3", "4", "5", "6")
    assert w.holds(c)
    assert ladder_index(c, 3)[0] == 3


def test_ladder_trivial_families():
    assert ladder_index(SetSystem.from_masks("ab", [0]), 4)[0] == 1
    full_only = SetSystem.from_masks("ab", [0b11])
    length, w = ladder_index(full_only, 3)
    assert length == 0 and w.points == ()
    with pytest.raises(PreconditionError):
        ladder_index(full_only, 0)


def test_is_stable_family():
    assert is_stable_family(gen_k_subsets(5, 1), 3)
    assert not is_stable_family(gen_prefixes(6), 3)
    assert is_stable_family(SetSystem.from_masks("ab", [0]), 2)


def test_normal_form_examples():
    nf = stable_normal_form(gen_k_subsets(6, 2))
    assert (nf.radius, nf.center) == (2, 0)
    b = 0b101101
    shifted = delta_shift(gen_k_subsets(6, 2), b)
    nf = stable_normal_form(shifted)
    assert (nf.radius, nf.center) == (2, b)
    assert oracle_normal_form_radius(shifted) == 2
    p = gen_prefixes(6)
    nf = stable_normal_form(p)
    assert nf.radius == 3 and nf.center == 0b000111
    assert max(popcount(c ^ 0b000111) for c in p.concepts) == 3


def test_exhaustive_centers_can_do_better():
    # two antipodal concepts: any member is at distance 4, the midpoint at 2
    s = SetSystem.from_masks("abcd", [0, 0b1111])
    assert stable_normal_form(s).radius == 4
    assert stable_normal_form(s, exhaustive=True).radius == 2


@settings(max_examples=60, deadline=None)
@given(systems(max_n=6))
def test_ladder_matches_oracle_and_witness_holds(s):
    length, w = ladder_index(s)
    assert length == oracle_ladder(s)
    assert len(w) == length and w.holds(s)


@settings(max_examples=40, deadline=None)
@given(systems(max_n=6))
def test_normal_form_minimal(s):
    nf = stable_normal_form(s)
    assert nf.covers(s)
    assert nf.center in s
    assert nf.radius == oracle_normal_form_radius(s)


@settings(max_examples=30, deadline=None)
@given(systems(max_n=6), st.data())
def test_ladder_invariant_under_relabeling(s, data):
    perm = data.draw(st.permutations(range(s.n)))
    assert ladder_index(relabel(s, perm))[0] == ladder_index(s)[0]


def test_normal_form_recovers_radius_after_shift():
    rng = random.Random(7)
    for n, r in [(6, 1), (7, 2), (8, 3)]:
        base = gen_k_subsets(n, r)
        for _ in range(5):
            b = rng.randrange(1 << n)
            nf = stable_normal_form(delta_shift(base, b))
            assert nf.radius == r and nf.center == b


def test_shift_reports_both_indices():
    # no relation between the two indices is asserted; they are only computed
    c = gen_interval_unions(6, 1)
    for b in (0, 0b101, 0b111111):
        assert ladder_index(delta_shift(c, b))[0] >= 1
