"""Main implementations against the naive reference implementations."""

import itertools

import pytest

from corpus import CORPUS, MAXIMUM, random_system
from vcsets.core import PartialType
from vcsets.oracle import (oracle_forbidden_patterns, oracle_is_maximal, oracle_is_maximum,
                           oracle_ladder, oracle_normal_form_radius, oracle_vc)
from vcsets.stability import ladder_index, stable_normal_form
from vcsets.vc import (all_forbidden_labels, is_maximal, is_maximum, is_maximum_definitional,
                       vc_dimension)


def test_vc_matches_oracle(any_family):
    assert vc_dimension(any_family) == oracle_vc(any_family)


def test_maximum_paths_agree(any_family):
    expected = oracle_is_maximum(any_family)
    assert is_maximum(any_family) == expected
    assert is_maximum_definitional(any_family) == expected


@pytest.mark.parametrize("seed", range(100))
def test_random_systems_n8(seed):
    s = random_system(8, 5 + (seed * 7) % 60, seed)
    assert vc_dimension(s) == oracle_vc(s)
    assert is_maximum(s) == oracle_is_maximum(s)


def test_maximal_matches_oracle():
    small = [s for s in CORPUS.values() if s.n <= 7]
    for s in small:
        assert is_maximal(s, vc_dimension(s)) == oracle_is_maximal(s)


def test_forbidden_labels_match_oracle(maximum_family):
    table = oracle_forbidden_patterns(maximum_family)
    labels = all_forbidden_labels(maximum_family)
    assert len(labels) == len(table)
    for fl, (positions, missing) in zip(labels, sorted(table.items())):
        assert missing == [fl.pattern]
        assert fl.witness_set == tuple(maximum_family.domain.elements[p] for p in positions)


def test_ladder_and_radius_match_oracle(any_family):
    assert ladder_index(any_family)[0] == oracle_ladder(any_family)
    assert stable_normal_form(any_family).radius == oracle_normal_form_radius(any_family)
