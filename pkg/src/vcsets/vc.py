"""VC dimension, Sauer bound, maximum/maximal decisions and forbidden labels."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .core import (MAX_ELEMENTS, PartialType, SetSystem, bitstring, check_caps,
                   compress_bits, expand_bits, from_bitstring, popcount)
from .errors import DomainMismatchError, NotMaximumError, PreconditionError


def sauer_phi(d: int, n: int) -> int:
    """Sum of ``C(n, i)`` for ``i = 0..d``."""
    if d < 0 or n < 0:
        raise ValueError("d and n must be non-negative")
    return sum(math.comb(n, i) for i in range(min(d, n) + 1))


def _mask_of(positions: Sequence[int]) -> int:
    m = 0
    for p in positions:
        m |= 1 << p
    return m


def _traces(concepts: Iterable[int], a: int) -> set[int]:
    return {c & a for c in concepts}


def shatters(system: SetSystem, subset: Iterable[str] | int) -> bool:
    a = system.subset_mask(subset)
    k = popcount(a)
    if len(system) < 1 << k:
        return False
    return len(_traces(system.concepts, a)) == 1 << k


def shattered_sets(system: SetSystem, size: int) -> list[tuple[int, ...]]:
    """All shattered sets of the given size, as position tuples in lexicographic order."""
    return [s for s in combinations(range(system.n), size)
            if len(_traces(system.concepts, _mask_of(s))) == 1 << size]


@lru_cache(maxsize=256)
def vc_dimension(system: SetSystem) -> int:
    """Largest shattered set size.

    Searches level by level; a (k+1)-set is tested only when all of its k-subsets
    were shattered at the previous level, and the search stops at the first empty
    level.
    """
    concepts = system.concepts
    level = {()}
    k = 0
    while True:
        if len(concepts) < 1 << (k + 1):
            return k
        nxt = set()
        for s in level:
            start = s[-1] + 1 if s else 0
            for e in range(start, system.n):
                cand = s + (e,)
                if k and any(cand[:i] + cand[i + 1:] not in level for i in range(k)):
                    continue
                if len(_traces(concepts, _mask_of(cand))) == 1 << (k + 1):
                    nxt.add(cand)
        if not nxt:
            return k
        level = nxt
        k += 1


def is_maximum(system: SetSystem) -> bool:
    """Fast path: Sauer equality on the full domain only.

    Sound because a family meeting the bound on a finite domain meets it on every
    subset as well; the test suite checks it against :func:`is_maximum_definitional`.
    """
    return len(system) == sauer_phi(vc_dimension(system), system.n)


@lru_cache(maxsize=256)
def is_maximum_definitional(system: SetSystem) -> bool:
    """Sauer equality checked on every subset of the domain."""
    d = vc_dimension(system)
    n = system.n
    for size in range(n + 1):
        bound = sauer_phi(d, size)
        for s in combinations(range(n), size):
            if len(_traces(system.concepts, _mask_of(s))) != bound:
                return False
    return True


def require_maximum(system: SetSystem) -> int:
    """Return ``d`` or raise :class:`NotMaximumError`.  Runs the fast path and
    then the (cached) definitional certificate."""
    d = vc_dimension(system)
    if not is_maximum(system):
        raise NotMaximumError(
            f"system is not maximum: {len(system)} concepts, "
            f"Sauer bound {sauer_phi(d, system.n)} at dimension {d}")
    if not is_maximum_definitional(system):
        raise NotMaximumError("full-domain count matches but some trace misses the bound")
    return d


def _check_dimension(system: SetSystem, d: int) -> None:
    actual = vc_dimension(system)
    if d != actual:
        raise PreconditionError(f"supplied d={d} but the VC dimension is {actual}")


class _Blockers:
    """Per (d+1)-set trace bookkeeping used to test whether a labeling can be
    added without creating a shattered (d+1)-set."""

    def __init__(self, concepts: Iterable[int], n: int, d: int):
        self.sets = [_mask_of(s) for s in combinations(range(n), d + 1)]
        self.full = 1 << (d + 1)
        self.traces = [_traces(concepts, a) for a in self.sets]

    def creates_shattering(self, c: int) -> bool:
        for a, tr in zip(self.sets, self.traces):
            if len(tr) == self.full - 1 and (c & a) not in tr:
                return True
        return False

    def add(self, c: int) -> None:
        for a, tr in zip(self.sets, self.traces):
            tr.add(c & a)


def is_maximal(system: SetSystem, d: int) -> bool:
    """True when every labeling outside the family would raise the VC dimension."""
    _check_dimension(system, d)
    check_caps(system.n)
    if d >= system.n:
        return len(system) == 1 << system.n
    blockers = _Blockers(system.concepts, system.n, d)
    for c in range(1 << system.n):
        if c not in system and not blockers.creates_shattering(c):
            return False
    return True


def greedy_complete(concepts: Iterable[int], n: int, d: int,
                    order: Iterable[int]) -> list[int]:
    """Add labelings from ``order`` whenever the VC dimension stays at most ``d``."""
    family = set(concepts)
    if d >= n:
        return list(range(1 << n))
    blockers = _Blockers(family, n, d)
    for c in order:
        if c in family or blockers.creates_shattering(c):
            continue
        family.add(c)
        blockers.add(c)
    return list(family)


def maximal_completion(system: SetSystem, d: int, *,
                       max_elements: int = MAX_ELEMENTS) -> SetSystem:
    """A maximal superclass of the same dimension, scanning labelings greedily in
    canonical order.  Unique when the input is maximum (then it is returned as is)."""
    _check_dimension(system, d)
    check_caps(system.n, max_elements=max_elements)
    n = system.n
    order = sorted(range(1 << n), key=lambda m: bitstring(m, n))
    return SetSystem.from_masks(system.domain, greedy_complete(system.concepts, n, d, order))


@dataclass(frozen=True)
class ForbiddenLabel:
    witness_set: tuple[str, ...]
    pattern: str
    forbidden_subset: tuple[str, ...]


def _missing_patterns(system: SetSystem, positions: Sequence[int]) -> list[int]:
    a = _mask_of(positions)
    present = {compress_bits(t, positions) for t in _traces(system.concepts, a)}
    return [p for p in range(1 << len(positions)) if p not in present]


def _label_for(system: SetSystem, positions: Sequence[int]) -> ForbiddenLabel:
    missing = _missing_patterns(system, positions)
    names = tuple(system.domain.elements[p] for p in positions)
    if len(missing) != 1:
        raise NotMaximumError(
            f"{len(missing)} patterns missing on {{{', '.join(names)}}}; expected exactly one",
            missing=len(missing))
    pattern = bitstring(missing[0], len(positions))
    return ForbiddenLabel(names, pattern,
                          tuple(e for e, b in zip(names, pattern) if b == "1"))


def forbidden_label(system: SetSystem, subset: Iterable[str] | int) -> ForbiddenLabel:
    d = require_maximum(system)
    a = system.subset_mask(subset)
    if popcount(a) != d + 1:
        raise PreconditionError(f"witness set must have {d + 1} elements, got {popcount(a)}")
    return _label_for(system, [i for i in range(system.n) if a >> i & 1])


def all_forbidden_labels(system: SetSystem) -> list[ForbiddenLabel]:
    d = require_maximum(system)
    return [_label_for(system, s) for s in combinations(range(system.n), d + 1)]


def _forbidden_table(system: SetSystem, d: int) -> list[tuple[int, int]]:
    table = []
    for s in combinations(range(system.n), d + 1):
        (missing,) = _missing_patterns(system, s)
        table.append((_mask_of(s), expand_bits(missing, s)))
    return table


def membership_by_forbidden_labels(system: SetSystem, candidate: Iterable[str] | int) -> bool:
    """Decide ``candidate in C`` using only the forbidden labels."""
    d = require_maximum(system)
    c = system.subset_mask(candidate)
    return all(c & a != star for a, star in _forbidden_table(system, d))


def membership_table(system: SetSystem) -> dict[int, bool]:
    """Forbidden-label membership for all ``2**n`` labelings at once."""
    d = require_maximum(system)
    table = _forbidden_table(system, d)
    return {c: all(c & a != star for a, star in table) for c in range(1 << system.n)}


def helly_consistency(system: SetSystem, partial: PartialType) -> bool:
    """True iff some concept agrees with ``partial`` on its whole support."""
    require_maximum(system)
    sup, pos = partial.masks(system.domain)
    return any(c & sup == pos for c in system.concepts)


def locally_consistent(system: SetSystem, partial: PartialType, k: int) -> bool:
    """True iff every sub-labeling on at most ``k`` support points is realized."""
    sup, pos = partial.masks(system.domain)
    positions = [i for i in range(system.n) if sup >> i & 1]
    for size in range(min(k, len(positions)) + 1):
        for s in combinations(positions, size):
            a = _mask_of(s)
            if not any(c & a == pos & a for c in system.concepts):
                return False
    return True


def partial_from_bits(system: SetSystem, support: Iterable[str], bits: str) -> PartialType:
    sup = system.domain.members(system.domain.mask(support))
    if len(sup) != len(bits):
        raise DomainMismatchError("label string length differs from support size")
    return PartialType(sup, bits)


__all__ = [
    "ForbiddenLabel", "sauer_phi", "shatters", "shattered_sets", "vc_dimension",
    "is_maximum", "is_maximum_definitional", "require_maximum", "is_maximal",
    "maximal_completion", "greedy_complete", "forbidden_label", "all_forbidden_labels",
    "membership_by_forbidden_labels", "membership_table", "helly_consistency",
    "locally_consistent", "partial_from_bits", "from_bitstring",
]
