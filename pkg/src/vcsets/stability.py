"""Ladder (order-property) index and the symmetric-difference normal form."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import SetSystem, bitstring, popcount
from .errors import PreconditionError


@dataclass(frozen=True)
class LadderWitness:
    """Points ``a_1..a_N`` and concepts ``c_1..c_N`` with ``a_i in c_j`` iff ``i < j``."""

    points: tuple[str, ...]
    witnesses: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.points)

    def holds(self, system: SetSystem) -> bool:
        idx = [system.domain.index(p) for p in self.points]
        return all((c >> a & 1) == (i < j)
                   for j, c in enumerate(self.witnesses)
                   for i, a in enumerate(idx))


def ladder_index(system: SetSystem, cap: int | None = None) -> tuple[int, LadderWitness]:
    """Longest ladder of length at most ``cap`` (default: domain size) with the
    lexicographically least witness at that length.

    A ladder is grown one rung at a time: the new point must avoid every concept
    chosen so far, the new concept must contain every earlier point and avoid the
    new one.  The search state is therefore just (points so far, excluded mask),
    which is memoised.  Witnesses compare as the interleaved sequence
    ``a_1, c_1, a_2, c_2, ...`` (points by domain position, concepts by canonical
    order).
    """
    if cap is None:
        cap = system.n
    if cap < 1:
        raise PreconditionError("ladder cap must be at least 1")
    n = system.n
    concepts = system.concepts

    @lru_cache(maxsize=None)
    def best(points: int, excluded: int) -> int:
        top = 0
        free = [a for a in range(n) if not excluded >> a & 1]
        if not free:
            return 0
        for a in free:
            bit = 1 << a
            for c in concepts:
                if c & points == points and not c & bit:
                    top = max(top, 1 + best(points | bit, excluded | c | bit))
                    if top >= cap - popcount(points):
                        return top
        return top

    length = min(best(0, 0), cap)
    pts: list[int] = []
    wit: list[int] = []
    points = excluded = 0
    for remaining in range(length, 0, -1):
        found = False
        for a in range(n):
            bit = 1 << a
            if excluded & bit:
                continue
            for c in concepts:
                if c & points == points and not c & bit and \
                        1 + best(points | bit, excluded | c | bit) >= remaining:
                    pts.append(a)
                    wit.append(c)
                    points |= bit
                    excluded |= c | bit
                    found = True
                    break
            if found:
                break
        assert found
    best.cache_clear()
    return length, LadderWitness(tuple(system.domain.elements[a] for a in pts), tuple(wit))


def is_stable_family(system: SetSystem, k: int) -> bool:
    if k < 1:
        raise PreconditionError("k must be at least 1")
    return ladder_index(system, k)[0] < k


@dataclass(frozen=True)
class NormalForm:
    radius: int
    center: int

    def covers(self, system: SetSystem) -> bool:
        return all(popcount(c ^ self.center) <= self.radius for c in system.concepts)


def stable_normal_form(system: SetSystem, *, exhaustive: bool = False) -> NormalForm:
    """Center ``B`` and radius ``n`` with every concept within Hamming distance ``n``
    of ``B``.  ``B`` ranges over the concepts (ties to the canonically least one);
    ``exhaustive=True`` lets it range over all of ``2**X`` instead."""
    if exhaustive:
        centers = sorted(range(1 << system.n), key=lambda m: bitstring(m, system.n))
    else:
        centers = system.concepts
    best = None
    for b in centers:
        r = max(popcount(c ^ b) for c in system.concepts)
        if best is None or r < best.radius:
            best = NormalForm(r, b)
    return best
