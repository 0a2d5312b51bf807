"""Slow reference implementations for differential testing.

Deliberately naive and written against plain Python sets of element positions;
nothing here calls into the other analysis modules.
"""

from __future__ import annotations

from itertools import combinations, product
from math import comb

from .core import PartialType, SetSystem


def _as_sets(system: SetSystem) -> list[frozenset[int]]:
    return [frozenset(i for i in range(system.n) if c >> i & 1) for c in system.concepts]


def _oracle_shatters(sets: list[frozenset[int]], a: tuple[int, ...]) -> bool:
    aset = frozenset(a)
    for bits in product((0, 1), repeat=len(a)):
        want = frozenset(x for x, b in zip(a, bits) if b)
        if not any(s & aset == want for s in sets):
            return False
    return True


def oracle_vc(system: SetSystem) -> int:
    sets = _as_sets(system)
    best = 0
    for size in range(system.n + 1):
        for a in combinations(range(system.n), size):
            if _oracle_shatters(sets, a):
                best = max(best, size)
    return best


def _phi(d: int, n: int) -> int:
    total = 0
    for i in range(0, d + 1):
        total += comb(n, i)
    return total


def oracle_is_maximum(system: SetSystem) -> bool:
    sets = _as_sets(system)
    d = oracle_vc(system)
    for size in range(system.n + 1):
        for a in combinations(range(system.n), size):
            aset = frozenset(a)
            if len({s & aset for s in sets}) != _phi(d, size):
                return False
    return True


def oracle_is_maximal(system: SetSystem) -> bool:
    """Add each missing labeling and recompute the dimension from scratch."""
    d = oracle_vc(system)
    have = set(system.concepts)
    for c in range(1 << system.n):
        if c in have:
            continue
        bigger = SetSystem(system.domain, system.concepts + (c,))
        if oracle_vc(bigger) == d:
            return False
    return True


def oracle_forbidden_patterns(system: SetSystem) -> dict[tuple[int, ...], list[str]]:
    """Missing bit strings for every (d+1)-subset."""
    sets = _as_sets(system)
    d = oracle_vc(system)
    out = {}
    for a in combinations(range(system.n), d + 1):
        aset = frozenset(a)
        present = {s & aset for s in sets}
        missing = []
        for bits in product("01", repeat=d + 1):
            want = frozenset(x for x, b in zip(a, bits) if b == "1")
            if want not in present:
                missing.append("".join(bits))
        out[a] = missing
    return out


def oracle_membership(system: SetSystem, candidate: int) -> bool:
    return candidate in set(system.concepts)


def oracle_helly(system: SetSystem, partial: PartialType) -> bool:
    sets = _as_sets(system)
    labels = {system.domain.index(e): b == "1" for e, b in zip(partial.support, partial.labels)}
    return any(all((x in s) == v for x, v in labels.items()) for s in sets)


def oracle_ladder(system: SetSystem) -> int:
    """Ladder length via chains of traces.

    Points ``a_1..a_N`` carry a ladder iff the trace on ``S = {a_1..a_N}`` contains
    the nested sets ``{}, {a_1}, ..., {a_1..a_{N-1}}``, i.e. a saturated chain from
    the empty set up to some ``(N-1)``-subset of ``S``.
    """
    sets = _as_sets(system)
    n = system.n
    best = 0
    for size in range(n, 0, -1):
        if size <= best:
            break
        for s in combinations(range(n), size):
            sset = frozenset(s)
            traces = {c & sset for c in sets}
            if frozenset() not in traces:
                continue
            layer = {frozenset()}
            for _ in range(size - 1):
                layer = {u | {x} for u in layer for x in sset - u if (u | {x}) in traces}
                if not layer:
                    break
            if layer:
                best = size
                break
    return best


def oracle_normal_form_radius(system: SetSystem) -> int:
    sets = _as_sets(system)
    return min(max(len(c ^ b) for c in sets) for b in sets)


def oracle_internally_shatters(system: SetSystem, ptype: PartialType, subset) -> bool:
    sets = _as_sets(system)
    idx = {system.domain.index(e): b == "1" for e, b in zip(ptype.support, ptype.labels)}
    a = frozenset(system.domain.index(e) for e in subset)
    extensions = set()
    for s in sets:
        if all((x in s) == v for x, v in idx.items() if x not in a):
            extensions.add(s & a)
    return len(extensions) == 2 ** len(a)


def oracle_reconstruct(system: SetSystem, record, over) -> PartialType:
    """The unique realizable type over ``over`` consistent with ``record`` and
    internally shattering the kept set; raises ``AssertionError`` unless unique."""
    sets = _as_sets(system)
    target = sorted(system.domain.index(e) for e in over)
    kept = {system.domain.index(e): b == "1" for e, b in zip(record.kept, record.kept_labels)}
    realizable = {tuple(x in s for x in target) for s in sets}
    names = tuple(system.domain.elements[x] for x in target)
    candidates = []
    for labels in sorted(realizable):
        if any(labels[target.index(x)] != v for x, v in kept.items()):
            continue
        p = PartialType(names, "".join("1" if v else "0" for v in labels))
        if oracle_internally_shatters(system, p, record.kept):
            candidates.append(p)
    if len(candidates) != 1:
        raise AssertionError(
            f"oracle reconstruction not unique: {len(candidates)} consistent types")
    return candidates[0]
