"""Finite set systems: ground set, canonical concept order, traces, dual, shift.

A concept is stored as an ``int`` bit mask over the domain, bit ``i`` set when
element ``i`` belongs to it.  Concepts of a :class:`SetSystem` are kept in
ascending lexicographic order of their bit strings (character ``i`` of the
string is the membership of element ``i``), so ``"1000" > "0100"``: the
concept ``{e1}`` sorts after ``{e2}``.  Every "first" or "least" witness in the
package refers to this order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapExceededError, DomainMismatchError, PreconditionError

MAX_ELEMENTS = 24
MAX_CONCEPTS = 1 << 20

Concept = int


def bitstring(mask: int, n: int) -> str:
    """Membership string of ``mask`` over ``n`` positions, element 0 first."""
    return "".join("1" if mask >> i & 1 else "0" for i in range(n))


def from_bitstring(bits: str) -> int:
    mask = 0
    for i, ch in enumerate(bits):
        if ch == "1":
            mask |= 1 << i
        elif ch != "0":
            raise ValueError(f"invalid bit {ch!r} in {bits!r}")
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits_of(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in ascending order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def compress_bits(mask: int, positions: Sequence[int]) -> int:
    """Re-index the bits of ``mask`` found at ``positions`` to 0..k-1."""
    out = 0
    for j, p in enumerate(positions):
        if mask >> p & 1:
            out |= 1 << j
    return out


def expand_bits(mask: int, positions: Sequence[int]) -> int:
    """Inverse of :func:`compress_bits`."""
    out = 0
    for j, p in enumerate(positions):
        if mask >> j & 1:
            out |= 1 << p
    return out


def canonical_sort(masks: Iterable[int], n: int) -> list[int]:
    return sorted(masks, key=lambda m: bitstring(m, n))


def check_caps(n_elements: int, n_concepts: int = 0, *,
               max_elements: int = MAX_ELEMENTS,
               max_concepts: int = MAX_CONCEPTS) -> None:
    if n_elements > max_elements:
        raise CapExceededError(
            f"domain has {n_elements} elements, cap is {max_elements}")
    if n_concepts > max_concepts:
        raise CapExceededError(
            f"family has {n_concepts} concepts, cap is {max_concepts}")


@dataclass(frozen=True)
class Domain:
    """Ordered ground set of element identifiers."""

    elements: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if not self.elements:
            raise PreconditionError("domain must contain at least one element")
        for e in self.elements:
            if not isinstance(e, str) or not e or any(ch.isspace() for ch in e):
                raise PreconditionError(f"invalid element identifier {e!r}")
        if len(set(self.elements)) != len(self.elements):
            raise PreconditionError("domain identifiers must be distinct")
        object.__setattr__(self, "_index",
                           {e: i for i, e in enumerate(self.elements)})

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def full(self) -> int:
        return (1 << len(self.elements)) - 1

    def index(self, element: str) -> int:
        try:
            return self._index[element]
        except KeyError:
            raise DomainMismatchError(f"element {element!r} not in domain") from None

    def mask(self, elements: Iterable[str]) -> int:
        """Bit mask of a collection of identifiers."""
        if isinstance(elements, str):
            raise TypeError("expected a collection of element identifiers, got a string")
        m = 0
        for e in elements:
            m |= 1 << self.index(e)
        return m

    def members(self, mask: int) -> tuple[str, ...]:
        """Identifiers of ``mask`` in domain order."""
        return tuple(self.elements[i] for i in bits_of(mask))


@dataclass(frozen=True)
class SetSystem:
    """A ground set together with a nonempty family of distinct concepts."""

    domain: Domain
    concepts: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.domain, Domain):
            object.__setattr__(self, "domain", Domain(tuple(self.domain)))
        n = len(self.domain)
        masks = tuple(self.concepts)
        if not masks:
            raise PreconditionError("a set system needs at least one concept")
        full = self.domain.full
        for m in masks:
            if m < 0 or m & ~full:
                raise DomainMismatchError(f"concept mask {m} exceeds the domain")
        ordered = tuple(canonical_sort(masks, n))
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise PreconditionError(
                    f"duplicate concept {set(self.domain.members(a)) or '{}'}")
        object.__setattr__(self, "concepts", ordered)

    @classmethod
    def from_masks(cls, elements: Iterable[str] | Domain, masks: Iterable[int], *,
                   dedup: bool = False) -> "SetSystem":
        domain = elements if isinstance(elements, Domain) else Domain(tuple(elements))
        masks = list(masks)
        if dedup:
            masks = list(set(masks))
        return cls(domain, tuple(masks))

    @classmethod
    def from_sets(cls, elements: Iterable[str] | Domain,
                  concepts: Iterable[Iterable[str]], *, dedup: bool = False) -> "SetSystem":
        domain = elements if isinstance(elements, Domain) else Domain(tuple(elements))
        return cls.from_masks(domain, (domain.mask(c) for c in concepts), dedup=dedup)

    @property
    def n(self) -> int:
        return len(self.domain)

    def __len__(self) -> int:
        return len(self.concepts)

    def __contains__(self, mask: int) -> bool:
        return mask in self._concept_set

    @property
    def _concept_set(self) -> frozenset[int]:
        cached = self.__dict__.get("_cset")
        if cached is None:
            cached = frozenset(self.concepts)
            object.__setattr__(self, "_cset", cached)
        return cached

    def concept_sets(self) -> list[frozenset[str]]:
        return [frozenset(self.domain.members(c)) for c in self.concepts]

    def bitstrings(self) -> list[str]:
        return [bitstring(c, self.n) for c in self.concepts]

    def subset_mask(self, elements: Iterable[str] | int) -> int:
        """Mask of a subset given as identifiers (or already as a mask)."""
        if isinstance(elements, int):
            if elements < 0 or elements & ~self.domain.full:
                raise DomainMismatchError(f"subset mask {elements} exceeds the domain")
            return elements
        return self.domain.mask(elements)

    def check_caps(self, max_elements: int = MAX_ELEMENTS,
                   max_concepts: int = MAX_CONCEPTS) -> None:
        check_caps(self.n, len(self.concepts),
                   max_elements=max_elements, max_concepts=max_concepts)


@dataclass(frozen=True)
class Trace:
    """The family ``{c & A : c in C}`` re-expressed over the sub-domain ``A``."""

    sub_domain: tuple[str, ...]
    patterns: frozenset[str]
    """Bit strings over ``sub_domain``; see :meth:`as_system`."""

    def __len__(self) -> int:
        return len(self.patterns)

    def as_system(self) -> SetSystem | None:
        """The patterns as a :class:`SetSystem`; ``None`` when ``A`` is empty
        (a domain must be nonempty)."""
        if not self.sub_domain:
            return None
        return SetSystem.from_masks(self.sub_domain,
                                    (from_bitstring(p) for p in self.patterns))


@dataclass(frozen=True)
class PartialType:
    """A labeling of a subset of the domain; ``labels[k]`` labels ``support[k]``."""

    support: tuple[str, ...]
    labels: str

    def __post_init__(self):
        object.__setattr__(self, "support", tuple(self.support))
        if len(self.support) != len(self.labels):
            raise PreconditionError("support and labels differ in length")
        if set(self.labels) - {"0", "1"}:
            raise PreconditionError(f"labels must be a 0/1 string, got {self.labels!r}")
        if len(set(self.support)) != len(self.support):
            raise PreconditionError("support elements must be distinct")

    @classmethod
    def from_concept(cls, system: SetSystem, concept: int,
                     support: Iterable[str]) -> "PartialType":
        sup = system.domain.members(system.domain.mask(support))
        return cls(sup, "".join(
            "1" if concept >> system.domain.index(e) & 1 else "0" for e in sup))

    @classmethod
    def from_mapping(cls, system: SetSystem, mapping: dict[str, int]) -> "PartialType":
        sup = system.domain.members(system.domain.mask(mapping))
        return cls(sup, "".join("1" if mapping[e] else "0" for e in sup))

    def as_dict(self) -> dict[str, int]:
        return {e: int(b) for e, b in zip(self.support, self.labels)}

    def masks(self, domain: Domain) -> tuple[int, int]:
        """``(support_mask, positive_mask)`` over ``domain``."""
        sup = pos = 0
        for e, b in zip(self.support, self.labels):
            bit = 1 << domain.index(e)
            sup |= bit
            if b == "1":
                pos |= bit
        return sup, pos


def restrict(system: SetSystem, subset: Iterable[str] | int) -> Trace:
    a = system.subset_mask(subset)
    positions = list(bits_of(a))
    patterns = {c & a for c in system.concepts}
    k = len(positions)
    return Trace(
        sub_domain=tuple(system.domain.elements[p] for p in positions),
        patterns=frozenset(bitstring(compress_bits(p, positions), k) for p in patterns),
    )


def trace_count(system: SetSystem, subset: Iterable[str] | int) -> int:
    a = system.subset_mask(subset)
    return len({c & a for c in system.concepts})


def dual(system: SetSystem) -> SetSystem:
    """Dual system: elements are the concepts (named ``c0``, ``c1``, ... in
    canonical order); each original element contributes the row of concepts
    containing it.  Duplicate rows collapse."""
    names = tuple(f"c{j}" for j in range(len(system.concepts)))
    rows = set()
    for i in range(system.n):
        row = 0
        for j, c in enumerate(system.concepts):
            if c >> i & 1:
                row |= 1 << j
        rows.add(row)
    return SetSystem.from_masks(names, rows)


def delta_shift(system: SetSystem, subset: Iterable[str] | int) -> SetSystem:
    """Replace every concept ``c`` by ``c ^ B``."""
    b = system.subset_mask(subset)
    return SetSystem(system.domain, tuple(c ^ b for c in system.concepts))


def relabel(system: SetSystem, permutation: Sequence[int]) -> SetSystem:
    """Move element ``i`` to position ``permutation[i]`` (identifiers travel along)."""
    n = system.n
    if sorted(permutation) != list(range(n)):
        raise PreconditionError("not a permutation of the domain positions")
    elements = [""] * n
    for i, p in enumerate(permutation):
        elements[p] = system.domain.elements[i]
    masks = []
    for c in system.concepts:
        m = 0
        for i in bits_of(c):
            m |= 1 << permutation[i]
        masks.append(m)
    return SetSystem.from_masks(elements, masks)
