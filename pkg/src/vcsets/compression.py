"""Labeled compression of partial types through internally shattered sets, an
extended-compression verifier, and the rectangle extreme-point scheme.

Types here are traces of concepts: a :class:`~vcsets.core.PartialType` over ``B``
is realizable when some concept of the system induces it on ``B``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .core import PartialType, SetSystem, bitstring, popcount
from .errors import NotCompressibleError, PreconditionError


@dataclass(frozen=True)
class CompressionRecord:
    kept: tuple[str, ...]
    kept_labels: str

    def __post_init__(self):
        object.__setattr__(self, "kept", tuple(self.kept))
        if len(self.kept) != len(self.kept_labels):
            raise PreconditionError("kept and kept_labels differ in length")


def _positions(system: SetSystem, elements: Iterable[str]) -> list[int]:
    return sorted(system.domain.index(e) for e in elements)


def _mask(positions: Iterable[int]) -> int:
    m = 0
    for p in positions:
        m |= 1 << p
    return m


def is_realizable(system: SetSystem, ptype: PartialType) -> bool:
    sup, pos = ptype.masks(system.domain)
    return any(c & sup == pos for c in system.concepts)


def _require_realizable(system: SetSystem, ptype: PartialType) -> tuple[int, int]:
    sup, pos = ptype.masks(system.domain)
    if not any(c & sup == pos for c in system.concepts):
        raise PreconditionError(f"type {ptype.as_dict()} is not realized by any concept")
    return sup, pos


def _shatters_inside(concepts, sup: int, pos: int, a: int) -> bool:
    off = sup & ~a
    seen = {c & a for c in concepts if c & off == pos & off}
    return len(seen) == 1 << popcount(a)


def internally_shatters(system: SetSystem, ptype: PartialType, subset: Iterable[str]) -> bool:
    sup, pos = _require_realizable(system, ptype)
    a = system.domain.mask(subset)
    if a & ~sup:
        raise PreconditionError("internally shattered set must lie inside the support")
    return _shatters_inside(system.concepts, sup, pos, a)


def find_internally_shattered(system: SetSystem, ptype: PartialType,
                              d: int) -> tuple[str, ...] | None:
    """Lexicographically least internally shattered subset of the support of size
    ``min(d, |support|)``, or ``None``."""
    sup, pos = _require_realizable(system, ptype)
    support = _positions(system, ptype.support)
    k = min(d, len(support))
    for s in combinations(support, k):
        if _shatters_inside(system.concepts, sup, pos, _mask(s)):
            return tuple(system.domain.elements[p] for p in s)
    return None


def compress_type(system: SetSystem, ptype: PartialType, d: int) -> CompressionRecord:
    kept = find_internally_shattered(system, ptype, d)
    if kept is None:
        raise NotCompressibleError(
            f"no internally shattered {d}-subset for type {ptype.as_dict()}")
    labels = ptype.as_dict()
    return CompressionRecord(kept, "".join(str(labels[e]) for e in kept))


def theta(system: SetSystem, kept: Sequence[str], element: str) -> bool:
    """``element`` is compatible with every labeling of ``kept``: for each of the
    ``2**|kept|`` patterns some concept realizes it and contains ``element``."""
    positions = _positions(system, kept)
    a = _mask(positions)
    bit = 1 << system.domain.index(element)
    return len({c & a for c in system.concepts if c & bit}) == 1 << len(positions)


def _reconstruct_mask(system: SetSystem, kept_positions: Sequence[int], kept_labels: str,
                      target: int) -> int:
    a = _mask(kept_positions)
    full = 1 << len(kept_positions)
    out = 0
    for p, b in zip(kept_positions, kept_labels):
        if b == "1":
            out |= 1 << p
    rest = target & ~a
    p = 0
    while rest >> p:
        if rest >> p & 1:
            bit = 1 << p
            if len({c & a for c in system.concepts if c & bit}) == full:
                out |= bit
        p += 1
    return out & target


def reconstruct_type(system: SetSystem, record: CompressionRecord,
                     over: Iterable[str]) -> PartialType:
    """Kept points take their stored labels; any other point of ``over`` is labeled
    1 exactly when :func:`theta` holds for it."""
    target = system.domain.mask(over)
    kept_mask = system.domain.mask(record.kept)
    if kept_mask & ~target:
        raise PreconditionError("kept points must lie inside the reconstruction support")
    order = sorted(range(len(record.kept)), key=lambda j: system.domain.index(record.kept[j]))
    positions = [system.domain.index(record.kept[j]) for j in order]
    labels = "".join(record.kept_labels[j] for j in order)
    out = _reconstruct_mask(system, positions, labels, target)
    support = system.domain.members(target)
    return PartialType(support, "".join(
        "1" if out >> system.domain.index(e) & 1 else "0" for e in support))


Kappa = Callable[[PartialType], Sequence[str]]
Rho = Callable[[Sequence[str]], int]


def l2_scheme(system: SetSystem, d: int) -> tuple[Kappa, list[Rho]]:
    """The internal-shattering scheme as an extended ``d``-compression.

    ``kappa`` returns the kept set without labels; there is one reconstruction
    function per label string ``eta`` of length ``d``.  On a kept set of size
    ``k < d`` a reconstruction uses the first ``k`` symbols of its ``eta``.
    """
    def kappa(f: PartialType) -> tuple[str, ...]:
        return compress_type(system, f, d).kept

    def make_rho(eta: str) -> Rho:
        def rho(kept: Sequence[str]) -> int:
            positions = _positions(system, kept)
            return _reconstruct_mask(system, positions, eta[:len(positions)],
                                     system.domain.full)
        rho.__name__ = f"rho_{eta or 'empty'}"
        return rho

    return kappa, [make_rho(bitstring(e, d)) for e in range(1 << d)]


def positive_part_scheme(system: SetSystem) -> tuple[Kappa, list[Rho]]:
    """Keep the positively labeled points, reconstruct by extending with zeros."""
    def kappa(f: PartialType) -> tuple[str, ...]:
        return tuple(e for e, b in zip(f.support, f.labels) if b == "1")

    def rho(kept: Sequence[str]) -> int:
        return system.domain.mask(kept)

    return kappa, [rho]


@dataclass(frozen=True)
class SchemeCheck:
    ok: bool
    counterexample: PartialType | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_extended_compression(system: SetSystem, d: int, kappa: Kappa,
                                rhos: Sequence[Rho]) -> SchemeCheck:
    """Check both axioms for every trace ``f`` of every ``B`` with ``|B| >= 2``.

    ``B`` runs by size, then lexicographically; traces on ``B`` in canonical order.
    The first failing trace is returned.
    """
    n = system.n
    for size in range(2, n + 1):
        for s in combinations(range(n), size):
            b = _mask(s)
            names = tuple(system.domain.elements[p] for p in s)
            traces = sorted({c & b for c in system.concepts}, key=lambda m: bitstring(m, n))
            for t in traces:
                f = PartialType(names, "".join("1" if t >> p & 1 else "0" for p in s))
                try:
                    kept = tuple(kappa(f))
                except PreconditionError as exc:
                    return SchemeCheck(False, f, f"compression failed: {exc}")
                kmask = system.domain.mask(kept)
                if kmask & ~b:
                    return SchemeCheck(False, f, "kept set leaves the domain of f")
                if len(kept) > d:
                    return SchemeCheck(False, f, f"kept {len(kept)} > {d} points")
                if not any(rho(kept) & b == t for rho in rhos):
                    return SchemeCheck(False, f, "no reconstruction extends f")
    return SchemeCheck(True)


# rectangles ---------------------------------------------------------------

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Rectangle:
    """Closed axis-parallel box ``[x_lo, x_hi] x [y_lo, y_hi]``."""

    x_lo: Fraction
    x_hi: Fraction
    y_lo: Fraction
    y_hi: Fraction

    def __post_init__(self):
        for f in ("x_lo", "x_hi", "y_lo", "y_hi"):
            object.__setattr__(self, f, Fraction(getattr(self, f)))
        if self.x_lo > self.x_hi or self.y_lo > self.y_hi:
            raise PreconditionError("rectangle bounds out of order")

    def contains(self, p: Point) -> bool:
        return self.x_lo <= p[0] <= self.x_hi and self.y_lo <= p[1] <= self.y_hi


def clip(points: Sequence[Point], region: Rectangle | None) -> tuple[Point, ...]:
    """Points inside ``region``; ``None`` is the empty region."""
    if region is None:
        return ()
    return tuple(p for p in points if region.contains(p))


def rectangle_compress(points: Sequence[Point], rect: Rectangle) -> tuple[Point, ...]:
    """Topmost, leftmost, rightmost and lowest points of ``points`` inside ``rect``
    (first in configuration order on ties), deduplicated, in configuration order."""
    inside = [(k, p) for k, p in enumerate(points) if rect.contains(p)]
    if not inside:
        return ()
    picks = {
        max(inside, key=lambda kp: (kp[1][1], -kp[0]))[0],
        min(inside, key=lambda kp: (kp[1][0], kp[0]))[0],
        max(inside, key=lambda kp: (kp[1][0], -kp[0]))[0],
        min(inside, key=lambda kp: (kp[1][1], kp[0]))[0],
    }
    return tuple(points[k] for k in sorted(picks))


def rectangle_reconstruct(kept: Sequence[Point]) -> Rectangle | None:
    """Bounding box of ``kept``; ``None`` (empty region) when nothing is kept."""
    if not kept:
        return None
    xs = [p[0] for p in kept]
    ys = [p[1] for p in kept]
    return Rectangle(min(xs), max(xs), min(ys), max(ys))
