"""Family generators, including exact-rational positivity families pos(f0 - H)."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .core import MAX_ELEMENTS, SetSystem, check_caps
from .errors import GeneralPositionError, PreconditionError
from .rational import rank, solvable, strictly_feasible
from .vc import greedy_complete

Point = tuple[Fraction, Fraction]


def _chain(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(1, n + 1))


@dataclass(frozen=True)
class PointConfig:
    points: tuple[Point, ...]

    def __post_init__(self):
        pts = tuple((Fraction(x), Fraction(y)) for x, y in self.points)
        if not pts:
            raise PreconditionError("point configuration is empty")
        if len(set(pts)) != len(pts):
            raise PreconditionError("points must be pairwise distinct")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(f"p{i}" for i in range(1, len(self.points) + 1))


@dataclass(frozen=True)
class LinearFamilySpec:
    """Values of the basis functions of ``H`` (one row per point) and of ``f0``."""

    basis_values: tuple[tuple[Fraction, ...], ...]
    f0_values: tuple[Fraction, ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in r) for r in self.basis_values)
        f0 = tuple(Fraction(v) for v in self.f0_values)
        if not rows or not rows[0]:
            raise PreconditionError("need at least one point and one basis function")
        if any(len(r) != len(rows[0]) for r in rows):
            raise PreconditionError("ragged basis matrix")
        if len(f0) != len(rows):
            raise PreconditionError(f"f0 has {len(f0)} values for {len(rows)} points")
        object.__setattr__(self, "basis_values", rows)
        object.__setattr__(self, "f0_values", f0)

    @property
    def dimension(self) -> int:
        return len(self.basis_values[0])


def circle_spec(config: PointConfig) -> LinearFamilySpec:
    """``H`` spanned by ``y, x, 1`` and ``f0(x, y) = -x**2 - y**2``."""
    return LinearFamilySpec(
        tuple((y, x, Fraction(1)) for x, y in config.points),
        tuple(-x * x - y * y for x, y in config.points),
    )


def gen_k_subsets(n: int, d: int, *, max_elements: int = MAX_ELEMENTS) -> SetSystem:
    if not 0 <= d <= n:
        raise PreconditionError("need 0 <= d <= n")
    check_caps(n, max_elements=max_elements)
    masks = [sum(1 << i for i in s) for k in range(d + 1) for s in combinations(range(n), k)]
    return SetSystem.from_masks(_chain(n), masks)


def gen_nonempty_k_subsets(n: int, d: int, *, max_elements: int = MAX_ELEMENTS) -> SetSystem:
    if not 1 <= d < n:
        raise PreconditionError("need 1 <= d < n")
    check_caps(n, max_elements=max_elements)
    masks = [sum(1 << i for i in s) for k in range(1, d + 1) for s in combinations(range(n), k)]
    return SetSystem.from_masks(_chain(n), masks)


def _runs(mask: int) -> int:
    # a run starts at every set bit whose lower neighbour is clear
    return bin(mask & ~(mask << 1)).count("1")


def gen_interval_unions(n: int, m: int, *, max_elements: int = MAX_ELEMENTS) -> SetSystem:
    """Subsets of the ``n``-chain made of at most ``m`` maximal runs.

    Maximum of dimension ``2m`` when ``n >= 2m``; once ``m >= ceil(n/2)`` every
    subset qualifies.
    """
    if m < 1 or n < 1:
        raise PreconditionError("need n >= 1 and m >= 1")
    check_caps(n, max_elements=max_elements)
    return SetSystem.from_masks(_chain(n), [c for c in range(1 << n) if _runs(c) <= m])


def gen_prefixes(n: int, *, max_elements: int = MAX_ELEMENTS) -> SetSystem:
    if n < 1:
        raise PreconditionError("need n >= 1")
    check_caps(n, max_elements=max_elements)
    return SetSystem.from_masks(_chain(n), [(1 << t) - 1 for t in range(n + 1)])


@dataclass(frozen=True)
class GeneralPositionReport:
    ok: bool
    kind: str | None = None  # "rank" or "interpolation"
    subset: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "general position"
        pts = ", ".join(f"p{i + 1}" for i in self.subset)
        if self.kind == "rank":
            return f"basis restricted to {{{pts}}} is rank deficient"
        return f"f0 is interpolated by H on {{{pts}}}"


def validate_general_position(config: PointConfig, spec: LinearFamilySpec) -> GeneralPositionReport:
    """Every ``n`` points carry a full-rank basis and no ``n + 1`` points are
    interpolated by ``f0 - H``; the first violation in canonical order is reported."""
    if len(spec.basis_values) != len(config):
        raise PreconditionError(
            f"spec has {len(spec.basis_values)} rows for {len(config)} points")
    n = spec.dimension
    rows, f0 = spec.basis_values, spec.f0_values
    k = min(n, len(rows))
    for s in combinations(range(len(rows)), k):
        if rank([rows[i] for i in s]) < k:
            return GeneralPositionReport(False, "rank", s)
    for s in combinations(range(len(rows)), n + 1):
        if solvable([rows[i] for i in s], [f0[i] for i in s]):
            return GeneralPositionReport(False, "interpolation", s)
    return GeneralPositionReport(True)


def sign_patterns(spec: LinearFamilySpec) -> list[int]:
    """All masks ``{i : f0_i - h_i . a > 0}`` with no zero entries, over ``a`` in Q^n.

    Points are fixed one at a time; a branch is kept only when the open polyhedron
    of coefficients realizing the partial sign vector is nonempty.
    """
    rows, f0 = spec.basis_values, spec.f0_values
    out = []

    def extend(i: int, mask: int, ineqs: list) -> None:
        if i == len(rows):
            out.append(mask)
            return
        for sign in (1, -1):
            row = (tuple(-sign * h for h in rows[i]), sign * f0[i])
            cand = ineqs + [row]
            if strictly_feasible(cand):
                extend(i + 1, mask | (1 << i) if sign > 0 else mask, cand)

    extend(0, 0, [])
    return out


def gen_pos_family(config: PointConfig, spec: LinearFamilySpec, *,
                   max_elements: int = MAX_ELEMENTS) -> SetSystem:
    check_caps(len(config), max_elements=max_elements)
    report = validate_general_position(config, spec)
    if not report:
        raise GeneralPositionError(report.describe())
    return SetSystem.from_masks(config.names, sign_patterns(spec))


def gen_circles(config: PointConfig, *, max_elements: int = MAX_ELEMENTS) -> SetSystem:
    """Circle-interior family: ``pos(f0 - H)`` for the circle spec.  Includes the
    degenerate half-plane patterns realized by the linear span."""
    return gen_pos_family(config, circle_spec(config), max_elements=max_elements)


def gen_rectangles(config: PointConfig, *, max_elements: int = MAX_ELEMENTS) -> SetSystem:
    """All traces of closed axis-parallel rectangles on the configuration."""
    check_caps(len(config), max_elements=max_elements)
    pts = config.points
    xs = sorted({x for x, _ in pts})
    ys = sorted({y for _, y in pts})
    traces = {0}
    for i, xlo in enumerate(xs):
        for xhi in xs[i:]:
            col = [(k, y) for k, (x, y) in enumerate(pts) if xlo <= x <= xhi]
            for j, ylo in enumerate(ys):
                for yhi in ys[j:]:
                    traces.add(sum(1 << k for k, y in col if ylo <= y <= yhi))
    return SetSystem.from_masks(config.names, traces)


def random_order(n: int, seed: int) -> list[int]:
    """All ``2**n`` labelings shuffled by ``random.Random(seed)`` (Mersenne Twister)."""
    order = list(range(1 << n))
    random.Random(seed).shuffle(order)
    return order


def gen_random_maximal(n: int, d: int, seed: int, *,
                       max_elements: int = MAX_ELEMENTS) -> SetSystem:
    """Greedy ``d``-maximal family grown from ``{{}}`` in a seeded random order."""
    if not 0 <= d < n:
        raise PreconditionError("need 0 <= d < n")
    check_caps(n, max_elements=max_elements)
    return SetSystem.from_masks(_chain(n), greedy_complete([0], n, d, random_order(n, seed)))


def cubic_config(k: int) -> PointConfig:
    """Points ``(i, i**3)`` for ``i = 1..k``."""
    return PointConfig(tuple((Fraction(i), Fraction(i ** 3)) for i in range(1, k + 1)))


def random_rational_config(k: int, seed: int, *, grid: int = 40) -> PointConfig:
    """``k`` distinct points with coordinates ``a/4`` for integer ``a`` in ``[0, grid)``."""
    rng = random.Random(seed)
    seen: list[Point] = []
    while len(seen) < k:
        p = (Fraction(rng.randrange(grid), 4), Fraction(rng.randrange(grid), 4))
        if p not in seen:
            seen.append(p)
    return PointConfig(tuple(seen))


def config_from_points(points: Iterable[Sequence]) -> PointConfig:
    return PointConfig(tuple((Fraction(x), Fraction(y)) for x, y in points))
