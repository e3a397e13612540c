"""Four-interval lattice projection and the pyramid counts behind exact distances.

Subsets project to integer 4-vectors of interval-intersection counts, living
on the hyperplane of constant coordinate sum.  Around each projected point sit
two opposite infinite square pyramids that no compatible point may enter;
square moves shift projections along (-1, 1, -1, 1) or leave the multiset
alone.  Counting lattice points on and between the pyramids of a
four-interval complementary pair reproduces the closed-form distance values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .cliques import Collection
from .domains import circle_partition
from .ground import Subset
from .mutations import SquareMove, _moves_of

ALPHA = ((0, 0, -1, 1), (0, 1, -1, 0), (-1, 1, 0, 0), (-1, 0, 0, 1))
SHIFT = (-1, 1, -1, 1)


@dataclass(frozen=True)
class LatticeVec4:
    """An integer 4-vector; its level is the coordinate sum."""

    coords: tuple[int, int, int, int]

    @property
    def level(self) -> int:
        return sum(self.coords)

    def to_json(self) -> list[int]:
        return list(self.coords)


@dataclass(frozen=True)
class PyramidFrame:
    """An infinite square pyramid: apex plus nonnegative spans of the four edges.

    ``orientation`` +1 uses the edge vectors as given, -1 negates them.
    """

    apex: LatticeVec4
    orientation: int

    def __post_init__(self) -> None:
        if self.orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")


def _split_bounds(split: tuple[int, int, int, int], n: int) -> tuple[int, ...]:
    if len(split) != 4 or any(x < 1 for x in split):
        raise ValueError(f"split must be four positive integers, got {split}")
    if sum(split) != n:
        raise ValueError(f"split {split} does not sum to the ground size {n}")
    bounds = [0]
    for x in split:
        bounds.append(bounds[-1] + x)
    return tuple(bounds)


def phi_subset(s: Subset, split: tuple[int, int, int, int]) -> LatticeVec4:
    """Interval-intersection counts of one subset under the 4-way split of [n]."""
    bounds = _split_bounds(split, s.n)
    counts = []
    for t in range(4):
        lo, hi = bounds[t], bounds[t + 1]
        window = ((1 << hi) - 1) ^ ((1 << lo) - 1)
        counts.append((s.mask & window).bit_count())
    return LatticeVec4(tuple(counts))


def phi(c: Collection, split: tuple[int, int, int, int]) -> list[LatticeVec4]:
    """Projections of every member, in the collection's canonical order."""
    return [phi_subset(s, split) for s in c]


def _position(apex: tuple[int, ...], orientation: int, v: tuple[int, ...]) -> str:
    # facet form of membership: the four functionals vanish pairwise on
    # adjacent edge vectors, so sign tests replace span decompositions
    d = tuple(orientation * (v[t] - apex[t]) for t in range(4))
    if d[0] > 0 or d[1] < 0 or d[2] > 0 or d[3] < 0:
        return "outside"
    if d[0] < 0 and d[1] > 0 and d[2] < 0 and d[3] > 0:
        return "interior"
    return "boundary"


def pyramid_position(frame: PyramidFrame, v: LatticeVec4) -> str:
    """Classify a level-matched point as interior, boundary, or outside the pyramid."""
    if v.level != frame.apex.level:
        raise ValueError(f"level mismatch: {v.level} vs {frame.apex.level}")
    return _position(frame.apex.coords, frame.orientation, v.coords)


def decompose_in_pyramid(frame: PyramidFrame, v: LatticeVec4) -> tuple[int, int, int, int] | None:
    """A nonnegative integer edge-span combination reaching v from the apex, if any.

    Cross-validates the facet-sign membership test: a decomposition exists
    exactly when the four sign conditions hold.
    """
    if v.level != frame.apex.level:
        raise ValueError(f"level mismatch: {v.level} vs {frame.apex.level}")
    d = tuple(frame.orientation * (v.coords[t] - frame.apex.coords[t]) for t in range(4))
    # t2 is the free parameter: t3 = d2 - t2, t1 = -d3 - t2, t4 = d4 + d3 + t2
    lo = max(0, -d[3] - d[2])
    hi = min(d[1], -d[2])
    if lo > hi:
        return None
    t2 = lo
    return (-d[2] - t2, t2, d[1] - t2, d[3] + d[2] + t2)


@dataclass(frozen=True)
class P4Counts:
    """Lattice counts attached to a four-run complementary pair.

    ``z_count`` is the number of integral points on the boundary faces of the
    forward pyramid that lie strictly inside the opposite one; the interior
    count uses the half-open convention (closed forward pyramid, open
    opposite), which is what the closed forms count.
    """

    p: tuple[int, int, int, int]
    z_count: int
    z_formula: int
    interior_pq_count: int
    cuboid_formula: int

    @property
    def match(self) -> bool:
        return self.z_count == self.z_formula and self.interior_pq_count == self.cuboid_formula

    def to_json(self) -> dict:
        return {
            "p": list(self.p),
            "z_count": self.z_count,
            "z_formula": self.z_formula,
            "pq_interior": self.interior_pq_count,
            "cuboid_formula": self.cuboid_formula,
            "match": self.match,
        }


def normalize_p4(p: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    """Rotate the run-length tuple until the first entry is a maximum.

    Single-step rotations swap the roles of the set and its complement, so all
    four rotations describe one geometry; ties break toward the
    lexicographically largest tuple for determinism.
    """
    rotations = [tuple(p[(t + r) % 4] for t in range(4)) for r in range(4)]
    valid = [q for q in rotations if q[0] >= max(q[1:])]
    return max(valid)


def p4_counts(a: Subset) -> P4Counts:
    """Exhaustive lattice counts for a set whose circle partition has four runs."""
    part = circle_partition(a)
    if part.u != 2:
        raise ValueError(f"expected exactly four runs, got {2 * part.u}")
    p = part.lengths
    k = part.k
    apex_p = (p[0], 0, p[2], 0)
    apex_q = (0, p[1], 0, p[3])

    z_points: set[tuple[int, ...]] = set()
    for face in range(4):
        e1, e2 = ALPHA[face], ALPHA[(face + 1) % 4]
        for t1 in range(2 * k + 1):
            for t2 in range(2 * k + 1):
                v = tuple(apex_p[t] + t1 * e1[t] + t2 * e2[t] for t in range(4))
                if _position(apex_q, -1, v) == "interior":
                    z_points.add(v)
    z_formula = 1 + k * k - 2 * k - sum(comb(x, 2) for x in p)

    interior = 0
    for v1 in range(p[0] + 1):
        for v2 in range(p[1] + 1):
            for v3 in range(p[2] + 1):
                v4 = k - v1 - v2 - v3
                if v4 < 0:
                    continue
                v = (v1, v2, v3, v4)
                if _position(apex_p, 1, v) != "outside" and _position(apex_q, -1, v) == "interior":
                    interior += 1
    q = normalize_p4(p)
    cuboid = q[1] * q[2] * q[3] - 2 * comb(q[2] + 1, 3)
    return P4Counts(p, len(z_points), z_formula, interior, cuboid)


@dataclass(frozen=True)
class NoInteriorVerdict:
    """Result of scanning a collection for forbidden pyramid-interior pairs."""

    ok: bool
    apex: Subset | None = None
    inside: Subset | None = None

    def to_json(self) -> dict:
        out: dict = {"pass": self.ok}
        if not self.ok:
            assert self.apex is not None and self.inside is not None
            out["violation"] = {"apex": self.apex.to_json(), "inside": self.inside.to_json()}
        return out


def check_no_interior(c: Collection, split: tuple[int, int, int, int]) -> NoInteriorVerdict:
    """Verify no member projects strictly inside another member's two pyramids."""
    subsets = c.subsets()
    points = [phi_subset(s, split).coords for s in subsets]
    for idx, apex in enumerate(points):
        for jdx, v in enumerate(points):
            if idx == jdx:
                continue
            if _position(apex, 1, v) == "interior" or _position(apex, -1, v) == "interior":
                return NoInteriorVerdict(False, subsets[idx], subsets[jdx])
    return NoInteriorVerdict(True)


@dataclass(frozen=True)
class MoveProjection:
    """How one square move acts on the projected multiset: a shift or nothing."""

    kind: str
    sign: int | None

    @property
    def vector(self) -> tuple[int, int, int, int] | None:
        if self.sign is None:
            return None
        return tuple(self.sign * x for x in SHIFT)

    def to_json(self) -> dict:
        return {"kind": self.kind, "vector": None if self.sign is None else list(self.vector)}


def move_projection_effect(
    c: Collection, m: SquareMove, split: tuple[int, int, int, int]
) -> MoveProjection:
    """Shift exactly when the move's four elements sit in four distinct intervals.

    Otherwise the image set of the projected collection is unchanged: the
    removed member shares its projection with a member that stays, and the
    added member lands on a projection already present.
    """
    member = frozenset(c.masks)
    applicable = any(
        (s, a, b, cc, d) == (m.s.mask, m.a, m.b, m.c, m.d)
        for s, a, b, cc, d, _ in _moves_of(c.masks, member, c.n)
    )
    if not applicable:
        raise ValueError("move is not applicable to this collection")
    bounds = _split_bounds(split, c.n)

    def interval_of(x: int) -> int:
        for t in range(4):
            if bounds[t] < x <= bounds[t + 1]:
                return t + 1
        raise AssertionError(f"element {x} outside all intervals")

    cells = [interval_of(x) for x in (m.a, m.b, m.c, m.d)]
    if len(set(cells)) != 4:
        return MoveProjection("unchanged", None)
    sign = 1 if {cells[0], cells[2]} == {1, 3} else -1
    return MoveProjection("shift", sign)
