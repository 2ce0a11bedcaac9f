"""Simplicial rational polyhedral cones in Z^3 and fans built from them.

Only full-dimensional simplicial cones are supported as maximal cones; faces
are derived on the fly, never stored.  All geometry is decided by exact
rational arithmetic (integer cross products, adjugates and ``Fraction``
solves), so validity and completeness verdicts are never approximate.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .lattice import Matrix, Vector, adjugate, det, is_primitive

INTERIOR = "interior"
BOUNDARY = "boundary"
OUTSIDE = "outside"

Rational = int | Fraction


class FanFormatError(ValueError):
    """Raised when a fan file does not follow the documented JSON schema."""


@dataclass(frozen=True)
class Cone:
    """A full-dimensional simplicial cone in Z^3, given by 3 primitive rays."""

    rays: tuple[Vector, Vector, Vector]

    def __post_init__(self) -> None:
        if len(self.rays) != 3:
            raise ValueError("a simplicial cone in Z^3 needs exactly 3 rays")
        for ray in self.rays:
            if len(ray) != 3 or any(type(x) is not int for x in ray):
                raise ValueError(f"ray {ray!r} is not an integer vector of length 3")
            if not is_primitive(ray):
                raise ValueError(f"ray {ray} is not primitive")
        if det(self.ray_matrix()) == 0:
            raise ValueError(f"degenerate cone: rays {self.rays} are linearly dependent")

    def ray_matrix(self) -> Matrix:
        """The 3x3 matrix whose columns are the rays."""
        return tuple(zip(*self.rays))


def make_cone(r1: Sequence[int], r2: Sequence[int], r3: Sequence[int]) -> Cone:
    return Cone((tuple(r1), tuple(r2), tuple(r3)))


def cone_multiplicity(c: Cone) -> int:
    """Index of the sublattice spanned by the rays; 1 means smooth."""
    return abs(det(c.ray_matrix()))


def is_smooth(c: Cone) -> bool:
    return cone_multiplicity(c) == 1


def inward_normals(c: Cone) -> tuple[Vector, Vector, Vector]:
    """Integer facet normals: ``x`` lies in the cone iff every ``n . x >= 0``."""
    m = c.ray_matrix()
    d = det(m)
    sign = 1 if d > 0 else -1
    return tuple(tuple(sign * x for x in row) for row in adjugate(m))


def cone_contains(c: Cone, point: Sequence[Rational]) -> bool:
    return all(sum(n_i * p_i for n_i, p_i in zip(n, point)) >= 0 for n in inward_normals(c))


def classify_point(c: Cone, point: Sequence[Rational]) -> str:
    """Locate a rational point relative to the cone.

    Returns ``"interior"`` (all ray coordinates positive), ``"boundary"``
    (nonnegative with a zero) or ``"outside"`` (some coordinate negative).
    """
    if len(point) != 3:
        raise ValueError("point must have 3 coordinates")
    m = c.ray_matrix()
    d = det(m)
    coords = [
        Fraction(sum(a_ij * p_j for a_ij, p_j in zip(row, point)), d) for row in adjugate(m)
    ]
    if any(t < 0 for t in coords):
        return OUTSIDE
    if all(t > 0 for t in coords):
        return INTERIOR
    return BOUNDARY


@dataclass(frozen=True)
class Fan:
    """A fan given by its ray table and maximal cones as ray-index triples.

    The constructor only enforces structural well-formedness (shapes, index
    ranges, distinct indices per cone); geometric validity is the business of
    :func:`validate_fan` so that broken fans can be loaded and diagnosed.
    """

    name: str
    rays: tuple[Vector, ...]
    cones: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        for ray in self.rays:
            if len(ray) != 3 or any(type(x) is not int for x in ray):
                raise ValueError(f"ray {ray!r} is not an integer vector of length 3")
        for cone in self.cones:
            if len(cone) != 3 or len(set(cone)) != 3:
                raise ValueError(f"cone {cone!r} must consist of 3 distinct ray indices")
            for idx in cone:
                if type(idx) is not int or not 0 <= idx < len(self.rays):
                    raise ValueError(f"cone {cone!r} has ray index out of range")

    def cone_rays(self, k: int) -> tuple[Vector, Vector, Vector]:
        i, j, l = self.cones[k]
        return (self.rays[i], self.rays[j], self.rays[l])

    def simplicial_cone(self, k: int) -> Cone:
        return Cone(self.cone_rays(k))


def make_fan(
    name: str, rays: Iterable[Sequence[int]], cones: Iterable[Sequence[int]]
) -> Fan:
    return Fan(
        name,
        tuple(tuple(r) for r in rays),
        tuple(tuple(c) for c in cones),
    )


@dataclass(frozen=True)
class FanValidation:
    problems: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.problems


def _primitive_part(v: Vector) -> Vector:
    g = gcd(*v)
    return tuple(x // g for x in v) if g else v


def _cross(a: Vector, b: Vector) -> Vector:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _solve_nonneg_combination(rays: Sequence[Vector], v: Vector) -> bool:
    """Is ``v`` a nonnegative rational combination of the given independent rays?"""
    if not rays:
        return all(x == 0 for x in v)
    # Gaussian elimination over Fraction on the 3 x len(rays) system.
    rows = [[Fraction(rays[j][i]) for j in range(len(rays))] + [Fraction(v[i])] for i in range(3)]
    ncols = len(rays)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, 3) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        rows[r] = [x / rows[r][c] for x in rows[r]]
        for i in range(3):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    # rays are independent, so every column is a pivot; leftover rows must vanish
    if len(pivots) != ncols:
        return False
    for i in range(r, 3):
        if rows[i][-1] != 0:
            return False
    coeffs = [rows[i][-1] for i in range(ncols)]
    return all(t >= 0 for t in coeffs)


def _intersection_is_common_face(fan: Fan, ca: int, cb: int) -> bool:
    """Exact check that two maximal cones intersect in the cone on their shared rays.

    The intersection of the two simplicial cones is cut out by the 6 inward
    facet normals; its extreme rays all arise as cross products of two of
    those normals, so testing every such candidate for membership in the cone
    spanned by the shared rays decides the face condition exactly.
    """
    cone_a = fan.simplicial_cone(ca)
    cone_b = fan.simplicial_cone(cb)
    shared = sorted(set(fan.cones[ca]) & set(fan.cones[cb]))
    shared_rays = [fan.rays[i] for i in shared]
    normals = inward_normals(cone_a) + inward_normals(cone_b)
    candidates: set[Vector] = set()
    for n1, n2 in combinations(normals, 2):
        d = _cross(n1, n2)
        if d == (0, 0, 0):
            continue
        for cand in (d, tuple(-x for x in d)):
            if all(sum(n_i * c_i for n_i, c_i in zip(n, cand)) >= 0 for n in normals):
                candidates.add(_primitive_part(cand))
    return all(_solve_nonneg_combination(shared_rays, cand) for cand in sorted(candidates))


def validate_fan(fan: Fan) -> FanValidation:
    """Report all geometric violations: bad rays, degenerate cones, bad intersections."""
    problems: list[str] = []
    for i, ray in enumerate(fan.rays):
        if not is_primitive(ray):
            problems.append(f"ray {i} = {list(ray)} is not primitive")
    seen: dict[Vector, int] = {}
    for i, ray in enumerate(fan.rays):
        if ray in seen:
            problems.append(f"ray {i} duplicates ray {seen[ray]}")
        else:
            seen[ray] = i
    degenerate: set[int] = set()
    for k, cone in enumerate(fan.cones):
        m = tuple(zip(*fan.cone_rays(k)))
        if det(m) == 0:
            degenerate.add(k)
            problems.append(f"cone {list(cone)} is degenerate (rays linearly dependent)")
    cone_sets = {}
    for k, cone in enumerate(fan.cones):
        key = frozenset(cone)
        if key in cone_sets:
            problems.append(f"cone {list(cone)} duplicates cone {list(fan.cones[cone_sets[key]])}")
        else:
            cone_sets[key] = k
    if not any("not primitive" in p for p in problems):
        for ca, cb in combinations(range(len(fan.cones)), 2):
            if ca in degenerate or cb in degenerate:
                continue
            if not _intersection_is_common_face(fan, ca, cb):
                problems.append(
                    f"cones {list(fan.cones[ca])} and {list(fan.cones[cb])} "
                    "do not intersect in a common face"
                )
    return FanValidation(tuple(problems))


def fan_walls(fan: Fan) -> Counter:
    """Multiset of 2-dimensional faces, as frozensets of ray-index pairs."""
    walls: Counter = Counter()
    for cone in fan.cones:
        for pair in combinations(sorted(cone), 2):
            walls[frozenset(pair)] += 1
    return walls


def is_complete(fan: Fan) -> bool:
    """Wall criterion for completeness of a valid pure simplicial fan in Z^3.

    True iff every wall lies in exactly two maximal cones and the wall
    adjacency graph is connected.  Callers are expected to have validated the
    fan first; degenerate cones are rejected here outright.
    """
    if not fan.cones:
        return False
    for k in range(len(fan.cones)):
        if det(tuple(zip(*fan.cone_rays(k)))) == 0:
            raise ValueError(f"cone {list(fan.cones[k])} is degenerate")
    walls = fan_walls(fan)
    if any(count != 2 for count in walls.values()):
        return False
    # connectivity of the wall-adjacency graph
    by_wall: dict[frozenset, list[int]] = {}
    for k, cone in enumerate(fan.cones):
        for pair in combinations(sorted(cone), 2):
            by_wall.setdefault(frozenset(pair), []).append(k)
    reached = {0}
    frontier = [0]
    while frontier:
        k = frontier.pop()
        for pair in combinations(sorted(fan.cones[k]), 2):
            for other in by_wall[frozenset(pair)]:
                if other not in reached:
                    reached.add(other)
                    frontier.append(other)
    return len(reached) == len(fan.cones)


# ---------------------------------------------------------------------------
# Fan file format:
#   { "name": str, "dim": 3, "rays": [[int,int,int], ...], "cones": [[i,j,k], ...] }
# with 0-based ray indices.


def fan_to_dict(fan: Fan) -> dict:
    return {
        "name": fan.name,
        "dim": 3,
        "rays": [list(ray) for ray in fan.rays],
        "cones": [list(cone) for cone in fan.cones],
    }


def fan_to_json(fan: Fan) -> str:
    return json.dumps(fan_to_dict(fan), indent=2) + "\n"


def _require_int(value, where: str) -> int:
    if type(value) is not int:
        raise FanFormatError(f"{where}: expected an integer, got {value!r}")
    return value


def fan_from_dict(data) -> Fan:
    if not isinstance(data, dict):
        raise FanFormatError("fan document must be a JSON object")
    for key in ("name", "dim", "rays", "cones"):
        if key not in data:
            raise FanFormatError(f"missing required field '{key}'")
    if not isinstance(data["name"], str):
        raise FanFormatError("'name' must be a string")
    if data["dim"] != 3:
        raise FanFormatError(f"'dim' must be 3, got {data['dim']!r}")
    rays = []
    for i, ray in enumerate(data["rays"]):
        if not isinstance(ray, list) or len(ray) != 3:
            raise FanFormatError(f"rays[{i}]: expected a list of 3 integers")
        rays.append(tuple(_require_int(x, f"rays[{i}][{j}]") for j, x in enumerate(ray)))
    cones = []
    for k, cone in enumerate(data["cones"]):
        if not isinstance(cone, list) or len(cone) != 3:
            raise FanFormatError(f"cones[{k}]: expected a list of 3 ray indices")
        idx = tuple(_require_int(x, f"cones[{k}][{j}]") for j, x in enumerate(cone))
        for j, x in enumerate(idx):
            if not 0 <= x < len(rays):
                raise FanFormatError(f"cones[{k}][{j}]: ray index {x} out of range")
        if len(set(idx)) != 3:
            raise FanFormatError(f"cones[{k}]: ray indices must be distinct")
        cones.append(idx)
    return Fan(data["name"], tuple(rays), tuple(cones))


def fan_from_json(text: str) -> Fan:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FanFormatError(f"invalid JSON: {exc}") from exc
    return fan_from_dict(data)


def load_fan(path) -> Fan:
    with open(path, "r", encoding="utf-8") as handle:
        return fan_from_json(handle.read())


def save_fan(fan: Fan, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(fan_to_json(fan))
