"""Cyclic quotient singularity types of simplicial cones, and terminality.

A full-dimensional simplicial cone whose rays span a finite-index sublattice
``L`` of Z^3 describes the germ C^3 / G with ``G = Z^3 / L``.  When ``G`` is
cyclic of order ``r``, a generator acts on the chart coordinates with weights
``(a1, a2, a3)`` read off from the ray coordinates of any lift of the
generator; the singularity type is written ``1/r(a1, a2, a3)``.

Types are normalized by rescaling with units mod ``r`` and sorting, so that
equality of normalized types is equality of singularities up to the usual
ambiguities (choice of generator, ordering of coordinates).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import gcd

from .cones import Cone
from .lattice import Matrix, adjugate, det, mat_vec, smith_normal_form


@dataclass(frozen=True)
class CyclicQuotientType:
    """The cyclic quotient singularity 1/r(a1, a2, a3); r = 1 is the smooth point.

    Weights are stored reduced mod ``r``.  Only effective actions are allowed:
    ``gcd(a1, a2, a3, r) == 1``.
    """

    r: int
    weights: tuple[int, int, int]

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError("group order r must be >= 1")
        if len(self.weights) != 3:
            raise ValueError("exactly 3 weights required")
        reduced = tuple(w % self.r for w in self.weights)
        object.__setattr__(self, "weights", reduced)
        if gcd(*reduced, self.r) != 1:
            raise ValueError(
                f"non-effective action: gcd of weights {reduced} and order {self.r} exceeds 1"
            )

    @property
    def is_smooth(self) -> bool:
        return self.r == 1

    def __str__(self) -> str:
        if self.r == 1:
            return "smooth"
        return "1/{}({},{},{})".format(self.r, *self.weights)


@dataclass(frozen=True)
class NonCyclicType:
    """Quotient by a non-cyclic abelian group; carries the invariant factors > 1."""

    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.factors) < 2 or any(f < 2 for f in self.factors):
            raise ValueError("non-cyclic type needs at least two invariant factors > 1")

    def __str__(self) -> str:
        return "noncyclic({})".format(",".join(str(f) for f in self.factors))


QuotientType = CyclicQuotientType | NonCyclicType


def normalize_type(t: CyclicQuotientType) -> CyclicQuotientType:
    """Canonical representative: lexicographically least sorted weight triple
    over all rescalings by units mod r."""
    if t.r == 1:
        return CyclicQuotientType(1, (0, 0, 0))
    best = None
    for u in range(1, t.r):
        if gcd(u, t.r) != 1:
            continue
        cand = tuple(sorted((u * a) % t.r for a in t.weights))
        if best is None or cand < best:
            best = cand
    return CyclicQuotientType(t.r, best)


def quotient_type(c: Cone) -> QuotientType:
    """Classify Z^3 modulo the ray lattice of the cone, normalized.

    The Smith normal form ``D = U R V`` of the ray matrix identifies
    ``Z^3 / R Z^3`` with the product of ``Z / d_i``; when cyclic, the class of
    the matching column of ``U^-1`` generates, and its ray coordinates give
    the action weights.
    """
    m = c.ray_matrix()
    d_mat, u_mat, _ = smith_normal_form(m)
    factors = tuple(d_mat[i][i] for i in range(3))
    nontrivial = tuple(f for f in factors if f != 1)
    if len(nontrivial) >= 2:
        return NonCyclicType(nontrivial)
    r = factors[2]
    if r == 1:
        return CyclicQuotientType(1, (0, 0, 0))
    # det(U) is +-1, so U^-1 = det(U) * adjugate(U) stays integral.
    du = det(u_mat)
    u_inv = tuple(tuple(du * x for x in row) for row in adjugate(u_mat))
    generator = tuple(row[2] for row in u_inv)
    # ray coordinates of the generator, as fractions with denominator det(m)
    dm = det(m)
    coords = [Fraction(x, dm) for x in mat_vec(adjugate(m), generator)]
    weights = []
    for t in coords:
        scaled = t * r
        if scaled.denominator != 1:
            raise AssertionError("generator order does not clear ray coordinates")
        weights.append(int(scaled) % r)
    return normalize_type(CyclicQuotientType(r, tuple(weights)))


def reid_tai_sum(t: CyclicQuotientType, k: int) -> Fraction:
    """The sum of fractional parts ``sum_i frac(k * a_i / r)``, exactly."""
    if not 1 <= k <= t.r - 1:
        raise ValueError(f"k must lie in 1..{t.r - 1}, got {k}")
    return Fraction(sum((k * a) % t.r for a in t.weights), t.r)


def is_terminal(t: CyclicQuotientType) -> bool:
    """Terminal iff every Reid-Tai sum exceeds 1 (vacuously true for r = 1)."""
    r = t.r
    a1, a2, a3 = t.weights
    for k in range(1, r):
        if (k * a1) % r + (k * a2) % r + (k * a3) % r <= r:
            return False
    return True


def is_canonical(t: CyclicQuotientType) -> bool:
    """Canonical iff every Reid-Tai sum is at least 1."""
    r = t.r
    a1, a2, a3 = t.weights
    for k in range(1, r):
        if (k * a1) % r + (k * a2) % r + (k * a3) % r < r:
            return False
    return True


def standard_cone(n: int) -> Cone:
    """The reference cone with rays e1, e3, (-(n-1), n, -1), of type 1/n(1,1,-1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Cone(((1, 0, 0), (0, 0, 1), (-(n - 1), n, -1)))


def lattice_equivalent(c1: Cone, c2: Cone) -> Matrix | None:
    """A unimodular matrix mapping the ray set of ``c1`` onto that of ``c2``.

    All 6 ray bijections are tried in lexicographic order and the first
    integral unimodular solution of ``g @ R1 = R2 @ P`` is returned, so the
    result is deterministic.  Returns None when the cones are not equivalent.
    """
    r1 = c1.ray_matrix()
    d1 = det(r1)
    adj1 = adjugate(r1)
    for perm in permutations(range(3)):
        cols = [c2.rays[perm[j]] for j in range(3)]
        target = tuple(tuple(col[i] for col in cols) for i in range(3))
        numerator = tuple(
            tuple(sum(target[i][k] * adj1[k][j] for k in range(3)) for j in range(3))
            for i in range(3)
        )
        if any(x % d1 for row in numerator for x in row):
            continue
        g = tuple(tuple(x // d1 for x in row) for row in numerator)
        if det(g) in (1, -1):
            return g
    return None
