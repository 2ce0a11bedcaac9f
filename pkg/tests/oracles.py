"""Independent brute-force oracles used by the test suite.

Nothing in here calls into the library's normal-form or quotient machinery:
determinants and adjugates are written out as explicit 3x3 cofactor formulas,
lattice points are found by scanning the bounding box of the fundamental
parallelepiped, and group structure is read off by literally iterating the
group law.  Slow and dumb on purpose.
"""

from __future__ import annotations

import random
from math import gcd


def det3(m) -> int:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def adj3(m):
    (a, b, c), (d, e, f), (g, h, i) = m
    return (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )


def parallelepiped_points(rays):
    """All lattice points of the half-open parallelepiped spanned by the rays.

    Returns a dict mapping the scaled ray-coordinate triple ``c`` (so the
    actual coordinates are ``c / |det|``, each in ``[0, 1)``) to the lattice
    point itself.  The point count must equal ``|det|``.
    """
    cols = tuple(zip(*rays))  # rays become matrix columns
    d = det3(cols)
    if d == 0:
        raise ValueError("degenerate ray set")
    ad = abs(d)
    adj = adj3(cols)
    if d < 0:
        adj = tuple(tuple(-x for x in row) for row in adj)
    lo = [sum(min(0, rays[j][i]) for j in range(3)) for i in range(3)]
    hi = [sum(max(0, rays[j][i]) for j in range(3)) for i in range(3)]
    (a00, a01, a02), (a10, a11, a12), (a20, a21, a22) = adj
    points = {}
    for x in range(lo[0], hi[0] + 1):
        for y in range(lo[1], hi[1] + 1):
            c0xy = a00 * x + a01 * y
            c1xy = a10 * x + a11 * y
            c2xy = a20 * x + a21 * y
            for z in range(lo[2], hi[2] + 1):
                c0 = c0xy + a02 * z
                if not 0 <= c0 < ad:
                    continue
                c1 = c1xy + a12 * z
                if not 0 <= c1 < ad:
                    continue
                c2 = c2xy + a22 * z
                if not 0 <= c2 < ad:
                    continue
                points[(c0, c1, c2)] = (x, y, z)
    if len(points) != ad:
        raise AssertionError(f"expected {ad} lattice points, found {len(points)}")
    return points


def _element_order(c, modulus: int) -> int:
    order = 1
    current = c
    while any(current):
        current = tuple((a + b) % modulus for a, b in zip(current, c))
        order += 1
    return order


def oracle_quotient(rays):
    """Brute-force classification of Z^3 modulo the ray lattice.

    Returns ``("cyclic", r, weights)`` with the weights already minimized over
    all generators (which is exactly normalization), or
    ``("noncyclic", (d2, d3))`` with the nontrivial invariant factors.
    """
    points = parallelepiped_points(rays)
    ad = len(points)
    if ad == 1:
        return ("cyclic", 1, (0, 0, 0))
    orders = {c: _element_order(c, ad) for c in points}
    exponent = max(orders.values())
    if exponent == ad:
        weights = min(tuple(sorted(c)) for c, order in orders.items() if order == ad)
        return ("cyclic", ad, weights)
    d2 = ad // exponent
    if d2 < 2 or exponent % d2 != 0:
        raise AssertionError(f"inconsistent group structure: order {ad}, exponent {exponent}")
    return ("noncyclic", (d2, exponent))


def random_valid_cone_rays(rng: random.Random, max_multiplicity: int = 12, span: int = 5):
    """Rejection-sample 3 primitive rays with 0 < |det| <= max_multiplicity."""
    while True:
        rays = tuple(
            tuple(rng.randint(-span, span) for _ in range(3)) for _ in range(3)
        )
        if any(gcd(*ray) != 1 for ray in rays):
            continue
        d = det3(tuple(zip(*rays)))
        if d == 0 or abs(d) > max_multiplicity:
            continue
        return rays


def random_matrix(rng: random.Random, rows: int = 3, cols: int = 3, span: int = 20):
    return tuple(
        tuple(rng.randint(-span, span) for _ in range(cols)) for _ in range(rows)
    )


def random_unimodular(rng: random.Random, steps: int = 8):
    """A unimodular 3x3 matrix built from random elementary operations."""
    m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    for _ in range(steps):
        kind = rng.randrange(3)
        i, j = rng.sample(range(3), 2)
        if kind == 0:
            k = rng.choice((-3, -2, -1, 1, 2, 3))
            m[i] = [x + k * y for x, y in zip(m[i], m[j])]
        elif kind == 1:
            m[i], m[j] = m[j], m[i]
        else:
            m[i] = [-x for x in m[i]]
    return tuple(tuple(row) for row in m)


def is_row_hnf(h) -> bool:
    """Structural check for the documented row-style Hermite form."""
    pivot_cols = []
    pivot_rows = []
    seen_zero_row = False
    for r, row in enumerate(h):
        col = next((j for j, x in enumerate(row) if x), None)
        if col is None:
            seen_zero_row = True
            continue
        if seen_zero_row:
            return False  # nonzero row below a zero row
        if pivot_cols and col <= pivot_cols[-1]:
            return False  # pivot columns must strictly increase
        if row[col] <= 0:
            return False
        pivot_cols.append(col)
        pivot_rows.append(r)
    for r, col in zip(pivot_rows, pivot_cols):
        pivot = h[r][col]
        for i in range(r):
            if not 0 <= h[i][col] < pivot:
                return False
    return True
