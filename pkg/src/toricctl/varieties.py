"""Fan-level analysis, weighted projective space fans, and the rank-one
classification of split fans over the projective line.

``analyze`` bundles validity, completeness, the per-cone singularity audit and
the class-group rank into one report.  ``build_wps_fan`` realizes a weighted
projective 3-space as a 4-ray fan.  ``solve_linking_equations`` and
``classify_case1`` mechanize the search for a 4-ray fan whose two singular
charts have types ``1/n(1,1,-1)`` and ``1/m(1,1,-1)`` linked by
``m = mu*n - 1`` and ``n = nu*m - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import gcd

from .cones import Fan, is_complete, validate_fan
from .lattice import Matrix, Vector, adjugate, det, mat_vec, smith_normal_form
from .quotients import (
    CyclicQuotientType,
    is_terminal,
    normalize_type,
    quotient_type,
)


@dataclass(frozen=True)
class ConeRecord:
    ray_indices: tuple[int, int, int]
    multiplicity: int
    singularity: str
    terminal: bool | None  # None when the quotient is non-cyclic (out of scope)

    def to_dict(self) -> dict:
        return {
            "rays": list(self.ray_indices),
            "multiplicity": self.multiplicity,
            "type": self.singularity,
            "terminal": self.terminal,
        }


@dataclass(frozen=True)
class AnalysisReport:
    fan_name: str
    valid: bool
    violations: tuple[str, ...]
    q_factorial: bool
    complete: bool
    cones: tuple[ConeRecord, ...]
    class_rank: int | None
    all_terminal: bool
    ray_count: int
    cone_count: int

    def to_dict(self) -> dict:
        return {
            "name": self.fan_name,
            "valid": self.valid,
            "violations": list(self.violations),
            "q_factorial": self.q_factorial,
            "complete": self.complete,
            "rays": self.ray_count,
            "max_cones": self.cone_count,
            "cones": [record.to_dict() for record in self.cones],
            "class_rank": self.class_rank,
            "all_terminal": self.all_terminal,
        }

    def text_lines(self) -> list[str]:
        status = "valid" if self.valid else "INVALID"
        shape = "complete" if self.complete else "not complete"
        lines = [
            f"fan '{self.fan_name}': {status}, {shape}, "
            f"{self.ray_count} rays, {self.cone_count} maximal cones",
            f"q-factorial: {'yes' if self.q_factorial else 'no'}",
        ]
        for problem in self.violations:
            lines.append(f"  violation: {problem}")
        if self.cones:
            lines.append("cones:")
            for record in self.cones:
                flag = {True: "terminal", False: "not terminal", None: "terminal unknown"}[
                    record.terminal
                ]
                lines.append(
                    f"  cone {record.ray_indices}: mult {record.multiplicity}, "
                    f"type {record.singularity}, {flag}"
                )
            lines.append(f"all cones terminal: {'yes' if self.all_terminal else 'no'}")
        if self.class_rank is not None:
            lines.append(f"class group rank (rho over Q): {self.class_rank}")
        return lines


def class_group_rank(fan: Fan) -> int:
    """Free rank of the divisor class group of a valid complete simplicial fan.

    For such fans this is ``#rays - 3`` and agrees with the Picard number
    over Q.  Invalid or incomplete fans are rejected.
    """
    validation = validate_fan(fan)
    if not validation.ok:
        raise ValueError("fan is not valid: " + "; ".join(validation.problems))
    if not is_complete(fan):
        raise ValueError("fan is not complete; class rank formula does not apply")
    return len(fan.rays) - 3


def analyze(fan: Fan) -> AnalysisReport:
    """Full audit: validity, completeness, per-cone singularity types, rank."""
    validation = validate_fan(fan)
    valid = validation.ok
    cones_computable = all("not primitive" not in p and "degenerate" not in p for p in validation.problems)
    records: list[ConeRecord] = []
    if cones_computable:
        for k in range(len(fan.cones)):
            cone = fan.simplicial_cone(k)
            qt = quotient_type(cone)
            terminal = is_terminal(qt) if isinstance(qt, CyclicQuotientType) else None
            records.append(
                ConeRecord(
                    tuple(fan.cones[k]),
                    abs(det(cone.ray_matrix())),
                    str(qt),
                    terminal,
                )
            )
    complete = valid and bool(fan.cones) and is_complete(fan)
    rank = len(fan.rays) - 3 if valid and complete else None
    all_terminal = bool(records) and all(record.terminal is True for record in records)
    return AnalysisReport(
        fan_name=fan.name,
        valid=valid,
        violations=validation.problems,
        q_factorial=valid,
        complete=complete,
        cones=tuple(records),
        class_rank=rank,
        all_terminal=all_terminal,
        ray_count=len(fan.rays),
        cone_count=len(fan.cones),
    )


def _well_formed(weights: tuple[int, int, int, int]) -> bool:
    return all(gcd(*triple) == 1 for triple in combinations(weights, 3))


def build_wps_fan(w0: int, w1: int, w2: int, w3: int) -> Fan:
    """The 4-ray fan of the weighted projective space P(w0, w1, w2, w3).

    Weights must be positive and well-formed (every triple coprime).  The rays
    are the images of the standard basis of Z^4 in Z^4 modulo the weight
    vector; for ``w0 == 1`` the basis of the quotient is chosen so that the
    rays come out as e1, e2, e3 and (-w1, -w2, -w3), with the last ray listed
    last.
    """
    weights = (w0, w1, w2, w3)
    if any(type(w) is not int or w < 1 for w in weights):
        raise ValueError(f"weights must be positive integers, got {weights}")
    if not _well_formed(weights):
        raise ValueError(f"weights {weights} are not well-formed (a triple has a common factor)")
    name = "P({},{},{},{})".format(*weights)
    if w0 == 1:
        rays = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-w1, -w2, -w3)]
    else:
        # Smith form of the weight column: U @ w = +-e1, so dropping the first
        # coordinate of U @ x projects Z^4 onto Z^4 / Z*w = Z^3.
        column = tuple((w,) for w in weights)
        _, u_mat, _ = smith_normal_form(column)
        rays = [tuple(u_mat[i][j] for i in range(1, 4)) for j in range(4)]
    fan = Fan(name, tuple(rays), tuple(combinations(range(4), 3)))
    for k, ray in enumerate(fan.rays):
        if gcd(*ray) != 1:
            raise AssertionError(f"constructed ray {k} = {ray} is not primitive")
    return fan


@dataclass(frozen=True)
class LinkingSolution:
    """A solution of m = mu*n - 1 and n = nu*m - 1 with n > m > 1 coprime."""

    n: int
    m: int
    mu: int
    nu: int

    def __post_init__(self) -> None:
        if not (self.n > self.m > 1):
            raise ValueError("need n > m > 1")
        if gcd(self.n, self.m) != 1:
            raise ValueError("n and m must be coprime")
        if self.m != self.mu * self.n - 1 or self.n != self.nu * self.m - 1:
            raise ValueError("linking equations are not satisfied")

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "mu": self.mu, "nu": self.nu}


def solve_linking_equations(bound: int) -> list[LinkingSolution]:
    """All linking solutions with n <= bound, in ascending order of n.

    With 1 < m < n the first equation forces mu = 1 and m = n - 1, so the
    enumeration walks n and tests the divisibility required by the second
    equation.
    """
    if bound < 2:
        raise ValueError("bound must be >= 2")
    solutions: list[LinkingSolution] = []
    for n in range(3, bound + 1):
        m = n - 1
        nu, rem = divmod(n + 1, m)
        if rem == 0:
            solutions.append(LinkingSolution(n, m, 1, nu))
    return solutions


def fan_lattice_equivalent(f1: Fan, f2: Fan) -> Matrix | None:
    """A unimodular map sending rays of ``f1`` bijectively onto rays of ``f2``
    and maximal cones onto maximal cones, or None.

    Ray arrangements of ``f2`` are tried in lexicographic order against the
    first independent ray triple of ``f1``, so the answer is deterministic.
    """
    if len(f1.rays) != len(f2.rays) or len(f1.cones) != len(f2.cones):
        return None
    base = next(
        (
            triple
            for triple in combinations(range(len(f1.rays)), 3)
            if det(tuple(zip(*(f1.rays[i] for i in triple)))) != 0
        ),
        None,
    )
    if base is None:
        return None
    r1 = tuple(zip(*(f1.rays[i] for i in base)))
    d1 = det(r1)
    adj1 = adjugate(r1)
    f2_cones = {frozenset(cone) for cone in f2.cones}
    for arrangement in permutations(range(len(f2.rays)), 3):
        target = tuple(zip(*(f2.rays[i] for i in arrangement)))
        numerator = tuple(
            tuple(sum(target[i][k] * adj1[k][j] for k in range(3)) for j in range(3))
            for i in range(3)
        )
        if any(x % d1 for row in numerator for x in row):
            continue
        g = tuple(tuple(x // d1 for x in row) for row in numerator)
        if det(g) not in (1, -1):
            continue
        ray_index = {ray: i for i, ray in enumerate(f2.rays)}
        mapping = {}
        for i, ray in enumerate(f1.rays):
            vec = mat_vec(g, ray)
            if vec not in ray_index:
                break
            mapping[i] = ray_index[vec]
        if len(mapping) != len(f1.rays) or len(set(mapping.values())) != len(f1.rays):
            continue
        mapped_cones = {frozenset(mapping[i] for i in cone) for cone in f1.cones}
        if mapped_cones == f2_cones:
            return g
    return None


@dataclass(frozen=True)
class Case1Record:
    """Outcome of reconstructing the fan attached to one linking solution."""

    solution: LinkingSolution
    ray: Vector
    singularities: tuple[str, ...]
    expected_singularities: tuple[str, ...]
    report: AnalysisReport
    equivalent_to: str | None
    labelings_agree: bool
    ok: bool

    def to_dict(self) -> dict:
        return {
            "solution": self.solution.to_dict(),
            "ray": list(self.ray),
            "singularities": list(self.singularities),
            "expected_singularities": list(self.expected_singularities),
            "report": self.report.to_dict(),
            "equivalent_to": self.equivalent_to,
            "labelings_agree": self.labelings_agree,
            "ok": self.ok,
        }


def _split_fan(name: str, v: Vector) -> Fan:
    return Fan(
        name,
        ((1, 0, 0), (0, 1, 0), (0, 0, 1), v),
        tuple(combinations(range(4), 3)),
    )


def classify_case1(bound: int) -> list[Case1Record]:
    """Reconstruct and audit the fan for every linking solution up to bound.

    For a solution (n, m) the constraints pin the fourth ray to
    ``v = (-m, -n, -1)`` up to relabeling the coordinates and swapping the
    roles of n and m; both labelings are built and must give lattice
    equivalent fans.  The reconstruction for (n, m) = (3, 2) must match the
    fan of P(1,1,2,3) under a unimodular ray bijection.
    """
    records: list[Case1Record] = []
    reference = build_wps_fan(1, 1, 2, 3)
    for solution in solve_linking_equations(bound):
        n, m = solution.n, solution.m
        v = (-m, -n, -1)
        fan = _split_fan(f"case1(n={n},m={m})", v)
        report = analyze(fan)
        singular = tuple(
            record.singularity for record in report.cones if record.multiplicity > 1
        )
        expected = tuple(
            sorted(
                str(normalize_type(CyclicQuotientType(r, (1, 1, r - 1)))) for r in (n, m)
            )
        )
        swapped = _split_fan(f"case1(n={n},m={m}) swapped", (-n, -m, -1))
        labelings_agree = fan_lattice_equivalent(fan, swapped) is not None
        equivalent_to = None
        if (n, m) == (3, 2) and fan_lattice_equivalent(fan, reference) is not None:
            equivalent_to = reference.name
        ok = (
            report.valid
            and report.complete
            and report.all_terminal
            and report.class_rank == 1
            and tuple(sorted(singular)) == expected
            and labelings_agree
            and equivalent_to is not None
        )
        records.append(
            Case1Record(
                solution=solution,
                ray=v,
                singularities=singular,
                expected_singularities=expected,
                report=report,
                equivalent_to=equivalent_to,
                labelings_agree=labelings_agree,
                ok=ok,
            )
        )
    return records
