"""Exact multivariate polynomials over Z and the SL2-invariant identities.

The polynomial type is deliberately small: integer coefficients, named
variables, canonical form (no zero terms, unused variables dropped, fixed
variable precedence), so equality is structural.  That is all the identity
checking here needs; anything Groebner-shaped is out of scope.

The headline computation: the six quadratic generators of the invariant ideal
cutting out the SL2-invariant surfaces in the 5-dimensional irreducible
representation all vanish identically under the two-to-one substitution

    a -> x^2, b -> 2xy, c -> 2xz + y^2, d -> 2yz, e -> z^2, delta -> 4xz - y^2

which exhibits that surface family as a quotient of the quadric family
``4xz - y^2 = delta`` by the sign involution on (x, y, z).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd
from typing import Mapping, Sequence

# Fixed variable precedence; names outside this list sort after, alphabetically.
_VARIABLE_PRECEDENCE = ("a", "b", "c", "d", "e", "delta", "x", "y", "z")
_PRECEDENCE_INDEX = {name: i for i, name in enumerate(_VARIABLE_PRECEDENCE)}

DEFAULT_SPOT_CHECK_SEED = 271828
SPOT_CHECK_RANGE = 10  # sample coordinates are drawn from [-10, 10]


def _var_key(name: str) -> tuple[int, int | str]:
    if name in _PRECEDENCE_INDEX:
        return (0, _PRECEDENCE_INDEX[name])
    return (1, name)


class Poly:
    """Multivariate polynomial with exact integer coefficients.

    ``variables`` is the ordered tuple of variable names actually occurring;
    ``terms`` maps exponent tuples (parallel to ``variables``) to nonzero
    coefficients.  Instances are immutable by convention and canonical by
    construction.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple[int, ...], int]):
        cleaned = {exps: c for exps, c in terms.items() if c != 0}
        variables = tuple(variables)
        # drop variables that occur in no term
        used = [
            i for i in range(len(variables)) if any(exps[i] for exps in cleaned)
        ]
        if len(used) != len(variables):
            variables = tuple(variables[i] for i in used)
            cleaned = {
                tuple(exps[i] for i in used): c for exps, c in cleaned.items()
            }
        # enforce canonical variable order
        order = sorted(range(len(variables)), key=lambda i: _var_key(variables[i]))
        if order != list(range(len(variables))):
            variables = tuple(variables[i] for i in order)
            cleaned = {
                tuple(exps[i] for i in order): c for exps, c in cleaned.items()
            }
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def constant(c: int) -> "Poly":
        return Poly((), {(): int(c)} if c else {})

    @staticmethod
    def variable(name: str) -> "Poly":
        return Poly((name,), {(1,): 1})

    # -- ring structure ----------------------------------------------------

    def _aligned(self, other: "Poly") -> tuple[tuple[str, ...], dict, dict]:
        merged = tuple(
            sorted(set(self.variables) | set(other.variables), key=_var_key)
        )
        index = {name: i for i, name in enumerate(merged)}

        def remap(poly: "Poly") -> dict:
            out = {}
            for exps, c in poly.terms.items():
                new = [0] * len(merged)
                for name, e in zip(poly.variables, exps):
                    new[index[name]] = e
                out[tuple(new)] = c
            return out

        return merged, remap(self), remap(other)

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        merged, left, right = self._aligned(other)
        for exps, c in right.items():
            left[exps] = left.get(exps, 0) + c
        return Poly(merged, left)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.variables, {exps: -c for exps, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Poly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "Poly":
        other = _coerce(other)
        merged, left, right = self._aligned(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in left.items():
            for e2, c2 in right.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return Poly(merged, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if type(exponent) is not int or exponent < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = Poly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, tuple(sorted(self.terms.items()))))

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(exps) for exps in self.terms), default=0)

    def substitute(self, assignment: Mapping[str, "Poly | int"]) -> "Poly":
        """Ring homomorphism: replace variables by polynomials.

        Variables missing from the assignment map to themselves.
        """
        images = {
            name: _coerce(assignment.get(name, Poly.variable(name)))
            for name in self.variables
        }
        acc = Poly.constant(0)
        for exps, c in sorted(self.terms.items()):
            term = Poly.constant(c)
            for name, e in zip(self.variables, exps):
                if e:
                    term = term * images[name] ** e
            acc = acc + term
        return acc

    def evaluate(self, point: Mapping[str, int]) -> int:
        """Exact integer value at an integer point; every variable must be set."""
        missing = [name for name in self.variables if name not in point]
        if missing:
            raise ValueError(f"missing values for variables: {missing}")
        total = 0
        for exps, c in self.terms.items():
            value = c
            for name, e in zip(self.variables, exps):
                value *= point[name] ** e
            total += value
        return total

    # -- rendering ---------------------------------------------------------

    def _sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        # graded order, ties broken reverse-lexicographically, descending
        def key(item):
            exps, _ = item
            return (sum(exps), tuple(-e for e in reversed(exps)))

        return sorted(self.terms.items(), key=key, reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self._sorted_terms():
            # display convention: "delta" leads a monomial, as in "4*delta*e"
            factors = sorted(
                ((name, e) for name, e in zip(self.variables, exps) if e),
                key=lambda item: (item[0] != "delta", _var_key(item[0])),
            )
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in factors
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Poly({self})"


def _coerce(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, int):
        return Poly.constant(value)
    raise TypeError(f"cannot coerce {value!r} to a polynomial")


def variables(names: str) -> tuple[Poly, ...]:
    """Convenience: ``a, b = variables("a b")``."""
    return tuple(Poly.variable(name) for name in names.split())


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_substitute(p: Poly, assignment: Mapping[str, Poly | int]) -> Poly:
    return p.substitute(assignment)


# ---------------------------------------------------------------------------
# The invariant ideal and the quotient map.


def invariant_ideal_generators() -> tuple[Poly, ...]:
    """The six quadratic generators, in their published order."""
    a, b, c, d, e, delta = variables("a b c d e delta")
    return (
        3 * d**2 - 8 * c * e + 4 * delta * e,
        c * d - 6 * b * e + delta * d,
        3 * b * d - 48 * a * e + 2 * delta * c + 2 * delta**2,
        c**2 - 36 * a * e + 2 * delta * c + delta**2,
        b * c - 6 * a * d + delta * b,
        3 * b**2 - 8 * a * c + 4 * delta * a,
    )


def quotient_map_substitution() -> dict[str, Poly]:
    """The double-cover substitution, with delta mapped to the quadric value."""
    x, y, z = variables("x y z")
    return {
        "a": x**2,
        "b": 2 * x * y,
        "c": 2 * x * z + y**2,
        "d": 2 * y * z,
        "e": z**2,
        "delta": 4 * x * z - y**2,
    }


# Independent numeric route: the same six generators as plain integer
# arithmetic, used to cross-check the symbolic expansion at sample points.
_NUMERIC_GENERATORS = (
    lambda a, b, c, d, e, dl: 3 * d * d - 8 * c * e + 4 * dl * e,
    lambda a, b, c, d, e, dl: c * d - 6 * b * e + dl * d,
    lambda a, b, c, d, e, dl: 3 * b * d - 48 * a * e + 2 * dl * c + 2 * dl * dl,
    lambda a, b, c, d, e, dl: c * c - 36 * a * e + 2 * dl * c + dl * dl,
    lambda a, b, c, d, e, dl: b * c - 6 * a * d + dl * b,
    lambda a, b, c, d, e, dl: 3 * b * b - 8 * a * c + 4 * dl * a,
)


@dataclass(frozen=True)
class GeneratorCheck:
    index: int  # 1-based, in published order
    symbolic_zero: bool
    samples: int
    numeric_failures: int

    @property
    def passed(self) -> bool:
        return self.symbolic_zero and self.numeric_failures == 0

    def to_dict(self) -> dict:
        return {
            "generator": self.index,
            "symbolic_zero": self.symbolic_zero,
            "samples": self.samples,
            "numeric_failures": self.numeric_failures,
        }


@dataclass(frozen=True)
class IdealVerification:
    seed: int
    samples: int
    checks: tuple[GeneratorCheck, ...]

    @property
    def all_vanish(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "samples": self.samples,
            "generators": [check.to_dict() for check in self.checks],
            "all_vanish": self.all_vanish,
        }


def verify_invariant_ideal(
    seed: int = DEFAULT_SPOT_CHECK_SEED, samples: int = 100, limit: int = 6
) -> IdealVerification:
    """Substitute the quotient map into the generators and test for zero.

    The verdict per generator is the exact symbolic one; in addition each
    generator is evaluated (through independent plain-integer arithmetic) at
    ``samples`` seeded random points of the quadric parametrization.
    """
    if not 1 <= limit <= 6:
        raise ValueError("limit must be between 1 and 6")
    if samples < 0:
        raise ValueError("samples must be nonnegative")
    substitution = quotient_map_substitution()
    rng = random.Random(seed)
    points = [
        tuple(rng.randint(-SPOT_CHECK_RANGE, SPOT_CHECK_RANGE) for _ in range(3))
        for _ in range(samples)
    ]
    checks = []
    for idx, generator in enumerate(invariant_ideal_generators()[:limit], start=1):
        image = generator.substitute(substitution)
        failures = 0
        formula = _NUMERIC_GENERATORS[idx - 1]
        for x, y, z in points:
            av, bv, cv = x * x, 2 * x * y, 2 * x * z + y * y
            dv, ev, dlv = 2 * y * z, z * z, 4 * x * z - y * y
            if formula(av, bv, cv, dv, ev, dlv) != 0:
                failures += 1
        checks.append(GeneratorCheck(idx, image.is_zero, len(points), failures))
    return IdealVerification(seed, samples, tuple(checks))


def quotient_images_sign_invariant() -> bool:
    """Every image polynomial is fixed by (x, y, z) -> (-x, -y, -z)."""
    x, y, z = variables("x y z")
    flip = {"x": -x, "y": -y, "z": -z}
    return all(p.substitute(flip) == p for p in quotient_map_substitution().values())


def quadric_family(k: int) -> Poly:
    """The family member ``4xz - y^2 - delta^k``."""
    if type(k) is not int or k < 0:
        raise ValueError("k must be a nonnegative integer")
    x, y, z = variables("x y z")
    delta = Poly.variable("delta")
    return 4 * x * z - y**2 - delta**k


def quadric_family_sanity() -> bool:
    """Structural checks for the first family members and one exact root."""
    x, y, z = variables("x y z")
    delta = Poly.variable("delta")
    return (
        quadric_family(0) == 4 * x * z - y**2 - 1
        and quadric_family(1) == 4 * x * z - y**2 - delta
        and quadric_family(2).evaluate({"x": 1, "y": 2, "z": 2, "delta": 2}) == 0
    )


@dataclass(frozen=True)
class RepWeights:
    """Torus weights of the (k+1)-dimensional irreducible representation."""

    k: int
    weights: tuple[int, ...]

    @property
    def fixed_space_dim(self) -> int:
        return 1 - self.k % 2

    def to_dict(self) -> dict:
        return {"k": self.k, "weights": list(self.weights), "fixed_dim": self.fixed_space_dim}


def rep_weights(k: int) -> RepWeights:
    if type(k) is not int or k < 0:
        raise ValueError("k must be a nonnegative integer")
    return RepWeights(k, tuple(range(k, -k - 1, -2)))


def etale_codim1_compatible(a: int, n: int) -> bool:
    """Whether weight ``a`` is admissible for a cover of order ``n`` that is
    unramified in codimension one: gcd(a mod n, n) == 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return gcd(a % n, n) == 1
