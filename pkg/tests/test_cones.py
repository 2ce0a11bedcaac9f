import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from toricctl.cones import (
    BOUNDARY,
    FanFormatError,
    INTERIOR,
    OUTSIDE,
    classify_point,
    cone_multiplicity,
    fan_from_dict,
    fan_from_json,
    fan_to_dict,
    fan_to_json,
    fan_walls,
    is_complete,
    is_smooth,
    make_cone,
    make_fan,
    validate_fan,
)

E1, E2, E3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
V = (-1, -2, -3)

UNIT_CONE = make_cone(E1, E2, E3)


def p1123_fan():
    return make_fan("P1123", [E1, E2, E3, V], [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])


def p3_fan():
    return make_fan(
        "P3", [E1, E2, E3, (-1, -1, -1)], [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    )


def p1x3_fan():
    # (P^1)^3: rays +-e_i, one maximal cone per octant
    rays = [E1, E2, E3, (-1, 0, 0), (0, -1, 0), (0, 0, -1)]
    cones = [
        (i, j, k)
        for i in (0, 3)
        for j in (1, 4)
        for k in (2, 5)
    ]
    return make_fan("P1xP1xP1", rays, cones)


# -- cones ---------------------------------------------------------------------


def test_multiplicity_examples():
    assert cone_multiplicity(UNIT_CONE) == 1
    assert cone_multiplicity(make_cone(E1, E2, V)) == 3
    assert cone_multiplicity(make_cone(E1, E3, V)) == 2


def test_smoothness_examples():
    assert is_smooth(UNIT_CONE)
    assert is_smooth(make_cone(E2, E3, V))
    assert not is_smooth(make_cone(E1, E2, V))


def test_multiplicity_is_a_lattice_invariant():
    import itertools
    import random

    from toricctl.lattice import mat_vec
    from tests.oracles import random_unimodular, random_valid_cone_rays

    rng = random.Random(909)
    for _ in range(40):
        rays = random_valid_cone_rays(rng)
        mult = cone_multiplicity(make_cone(*rays))
        for perm in itertools.permutations(rays):
            assert cone_multiplicity(make_cone(*perm)) == mult
        g = random_unimodular(rng)
        mapped = tuple(mat_vec(g, ray) for ray in rays)
        assert cone_multiplicity(make_cone(*mapped)) == mult


def test_smooth_iff_unit_invariant_factors():
    import random

    from toricctl.lattice import invariant_factors
    from tests.oracles import random_valid_cone_rays

    rng = random.Random(911)
    for _ in range(40):
        rays = random_valid_cone_rays(rng)
        c = make_cone(*rays)
        factors = invariant_factors(c.ray_matrix())
        assert is_smooth(c) == (cone_multiplicity(c) == 1) == (factors == (1, 1, 1))


def test_cone_constructor_rejects_bad_input():
    with pytest.raises(ValueError):
        make_cone((2, 4, 6), E2, E3)  # common factor
    with pytest.raises(ValueError):
        make_cone((0, 0, 0), E2, E3)
    with pytest.raises(ValueError):
        make_cone(E1, E2, (1, 1, 0))  # dependent
    with pytest.raises(ValueError):
        make_cone((1, 0), (0, 1), (1, 1))  # wrong dimension


def test_classify_point_examples():
    assert classify_point(UNIT_CONE, (1, 1, 1)) == INTERIOR
    assert classify_point(UNIT_CONE, (1, 0, 0)) == BOUNDARY
    assert classify_point(UNIT_CONE, (-1, 0, 0)) == OUTSIDE
    assert classify_point(UNIT_CONE, (0, 0, 0)) == BOUNDARY
    assert classify_point(UNIT_CONE, (Fraction(1, 2), Fraction(3, 7), 2)) == INTERIOR
    with pytest.raises(ValueError):
        classify_point(UNIT_CONE, (1, 2))


@given(
    st.tuples(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9)),
    st.fractions(min_value=Fraction(1, 100), max_value=100),
)
def test_classify_point_scale_invariant(point, scale):
    c = make_cone(E1, E2, V)
    scaled = tuple(scale * x for x in point)
    assert classify_point(c, point) == classify_point(c, scaled)


# -- fan validation --------------------------------------------------------------


def test_validate_p1123():
    assert validate_fan(p1123_fan()).ok


def test_validate_single_cone():
    fan = make_fan("unit", [E1, E2, E3], [(0, 1, 2)])
    assert validate_fan(fan).ok


def test_validate_octants():
    assert validate_fan(p1x3_fan()).ok


def test_validate_detects_interior_overlap():
    fan = make_fan(
        "overlap",
        [E1, E2, E3, (1, 1, 1), (-1, 0, 0)],
        [(0, 1, 2), (3, 1, 4)],
    )
    report = validate_fan(fan)
    assert not report.ok
    assert any("common face" in p for p in report.problems)
    # independent witness: an exact common interior point of the two cones,
    # namely 2*(1,1,1) + (0,1,0) + (-1,0,0)
    witness = (1, 3, 2)
    assert classify_point(fan.simplicial_cone(0), witness) == INTERIOR
    assert classify_point(fan.simplicial_cone(1), witness) == INTERIOR


def test_validate_detects_non_primitive_ray():
    fan = make_fan("bad", [(2, 4, 6), E2, E3], [(0, 1, 2)])
    report = validate_fan(fan)
    assert any("not primitive" in p for p in report.problems)


def test_validate_detects_duplicate_rays():
    fan = make_fan("dup", [E1, E2, E3, E1], [(0, 1, 2)])
    report = validate_fan(fan)
    assert any("duplicates" in p for p in report.problems)


def test_validate_detects_degenerate_cone():
    fan = make_fan("degen", [E1, E2, (1, 1, 0)], [(0, 1, 2)])
    report = validate_fan(fan)
    assert any("degenerate" in p for p in report.problems)


def test_validate_detects_duplicate_cones():
    fan = make_fan("dupcone", [E1, E2, E3], [(0, 1, 2), (2, 1, 0)])
    report = validate_fan(fan)
    assert not report.ok


def test_fan_constructor_structural_checks():
    with pytest.raises(ValueError):
        make_fan("bad", [E1, E2], [(0, 1, 1)])  # repeated index
    with pytest.raises(ValueError):
        make_fan("bad", [E1, E2, E3], [(0, 1, 5)])  # out of range
    with pytest.raises(ValueError):
        make_fan("bad", [(1, 0), (0, 1), (1, 1)], [(0, 1, 2)])  # wrong dim


# -- completeness -----------------------------------------------------------------


def test_completeness_examples():
    assert is_complete(p1123_fan())
    assert is_complete(p3_fan())
    assert is_complete(p1x3_fan())
    assert not is_complete(make_fan("unit", [E1, E2, E3], [(0, 1, 2)]))


def test_wall_count_of_complete_fans():
    for fan in (p1123_fan(), p3_fan(), p1x3_fan()):
        walls = fan_walls(fan)
        assert all(count == 2 for count in walls.values())
        assert 2 * len(walls) == 3 * len(fan.cones)


def test_incomplete_two_cone_fan():
    fan = make_fan("half", [E1, E2, E3, (-1, 0, 0)], [(0, 1, 2), (3, 1, 2)])
    assert validate_fan(fan).ok
    assert not is_complete(fan)


def test_is_complete_rejects_degenerate():
    fan = make_fan("degen", [E1, E2, (1, 1, 0)], [(0, 1, 2)])
    with pytest.raises(ValueError):
        is_complete(fan)


# -- fan file format ---------------------------------------------------------------


def test_fan_json_roundtrip():
    fan = p1123_fan()
    assert fan_from_json(fan_to_json(fan)) == fan
    data = fan_to_dict(fan)
    assert data["dim"] == 3
    assert json.loads(json.dumps(data)) == data


def test_fan_parse_rejects_bad_dim():
    data = fan_to_dict(p1123_fan())
    data["dim"] = 2
    with pytest.raises(FanFormatError):
        fan_from_dict(data)


def test_fan_parse_rejects_non_integer_entries():
    data = fan_to_dict(p1123_fan())
    data["rays"][0][0] = 1.5
    with pytest.raises(FanFormatError):
        fan_from_dict(data)
    data = fan_to_dict(p1123_fan())
    data["rays"][0][0] = True
    with pytest.raises(FanFormatError):
        fan_from_dict(data)


def test_fan_parse_rejects_bad_indices():
    data = fan_to_dict(p1123_fan())
    data["cones"][0] = [0, 1, 9]
    with pytest.raises(FanFormatError):
        fan_from_dict(data)
    data = fan_to_dict(p1123_fan())
    data["cones"][0] = [0, 1, 1]
    with pytest.raises(FanFormatError):
        fan_from_dict(data)


def test_fan_parse_rejects_missing_fields_and_bad_json():
    with pytest.raises(FanFormatError):
        fan_from_dict({"name": "x", "dim": 3, "rays": []})
    with pytest.raises(FanFormatError):
        fan_from_json("{not json")
    with pytest.raises(FanFormatError):
        fan_from_json("[1, 2, 3]")


def test_fan_accessors():
    fan = p1123_fan()
    assert fan.cone_rays(1) == (E1, E2, V)
    assert cone_multiplicity(fan.simplicial_cone(1)) == 3
