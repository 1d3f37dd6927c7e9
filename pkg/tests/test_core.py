import itertools

import pytest

from kplanes import (
    AxiomViolationError,
    Configuration,
    ConfigurationError,
    IncidenceProfile,
    ParseError,
    RegularityError,
    WithoutDualError,
    check_counting_identities,
    complete_configuration,
    configuration_from_levi,
    fano,
    general_stack,
    four_line_geometry,
    is_connected,
    is_order_exact,
    levi_dot,
    levi_graph,
    parse_configuration,
    polygon,
    profile,
    serialize_configuration,
    simple_stack,
    validate,
)
from reference_census import TWELVE_POINT_TENT

TETRA_TEXT = """\
# simplest order-2 example
order 2
points 4
plane 1 2 3
plane 1 2 4
plane 1 3 4
plane 2 3 4
"""


def test_parse_tetrahedron(tetrahedron):
    config = parse_configuration(TETRA_TEXT)
    assert config == tetrahedron
    assert config.m == 4
    assert config.t == 3


def test_parse_rejects_duplicate_plane():
    text = "order 2\npoints 4\nplane 1 2 3\nplane 1 2 3\n"
    with pytest.raises(ParseError) as err:
        parse_configuration(text)
    assert err.value.line == 4
    assert "duplicate" in str(err.value)


def test_parse_rejects_out_of_range_point():
    text = "order 2\npoints 4\nplane 1 2 3\nplane 3 4 5\n"
    with pytest.raises(ParseError) as err:
        parse_configuration(text)
    assert err.value.line == 4
    assert "out of range" in str(err.value)


def test_parse_rejects_cardinality_mismatch():
    text = "order 2\npoints 5\nplane 1 2 3\nplane 1 4 5 2\n"
    with pytest.raises(ParseError) as err:
        parse_configuration(text)
    assert err.value.line == 4


def test_parse_rejects_malformed_line():
    with pytest.raises(ParseError):
        parse_configuration("order 2\npoints 4\nplane one two three\n")
    with pytest.raises(ParseError):
        parse_configuration("order 2\nplane 1 2 3\n")
    with pytest.raises(ParseError):
        parse_configuration("order 2\npoints 4\nwhatever 1 2\n")


def test_parse_serialize_round_trip(tetrahedron):
    assert parse_configuration(serialize_configuration(tetrahedron)) == tetrahedron
    stack = simple_stack(fano(), 2)
    assert parse_configuration(serialize_configuration(stack)) == stack


def test_configuration_invariants():
    with pytest.raises(ConfigurationError):
        Configuration(0, 4, ((1, 2, 3),))
    with pytest.raises(ConfigurationError):
        Configuration(2, 4, ())
    with pytest.raises(ConfigurationError):
        Configuration(2, 5, ((1, 2, 3), (1, 2, 4)))  # point 5 isolated
    with pytest.raises(ConfigurationError):
        Configuration(2, 4, ((1, 2), (3, 4)))  # t < k+1
    with pytest.raises(ConfigurationError):
        Configuration(2, 4, ((1, 2, 3), (1, 2, 3, 4)))  # mixed sizes
    # planes normalize to sorted order regardless of input order
    config = Configuration(2, 4, ((2, 3, 4), (1, 3, 4), (1, 2, 4), (3, 2, 1)))
    assert config.planes == ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4))


def test_profile_tetrahedron(tetrahedron):
    prof = profile(tetrahedron)
    assert (prof.n, prof.m, prof.s, prof.t, prof.k) == (4, 4, 3, 3, 2)
    assert prof.is_regular and prof.is_order_exact and not prof.without_dual


def test_profile_complete_five():
    prof = profile(complete_configuration(5))
    assert (prof.n, prof.m, prof.s, prof.t) == (5, 10, 6, 3)


def test_profile_ten_point_fusion(square, four_lines):
    stacked = general_stack(square, four_lines)
    prof = profile(stacked)
    assert (prof.n, prof.m, prof.s, prof.t) == (10, 4, 2, 5)
    assert prof.without_dual


def test_profile_irregular():
    config = Configuration(2, 5, ((1, 2, 3), (1, 2, 4), (1, 2, 5), (3, 4, 5)))
    prof = profile(config)
    assert not prof.is_regular
    assert prof.s == 0


def test_validate_tetrahedron(tetrahedron):
    prof = validate(tetrahedron)
    assert prof.is_regular


def test_validate_axiom_violation_witness():
    config = Configuration(2, 5, ((1, 2, 3, 4), (1, 2, 3, 5), (1, 4, 5, 2), (3, 4, 5, 1)))
    with pytest.raises(AxiomViolationError) as err:
        validate(config)
    assert err.value.points == (1, 2, 3)
    assert err.value.planes == ((1, 2, 3, 4), (1, 2, 3, 5))


def test_validate_without_dual(square, four_lines):
    stacked = general_stack(square, four_lines)
    with pytest.raises(WithoutDualError):
        validate(stacked, allow_without_dual=False)
    prof = validate(stacked, allow_without_dual=True)
    assert prof.without_dual


def test_validate_regularity_error():
    config = Configuration(2, 5, ((1, 2, 3), (1, 2, 4), (1, 2, 5), (3, 4, 5)))
    with pytest.raises(RegularityError):
        validate(config)


def test_order_exact(tetrahedron):
    assert is_order_exact(tetrahedron)
    assert is_order_exact(complete_configuration(5))
    fano_as_order2 = Configuration(2, 7, fano().planes)
    assert not is_order_exact(fano_as_order2)


def test_fano_covers_every_pair_once():
    lines = fano().planes
    for pair in itertools.combinations(range(1, 8), 2):
        covering = [line for line in lines if set(pair) <= set(line)]
        assert len(covering) == 1, pair


def test_not_order_exact_means_lower_order_validates():
    # the same plane set passes validation at order 1
    fano_as_order2 = Configuration(2, 7, fano().planes)
    assert not is_order_exact(fano_as_order2)
    validate(Configuration(1, 7, fano_as_order2.planes))


def test_counting_identities(tetrahedron):
    report = check_counting_identities(validate(tetrahedron))
    assert report.all_ok
    report = check_counting_identities(profile(complete_configuration(5)))
    assert report.incidence_identity_ok  # 5*6 == 10*3

    forged = IncidenceProfile(
        n=4, m=4, s=3, t=2, k=2, is_regular=True, is_order_exact=True, without_dual=False
    )
    assert not check_counting_identities(forged).incidence_identity_ok

    with pytest.raises(ValueError):
        check_counting_identities(
            IncidenceProfile(4, 4, 0, 3, 2, is_regular=False, is_order_exact=True, without_dual=False)
        )


def test_counting_identities_without_dual(square, four_lines):
    prof = validate(general_stack(square, four_lines), allow_without_dual=True)
    report = check_counting_identities(prof)
    assert report.incidence_identity_ok
    assert report.plane_lower_bound_ok is None
    assert report.point_lower_bound_ok is None


def test_levi_graph_tetrahedron(tetrahedron):
    graph = levi_graph(tetrahedron)
    assert len(graph.black) == 4
    assert len(graph.white) == 4
    assert len(graph.edges) == 12
    assert set(graph.black_degrees().values()) == {3}
    assert set(graph.white_degrees().values()) == {3}


def test_levi_graph_stacked_triangle(triangle):
    graph = levi_graph(simple_stack(triangle, 2))
    assert sorted(graph.black_degrees().values()) == [2] * 6
    assert sorted(graph.white_degrees().values()) == [4] * 3


@pytest.mark.parametrize("config_builder", [
    lambda: complete_configuration(4),
    lambda: complete_configuration(5),
    lambda: simple_stack(polygon(3), 2),
    lambda: fano(),
])
def test_levi_degrees_match_profile(config_builder):
    config = config_builder()
    prof = validate(config, allow_without_dual=True)
    graph = levi_graph(config)
    assert set(graph.black_degrees().values()) == {prof.s}
    assert set(graph.white_degrees().values()) == {prof.t}


def test_levi_round_trip(tetrahedron):
    graph = levi_graph(tetrahedron)
    assert configuration_from_levi(graph, 2) == tetrahedron


def test_is_connected(tetrahedron):
    assert is_connected(tetrahedron)
    two_tetra = Configuration(
        2, 8, tuple(itertools.combinations((1, 2, 3, 4), 3))
        + tuple(itertools.combinations((5, 6, 7, 8), 3)),
    )
    assert not is_connected(two_tetra)
    tent = Configuration(2, 12, TWELVE_POINT_TENT)
    assert is_connected(tent)
    # independent oracle: union-find over shared points
    for config in (tetrahedron, two_tetra, tent):
        assert is_connected(config) == _connected_by_union_find(config)


def _connected_by_union_find(config):
    parent = {p: p for p in config.points}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for plane in config.planes:
        for p in plane[1:]:
            parent[find(p)] = find(plane[0])
    return len({find(p) for p in config.points}) == 1


def test_axiom_scan_on_validated_configs(tetrahedron):
    for config in (tetrahedron, complete_configuration(5), simple_stack(fano(), 2)):
        validate(config, allow_without_dual=True)
        k = config.order
        for subset in itertools.combinations(config.points, k + 1):
            containing = [p for p in config.planes if set(subset) <= set(p)]
            assert len(containing) <= 1


def test_levi_dot_output(tetrahedron):
    dot = levi_dot(levi_graph(tetrahedron))
    assert dot.startswith("graph levi {")
    assert dot.count("fillcolor=black") == 4
    assert dot.count("fillcolor=white") == 4
    assert dot.count(" -- ") == 12
    assert dot == levi_dot(levi_graph(tetrahedron))
