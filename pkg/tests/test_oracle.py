import pytest

from pi1curves.catalog import catalog_group, catalog_groups, cyclic
from pi1curves.curves import (CurveConfiguration, PointRef, delta, factorize,
                              replay, strip_identifications)
from pi1curves.errors import DomainError
from pi1curves.groups import PermutationGroup, eulerian, min_generators
from pi1curves.oracle import (
    cross_check_descent,
    enumerate_connected_covers,
    nodal_curve,
    quotient_census,
    census_report,
    two_node_curve,
)


def test_counts_match_spec_examples():
    count, _ = enumerate_connected_covers(catalog_group("S3"),
                                          two_node_curve(5))
    assert count == 18
    count, _ = enumerate_connected_covers(cyclic(2), nodal_curve(5))
    assert count == 1
    count, _ = enumerate_connected_covers(PermutationGroup.trivial(1),
                                          two_node_curve(5))
    assert count == 1


def test_count_equals_eulerian_small_groups():
    nodal = nodal_curve(5)
    theta = two_node_curve(5)
    for name, G in catalog_groups(10):
        count, _ = enumerate_connected_covers(G, nodal)
        assert count == eulerian(G, 1), name
        count, _ = enumerate_connected_covers(G, theta)
        assert count == eulerian(G, 2), name


def test_rejects_positive_genus():
    config = CurveConfiguration.build(5, [("E", 1)], {"E": []}, [])
    with pytest.raises(DomainError) as err:
        enumerate_connected_covers(cyclic(2), config)
    assert err.value.code == "GENUS_NONZERO"


def test_rejects_too_large():
    big = CurveConfiguration.build(
        5, [("C1", 0)], {"C1": [f"p{i}" for i in range(12)]},
        [[PointRef("C1", f"p{2 * i}"), PointRef("C1", f"p{2 * i + 1}")]
         for i in range(6)])
    assert delta(big) == 6
    with pytest.raises(DomainError) as err:
        enumerate_connected_covers(catalog_group("S4"), big)
    assert err.value.code == "TOO_LARGE"


def test_census_nodal():
    entries = quotient_census(nodal_curve(5), 12)
    realizable = [e.name for e in entries if e.realizable]
    assert realizable == [f"C{n}" for n in range(1, 13)]
    for e in entries:
        if e.realizable and e.order > 1:
            assert e.witness is not None


def test_census_tree_is_trivial_only():
    tree = CurveConfiguration.build(
        5, [("C1", 0), ("C2", 0)], {"C1": ["x"], "C2": ["x"]},
        [[PointRef("C1", "x"), PointRef("C2", "x")]])
    entries = quotient_census(tree, 8)
    realizable = [e.name for e in entries if e.realizable]
    assert realizable == ["C1"]


def test_census_delta_two_order_eight():
    entries = quotient_census(two_node_curve(5), 8)
    realizable = {e.name for e in entries if e.realizable}
    assert "Q8" in realizable and "D4" in realizable
    assert "C2xC2xC2" not in realizable
    for e in entries:
        assert e.realizable == (min_generators(catalog_group(e.name)) <= 2)


def test_census_stable_under_factorize_round_trip():
    config = two_node_curve(5)
    rebuilt = replay(strip_identifications(config), factorize(config))
    a = [(e.name, e.count) for e in quotient_census(config, 8)]
    b = [(e.name, e.count) for e in quotient_census(rebuilt, 8)]
    assert a == b


def test_census_report_format():
    text = census_report(quotient_census(nodal_curve(5), 4))
    assert "realizable" in text.splitlines()[0]
    assert any(line.endswith("yes") for line in text.splitlines()[1:])


def test_cross_check_descent():
    nodal = nodal_curve(5)
    for name in ("C2", "C3", "C2xC2", "S3"):
        report = cross_check_descent(catalog_group(name), nodal)
        assert report.ok, name
        assert report.negative_controls_rejected == 1
    report = cross_check_descent(catalog_group("S3"), two_node_curve(5))
    assert report.checked == 36 and report.ok
