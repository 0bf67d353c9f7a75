import json
import random

import pytest

from pi1curves.curves import (
    CurveConfiguration,
    PointRef,
    affine_delta,
    delta,
    dual_graph,
    factorize,
    identify,
    is_connected,
    rank_report,
    replay,
    strip_identifications,
    validate,
)
from pi1curves.errors import DomainError

P = PointRef


def nodal():
    return CurveConfiguration.build(
        5, [("C1", 0)], {"C1": ["0", "1"]}, [[P("C1", "0"), P("C1", "1")]])


def triangle():
    return CurveConfiguration.build(
        5, [("C1", 0), ("C2", 0), ("C3", 0)],
        {"C1": ["a", "b"], "C2": ["a", "b"], "C3": ["a", "b"]},
        [[P("C1", "b"), P("C2", "a")],
         [P("C2", "b"), P("C3", "a")],
         [P("C3", "b"), P("C1", "a")]])


def test_delta_examples():
    assert delta(nodal()) == 1
    assert delta(triangle()) == 1
    two = CurveConfiguration.build(
        3, [("C1", 0)], {"C1": list("abcd")},
        [[P("C1", "a"), P("C1", "b")], [P("C1", "c"), P("C1", "d")]])
    assert delta(two) == 2
    tree = CurveConfiguration.build(
        5, [("C1", 0), ("C2", 0)], {"C1": ["x"], "C2": ["x"]},
        [[P("C1", "x"), P("C2", "x")]])
    assert delta(tree) == 0


def test_delta_matches_betti():
    config = triangle()
    graph = dual_graph(config)
    assert delta(config) == graph.betti_number()


def test_affine_delta_and_tame_rank():
    # one rational component, a node, infinity removed
    config = CurveConfiguration.build(
        2, [("C1", 0)], {"C1": ["0", "1", "inf"]},
        [[P("C1", "0"), P("C1", "1")]], removed=[P("C1", "inf")])
    assert affine_delta(config) == 1
    report = rank_report(config)
    assert report.tame_rank == 1  # 2*0 + 1 - 1 + 1


def test_rank_report_projective():
    report = rank_report(nodal())
    assert report.delta == 1
    assert report.pro_p_rank == 1
    assert report.pi1_rank_bound == 1
    assert report.tame_rank is None


def test_validate_catches_problems():
    config = CurveConfiguration.build(
        5, [("C1", -1)], {"C1": ["a"]},
        [[P("C1", "a"), P("C1", "missing")]])
    codes = {code for code, _ in validate(config)}
    assert "NEGATIVE_GENUS" in codes
    assert "POINT_NOT_FOUND" in codes


def test_validate_overlapping_classes():
    config = CurveConfiguration.build(
        5, [("C1", 0)], {"C1": list("abc")},
        [[P("C1", "a"), P("C1", "b")], [P("C1", "b"), P("C1", "c")]])
    codes = {code for code, _ in validate(config)}
    assert "CLASSES_OVERLAP" in codes


def test_bad_characteristic():
    config = CurveConfiguration.build(4, [("C1", 0)], {"C1": []}, [])
    codes = {code for code, _ in validate(config)}
    assert "BAD_CHARACTERISTIC" in codes


def test_delta_requires_connected():
    disconnected = CurveConfiguration.build(
        5, [("C1", 0), ("C2", 0)], {"C1": [], "C2": []}, [])
    assert not is_connected(disconnected)
    with pytest.raises(DomainError) as err:
        delta(disconnected)
    assert err.value.code == "NOT_CONNECTED"


def test_delta_requires_projective():
    affine = CurveConfiguration.build(
        5, [("C1", 0)], {"C1": ["x"]}, [], removed=[P("C1", "x")])
    with pytest.raises(DomainError) as err:
        delta(affine)
    assert err.value.code == "NOT_PROJECTIVE"


def test_identify_merges_into_existing_class():
    config = nodal()
    bigger = CurveConfiguration.build(
        5, [("C1", 0)], {"C1": ["0", "1", "2"]},
        [[P("C1", "0"), P("C1", "1")]])
    merged = identify(bigger, [{P("C1", "1"), P("C1", "2")}])
    assert len(merged.identification_classes) == 1
    assert len(merged.identification_classes[0]) == 3
    assert delta(merged) == 2
    # fresh pair makes a new class
    fresh = identify(config, [{P("C1", "0"), P("C1", "1")}])
    assert len(fresh.identification_classes) == 1


def test_factorize_replay_round_trip():
    for config in (nodal(), triangle()):
        steps = factorize(config)
        assert replay(strip_identifications(config), steps) == config


def test_factorize_step_count():
    # a class of size m contributes m-1 steps
    config = CurveConfiguration.build(
        5, [("C1", 0)], {"C1": list("abc")},
        [[P("C1", "a"), P("C1", "b"), P("C1", "c")]])
    steps = factorize(config)
    assert len(steps) == 2
    assert all(step.same_component for step in steps)


def test_json_round_trip():
    for config in (nodal(), triangle()):
        data = json.loads(json.dumps(config.to_json()))
        assert CurveConfiguration.from_json(data) == config


def test_from_json_rejects_unknown_fields():
    data = nodal().to_json()
    data["surprise"] = 1
    with pytest.raises(DomainError) as err:
        CurveConfiguration.from_json(data)
    assert err.value.code == "BAD_CONFIG_FILE"


def random_config(rng, max_components=6, max_classes=6):
    n = rng.randint(1, max_components)
    comps = [(f"C{i+1}", rng.choice([0, 0, 0, 1, 2])) for i in range(n)]
    points = {f"C{i+1}": [f"p{j}" for j in range(4)] for i in range(n)}
    refs = [P(c, l) for c in points for l in points[c]]
    classes = []
    used = set()
    # spanning chain first so the result is connected
    for i in range(n - 1):
        a, b = P(f"C{i+1}", "p0"), P(f"C{i+2}", "p1")
        classes.append([a, b])
        used |= {a, b}
    for _ in range(rng.randint(0, max_classes - len(classes))):
        free = [r for r in refs if r not in used]
        if len(free) < 2:
            break
        pair = rng.sample(free, 2)
        classes.append(pair)
        used |= set(pair)
    return CurveConfiguration.build(5, comps, points, classes)


def test_random_configs_delta_betti_and_replay():
    rng = random.Random(2024)
    for _ in range(200):
        config = random_config(rng)
        assert not validate(config)
        assert is_connected(config)
        assert delta(config) == dual_graph(config).betti_number()
        steps = factorize(config)
        assert replay(strip_identifications(config), steps) == config
