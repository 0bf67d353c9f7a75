import random

import pytest

from pi1curves.catalog import catalog_group, cyclic
from pi1curves.covers import (
    Gluing,
    build_descriptor,
    connectivity_criterion,
    cover_from_json,
    cover_to_json,
    coset_transversal,
    descend,
    dual_graph_dot,
    glue_same_component,
    glue_two_components,
    induce,
    is_connected,
    is_galois,
    normalize_spanning_tree,
    sheet_graph_dot,
    spanning_tree,
    torsor_labeling,
)
from pi1curves.curves import CurveConfiguration, PointRef
from pi1curves.errors import DomainError
from pi1curves.groups import subgroup_generated
from pi1curves.perms import Perm

P = PointRef


def nodal(p=5):
    return CurveConfiguration.build(
        p, [("C1", 0)], {"C1": ["0", "1"]}, [[P("C1", "0"), P("C1", "1")]])


def s3_and_a3():
    S3 = catalog_group("S3")
    rotation = next(g for g in S3.elements() if g.order() == 3)
    A3 = subgroup_generated(S3, [rotation])
    flip = next(g for g in S3.elements() if g.order() == 2)
    return S3, A3, flip


# -- torsor labelings -------------------------------------------------------

def test_torsor_labeling_regular_action():
    C4 = cyclic(4)
    elems = C4.elements()
    labeling = torsor_labeling(C4, elems, lambda g, s: g * s, elems[0])
    assert labeling.to_group[elems[0]].is_identity()
    for s in elems:
        g = labeling.to_group[s]
        assert labeling.from_group[g] == s


def test_torsor_labeling_rejects_wrong_size():
    C4 = cyclic(4)
    with pytest.raises(DomainError) as err:
        torsor_labeling(C4, C4.elements()[:3], lambda g, s: g * s,
                        C4.elements()[0])
    assert err.value.code == "NOT_SIMPLY_TRANSITIVE"


def test_torsor_labeling_rejects_non_free_action():
    C4 = cyclic(4)
    fiber = ["a", "b", "c", "d"]
    with pytest.raises(DomainError) as err:
        torsor_labeling(C4, fiber, lambda g, s: s, "a")  # trivial action
    assert err.value.code == "NOT_SIMPLY_TRANSITIVE"


# -- descriptors and induction ----------------------------------------------

def test_build_descriptor_etale_genus_zero_guard():
    C2 = cyclic(2)
    base = CurveConfiguration.build(5, [("C1", 0)], {"C1": ["a"]}, [])
    with pytest.raises(DomainError) as err:
        build_descriptor(base, C2, monodromy={"C1": C2})
    assert err.value.code == "ETALE_GENUS_ZERO"
    # a ramification annotation lifts the restriction
    flip = C2.generators[0]
    cover = build_descriptor(base, C2, monodromy={"C1": C2},
                             ramification={P("C1", "a"): (flip,)})
    assert cover.monodromy_of("C1").order() == 2


def test_induce_and_transversal():
    S3, A3, _ = s3_and_a3()
    base = CurveConfiguration.build(5, [("C1", 1)], {"C1": ["a"]}, [])
    cover = build_descriptor(base, A3, monodromy={"C1": A3})
    reps = coset_transversal(S3, A3)
    assert len(reps) == 2 and reps[0].is_identity()
    bigger = induce(cover, S3, reps)
    assert bigger.group.same_group(S3)
    with pytest.raises(DomainError) as err:
        induce(cover, S3, [reps[0], reps[0]])
    assert err.value.code == "NOT_A_TRANSVERSAL"


def test_induce_requires_subgroup():
    C4 = cyclic(4)
    C3 = cyclic(3)
    base = CurveConfiguration.build(5, [("C1", 1)], {"C1": []}, [])
    cover = build_descriptor(base, C3, monodromy={"C1": C3})
    with pytest.raises(DomainError):
        induce(cover, C4)


# -- gluing propositions ----------------------------------------------------

def test_glue_same_component():
    S3, A3, flip = s3_and_a3()
    base = CurveConfiguration.build(5, [("C1", 1)], {"C1": ["a", "b"]}, [])
    cover = build_descriptor(base, A3, monodromy={"C1": A3})
    glued = glue_same_component(S3, A3, flip, cover,
                                P("C1", "a"), P("C1", "b"))
    assert is_connected(glued)
    assert is_galois(glued)
    assert len(glued.base.identification_classes) == 1


def test_glue_same_component_requires_generation():
    S3, A3, _ = s3_and_a3()
    rotation = A3.generators[0]
    base = CurveConfiguration.build(5, [("C1", 1)], {"C1": ["a", "b"]}, [])
    cover = build_descriptor(base, A3, monodromy={"C1": A3})
    with pytest.raises(DomainError) as err:
        glue_same_component(S3, A3, rotation, cover,
                            P("C1", "a"), P("C1", "b"))
    assert err.value.code == "NOT_GENERATING"


def test_glue_same_component_preserves_ramification():
    S3, A3, flip = s3_and_a3()
    rotation = A3.generators[0]
    base = CurveConfiguration.build(5, [("C1", 1)],
                                    {"C1": ["a", "b", "r"]}, [])
    cover = build_descriptor(base, A3, monodromy={"C1": A3},
                             ramification={P("C1", "r"): (rotation,)})
    glued = glue_same_component(S3, A3, flip, cover,
                                P("C1", "a"), P("C1", "b"))
    assert glued.ramification == {P("C1", "r"): (rotation,)}


def test_glue_two_components():
    S3, A3, flip = s3_and_a3()
    C2 = subgroup_generated(S3, [flip])
    base1 = CurveConfiguration.build(5, [("C1", 1)], {"C1": ["a"]}, [])
    base2 = CurveConfiguration.build(5, [("D1", 1)], {"D1": ["a"]}, [])
    cover1 = build_descriptor(base1, A3, monodromy={"C1": A3})
    cover2 = build_descriptor(base2, C2, monodromy={"D1": C2})
    joined = glue_two_components(S3, A3, C2, cover1, cover2,
                                 P("C1", "a"), P("D1", "a"))
    assert is_connected(joined)
    assert is_galois(joined)


def test_glue_two_components_rejects_overlap():
    S3, A3, flip = s3_and_a3()
    C2 = subgroup_generated(S3, [flip])
    base = CurveConfiguration.build(5, [("C1", 1)], {"C1": ["a", "b"]}, [])
    cover1 = build_descriptor(base, A3, monodromy={"C1": A3})
    cover2 = build_descriptor(base, C2, monodromy={"C1": C2})
    with pytest.raises(DomainError) as err:
        glue_two_components(S3, A3, C2, cover1, cover2,
                            P("C1", "a"), P("C1", "b"))
    assert err.value.code == "COMPONENT_OVERLAP"


def test_glue_two_components_rejects_non_generating():
    S3, A3, _ = s3_and_a3()
    base1 = CurveConfiguration.build(5, [("C1", 1)], {"C1": ["a"]}, [])
    base2 = CurveConfiguration.build(5, [("D1", 1)], {"D1": ["a"]}, [])
    cover1 = build_descriptor(base1, A3, monodromy={"C1": A3})
    cover2 = build_descriptor(base2, A3, monodromy={"D1": A3})
    with pytest.raises(DomainError) as err:
        glue_two_components(S3, A3, A3, cover1, cover2,
                            P("C1", "a"), P("D1", "a"))
    assert err.value.code == "NOT_GENERATING"


# -- descent ----------------------------------------------------------------

def cyclic_cover_two_points():
    C3 = cyclic(3)
    base = CurveConfiguration.build(7, [("C1", 1)], {"C1": ["a", "b"]}, [])
    return C3, build_descriptor(base, C3, monodromy={"C1": C3})


def test_descend_constant_relation():
    C3, cover = cyclic_cover_two_points()
    a, b = P("C1", "a"), P("C1", "b")
    x = next(g for g in C3.elements() if g.order() == 3)
    relation = [{(a, l), (b, x * l)} for l in C3.elements()]
    out = descend(cover, [{a, b}], relation)
    gluing = out.gluings[0][max(a, b)]
    assert gluing.constant == x
    assert is_galois(out)


def test_descend_rejects_non_equivariant():
    C3, cover = cyclic_cover_two_points()
    a, b = P("C1", "a"), P("C1", "b")
    e = Perm.identity(3)
    x = next(g for g in C3.elements() if g.order() == 3)
    bad = [{(a, e), (b, e)}, {(a, x), (b, x * x)}, {(a, x * x), (b, x)}]
    with pytest.raises(DomainError) as err:
        descend(cover, [{a, b}], bad)
    assert err.value.code == "ACTION_NOT_EQUIVARIANT"
    out = descend(cover, [{a, b}], bad, require_galois=False)
    assert not is_galois(out)


def test_descend_rejects_bad_partition():
    C3, cover = cyclic_cover_two_points()
    a, b = P("C1", "a"), P("C1", "b")
    x = next(g for g in C3.elements() if g.order() == 3)
    relation = [{(a, l), (b, x * l)} for l in C3.elements()]
    relation[0] = relation[0] | {(b, Perm.identity(3))}  # oversized class
    with pytest.raises(DomainError) as err:
        descend(cover, [{a, b}], relation)
    assert err.value.code == "BAD_PARTITION"


def test_descend_rejects_unrelated_base():
    C3, cover = cyclic_cover_two_points()
    a = P("C1", "a")
    e = Perm.identity(3)
    with pytest.raises(DomainError) as err:
        descend(cover, [{a, P("C1", "b")}], [{(a, e), (P("C1", "zzz"), e)}])
    assert err.value.code == "RELATION_NOT_PRESERVED"


# -- normal form and connectivity criterion ---------------------------------

def random_cyclic_descriptor(rng, group, config):
    _, free = spanning_tree(config)
    elems = group.elements()
    gluings = {}
    for ci, cls in enumerate(config.identification_classes):
        gluings[ci] = {branch: rng.choice(elems)
                       for branch in cls.members[1:]}
    return build_descriptor(config, group, gluings=gluings)


def chain_config():
    return CurveConfiguration.build(
        5, [("C1", 0), ("C2", 0), ("C3", 0)],
        {"C1": ["a", "b"], "C2": ["a", "b"], "C3": ["a", "b"]},
        [[P("C1", "b"), P("C2", "a")],
         [P("C2", "b"), P("C3", "a")],
         [P("C3", "b"), P("C1", "a")]])


def test_normalize_spanning_tree():
    rng = random.Random(5)
    G = catalog_group("S3")
    for _ in range(25):
        cover = random_cyclic_descriptor(rng, G, chain_config())
        norm = normalize_spanning_tree(cover)
        tree, free = spanning_tree(norm.base)
        for ci, branch in tree:
            assert norm.gluings[ci][branch].constant.is_identity()
        assert len(free) == 1
        assert is_connected(norm) == is_connected(cover)
        assert connectivity_criterion(norm) == is_connected(cover)


def test_connectivity_criterion_requires_normal_form():
    G = cyclic(2)
    flip = G.generators[0]
    config = chain_config()
    gluings = {0: {config.identification_classes[0].members[1]: flip}}
    cover = build_descriptor(config, G, gluings=gluings)
    with pytest.raises(DomainError) as err:
        connectivity_criterion(cover)
    assert err.value.code == "NOT_TREE_NORMALIZED"


def test_relabeling_invariance():
    # conjugating every fiber by a constant changes no verdict
    rng = random.Random(9)
    G = catalog_group("D4")
    for _ in range(10):
        cover = random_cyclic_descriptor(rng, G, chain_config())
        norm = normalize_spanning_tree(cover)
        assert is_galois(cover)
        assert is_galois(norm)
        assert is_connected(cover) == is_connected(norm)


# -- serialization and DOT --------------------------------------------------

def test_cover_json_round_trip():
    S3, A3, flip = s3_and_a3()
    base = CurveConfiguration.build(5, [("C1", 1)], {"C1": ["a", "b"]}, [])
    cover = build_descriptor(base, A3, monodromy={"C1": A3})
    glued = glue_same_component(S3, A3, flip, cover,
                                P("C1", "a"), P("C1", "b"))
    data = cover_to_json(glued)
    assert cover_to_json(cover_from_json(data)) == data


def test_cover_from_json_rejects_garbage():
    with pytest.raises(DomainError) as err:
        cover_from_json({"nope": 1})
    assert err.value.code == "BAD_COVER_FILE"


def test_dot_outputs_deterministic():
    S3, A3, flip = s3_and_a3()
    base = CurveConfiguration.build(5, [("C1", 1)], {"C1": ["a", "b"]}, [])
    cover = build_descriptor(base, A3, monodromy={"C1": A3})
    glued = glue_same_component(S3, A3, flip, cover,
                                P("C1", "a"), P("C1", "b"))
    dot = sheet_graph_dot(glued)
    assert dot == sheet_graph_dot(glued)
    assert dot.startswith("graph sheets {") and dot.endswith("}\n")
    assert dual_graph_dot(glued.base).startswith("graph dual {")
