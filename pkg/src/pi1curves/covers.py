"""Galois covers of curve configurations as torsor-labeled finite data.

A cover of a configuration is stored as: the Galois group G, one
monodromy subgroup per component (the sheets over that component are the
orbits of left multiplication by the subgroup on the label set G), and
one gluing per non-base branch of every identification class.  Fibers
over identified points are G-torsors; the Galois action is RIGHT
multiplication on labels, gluing maps are LEFT multiplications, so the
two commute and gluing is automatically equivariant.

A gluing is stored as a map base-fiber label -> branch-fiber label.
Constant gluings (left translation by c: lambda -> c*lambda) are the
Galois case; raw dict maps appear only from descend() and hand-built
descriptors and are what is_galois() rejects when not equivariant.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .curves import (CurveConfiguration, PointRef, dual_graph, identify,
                     is_connected as config_connected, require_valid)
from .errors import DomainError, require
from .groups import PermutationGroup, subgroup_generated
from .perms import Perm


# -- gluings ----------------------------------------------------------------

@dataclass(frozen=True)
class Gluing:
    """Identification of the branch fiber with the base fiber of a class.

    constant is set for left translations (base label x -> branch label
    constant*x); otherwise mapping holds an arbitrary bijection G -> G.
    """
    constant: Perm | None = None
    mapping: tuple | None = None  # sorted tuple of (label, image) pairs

    @staticmethod
    def of_constant(c: Perm) -> "Gluing":
        return Gluing(constant=c)

    @staticmethod
    def of_mapping(pairs, group: PermutationGroup) -> "Gluing":
        """Build from {base label: branch label}; collapses to a constant
        when the map is a left translation."""
        mapping = dict(pairs)
        elements = group.elements()
        require(set(mapping) == set(elements)
                and set(mapping.values()) == set(elements),
                "FIBER_NOT_TORSOR", "gluing is not a bijection of the fibers")
        c = mapping[Perm.identity(group.degree)]
        if all(mapping[x] == c * x for x in elements):
            return Gluing(constant=c)
        return Gluing(mapping=tuple(sorted(mapping.items())))

    def apply(self, label: Perm) -> Perm:
        if self.constant is not None:
            return self.constant * label
        return dict(self.mapping)[label]

    def as_dict(self, group: PermutationGroup) -> dict:
        if self.constant is not None:
            return {x: self.constant * x for x in group.elements()}
        return dict(self.mapping)


@dataclass(frozen=True)
class CoverDescriptor:
    base: CurveConfiguration
    group: PermutationGroup
    monodromy: dict            # component id -> PermutationGroup (subgroup of G)
    gluings: dict              # class index -> {branch PointRef: Gluing}
    ramification: dict = field(default_factory=dict)  # PointRef -> tuple of Perm

    def monodromy_of(self, component_id: str) -> PermutationGroup:
        return self.monodromy.get(component_id,
                                  PermutationGroup.trivial(self.group.degree))


def build_descriptor(config, group, monodromy=None, gluings=None,
                     ramification=None) -> CoverDescriptor:
    """Validating constructor.

    Monodromy defaults to trivial on every component; gluings default to
    identity constants on every non-base branch.  A genus-0 component may
    only carry nontrivial monodromy when a ramification annotation on one
    of its points licenses it (ETALE_GENUS_ZERO otherwise).
    """
    require_valid(config)
    monodromy = dict(monodromy or {})
    ramification = dict(ramification or {})
    for comp_id, sub in monodromy.items():
        config.component(comp_id)  # raises POINT_NOT_FOUND
        require(sub.is_subgroup_of(group), "NOT_A_MEMBER",
                f"monodromy over {comp_id} is not a subgroup of G")
    for ref, perms in ramification.items():
        require(config.has_point(ref), "POINT_NOT_FOUND", str(ref))
        for p in perms:
            require(p in group, "NOT_A_MEMBER", f"inertia generator {p}")
    for comp in config.components:
        if comp.genus == 0 and monodromy.get(comp.id) is not None \
                and monodromy[comp.id].order() > 1:
            licensed = any(ref.component_id == comp.id for ref in ramification)
            require(licensed, "ETALE_GENUS_ZERO",
                    f"component {comp.id} has genus 0 and no ramification")
    full = {}
    given = {ci: dict(branches) for ci, branches in (gluings or {}).items()}
    for ci, cls in enumerate(config.identification_classes):
        branches = given.pop(ci, {})
        unknown = set(branches) - set(cls.members[1:])
        require(not unknown, "POINT_NOT_FOUND",
                f"gluing branches {unknown} not in class {ci}")
        full[ci] = {}
        for branch in cls.members[1:]:
            g = branches.get(branch)
            if g is None:
                g = Gluing.of_constant(Perm.identity(group.degree))
            elif isinstance(g, Perm):
                g = Gluing.of_constant(g)
            if g.constant is not None:
                require(g.constant in group, "NOT_A_MEMBER",
                        f"gluing constant {g.constant} not in G")
            full[ci][branch] = g
    require(not given, "POINT_NOT_FOUND",
            f"gluings for unknown class indices {sorted(given)}")
    return CoverDescriptor(config, group, monodromy, full, ramification)


# -- verdicts ---------------------------------------------------------------

def _sheet_of(label, coset_cache, comp_id, mono_elements):
    key = min((m * label).images for m in mono_elements)
    return coset_cache.setdefault((comp_id, key), (comp_id, key))


def is_connected(cover: CoverDescriptor) -> bool:
    """Union-find over (component, sheet) nodes through all gluings."""
    elements = cover.group.elements()
    mono_elements = {comp.id: cover.monodromy_of(comp.id).elements()
                     for comp in cover.base.components}

    def sheet(comp_id, label):
        mono = mono_elements[comp_id]
        if len(mono) == 1:
            return (comp_id, label.images)
        return (comp_id, min((m * label).images for m in mono))

    parent: dict = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    nodes = [sheet(comp.id, x) for comp in cover.base.components
             for x in elements]
    for node in nodes:
        find(node)
    for ci, cls in enumerate(cover.base.identification_classes):
        base = cls.base_branch
        for branch in cls.members[1:]:
            gluing = cover.gluings[ci][branch]
            for label in elements:
                a = find(sheet(base.component_id, label))
                b = find(sheet(branch.component_id, gluing.apply(label)))
                parent[a] = b
    roots = {find(n) for n in parent}
    return len(roots) == 1


def is_galois(cover: CoverDescriptor) -> bool:
    """Right G-action must commute with every gluing map, and the gluing
    must be a bijection of full fibers (torsors)."""
    elements = cover.group.elements()
    for comp_id, sub in cover.monodromy.items():
        if not sub.is_subgroup_of(cover.group):
            return False
    for branches in cover.gluings.values():
        for gluing in branches.values():
            m = gluing.as_dict(cover.group)
            if set(m) != set(elements) or set(m.values()) != set(elements):
                return False
            for x in elements:
                for g in cover.group.generators:
                    if m[x * g] != m[x] * g:
                        return False
    return True


# -- torsor labelings -------------------------------------------------------

@dataclass(frozen=True)
class TorsorLabeling:
    fiber: tuple
    base_point: object
    to_group: dict    # fiber point -> Perm, base -> identity
    from_group: dict  # inverse map


def torsor_labeling(group: PermutationGroup, fiber, action,
                    base_point) -> TorsorLabeling:
    """The bijection of a simply transitive action with G itself.

    action(g, s) applies g in G to a fiber point s.  The label of s is the
    unique g with action(g, s) == base_point; the base point gets the
    identity.
    """
    fiber = tuple(fiber)
    require(base_point in fiber, "NOT_SIMPLY_TRANSITIVE",
            "base point not in the fiber")
    elements = group.elements()
    require(len(fiber) == len(set(fiber)) == len(elements),
            "NOT_SIMPLY_TRANSITIVE",
            f"fiber size {len(fiber)} != |G| = {len(elements)}")
    to_group = {}
    for s in fiber:
        labels = [g for g in elements if action(g, s) == base_point]
        require(len(labels) == 1, "NOT_SIMPLY_TRANSITIVE",
                f"{len(labels)} group elements move {s!r} to the base point")
        to_group[s] = labels[0]
    from_group = {g: s for s, g in to_group.items()}
    require(len(from_group) == len(elements), "NOT_SIMPLY_TRANSITIVE",
            "labels are not distinct")
    return TorsorLabeling(fiber, base_point, to_group, from_group)


# -- induction and gluing ---------------------------------------------------

def induce(cover: CoverDescriptor, ambient: PermutationGroup,
           coset_reps=None) -> CoverDescriptor:
    """Reinterpret an H-cover as a (disconnected) ambient-group cover.

    In the torsor model the label set simply grows from H to the ambient
    group; monodromy subgroups and gluing constants are unchanged.  An
    explicit transversal, when supplied, must start with the identity and
    hit every left coset exactly once.
    """
    sub = cover.group
    require(sub.is_subgroup_of(ambient), "NOT_A_MEMBER",
            "cover group is not a subgroup of the ambient group")
    if coset_reps is not None:
        reps = list(coset_reps)
        index = ambient.order() // sub.order()
        require(len(reps) == index and reps and reps[0].is_identity(),
                "NOT_A_TRANSVERSAL",
                f"need {index} representatives starting with the identity")
        for r in reps:
            require(r in ambient, "NOT_A_TRANSVERSAL", f"{r} not in the group")
        for i, a in enumerate(reps):
            for b in reps[i + 1:]:
                require(b.inverse * a not in sub, "NOT_A_TRANSVERSAL",
                        f"{a} and {b} represent the same coset")
    return replace(cover, group=ambient)


def coset_transversal(ambient: PermutationGroup,
                      sub: PermutationGroup) -> list:
    """Deterministic left-coset transversal: identity first, then minimal
    representatives in sorted element order."""
    reps = [Perm.identity(ambient.degree)]
    covered = set(x.images for x in sub.elements())
    for x in ambient.elements():
        if x.images in covered:
            continue
        reps.append(x)
        covered.update((x * h).images for h in sub.elements())
    return reps


def _check_smooth_fiber_point(config, ref):
    require(config.has_point(ref), "POINT_NOT_FOUND", str(ref))
    require(ref not in config.removed_points, "OVERLAP_WITH_REMOVED", str(ref))
    require(config.class_of(ref) is None, "FIBER_NOT_TORSOR",
            f"{ref} is already a singular point")


def glue_same_component(ambient: PermutationGroup, sub: PermutationGroup,
                        gamma: Perm, base_cover: CoverDescriptor,
                        y1: PointRef, y2: PointRef) -> CoverDescriptor:
    """Identify two smooth points of a connected cover's base and glue the
    induced ambient-group cover along the new class with constant gamma.

    Requires ambient = <sub, gamma> and a connected base cover; the result
    is connected and Galois (verified by the test suite, not assumed here).
    """
    require(base_cover.group.same_group(sub), "NOT_A_MEMBER",
            "base cover is not a cover for the given subgroup")
    require(gamma in ambient, "NOT_A_MEMBER", "gamma not in the ambient group")
    generated = subgroup_generated(ambient, list(sub.generators) + [gamma])
    require(generated.order() == ambient.order(), "NOT_GENERATING",
            "<subgroup, gamma> is a proper subgroup")
    require(config_connected(base_cover.base), "BASE_NOT_CONNECTED")
    require(is_connected(base_cover), "BASE_NOT_CONNECTED",
            "base cover is disconnected")
    config = base_cover.base
    for ref in (y1, y2):
        _check_smooth_fiber_point(config, ref)
    require(y1 != y2, "FIBER_NOT_TORSOR", "points must be distinct")

    new_config = identify(config, [{y1, y2}])
    induced = induce(base_cover, ambient)
    new_index = len(new_config.identification_classes) - 1
    new_class = new_config.identification_classes[new_index]
    # label x over y1 is matched with label gamma*x over y2
    if new_class.base_branch == min(y1, y2) and min(y1, y2) == y1:
        constant = gamma
    else:
        constant = gamma.inverse
    branch = new_class.members[1]
    gluings = {ci: dict(b) for ci, b in induced.gluings.items()}
    gluings[new_index] = {branch: Gluing.of_constant(constant)}
    return CoverDescriptor(new_config, ambient, dict(induced.monodromy),
                           gluings, dict(base_cover.ramification))


def glue_two_components(group: PermutationGroup,
                        sub1: PermutationGroup, sub2: PermutationGroup,
                        cover1: CoverDescriptor, cover2: CoverDescriptor,
                        y1: PointRef, y2: PointRef) -> CoverDescriptor:
    """Join two disjoint covers across one new class with identity gluing.

    Requires group = <sub1, sub2>; the matching rule identifies equal
    torsor labels, so the gluing constant is the identity.
    """
    require(cover1.group.same_group(sub1), "NOT_A_MEMBER",
            "first cover group mismatch")
    require(cover2.group.same_group(sub2), "NOT_A_MEMBER",
            "second cover group mismatch")
    generated = subgroup_generated(
        group, list(sub1.generators) + list(sub2.generators))
    require(generated.order() == group.order(), "NOT_GENERATING",
            "<G1, G2> is a proper subgroup")
    for cover, y in ((cover1, y1), (cover2, y2)):
        require(config_connected(cover.base), "BASE_NOT_CONNECTED")
        require(is_connected(cover), "BASE_NOT_CONNECTED",
                "input cover is disconnected")
        _check_smooth_fiber_point(cover.base, y)
    ids1 = set(cover1.base.component_ids())
    ids2 = set(cover2.base.component_ids())
    require(not ids1 & ids2, "COMPONENT_OVERLAP",
            f"shared component ids {sorted(ids1 & ids2)}")
    require(y1.component_id in ids1 and y2.component_id in ids2,
            "POINT_NOT_FOUND", "points must lie on the respective covers")

    c1, c2 = cover1.base, cover2.base
    merged = CurveConfiguration(
        c1.characteristic,
        c1.components + c2.components,
        {**c1.points, **c2.points},
        c1.identification_classes + c2.identification_classes,
        c1.removed_points | c2.removed_points)
    shift = len(c1.identification_classes)
    gluings = {ci: dict(b) for ci, b in cover1.gluings.items()}
    for ci, b in cover2.gluings.items():
        gluings[ci + shift] = dict(b)
    new_config = identify(merged, [{y1, y2}])
    new_index = len(new_config.identification_classes) - 1
    new_class = new_config.identification_classes[new_index]
    gluings[new_index] = {
        new_class.members[1]: Gluing.of_constant(Perm.identity(group.degree))}
    monodromy = {**cover1.monodromy, **cover2.monodromy}
    ramification = {**cover1.ramification, **cover2.ramification}
    return CoverDescriptor(new_config, group, monodromy, gluings, ramification)


# -- descent ----------------------------------------------------------------

def descend(cover: CoverDescriptor, base_relation, cover_relation,
            require_galois: bool = True) -> CoverDescriptor:
    """Quotient a cover by compatible identifications up and downstairs.

    base_relation: nontrivial classes of base points (sets of PointRef).
    cover_relation: nontrivial classes of cover points ((PointRef, label)
    pairs).  Checks: the cover relation lies over the base relation; each
    base class's full fiber is partitioned into classes of the same size
    with exactly one point per branch; and (when require_galois) the right
    G-action permutes the cover classes.
    """
    config = cover.base
    base_classes = [frozenset(c) for c in base_relation]
    cover_classes = [frozenset(c) for c in cover_relation]
    require(base_classes and cover_classes, "BAD_PARTITION",
            "both relations must have nontrivial classes")
    for cls in base_classes:
        require(len(cls) >= 2, "BAD_PARTITION", "base class of size < 2")
        for ref in cls:
            _check_smooth_fiber_point(config, ref)
    point_class = {}
    for i, cls in enumerate(base_classes):
        for ref in cls:
            require(ref not in point_class, "BAD_PARTITION",
                    f"{ref} in two base classes")
            point_class[ref] = i

    # condition (1): the relation downstairs is preserved
    for cls in cover_classes:
        base_indices = {point_class.get(ref) for ref, _ in cls}
        require(None not in base_indices and len(base_indices) == 1,
                "RELATION_NOT_PRESERVED",
                "a cover class does not lie over a single base class")

    elements = cover.group.elements()
    # condition (2): fibers are partitioned by classes of matching size,
    # one point per branch
    by_base: dict = {i: [] for i in range(len(base_classes))}
    for cls in cover_classes:
        by_base[point_class[next(iter(cls))[0]]].append(cls)
    for i, base_cls in enumerate(base_classes):
        fiber = {(ref, x) for ref in base_cls for x in elements}
        covered = set()
        for cls in by_base[i]:
            require(len(cls) == len(base_cls), "BAD_PARTITION",
                    f"cover class size {len(cls)} != |C| = {len(base_cls)}")
            branches = [ref for ref, _ in cls]
            require(len(set(branches)) == len(base_cls), "BAD_PARTITION",
                    "cover class misses a branch or repeats one")
            require(not (cls & covered), "BAD_PARTITION",
                    "cover classes overlap")
            covered |= cls
        require(covered == fiber, "BAD_PARTITION",
                "cover classes do not cover the whole fiber")

    if require_galois:
        class_set = set(cover_classes)
        for cls in cover_classes:
            for g in cover.group.generators:
                moved = frozenset((ref, x * g) for ref, x in cls)
                require(moved in class_set, "ACTION_NOT_EQUIVARIANT",
                        "right action does not permute the cover classes")

    new_config = identify(config, [set(c) for c in base_classes])
    n_old = len(config.identification_classes)
    gluings = {ci: dict(b) for ci, b in cover.gluings.items()}
    for offset, base_cls in enumerate(base_classes):
        ci = n_old + offset
        new_class = new_config.identification_classes[ci]
        base_branch = new_class.base_branch
        match = {}
        for cls in by_base[offset]:
            points = dict(cls)  # ref -> label (one per branch)
            for branch in new_class.members[1:]:
                match.setdefault(branch, {})[points[base_branch]] = \
                    points[branch]
        gluings[ci] = {branch: Gluing.of_mapping(pairs, cover.group)
                       for branch, pairs in match.items()}
    return CoverDescriptor(new_config, cover.group, dict(cover.monodromy),
                           gluings, dict(cover.ramification))


# -- spanning-tree normal form ---------------------------------------------

def _edge_list(config):
    """(class_index, branch) edges of the dual graph in deterministic order."""
    edges = []
    for ci, cls in enumerate(config.identification_classes):
        for branch in cls.members[1:]:
            edges.append((ci, branch))
    return edges


def spanning_tree(config):
    """BFS spanning tree of the dual graph from the smallest component id.

    Returns (tree_edges, non_tree_edges) as (class_index, branch) pairs;
    self-loop edges are never tree edges.
    """
    edges = _edge_list(config)
    adjacency: dict = {c.id: [] for c in config.components}
    for ci, branch in edges:
        a = config.identification_classes[ci].base_branch.component_id
        b = branch.component_id
        if a != b:
            adjacency[a].append(((ci, branch), b))
            adjacency[b].append(((ci, branch), a))
    for comp in adjacency.values():
        comp.sort(key=lambda e: (e[0][0], e[0][1], e[1]))
    tree = []
    visited = set()
    start = min(c.id for c in config.components)
    queue = [start]
    visited.add(start)
    while queue:
        node = queue.pop(0)
        for edge, other in adjacency[node]:
            if other not in visited:
                visited.add(other)
                tree.append(edge)
                queue.append(other)
    tree_set = set(tree)
    non_tree = [e for e in edges if e not in tree_set]
    return tree, non_tree


def normalize_spanning_tree(cover: CoverDescriptor) -> CoverDescriptor:
    """Relabel fibers component-by-component so every spanning-tree gluing
    constant becomes the identity.

    The surviving constants, one per non-tree edge, number exactly delta.
    All gluings must be constants (left translations); raises
    ACTION_NOT_EQUIVARIANT otherwise.
    """
    config = cover.base
    require(config_connected(config), "BASE_NOT_CONNECTED")
    for branches in cover.gluings.values():
        for gluing in branches.values():
            require(gluing.constant is not None, "ACTION_NOT_EQUIVARIANT",
                    "non-translation gluing cannot be tree-normalized")
    tree, _ = spanning_tree(config)
    identity = Perm.identity(cover.group.degree)
    translation = {min(c.id for c in config.components): identity}
    # propagate translations outward along the tree
    pending = list(tree)
    while pending:
        progressed = False
        for edge in list(pending):
            ci, branch = edge
            base = config.identification_classes[ci].base_branch
            c = cover.gluings[ci][branch].constant
            a, b = base.component_id, branch.component_id
            if a in translation and b not in translation:
                # want t_b * c * t_a^{-1} = identity
                translation[b] = translation[a] * c.inverse
            elif b in translation and a not in translation:
                translation[a] = translation[b] * c
            elif a in translation and b in translation:
                pass
            else:
                continue
            pending.remove(edge)
            progressed = True
        require(progressed, "BASE_NOT_CONNECTED", "tree propagation stalled")
    for comp in config.components:
        translation.setdefault(comp.id, identity)

    gluings = {}
    for ci, branches in cover.gluings.items():
        base = config.identification_classes[ci].base_branch
        t_base = translation[base.component_id]
        gluings[ci] = {}
        for branch, gluing in branches.items():
            t_branch = translation[branch.component_id]
            new_c = t_branch * gluing.constant * t_base.inverse
            gluings[ci][branch] = Gluing.of_constant(new_c)
    monodromy = {comp_id: sub.conjugate(translation[comp_id])
                 for comp_id, sub in cover.monodromy.items()}
    return CoverDescriptor(config, cover.group, monodromy, gluings,
                           dict(cover.ramification))


def connectivity_criterion(cover: CoverDescriptor) -> bool:
    """Connectedness via the free-product structure: the monodromy
    subgroups together with the non-tree gluing constants must generate G.

    Requires a tree-normalized descriptor (NOT_TREE_NORMALIZED otherwise);
    agrees with is_connected on every input.
    """
    config = cover.base
    require(config_connected(config), "BASE_NOT_CONNECTED")
    tree, non_tree = spanning_tree(config)
    gens = []
    for ci, branch in tree:
        gluing = cover.gluings[ci][branch]
        require(gluing.constant is not None and gluing.constant.is_identity(),
                "NOT_TREE_NORMALIZED",
                f"tree edge {(ci, branch)} has a nontrivial constant")
    for ci, branch in non_tree:
        gluing = cover.gluings[ci][branch]
        require(gluing.constant is not None, "NOT_TREE_NORMALIZED",
                "non-translation gluing")
        gens.append(gluing.constant)
    for comp in config.components:
        gens.extend(cover.monodromy_of(comp.id).generators)
    return subgroup_generated(cover.group, gens).order() == cover.group.order()


# -- DOT export -------------------------------------------------------------

def sheet_graph_dot(cover: CoverDescriptor) -> str:
    """Sheet-connectivity graph: nodes (component, sheet), edges from
    gluing identifications, with deterministic ordering."""
    elements = cover.group.elements()
    sheets: dict = {}
    for comp in cover.base.components:
        mono = cover.monodromy_of(comp.id).elements()
        cosets = sorted({min((m * x).images for m in mono) for x in elements})
        for i, key in enumerate(cosets):
            sheets[(comp.id, key)] = f"{comp.id}_s{i}"

    def node(comp_id, label):
        mono = cover.monodromy_of(comp_id).elements()
        return sheets[(comp_id, min((m * label).images for m in mono))]

    edges = set()
    for ci, cls in enumerate(cover.base.identification_classes):
        base = cls.base_branch
        for branch in cls.members[1:]:
            gluing = cover.gluings[ci][branch]
            for x in elements:
                a = node(base.component_id, x)
                b = node(branch.component_id, gluing.apply(x))
                edges.add((min(a, b), max(a, b)))
    lines = ["graph sheets {"]
    for name in sorted(sheets.values()):
        lines.append(f'  "{name}";')
    for a, b in sorted(edges):
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dual_graph_dot(config: CurveConfiguration) -> str:
    graph = dual_graph(config)
    lines = ["graph dual {"]
    for v in graph.vertices:
        lines.append(f'  "{v}";')
    for a, b in graph.edges:
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- serialization ----------------------------------------------------------

def cover_to_json(cover: CoverDescriptor) -> dict:
    gluings = []
    for ci in sorted(cover.gluings):
        for branch in sorted(cover.gluings[ci]):
            gluing = cover.gluings[ci][branch]
            entry = {"class_index": ci, "branch": branch.to_json()}
            if gluing.constant is not None:
                entry["constant"] = gluing.constant.to_one_indexed()
            else:
                entry["mapping"] = [[a.to_one_indexed(), b.to_one_indexed()]
                                    for a, b in gluing.mapping]
            gluings.append(entry)
    return {
        "configuration": cover.base.to_json(),
        "group": {"degree": cover.group.degree,
                  "generators": [g.to_one_indexed()
                                 for g in cover.group.generators]},
        "monodromy": {comp_id: [g.to_one_indexed() for g in sub.generators]
                      for comp_id, sub in sorted(cover.monodromy.items())},
        "gluings": gluings,
        "ramification": [
            {"point": ref.to_json(),
             "inertia": [p.to_one_indexed() for p in perms]}
            for ref, perms in sorted(cover.ramification.items())],
    }


def cover_from_json(data: dict, group_resolver=None) -> CoverDescriptor:
    from .catalog import catalog_group, group_from_json
    try:
        config = CurveConfiguration.from_json(data["configuration"])
        group_data = data["group"]
        if isinstance(group_data, str):
            group = (group_resolver or catalog_group)(group_data)
        else:
            group = group_from_json(group_data)
        monodromy = {
            comp_id: PermutationGroup.from_generators(
                [Perm.from_one_indexed(im) for im in gens], group.degree)
            for comp_id, gens in data.get("monodromy", {}).items()}
        gluings: dict = {}
        for entry in data.get("gluings", []):
            ci = entry["class_index"]
            branch = PointRef.from_json(entry["branch"])
            if "constant" in entry:
                g = Gluing.of_constant(Perm.from_one_indexed(entry["constant"]))
            else:
                g = Gluing.of_mapping(
                    {Perm.from_one_indexed(a): Perm.from_one_indexed(b)
                     for a, b in entry["mapping"]}, group)
            gluings.setdefault(ci, {})[branch] = g
        ramification = {
            PointRef.from_json(entry["point"]):
                tuple(Perm.from_one_indexed(im) for im in entry["inertia"])
            for entry in data.get("ramification", [])}
        return build_descriptor(config, group, monodromy, gluings, ramification)
    except (KeyError, TypeError) as exc:
        raise DomainError("BAD_COVER_FILE", repr(exc))
