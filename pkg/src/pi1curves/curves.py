"""Combinatorial model of seminormal curves over their normalizations.

A configuration records the irreducible components of the normalization
(each reduced to its genus and p-rank), the marked points on them, the
identification classes (reduced fibers over the singular points), and an
optional set of removed smooth points (the affine case).  The dual graph,
the delta invariant, and the rank bookkeeping of the structure theorems
all live here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

from .errors import DomainError, require


@dataclass(frozen=True, order=True)
class PointRef:
    component_id: str
    point_label: str

    def to_json(self):
        return [self.component_id, self.point_label]

    @staticmethod
    def from_json(data) -> "PointRef":
        if (not isinstance(data, (list, tuple)) or len(data) != 2
                or not all(isinstance(x, str) for x in data)):
            raise DomainError("BAD_CONFIG_FILE", f"bad point reference {data!r}")
        return PointRef(data[0], data[1])


@dataclass(frozen=True)
class ComponentData:
    id: str
    genus: int = 0
    p_rank: int | None = None  # defaults to the genus

    @property
    def effective_p_rank(self) -> int:
        return self.genus if self.p_rank is None else self.p_rank


@dataclass(frozen=True)
class IdentificationClass:
    members: tuple  # sorted tuple of PointRef

    @staticmethod
    def of(members) -> "IdentificationClass":
        return IdentificationClass(tuple(sorted(members)))

    @property
    def base_branch(self):
        return self.members[0]

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class CurveConfiguration:
    characteristic: int
    components: tuple            # tuple of ComponentData
    points: dict                 # component id -> tuple of point labels
    identification_classes: tuple  # tuple of IdentificationClass
    removed_points: frozenset = field(default_factory=frozenset)

    @staticmethod
    def build(characteristic, components, points, classes, removed=()):
        comps = tuple(c if isinstance(c, ComponentData) else ComponentData(*c)
                      for c in components)
        return CurveConfiguration(
            characteristic,
            comps,
            {c: tuple(labels) for c, labels in points.items()},
            tuple(IdentificationClass.of(m) for m in classes),
            frozenset(removed))

    @property
    def is_projective(self) -> bool:
        return not self.removed_points

    def component(self, component_id: str) -> ComponentData:
        for comp in self.components:
            if comp.id == component_id:
                return comp
        raise DomainError("POINT_NOT_FOUND", f"no component {component_id!r}")

    def component_ids(self):
        return [c.id for c in self.components]

    def has_point(self, ref: PointRef) -> bool:
        return ref.point_label in self.points.get(ref.component_id, ())

    def class_of(self, ref: PointRef):
        """Index of the identification class containing ref, or None."""
        for i, cls in enumerate(self.identification_classes):
            if ref in cls.members:
                return i
        return None

    def is_smooth_marked_point(self, ref: PointRef) -> bool:
        return (self.has_point(ref) and self.class_of(ref) is None
                and ref not in self.removed_points)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "characteristic": self.characteristic,
            "components": [
                {"id": c.id, "genus": c.genus,
                 **({} if c.p_rank is None else {"p_rank": c.p_rank})}
                for c in self.components],
            "points": {c: list(labels) for c, labels in self.points.items()},
            "identifications": [[p.to_json() for p in cls.members]
                                for cls in self.identification_classes],
            "removed": [p.to_json() for p in sorted(self.removed_points)],
        }

    @staticmethod
    def from_json(data: dict) -> "CurveConfiguration":
        allowed = {"characteristic", "components", "points",
                   "identifications", "removed"}
        unknown = set(data) - allowed
        if unknown:
            raise DomainError("BAD_CONFIG_FILE",
                              f"unknown fields {sorted(unknown)}")
        try:
            components = []
            for c in data["components"]:
                extra = set(c) - {"id", "genus", "p_rank"}
                if extra:
                    raise DomainError("BAD_CONFIG_FILE",
                                      f"unknown component fields {sorted(extra)}")
                components.append(ComponentData(c["id"], c.get("genus", 0),
                                                c.get("p_rank")))
            classes = [[PointRef.from_json(p) for p in cls]
                       for cls in data.get("identifications", [])]
            removed = [PointRef.from_json(p) for p in data.get("removed", [])]
            return CurveConfiguration.build(
                data.get("characteristic", 0), components,
                {c: list(v) for c, v in data.get("points", {}).items()},
                classes, removed)
        except (KeyError, TypeError) as exc:
            raise DomainError("BAD_CONFIG_FILE", repr(exc))

    @staticmethod
    def load(path) -> "CurveConfiguration":
        with open(path, encoding="utf-8") as fh:
            return CurveConfiguration.from_json(json.load(fh))


@dataclass(frozen=True)
class DualGraph:
    """Star expansion of the identification hyperedges: a class of size m
    contributes m-1 edges rooted at its lexicographically smallest member."""
    vertices: tuple   # component ids
    edges: tuple      # (component_id, component_id) pairs, may repeat / loop

    def connected_components(self):
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a, b in self.edges:
            parent[find(a)] = find(b)
        groups: dict = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        return sorted(sorted(g) for g in groups.values())

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def betti_number(self) -> int:
        return len(self.edges) - len(self.vertices) + len(self.connected_components())


# -- operations -------------------------------------------------------------

def validate(config: CurveConfiguration) -> list:
    """All invariant violations as (code, detail) pairs; [] when valid."""
    violations = []
    if not config.components:
        violations.append(("NO_COMPONENTS", "at least one component required"))
    ids = [c.id for c in config.components]
    if len(set(ids)) != len(ids):
        violations.append(("DUPLICATE_COMPONENT", f"component ids {ids}"))
    if config.characteristic != 0 and not _is_prime(config.characteristic):
        violations.append(("BAD_CHARACTERISTIC",
                           f"{config.characteristic} is not prime or 0"))
    for comp in config.components:
        if comp.genus < 0:
            violations.append(("NEGATIVE_GENUS", comp.id))
        if comp.p_rank is not None and not 0 <= comp.p_rank <= comp.genus:
            violations.append(("BAD_P_RANK",
                               f"{comp.id}: s = {comp.p_rank}, g = {comp.genus}"))
    for comp_id, labels in config.points.items():
        if comp_id not in ids:
            violations.append(("POINT_NOT_FOUND", f"component {comp_id!r}"))
        if len(set(labels)) != len(labels):
            violations.append(("DUPLICATE_POINT", f"{comp_id}: {labels}"))
    seen: dict = {}
    for i, cls in enumerate(config.identification_classes):
        if len(cls) < 2:
            violations.append(("CLASS_TOO_SMALL", f"class {i} has {len(cls)} point(s)"))
        if len(set(cls.members)) != len(cls.members):
            violations.append(("CLASS_TOO_SMALL", f"class {i} repeats a point"))
        for ref in cls.members:
            if not config.has_point(ref):
                violations.append(("POINT_NOT_FOUND", f"class {i}: {ref}"))
            if ref in seen and seen[ref] != i:
                violations.append(("CLASSES_OVERLAP",
                                   f"{ref} in classes {seen[ref]} and {i}"))
            seen[ref] = i
            if ref in config.removed_points:
                violations.append(("OVERLAP_WITH_REMOVED", str(ref)))
    for ref in config.removed_points:
        if not config.has_point(ref):
            violations.append(("POINT_NOT_FOUND", f"removed: {ref}"))
    return violations


def require_valid(config: CurveConfiguration) -> None:
    violations = validate(config)
    require(not violations, "INVALID_CONFIG", repr(violations))


def dual_graph(config: CurveConfiguration) -> DualGraph:
    require_valid(config)
    edges = []
    for cls in config.identification_classes:
        root = cls.base_branch
        for other in cls.members[1:]:
            edges.append((root.component_id, other.component_id))
    return DualGraph(tuple(config.component_ids()), tuple(edges))


def is_connected(config: CurveConfiguration) -> bool:
    return dual_graph(config).is_connected()


def delta(config: CurveConfiguration) -> int:
    """δ = 1 - n + Σ (|class| - 1); first Betti number of the dual graph."""
    require_valid(config)
    require(config.is_projective, "NOT_PROJECTIVE", "removed points present")
    require(is_connected(config), "NOT_CONNECTED")
    n = len(config.components)
    return 1 - n + sum(len(cls) - 1 for cls in config.identification_classes)


def affine_delta(config: CurveConfiguration) -> int:
    """δ for the affine theorem: Σ (|fiber| - 1) over the singular points."""
    require_valid(config)
    return sum(len(cls) - 1 for cls in config.identification_classes)


@dataclass(frozen=True)
class RankReport:
    delta: int
    pi1_rank_bound: int
    pro_p_rank: int
    affine_delta: int
    tame_rank: int | None  # only when n = 1 and removed points exist

    def to_json(self) -> dict:
        out = {"delta": self.delta, "pi1_rank_bound": self.pi1_rank_bound,
               "pro_p_rank": self.pro_p_rank, "affine_delta": self.affine_delta}
        if self.tame_rank is not None:
            out["tame_rank"] = self.tame_rank
        return out


def rank_report(config: CurveConfiguration) -> RankReport:
    require_valid(config)
    require(is_connected(config), "NOT_CONNECTED")
    n = len(config.components)
    d_aff = sum(len(cls) - 1 for cls in config.identification_classes)
    d = 1 - n + d_aff
    tame = None
    if n == 1 and config.removed_points:
        g = config.components[0].genus
        r = len(config.removed_points)
        tame = 2 * g + r - 1 + d_aff
    return RankReport(
        delta=d,
        pi1_rank_bound=sum(2 * c.genus for c in config.components) + d,
        pro_p_rank=sum(c.effective_p_rank for c in config.components) + d,
        affine_delta=d_aff,
        tame_rank=tame)


def identify(config: CurveConfiguration, relation) -> CurveConfiguration:
    """Merge the given sets of points into identification classes.

    Each set must contain existing marked points; a point already inside a
    class drags the whole class into the merge.  Untouched classes keep
    their order; merged/new classes are appended in first-touch order.
    """
    require_valid(config)
    relation = [list(s) for s in relation]
    for merge_set in relation:
        require(len(merge_set) >= 2, "CLASS_TOO_SMALL",
                f"merge set {merge_set} has fewer than 2 points")
        for ref in merge_set:
            require(config.has_point(ref), "POINT_NOT_FOUND", str(ref))
            require(ref not in config.removed_points,
                    "OVERLAP_WITH_REMOVED", str(ref))

    # union-find over points, seeded with the existing classes
    parent: dict = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    for cls in config.identification_classes:
        for ref in cls.members[1:]:
            union(cls.members[0], ref)
    touched = set()
    for merge_set in relation:
        for ref in merge_set[1:]:
            union(merge_set[0], ref)
        for ref in merge_set:
            touched.add(find(ref))
    touched = {find(t) for t in touched}

    groups: dict = {}
    for ref in parent:
        groups.setdefault(find(ref), []).append(ref)

    untouched, merged = [], []
    for cls in config.identification_classes:
        root = find(cls.members[0])
        if root not in touched:
            untouched.append(cls)
    seen_roots = set()
    for merge_set in relation:
        root = find(merge_set[0])
        if root not in seen_roots:
            seen_roots.add(root)
            merged.append(IdentificationClass.of(groups[root]))
    return replace(config,
                   identification_classes=tuple(untouched) + tuple(merged))


@dataclass(frozen=True)
class IdentificationStep:
    first: PointRef
    second: PointRef
    same_component: bool  # of the intermediate curve, before this step


def strip_identifications(config: CurveConfiguration) -> CurveConfiguration:
    """The disjoint normalization: same components/points, no classes."""
    return replace(config, identification_classes=())


def factorize(config: CurveConfiguration):
    """Elementary pairwise identifications whose replay rebuilds config.

    Steps are ordered class-by-class (input order), within a class by
    point order.  The number of same-component steps equals delta.
    """
    require_valid(config)
    require(config.is_projective, "NOT_PROJECTIVE", "removed points present")
    require(is_connected(config), "NOT_CONNECTED")
    steps = []
    current = strip_identifications(config)
    for cls in config.identification_classes:
        root = cls.base_branch
        for other in cls.members[1:]:
            graph = dual_graph(current)
            comps = graph.connected_components()
            same = any(root.component_id in part and other.component_id in part
                       for part in comps)
            steps.append(IdentificationStep(root, other, same))
            current = identify(current, [{root, other}])
    return steps


def replay(config: CurveConfiguration, steps) -> CurveConfiguration:
    current = strip_identifications(config)
    for step in steps:
        current = identify(current, [{step.first, step.second}])
    return current


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))
