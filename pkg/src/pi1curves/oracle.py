"""Brute-force cross-checks for the structure theorems.

Over a projective configuration whose components are all rational, a
connected G-cover is (after tree normalization) exactly a choice of one
gluing constant per non-tree edge of the dual graph such that the
constants generate G.  Enumerating those tuples therefore counts
generating tuples, and the count must equal the Eulerian function
phi_delta(G).  This module does the enumeration with the independent
union-find connectivity test and compares both against the
Moebius-inversion count and against the descent construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .catalog import catalog_group, catalog_names
from .covers import (Gluing, build_descriptor, cover_to_json, descend,
                     is_connected as cover_connected, is_galois,
                     spanning_tree)
from .curves import (CurveConfiguration, PointRef, delta, is_connected,
                     require_valid, strip_identifications)
from .errors import DomainError, require
from .groups import PermutationGroup, eulerian
from .perms import Perm

ENUMERATION_BOUND = 10 ** 7


def _check_rational(config):
    require_valid(config)
    require(config.is_projective, "NOT_PROJECTIVE")
    require(is_connected(config), "NOT_CONNECTED")
    bad = [c.id for c in config.components if c.genus != 0]
    require(not bad, "GENUS_NONZERO",
            f"components of positive genus: {bad}")


def _descriptor_for(config, group, free_edges, constants):
    gluings: dict = {}
    assignment = dict(zip(free_edges, constants))
    for ci, cls in enumerate(config.identification_classes):
        gluings[ci] = {}
        for branch in cls.members[1:]:
            c = assignment.get((ci, branch), Perm.identity(group.degree))
            gluings[ci][branch] = c
    return build_descriptor(config, group, gluings=gluings)


def enumerate_connected_covers(group: PermutationGroup,
                               config: CurveConfiguration):
    """Count connected G-covers in tree-normalized form.

    Returns (count, witnesses) where each witness is the tuple of
    non-tree gluing constants of one connected descriptor, in the
    deterministic edge order of spanning_tree().
    """
    _check_rational(config)
    _, free_edges = spanning_tree(config)
    d = len(free_edges)
    assert d == delta(config)
    order = group.order()
    require(order ** d <= ENUMERATION_BOUND, "TOO_LARGE",
            f"|G|^delta = {order}^{d} exceeds the enumeration bound")
    elements = group.elements()
    count = 0
    witnesses = []
    for constants in itertools.product(elements, repeat=d):
        descriptor = _descriptor_for(config, group, free_edges, constants)
        if cover_connected(descriptor):
            count += 1
            witnesses.append(constants)
    return count, witnesses


@dataclass(frozen=True)
class CensusEntry:
    name: str
    order: int
    realizable: bool
    count: int
    witness: tuple | None  # constants of one connected cover, or None

    def to_json(self):
        return {"group": self.name, "order": self.order,
                "realizable": self.realizable, "count": self.count,
                "witness": [c.to_one_indexed() for c in self.witness]
                if self.witness else None}


def quotient_census(config: CurveConfiguration, max_order: int):
    """Which catalog groups of order <= max_order occur as etale Galois
    groups over the configuration, each with an enumeration witness."""
    _check_rational(config)
    entries = []
    for name in catalog_names():
        group = catalog_group(name)
        if group.order() > max_order:
            continue
        count, witnesses = enumerate_connected_covers(group, config)
        entries.append(CensusEntry(name, group.order(), count > 0, count,
                                   witnesses[0] if witnesses else None))
    return entries


def census_report(entries) -> str:
    lines = ["group          order  count  realizable"]
    for e in entries:
        lines.append(f"{e.name:<14} {e.order:>5}  {e.count:>5}  "
                     f"{'yes' if e.realizable else 'no'}")
    return "\n".join(lines) + "\n"


def _induced_relations(config, group):
    """The base and cover relations that rebuild config's classes from the
    stripped configuration, given per-branch constants already stored in a
    descriptor built on config."""
    elements = group.elements()

    def relations(gluings):
        base_rel, cover_rel = [], []
        for ci, cls in enumerate(config.identification_classes):
            base_rel.append(set(cls.members))
            for x in elements:
                pairs = {(cls.base_branch, x)}
                for branch in cls.members[1:]:
                    pairs.add((branch, gluings[ci][branch].apply(x)))
                cover_rel.append(pairs)
        return base_rel, cover_rel

    return relations


@dataclass(frozen=True)
class DescentReport:
    checked: int
    mismatches: tuple
    negative_controls_rejected: int

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self):
        return {"checked": self.checked,
                "mismatches": list(self.mismatches),
                "negative_controls_rejected": self.negative_controls_rejected}


def cross_check_descent(group: PermutationGroup,
                        config: CurveConfiguration) -> DescentReport:
    """Rebuild every enumerated cover through descend() and require
    descriptor equality with the direct gluing path; also verify that a
    corrupted cover relation is rejected."""
    _check_rational(config)
    require(config.identification_classes, "TOO_LARGE",
            "nothing to descend: no identification classes")
    _, free_edges = spanning_tree(config)
    order = group.order()
    require(order ** len(free_edges) <= ENUMERATION_BOUND, "TOO_LARGE",
            f"|G|^delta = {order}^{len(free_edges)}")
    stripped = strip_identifications(config)
    base_cover = build_descriptor(stripped, group)
    relations_of = _induced_relations(config, group)
    elements = group.elements()

    checked = 0
    mismatches = []
    rejected = 0
    for constants in itertools.product(elements, repeat=len(free_edges)):
        direct = _descriptor_for(config, group, free_edges, constants)
        base_rel, cover_rel = relations_of(direct.gluings)
        descended = descend(base_cover, base_rel, cover_rel)
        checked += 1
        if cover_to_json(descended) != cover_to_json(direct):
            mismatches.append([c.to_one_indexed() for c in constants])
        elif cover_connected(descended) != cover_connected(direct) \
                or not is_galois(descended):
            mismatches.append([c.to_one_indexed() for c in constants])

    # negative control: corrupt one cover class and expect a rejection
    if order > 2:
        direct = _descriptor_for(config, group, free_edges,
                                 (elements[0],) * len(free_edges))
        base_rel, cover_rel = relations_of(direct.gluings)
        a, b = elements[1], elements[2]
        cls = config.identification_classes[0]
        corrupted = []
        for pairs in cover_rel:
            labels = dict(pairs)
            if labels.get(cls.base_branch) == a:
                labels[cls.members[1]] = direct.gluings[0][
                    cls.members[1]].apply(b)
            corrupted.append({(ref, x) for ref, x in labels.items()})
        try:
            descend(base_cover, base_rel, corrupted)
        except DomainError as exc:
            if exc.code in ("BAD_PARTITION", "ACTION_NOT_EQUIVARIANT"):
                rejected += 1
    else:
        rejected += 1  # no room to corrupt an equivariant relation
    return DescentReport(checked, tuple(mismatches), rejected)


# -- standard test configurations -------------------------------------------

def nodal_curve(p: int) -> CurveConfiguration:
    """Rational curve with one node (delta = 1)."""
    a, b = PointRef("C1", "0"), PointRef("C1", "1")
    return CurveConfiguration.build(p, [("C1", 0)], {"C1": ["0", "1"]},
                                    [[a, b]])


def two_node_curve(p: int) -> CurveConfiguration:
    """Rational curve with two nodes (delta = 2)."""
    refs = [PointRef("C1", s) for s in "0123"]
    return CurveConfiguration.build(
        p, [("C1", 0)], {"C1": ["0", "1", "2", "3"]},
        [[refs[0], refs[1]], [refs[2], refs[3]]])


def nodal_affine_curve(p: int) -> CurveConfiguration:
    """Nodal rational curve with the point at infinity removed."""
    a, b = PointRef("C1", "0"), PointRef("C1", "1")
    return CurveConfiguration.build(p, [("C1", 0)], {"C1": ["0", "1", "inf"]},
                                    [[a, b]], removed=[PointRef("C1", "inf")])


def eulerian_matches_enumeration(group: PermutationGroup,
                                 config: CurveConfiguration) -> bool:
    count, _ = enumerate_connected_covers(group, config)
    return count == eulerian(group, delta(config))
