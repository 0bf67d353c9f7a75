"""Finite permutation-group engine.

Order and membership go through a deterministic Schreier-Sims stabilizer
chain (base points chosen as the smallest moved point at each level).
Everything else (Sylow subgroups, normal closures, quotients, minimal
generator counts, subgroup lattices, Moebius/Eulerian counting) is built
for desk scale: exhaustive element enumeration is permitted and the
default size bounds keep it honest.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from random import Random

from .errors import DomainError, require
from .perms import Perm

ENUM_BOUND = 10_000          # full element enumeration allowed up to here
MIN_GEN_BOUND = 2_000        # deterministic min_generators bound
LATTICE_BOUND = 200          # subgroup lattice bound


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


class _ChainLevel:
    """One level of a stabilizer chain: base point, orbit transversal,
    and the chain of the stabilizer."""

    def __init__(self, generators, degree):
        self.base = min(i for g in generators for i in range(degree)
                        if g(i) != i)
        # BFS orbit of the base point with coset representatives.
        transversal = {self.base: Perm.identity(degree)}
        frontier = [self.base]
        while frontier:
            new_frontier = []
            for point in frontier:
                for g in generators:
                    image = g(point)
                    if image not in transversal:
                        transversal[image] = g * transversal[point]
                        new_frontier.append(image)
            frontier = sorted(new_frontier)
        self.transversal = transversal
        # Schreier generators for the stabilizer of the base point.
        schreier = []
        seen = set()
        for point in sorted(transversal):
            t_point = transversal[point]
            for g in generators:
                s = transversal[g(point)].inverse * g * t_point
                if not s.is_identity() and s.images not in seen:
                    seen.add(s.images)
                    schreier.append(s)
        self.stabilizer = _build_chain(schreier, degree)

    def order(self) -> int:
        rest = self.stabilizer.order() if self.stabilizer else 1
        return len(self.transversal) * rest

    def sift(self, perm) -> bool:
        image = perm(self.base)
        if image not in self.transversal:
            return False
        rest = self.transversal[image].inverse * perm
        if self.stabilizer is None:
            return rest.is_identity()
        return self.stabilizer.sift(rest)


def _build_chain(generators, degree):
    generators = [g for g in generators if not g.is_identity()]
    if not generators:
        return None
    return _ChainLevel(generators, degree)


@dataclass(frozen=True)
class PermutationGroup:
    degree: int
    generators: tuple
    _memo: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        for g in self.generators:
            if g.degree != self.degree:
                raise DomainError("DEGREE_MISMATCH",
                                  f"generator degree {g.degree} != {self.degree}")

    @staticmethod
    def from_generators(generators, degree=None) -> "PermutationGroup":
        generators = [g for g in generators if not g.is_identity()]
        if degree is None:
            require(bool(generators), "DEGREE_MISMATCH",
                    "degree required for the trivial group")
            degree = generators[0].degree
        gens = tuple(dict.fromkeys(generators))  # dedupe, keep order
        return PermutationGroup(degree, gens)

    @staticmethod
    def trivial(degree: int) -> "PermutationGroup":
        return PermutationGroup(degree, ())

    # -- order / membership -------------------------------------------------

    def _chain(self):
        if "chain" not in self._memo:
            self._memo["chain"] = _build_chain(list(self.generators), self.degree)
        return self._memo["chain"]

    def order(self) -> int:
        chain = self._chain()
        return chain.order() if chain else 1

    def contains(self, perm) -> bool:
        if perm.degree != self.degree:
            raise DomainError("DEGREE_MISMATCH",
                              f"{perm.degree} != {self.degree}")
        if perm.is_identity():
            return True
        chain = self._chain()
        return chain.sift(perm) if chain else False

    def __contains__(self, perm) -> bool:
        return self.contains(perm)

    def elements(self) -> tuple:
        """All elements in a deterministic (sorted) order."""
        if "elements" not in self._memo:
            require(self.order() <= ENUM_BOUND, "GROUP_TOO_LARGE",
                    f"|G| = {self.order()} > {ENUM_BOUND}")
            seen = {Perm.identity(self.degree)}
            frontier = list(seen)
            while frontier:
                new_frontier = []
                for x in frontier:
                    for g in self.generators:
                        y = g * x
                        if y not in seen:
                            seen.add(y)
                            new_frontier.append(y)
                frontier = new_frontier
            self._memo["elements"] = tuple(sorted(seen))
        return self._memo["elements"]

    def is_subgroup_of(self, other: "PermutationGroup") -> bool:
        return (self.degree == other.degree
                and all(g in other for g in self.generators))

    def same_group(self, other: "PermutationGroup") -> bool:
        return (self.is_subgroup_of(other)
                and self.order() == other.order())

    def conjugate(self, t) -> "PermutationGroup":
        return PermutationGroup.from_generators(
            [t * g * t.inverse for g in self.generators], self.degree)


# -- basic constructions ----------------------------------------------------

def subgroup_generated(group: PermutationGroup, perms) -> PermutationGroup:
    """⟨perms⟩ as a subgroup of the symmetric group of group.degree."""
    return PermutationGroup.from_generators(list(perms), group.degree)


def normal_closure(group: PermutationGroup, perms) -> PermutationGroup:
    """Smallest normal subgroup of `group` containing `perms`."""
    for s in perms:
        require(s in group, "NOT_A_MEMBER", f"{s} not in group")
    gens = [s for s in perms if not s.is_identity()]
    closure = PermutationGroup.from_generators(gens, group.degree)
    queue = list(gens)
    while queue:
        n = queue.pop(0)
        for g in group.generators:
            c = g * n * g.inverse
            if c not in closure:
                gens.append(c)
                queue.append(c)
                closure = PermutationGroup.from_generators(gens, group.degree)
    return closure


def sylow_subgroup(group: PermutationGroup, p: int) -> PermutationGroup:
    """A Sylow p-subgroup, by ascending chain through normalizing p-elements."""
    require(_is_prime(p), "NOT_PRIME", f"p = {p}")
    order = group.order()
    p_part = 1
    while order % (p_part * p) == 0:
        p_part *= p
    if p_part == 1:
        return PermutationGroup.trivial(group.degree)
    elements = group.elements()
    sub = PermutationGroup.trivial(group.degree)
    sub_gens: list = []
    while sub.order() < p_part:
        grew = False
        for x in elements:
            if x in sub:
                continue
            # p-power part of x
            k = x.order()
            m = 1
            while k % (m * p) == 0:
                m *= p
            if m == 1:
                continue
            y = x
            for _ in range(k // m - 1):
                y = y * x
            if y in sub or y.is_identity():
                continue
            # y must normalize the current p-subgroup
            if all(y * g * y.inverse in sub for g in sub_gens):
                sub_gens.append(y)
                sub = PermutationGroup.from_generators(sub_gens, group.degree)
                grew = True
                break
        if not grew:  # cannot happen for a genuine group; guard anyway
            raise DomainError("GROUP_TOO_LARGE", "sylow ascent stalled")
    return sub


def quasi_p_part(group: PermutationGroup, p: int) -> PermutationGroup:
    """p(G): the normal subgroup generated by all Sylow p-subgroups.

    p = 0 is the characteristic-zero regime and yields the trivial group.
    """
    if p == 0:
        return PermutationGroup.trivial(group.degree)
    require(_is_prime(p), "NOT_PRIME", f"p = {p}")
    return normal_closure(group, sylow_subgroup(group, p).generators)


@dataclass(frozen=True)
class GroupHom:
    """Quotient presentation G -> G/N with image acting on left cosets."""
    source: PermutationGroup
    kernel: PermutationGroup
    image: PermutationGroup
    _coset_index: dict = field(compare=False, repr=False)
    _coset_reps: tuple = field(compare=False, repr=False)

    def map_element(self, g):
        """Image of g as a permutation of the cosets."""
        n = len(self._coset_reps)
        images = [self._coset_index[(g * self._coset_reps[i]).images]
                  for i in range(n)]
        return Perm(tuple(images))


def quotient(group: PermutationGroup, normal: PermutationGroup) -> GroupHom:
    require(normal.is_subgroup_of(group), "NOT_A_MEMBER",
            "kernel is not a subgroup")
    for g in group.generators:
        for n in normal.generators:
            require(g * n * g.inverse in normal, "NOT_NORMAL",
                    "subgroup is not normal")
    kernel_elements = normal.elements()
    coset_index: dict = {}
    reps = []
    for x in group.elements():
        if x.images in coset_index:
            continue
        reps.append(x)
        i = len(reps) - 1
        for n in kernel_elements:
            coset_index[(x * n).images] = i
    hom = GroupHom(group, normal, PermutationGroup.trivial(max(1, len(reps))),
                   coset_index, tuple(reps))
    image_gens = [hom.map_element(g) for g in group.generators]
    image = PermutationGroup.from_generators(image_gens, max(1, len(reps)))
    hom = GroupHom(group, normal, image, coset_index, tuple(reps))
    # sanity: |G| = |N| * |G/N| and the map is a homomorphism on generators
    assert group.order() == normal.order() * image.order()
    return hom


# -- minimal generators -----------------------------------------------------

def _cyclic_subgroup_representatives(elements, degree):
    """One generator per distinct cyclic subgroup (smallest in sort order)."""
    seen = {}
    for x in elements:
        powers = [x]
        y = x
        while not y.is_identity():
            y = y * x
            powers.append(y)
        key = frozenset(p.images for p in powers)
        if key not in seen:
            seen[key] = x
    return sorted(seen.values())


def _generates(group, tuple_of_perms, order=None):
    target = order if order is not None else group.order()
    return PermutationGroup.from_generators(
        list(tuple_of_perms), group.degree).order() == target


def min_generators(group: PermutationGroup, bound: int = MIN_GEN_BOUND,
                   seed: int = 0, random_budget: int = 64) -> int:
    """d(G): the minimal number of generators, by exhaustive search.

    Raises GROUP_TOO_LARGE above `bound`; use min_generators_upper_bound
    for a randomized estimate on larger groups.
    """
    order = group.order()
    if order == 1:
        return 0
    require(order <= bound, "GROUP_TOO_LARGE", f"|G| = {order} > {bound}")
    elements = group.elements()
    nontrivial = [x for x in elements if not x.is_identity()]
    reps = [x for x in _cyclic_subgroup_representatives(nontrivial, group.degree)]
    rng = Random(seed)
    k = 1
    while True:
        # randomized probe first; a hit at level k is conclusive because
        # every level below k was already exhausted
        for _ in range(random_budget):
            candidate = tuple(rng.choice(nontrivial) for _ in range(k))
            if _generates(group, candidate, order):
                return k
        # exhaustive: first slot runs over cyclic-subgroup representatives
        # (replacing the first entry by another generator of the same cyclic
        # subgroup never changes the generated subgroup)
        for first in reps:
            for rest in itertools.product(nontrivial, repeat=k - 1):
                if _generates(group, (first,) + rest, order):
                    return k
        k += 1


def min_generators_upper_bound(group: PermutationGroup, seed: int = 0,
                               tries: int = 2000) -> int:
    """Randomized upper bound for d(G); flagged, not exact."""
    order = group.order()
    if order == 1:
        return 0
    rng = Random(seed)
    gens = list(group.generators)
    best = len(gens)
    elements = None
    if order <= ENUM_BOUND:
        elements = group.elements()
    for k in range(1, best):
        pool = elements if elements is not None else gens
        for _ in range(tries):
            candidate = tuple(rng.choice(pool) for _ in range(k))
            if _generates(group, candidate, order):
                return k
    return best


# -- abelianization ---------------------------------------------------------

def derived_subgroup(group: PermutationGroup) -> PermutationGroup:
    commutators = [a * b * a.inverse * b.inverse
                   for a in group.generators for b in group.generators]
    return normal_closure(group, commutators)


def abelianization(group: PermutationGroup) -> GroupHom:
    return quotient(group, derived_subgroup(group))


def abelianization_p_rank(group: PermutationGroup, p: int) -> int:
    """σ(G): rank of the maximal elementary abelian p-quotient."""
    require(_is_prime(p), "NOT_PRIME", f"p = {p}")
    ab = abelianization(group).image
    pth_powers = []
    for g in ab.elements():
        y = g
        for _ in range(p - 1):
            y = y * g
        pth_powers.append(y)
    elementary = quotient(ab, normal_closure(ab, pth_powers)).image
    order = elementary.order()
    rank = 0
    while order > 1:
        assert order % p == 0
        order //= p
        rank += 1
    return rank


# -- subgroup lattice and counting ------------------------------------------

def subgroup_lattice(group: PermutationGroup, bound: int = LATTICE_BOUND):
    """All subgroups (up to equality) as frozensets of elements.

    Computed by closing the cyclic subgroups under pairwise joins.
    """
    require(group.order() <= bound, "GROUP_TOO_LARGE",
            f"|G| = {group.order()} > {bound}")
    elements = group.elements()
    identity = Perm.identity(group.degree)

    def close(seed_perms):
        seen = {identity}
        frontier = [identity]
        gens = list(seed_perms)
        while frontier:
            new_frontier = []
            for x in frontier:
                for g in gens:
                    y = g * x
                    if y not in seen:
                        seen.add(y)
                        new_frontier.append(y)
            frontier = new_frontier
        return frozenset(seen)

    subgroups = {frozenset([identity])}
    for x in elements:
        subgroups.add(close([x]))
    while True:
        new = set()
        for a, b in itertools.combinations(sorted(subgroups, key=_subgroup_key), 2):
            if a <= b or b <= a:
                continue
            join = close(sorted(a | b))
            if join not in subgroups:
                new.add(join)
        if not new:
            break
        subgroups |= new
    return sorted(subgroups, key=_subgroup_key)


def _subgroup_key(subgroup):
    return (len(subgroup), sorted(p.images for p in subgroup))


def moebius(group: PermutationGroup, bound: int = LATTICE_BOUND):
    """Moebius function μ(H, G) on the subgroup lattice, as {H: μ}."""
    lattice = subgroup_lattice(group, bound)
    by_size = sorted(lattice, key=lambda s: -len(s))
    mu: dict = {}
    top = by_size[0]
    mu[top] = 1
    for h in by_size[1:]:
        mu[h] = -sum(mu[k] for k in by_size if len(k) > len(h) and h < k)
    return mu


def eulerian(group: PermutationGroup, k: int, bound: int = LATTICE_BOUND) -> int:
    """φ_k(G): the number of generating k-tuples, via Moebius inversion."""
    mu = moebius(group, bound)
    return sum(m * (len(h) ** k) for h, m in mu.items())


def count_generating_tuples(group: PermutationGroup, k: int) -> int:
    """Independent oracle for φ_k(G): plain exhaustive enumeration."""
    order = group.order()
    require(order ** k <= 10 ** 7, "GROUP_TOO_LARGE",
            f"|G|^k = {order ** k} too large")
    elements = group.elements()
    return sum(1 for tup in itertools.product(elements, repeat=k)
               if _generates(group, tup, order))


def is_p_group(group: PermutationGroup, p: int) -> bool:
    order = group.order()
    while order % p == 0:
        order //= p
    return order == 1


def nakajima_tG(group: PermutationGroup, p: int):
    """t_G, the minimal generator count of the augmentation ideal.

    Exact only for p-groups (where the group algebra is local and
    t_G = d(G)); returns None (Unknown) otherwise.
    """
    require(_is_prime(p), "NOT_PRIME", f"p = {p}")
    if not is_p_group(group, p):
        return None
    return min_generators(group)
