"""Permutations on {1..deg}, stored as 0-indexed image tuples.

Composition follows function convention: (a * b)(x) = a(b(x)).
The JSON wire format uses 1-indexed image arrays ([2,1,3] swaps 1 and 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import DomainError


@dataclass(frozen=True)
class Perm:
    images: tuple[int, ...]  # images[i] = image of point i (0-indexed)

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise DomainError("NOT_A_PERMUTATION", f"bad image array {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(degree: int) -> "Perm":
        return Perm(tuple(range(degree)))

    @staticmethod
    def from_cycles(degree: int, cycles) -> "Perm":
        """Build a permutation from 1-indexed cycles, e.g. [(1,2,3)]."""
        images = list(range(degree))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b - 1
        return Perm(tuple(images))

    @staticmethod
    def from_one_indexed(images) -> "Perm":
        return Perm(tuple(i - 1 for i in images))

    def to_one_indexed(self) -> list[int]:
        return [i + 1 for i in self.images]

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Perm") -> "Perm":
        a, b = self.images, other.images
        if len(a) != len(b):
            raise DomainError("DEGREE_MISMATCH",
                              f"{len(a)} != {len(b)}")
        # composites of valid permutations need no re-validation
        return _intern(tuple(a[i] for i in b))

    @cached_property
    def inverse(self) -> "Perm":
        images = [0] * self.degree
        for i, j in enumerate(self.images):
            images[j] = i
        return Perm(tuple(images))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        n = 1
        p = self
        while not p.is_identity():
            p = p * self
            n += 1
        return n

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def cycle_string(self) -> str:
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cycle = [i]
            j = self.images[i]
            while j != i:
                seen.add(j)
                cycle.append(j)
                j = self.images[j]
            out.append("(" + " ".join(str(c + 1) for c in cycle) + ")")
        return "".join(out) or "()"

    def __repr__(self):
        return f"Perm[{self.cycle_string()}]"


_INTERNED: dict = {}


def _intern(images: tuple) -> Perm:
    """Shared instances for internally-produced permutations; skips the
    constructor validation, which dominates profile time otherwise."""
    p = _INTERNED.get(images)
    if p is None:
        p = object.__new__(Perm)
        object.__setattr__(p, "images", images)
        _INTERNED[images] = p
    return p
