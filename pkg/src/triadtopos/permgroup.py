"""Permutations and permutation groups on small finite carriers.

Everything here is brute force by design: the carriers of interest have
at most 24 points, and the heaviest search (a centralizer in Sym(8))
exhausts 8! candidates.

Composition convention throughout: (p * q)(x) = p(q(x)), i.e. the right
factor acts first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Optional, Sequence

Point = Hashable

CENTRALIZER_MAX_POINTS = 8
SUBGROUP_MAX_ORDER = 48


class CarrierMismatchError(ValueError):
    """Raised when permutations on different carriers are combined."""


class SearchBoundExceeded(RuntimeError):
    """Raised when an exhaustive search would exceed its size bound."""


@dataclass(frozen=True)
class Carrier:
    """An ordered finite set of distinct points."""

    points: tuple[Point, ...]

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise ValueError("carrier points must be distinct")

    def index(self, point: Point) -> int:
        return self.points.index(point)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, point: Point) -> bool:
        return point in self.points


@dataclass(frozen=True)
class Permutation:
    """A bijection of a carrier, stored as an index table.

    The label is display metadata only; equality and hashing ignore it.
    """

    carrier: Carrier
    images: tuple[int, ...]
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.carrier))):
            raise ValueError("image table is not a bijection")

    @classmethod
    def from_function(
        cls, carrier: Carrier, fn: Callable[[Point], Point], label: str | None = None
    ) -> "Permutation":
        images = tuple(carrier.index(fn(p)) for p in carrier.points)
        return cls(carrier, images, label)

    @classmethod
    def identity(cls, carrier: Carrier) -> "Permutation":
        return cls(carrier, tuple(range(len(carrier))), "Id")

    def __call__(self, point: Point) -> Point:
        return self.carrier.points[self.images[self.carrier.index(point)]]

    def apply_index(self, i: int) -> int:
        return self.images[i]

    def compose(self, inner: "Permutation", label: str | None = None) -> "Permutation":
        """self after inner."""
        if self.carrier != inner.carrier:
            raise CarrierMismatchError("cannot compose permutations on different carriers")
        return Permutation(
            self.carrier, tuple(self.images[j] for j in inner.images), label
        )

    def __mul__(self, inner: "Permutation") -> "Permutation":
        return self.compose(inner)

    def inverse(self, label: str | None = None) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(self.carrier, tuple(inv), label)

    def relabeled(self, label: str | None) -> "Permutation":
        return Permutation(self.carrier, self.images, label)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def commutes_with(self, other: "Permutation") -> bool:
        return (self * other).images == (other * self).images

    def cycles(self) -> tuple[tuple[Point, ...], ...]:
        """Disjoint cycles, each starting at its minimal carrier index,
        listed by first-point index; fixed points omitted."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(self.carrier.points[i])
                i = self.images[i]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return tuple(out)

    def cycle_notation(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p) for p in cyc) + ")" for cyc in cycles)

    def __str__(self) -> str:
        return self.label if self.label is not None else self.cycle_notation()


@dataclass(frozen=True)
class PermGroup:
    """A finite set of permutations closed under composition and inverse."""

    carrier: Carrier
    elements: frozenset[Permutation]

    def __post_init__(self):
        for p in self.elements:
            if p.carrier != self.carrier:
                raise CarrierMismatchError("group element on wrong carrier")

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self.elements

    def __le__(self, other: "PermGroup") -> bool:
        return self.carrier == other.carrier and self.elements <= other.elements

    def sorted_elements(self) -> tuple[Permutation, ...]:
        return tuple(sorted(self.elements, key=lambda p: p.images))

    def identity(self) -> Permutation:
        return Permutation.identity(self.carrier)

    def labels(self) -> tuple[str, ...]:
        return tuple(str(p) for p in self.sorted_elements())

    def is_group(self) -> bool:
        """Exhaustive group-axiom check: identity, closure, inverses."""
        if Permutation.identity(self.carrier) not in self.elements:
            return False
        for p in self.elements:
            if p.inverse() not in self.elements:
                return False
            for q in self.elements:
                if p * q not in self.elements:
                    return False
        return True


def close_generators(
    gens: Iterable[Permutation], carrier: Carrier | None = None
) -> PermGroup:
    """Smallest group containing the generators (and the identity)."""
    gens = list(gens)
    if carrier is None:
        if not gens:
            raise ValueError("cannot infer a carrier from an empty generator set")
        carrier = gens[0].carrier
    for g in gens:
        if g.carrier != carrier:
            raise CarrierMismatchError("generators live on different carriers")
    identity = Permutation.identity(carrier)
    elements = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = g * p
                if q not in elements:
                    elements.add(q)
                    nxt.append(q)
        frontier = nxt
    # generator closure of a finite carrier is inverse-closed automatically
    return PermGroup(carrier, frozenset(elements))


def orbit(group: PermGroup, point: Point) -> frozenset[Point]:
    if point not in group.carrier:
        raise ValueError(f"{point!r} is not on the group's carrier")
    return frozenset(p(point) for p in group.elements)


def is_simply_transitive(group: PermGroup, subset: Iterable[Point]) -> bool:
    """True iff the group preserves the subset and acts simply transitively
    on it (transitive, with only the identity fixing a point)."""
    pts = set(subset)
    if not pts:
        raise ValueError("subset must be nonempty")
    indices = {group.carrier.index(p) for p in pts}
    for p in group.elements:
        if not {p.images[i] for i in indices} <= indices:
            return False
    if len(group) != len(pts):
        return False
    base = next(iter(indices))
    return {p.images[base] for p in group.elements} == indices


def centralizer_brute(group: PermGroup) -> PermGroup:
    """All permutations of the carrier commuting with every group element,
    found by exhausting Sym(carrier).  Refuses carriers larger than 8."""
    n = len(group.carrier)
    if n > CENTRALIZER_MAX_POINTS:
        raise SearchBoundExceeded(
            f"centralizer search exhausts {n}! permutations; "
            f"bound is carrier size {CENTRALIZER_MAX_POINTS}"
        )
    elems = list(group.elements)
    found = []
    for images in itertools.permutations(range(n)):
        if all(
            tuple(images[j] for j in p.images) == tuple(p.images[j] for j in images)
            for p in elems
        ):
            found.append(Permutation(group.carrier, tuple(images)))
    return PermGroup(group.carrier, frozenset(found))


def all_subgroups(group: PermGroup) -> list[PermGroup]:
    """Every subgroup, each exactly once, by closing all generator pairs.

    Sufficient for the dihedral-type groups this library works with
    (every subgroup is 2-generated); the test suite cross-checks with a
    3-generator sweep.
    """
    if len(group) > SUBGROUP_MAX_ORDER:
        raise SearchBoundExceeded(
            f"subgroup enumeration bounded at order {SUBGROUP_MAX_ORDER}, "
            f"got {len(group)}"
        )
    elems = group.sorted_elements()
    seen: dict[frozenset[Permutation], PermGroup] = {}
    trivial = close_generators([], group.carrier)
    seen[trivial.elements] = trivial
    for a in elems:
        for b in elems:
            sub = close_generators([a, b], group.carrier)
            seen.setdefault(sub.elements, sub)
    return sorted(
        seen.values(),
        key=lambda g: (len(g), tuple(p.images for p in g.sorted_elements())),
    )
