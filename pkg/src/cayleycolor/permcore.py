"""Finite permutation arithmetic: S_n, A_n, cyclic subgroups and cosets.

Points are 0-based internally and 1-based in cycle notation. Composition is left-to-right:
``compose(a, b)`` applies ``a`` first, then ``b``.
"""

import itertools
import logging
import math
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Literal

from .config import settings
from .exceptions import GroupBudgetError, InvalidParameterError, PermutationError

logger = logging.getLogger(__name__)

GroupKind = Literal["symmetric", "alternating", "cyclic"]
SubgroupKind = Literal["cyclic", "stabilizer"]
CosetSide = Literal["left", "right"]

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection on {0..n-1}; ``images[i]`` is the image of point i."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if n < 1:
            raise PermutationError("permutation degree must be at least 1")
        if sorted(self.images) != list(range(n)):
            raise PermutationError(f"images {list(self.images)} are not a bijection on 0..{n - 1}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __str__(self) -> str:
        return format_cycles(self)

    @property
    def is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles in 1-based notation, each starting at its smallest point."""
        seen = [False] * self.degree
        out: list[tuple[int, ...]] = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = []
            p = start
            while not seen[p]:
                seen[p] = True
                cycle.append(p + 1)
                p = self.images[p]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    @property
    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    @property
    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    def power(self, k: int) -> "Permutation":
        """``self`` applied k times (k may be negative)."""
        base = self if k >= 0 else inverse(self)
        result = Permutation.identity(self.degree)
        for _ in range(abs(k) % self.order):
            result = compose(result, base)
        return result

    def extend(self, degree: int) -> "Permutation":
        """Embed into a larger symmetric group, fixing the new points."""
        if degree < self.degree:
            raise PermutationError(f"cannot embed degree {self.degree} into {degree}")
        return Permutation(self.images + tuple(range(self.degree, degree)))


def from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
    """Build the product of disjoint 1-based cycles; unmentioned points are fixed."""
    images = list(range(degree))
    used: set[int] = set()
    for cycle in cycles:
        for point in cycle:
            if not 1 <= point <= degree:
                raise PermutationError(f"point {point} outside 1..{degree}")
            if point in used:
                raise PermutationError(f"point {point} repeated across cycles")
            used.add(point)
        for a, b in zip(cycle, itertools.chain(cycle[1:], cycle[:1]), strict=True):
            images[a - 1] = b - 1
    return Permutation(tuple(images))


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation such as "(1,2)(3,4,5)"; "()" or "" is the identity."""
    compact = re.sub(r"\s+", "", text)
    if _CYCLE_RE.sub("", compact):
        raise PermutationError(f"malformed cycle notation: {text!r}")
    cycles: list[list[int]] = []
    for body in _CYCLE_RE.findall(compact):
        if not body:
            continue
        try:
            cycles.append([int(tok) for tok in body.split(",")])
        except ValueError as e:
            raise PermutationError(f"malformed cycle notation: {text!r}") from e
    return from_cycles(degree, cycles)


def format_cycles(p: Permutation) -> str:
    """Cycle notation with 1-based points; the identity prints as "()"."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(x) for x in c) + ")" for c in cycles)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply ``a``, then ``b``."""
    if a.degree != b.degree:
        raise PermutationError(f"degree mismatch: {a.degree} vs {b.degree}")
    return Permutation(tuple(b.images[x] for x in a.images))


def inverse(a: Permutation) -> Permutation:
    images = [0] * a.degree
    for i, x in enumerate(a.images):
        images[x] = i
    return Permutation(tuple(images))


def long_cycle(degree: int, start: int = 1) -> Permutation:
    """The cycle (start, start+1, ..., degree)."""
    return from_cycles(degree, [list(range(start, degree + 1))])


def residue_element(n: int, r: int) -> Permutation:
    """Element of the cyclic group of degree n matching residue r: (1,2,...,n)^r."""
    return long_cycle(n).power(r % n) if n > 1 else Permutation.identity(n)


@dataclass(frozen=True)
class GroupElements:
    """Canonically ordered elements of S_n, A_n or the cyclic group <(1,...,n)>."""

    kind: GroupKind
    degree: int
    elements: tuple[Permutation, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i: int) -> Permutation:
        return self.elements[i]

    def __contains__(self, p: object) -> bool:
        return p in self.index_map

    @cached_property
    def index_map(self) -> dict[Permutation, int]:
        return {p: i for i, p in enumerate(self.elements)}

    def index(self, p: Permutation) -> int:
        try:
            return self.index_map[p]
        except KeyError:
            raise InvalidParameterError(f"{p} is not an element of this group") from None


def enumerate_group(
    kind: GroupKind, degree: int, *, max_degree: int | None = None
) -> GroupElements:
    """Enumerate a group in lexicographic order of image sequences (identity first).

    Raises:
        GroupBudgetError: symmetric/alternating degree above the configured budget
    """
    if degree < 1:
        raise InvalidParameterError("degree must be at least 1")
    limit = max_degree if max_degree is not None else settings.max_group_degree
    if kind != "cyclic" and degree > limit:
        raise GroupBudgetError(f"degree {degree} exceeds the group budget of {limit}")

    if kind == "cyclic":
        perms = sorted(residue_element(degree, r) for r in range(degree))
    else:
        perms = [Permutation(p) for p in itertools.permutations(range(degree))]
        if kind == "alternating":
            perms = [p for p in perms if p.is_even]
    logger.debug("Enumerated %s group of degree %d: %d elements", kind, degree, len(perms))
    return GroupElements(kind=kind, degree=degree, elements=tuple(perms))


@dataclass(frozen=True)
class Coset:
    """One coset: a label, its representative and its elements in canonical order."""

    label: str
    representative: Permutation
    elements: tuple[Permutation, ...]


def _stabilizer(ambient: GroupElements) -> list[Permutation]:
    last = ambient.degree - 1
    return [p for p in ambient if p(last) == last]


def _coset(rep: Permutation, subgroup: Sequence[Permutation], side: CosetSide) -> list[Permutation]:
    if side == "right":
        return [compose(h, rep) for h in subgroup]
    return [compose(rep, h) for h in subgroup]


def coset_decompose(
    ambient: GroupElements,
    tau: Permutation,
    side: CosetSide = "right",
    subgroup: SubgroupKind = "stabilizer",
) -> list[Coset]:
    """Partition ``ambient`` into cosets.

    ``subgroup="cyclic"`` uses H = <tau>; cosets are walked from the canonically first
    uncovered element x as x, x*tau, x*tau^2, ... (left) or x, tau*x, ... (right), so the
    position inside a coset is the tau-exponent.

    ``subgroup="stabilizer"`` uses H = stabilizer of the last point; cosets are labelled
    "H", "Htau^1", ... for the powers of tau that give new cosets, and "L" for the remainder.

    Raises:
        InvalidParameterError: tau is not in ambient
    """
    if tau not in ambient:
        raise InvalidParameterError(f"{tau} is not an element of the ambient group")

    covered: set[Permutation] = set()
    cosets: list[Coset] = []

    if subgroup == "cyclic":
        for x in ambient:
            if x in covered:
                continue
            elems = []
            y = x
            for _ in range(tau.order):
                elems.append(y)
                y = compose(y, tau) if side == "left" else compose(tau, y)
            covered.update(elems)
            cosets.append(Coset(label=f"C{len(cosets)}", representative=x, elements=tuple(elems)))
        return cosets

    stab = sorted(_stabilizer(ambient))
    power = Permutation.identity(ambient.degree)
    for i in range(tau.order):
        if power not in covered:
            elems = sorted(_coset(power, stab, side))
            covered.update(elems)
            label = "H" if i == 0 else f"Htau^{i}"
            cosets.append(Coset(label=label, representative=power, elements=tuple(elems)))
        power = compose(power, tau)

    remainder = 0
    for x in ambient:
        if x in covered:
            continue
        elems = sorted(_coset(x, stab, side))
        covered.update(elems)
        label = "L" if remainder == 0 else f"L{remainder + 1}"
        remainder += 1
        cosets.append(Coset(label=label, representative=x, elements=tuple(elems)))
    return cosets
