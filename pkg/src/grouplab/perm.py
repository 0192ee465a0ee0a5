"""Permutations on {1..n} stored as image tables.

Products are read left to right: ``compose(a, b)`` applies ``a`` first and
then ``b``, so ``compose(a, b)(i) == b(a(i))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import CycleParseError, PermutationError, PointRangeError

__all__ = [
    "Permutation",
    "identity",
    "compose",
    "inverse",
    "parse_cycles",
    "format_cycles",
]


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1..degree}; ``images[i - 1]`` is the image of point ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        n = len(images)
        if n == 0:
            raise PermutationError("degree must be at least 1")
        if sorted(images) != list(range(1, n + 1)):
            raise PermutationError(f"not a bijection of 1..{n}: {images}")
        object.__setattr__(self, "images", images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return inverse(self)

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, 1))

    def order(self) -> int:
        from math import lcm

        result = 1
        for cycle in _cycles(self):
            result = lcm(result, len(cycle))
        return result

    def __str__(self):
        return format_cycles(self)


def identity(degree: int) -> Permutation:
    if degree < 1:
        raise PermutationError(f"invalid degree {degree}")
    return Permutation(tuple(range(1, degree + 1)))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply ``a`` then ``b``."""
    if a.degree != b.degree:
        raise PermutationError(f"degree mismatch: {a.degree} vs {b.degree}")
    bi = b.images
    return Permutation(tuple(bi[x - 1] for x in a.images))


def inverse(a: Permutation) -> Permutation:
    inv = [0] * a.degree
    for i, img in enumerate(a.images, 1):
        inv[img - 1] = i
    return Permutation(tuple(inv))


def _cycles(p: Permutation) -> list[list[int]]:
    seen = set()
    cycles = []
    for start in range(1, p.degree + 1):
        if start in seen or p(start) == start:
            continue
        cycle = [start]
        seen.add(start)
        x = p(start)
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = p(x)
        cycles.append(cycle)
    return cycles


def format_cycles(p: Permutation) -> str:
    """Canonical disjoint-cycle string; the identity is ``"()"``."""
    cycles = _cycles(p)
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint cycle notation such as ``"(1 2 4 7)(3 6 8 5)"``.

    Points may be separated by spaces or commas. Points not mentioned are
    fixed. ``"()"`` (or an empty string) is the identity.
    """
    if degree < 1:
        raise PermutationError(f"invalid degree {degree}")
    stripped = text.strip()
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(stripped):
        gap = stripped[pos:m.start()]
        if gap.strip():
            raise CycleParseError(f"unexpected text {gap.strip()!r} in {text!r}")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        try:
            cycles.append([int(tok) for tok in body])
        except ValueError:
            raise CycleParseError(f"non-integer point in {text!r}") from None
    if stripped[pos:].strip():
        raise CycleParseError(f"malformed parentheses in {text!r}")

    images = list(range(1, degree + 1))
    seen: set[int] = set()
    for cycle in cycles:
        for x in cycle:
            if x < 1 or x > degree:
                raise PointRangeError(f"point {x} outside 1..{degree}")
            if x in seen:
                raise CycleParseError(f"repeated point {x} in {text!r}")
            seen.add(x)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a - 1] = b
    return Permutation(tuple(images))
