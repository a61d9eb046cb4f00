"""Permutations, their cycle patterns, and quandle profiles.

A *pattern* is the multiset of cycle lengths of a permutation; it is kept
in grouped form ``((length, multiplicity), ...)`` sorted by length so that
patterns of astronomically large symbolic quandles stay small.

>>> p = Permutation([0, 2, 4, 6, 1, 3, 5])   # x -> 2x mod 7
>>> cycle_decomposition(p)
[(0,), (1, 2, 4), (3, 6, 5)]
>>> pattern(p).lengths
(1, 3, 3)
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import DomainError, ResourceError, StructuralError

DEFAULT_PROFILE_GUARD = 10**6
DEFAULT_EXPAND_GUARD = 10**6


class Permutation:
    """A bijection of ``{0, ..., N-1}`` stored as its image array."""

    __slots__ = ("_images",)

    def __init__(self, images: Sequence[int] | np.ndarray, check: bool = True):
        arr = np.array(images, dtype=np.int64, copy=True).reshape(-1)
        if arr.size == 0:
            raise DomainError("a permutation needs at least one point")
        if check:
            _check_bijection(arr)
        arr.setflags(write=False)
        self._images = arr

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(np.arange(size, dtype=np.int64), check=False)

    @property
    def images(self) -> np.ndarray:
        return self._images

    @property
    def size(self) -> int:
        return int(self._images.shape[0])

    def __len__(self):
        return self.size

    def __call__(self, x: int) -> int:
        if not 0 <= x < self.size:
            raise DomainError(f"point {x} outside [0, {self.size})")
        return int(self._images[x])

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return np.array_equal(self._images, other._images)

    def __hash__(self):
        return hash(self._images.tobytes())

    def __repr__(self):
        if self.size <= 16:
            return f"Permutation({self._images.tolist()})"
        return f"Permutation(<{self.size} points>)"


def _check_bijection(arr: np.ndarray) -> None:
    size = arr.shape[0]
    bad = np.flatnonzero((arr < 0) | (arr >= size))
    if bad.size:
        x = int(bad[0])
        raise StructuralError(f"image of {x} is {int(arr[x])}, outside [0, {size})", witness=(x,))
    order = np.argsort(arr, kind="stable")
    dup = np.flatnonzero(arr[order][1:] == arr[order][:-1])
    if dup.size:
        x1, x2 = int(order[dup[0]]), int(order[dup[0] + 1])
        raise StructuralError(
            f"not a bijection: {x1} and {x2} both map to {int(arr[x1])}", witness=(x1, x2)
        )


@dataclass(frozen=True, order=True)
class Pattern:
    """Sorted multiset of cycle lengths, grouped as ``(length, multiplicity)`` pairs."""

    counts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        lengths = [length for length, _ in self.counts]
        if lengths != sorted(set(lengths)):
            raise DomainError("pattern lengths must be distinct and ascending")
        if any(length < 1 or mult < 1 for length, mult in self.counts):
            raise DomainError("pattern lengths and multiplicities must be positive")

    @classmethod
    def from_lengths(cls, lengths: Iterable[int]) -> "Pattern":
        return cls(tuple(sorted(Counter(int(x) for x in lengths).items())))

    @classmethod
    def from_mapping(cls, mapping) -> "Pattern":
        return cls(tuple(sorted((int(k), int(v)) for k, v in mapping.items() if v)))

    @classmethod
    def _from_histogram(cls, hist: np.ndarray) -> "Pattern":
        nz = np.flatnonzero(hist)
        return cls(tuple((int(i), int(hist[i])) for i in nz))

    @property
    def size(self) -> int:
        """Number of points permuted, i.e. the sum of all lengths."""
        return sum(length * mult for length, mult in self.counts)

    @property
    def num_cycles(self) -> int:
        return sum(mult for _, mult in self.counts)

    def multiplicity(self, length: int) -> int:
        return dict(self.counts).get(length, 0)

    @property
    def lengths(self) -> tuple[int, ...]:
        """The expanded ascending tuple of lengths. Guarded for huge patterns."""
        if self.num_cycles > DEFAULT_EXPAND_GUARD:
            raise ResourceError(f"pattern has {self.num_cycles} cycles; use .counts instead")
        return tuple(length for length, mult in self.counts for _ in range(mult))

    def to_json(self) -> list[int]:
        return list(self.lengths)

    def to_grouped_json(self) -> dict[str, str]:
        return {str(length): str(mult) for length, mult in self.counts}

    def to_text(self) -> str:
        """Grouped ``length^multiplicity`` rendering, e.g. ``1^2 2^3 4^18``."""
        return " ".join(f"{length}^{mult}" for length, mult in self.counts)

    def __str__(self):
        return "{" + ", ".join(f"{length}x{mult}" for length, mult in self.counts) + "}"


@dataclass(frozen=True)
class Profile:
    """Multiset of patterns, one per right translation of a quandle."""

    patterns: tuple[tuple[Pattern, int], ...]
    size: int = field(default=0)

    def __post_init__(self):
        total = sum(mult for _, mult in self.patterns)
        if self.size and total != self.size:
            raise DomainError(f"profile has {total} patterns for a quandle of size {self.size}")
        if not self.size:
            object.__setattr__(self, "size", total)

    @classmethod
    def from_patterns(cls, patterns: Iterable[Pattern]) -> "Profile":
        c = Counter(patterns)
        return cls(tuple(sorted(c.items())))

    @property
    def singleton(self) -> bool:
        return len(self.patterns) == 1

    @property
    def distinct(self) -> tuple[Pattern, ...]:
        return tuple(p for p, _ in self.patterns)

    def to_json(self) -> dict:
        expanded = self.size * max(p.num_cycles for p in self.distinct)
        if expanded > DEFAULT_EXPAND_GUARD:
            raise ResourceError("profile too large to expand; use to_grouped_json()")
        rows = [p.to_json() for p, mult in self.patterns for _ in range(mult)]
        return {"patterns": rows, "singleton": self.singleton}

    def to_grouped_json(self) -> dict:
        return {
            "patterns": [
                {"pattern": p.to_grouped_json(), "multiplicity": str(mult)}
                for p, mult in self.patterns
            ],
            "singleton": self.singleton,
        }


def cycle_decomposition(p: Permutation) -> list[tuple[int, ...]]:
    """Disjoint cycles, each starting at its minimum, sorted by minimum."""
    images = p.images.tolist()
    seen = [False] * len(images)
    cycles = []
    for start in range(len(images)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = images[x]
        cycles.append(tuple(cyc))
    return cycles


def pattern(p: Permutation) -> Pattern:
    return Pattern._from_histogram(_kernels.cycle_length_histogram(p.images))


def cycle_lengths(p: Permutation) -> np.ndarray:
    """Array whose entry x is the length of the cycle through x."""
    return _kernels.element_cycle_lengths(p.images)


def iterate(p: Permutation, l: int, x: int) -> int:
    """Apply ``p`` to ``x`` exactly ``l`` times.

    Stops after one trip around the cycle of ``x`` and finishes with ``l``
    reduced modulo the cycle length, so huge ``l`` cost O(cycle length).
    """
    if l < 0:
        raise DomainError("iteration count must be non-negative")
    if not 0 <= x < p.size:
        raise DomainError(f"point {x} outside [0, {p.size})")
    images = p.images
    y = x
    step = 0
    while step < l:
        y = int(images[y])
        step += 1
        if y == x:
            for _ in range((l - step) % step):
                y = int(images[y])
            return y
    return y


def profile(q, guard: int = DEFAULT_PROFILE_GUARD) -> Profile:
    """Enumerate the pattern of every right translation of ``q``.

    ``q`` is any quandle from :mod:`eulerquandle.quandle`. Symbolic Euler-family
    quandles are refused; their profile comes from ``alexander.profile_formula``.
    """
    size = getattr(q, "size", None)
    if size is None or not isinstance(size, int):
        raise DomainError("profile needs a finite, materialised quandle")
    if size > guard:
        raise ResourceError(
            f"quandle of size {size} exceeds the enumeration guard {guard}; "
            "use alexander.profile_formula for Euler-family quandles"
        )
    affine = getattr(q, "affine_parameter", None)
    if affine is not None:
        ref, others = _kernels.affine_translation_scan(size, affine)
        base = Pattern._from_histogram(ref)
        counts = Counter({base: size - len(others)})
        for b in others:
            counts[pattern(q.right_translation(int(b)))] += 1
        return Profile(tuple(sorted(counts.items())), size)
    return Profile.from_patterns(pattern(q.right_translation(b)) for b in range(size))
