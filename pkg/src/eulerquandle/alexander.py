"""The linear Alexander quandle of order ``n**(p**k) - 1`` and parameter ``n``.

On ``Z/N`` with ``N = n**(p**k) - 1`` the operation is ``a*b = n*a + (1-n)*b``.
Everything here is symbolic: the modulus is an exact Python integer and
nothing is enumerated unless a guarded ``*_enumerate`` routine is asked to.

>>> q = euler_family(3, 2, 2)
>>> q.modulus
80
>>> str(profile_formula(q))
'{1x2, 2x3, 4x18}'
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import cycles
from .cycles import Pattern
from .errors import ConsistencyError, DomainError, HypothesisViolation, ResourceError
from .numtheory import is_prime
from .quandle import LinearAlexanderQuandle

DEFAULT_ENUMERATION_GUARD = 10**6
MAX_MODULUS_BITS = 2**22

FORMULA = "formula"
ENUMERATION = "enumeration"


@dataclass(frozen=True)
class EulerFamilyQuandle:
    n: int
    p: int
    k: int

    def __post_init__(self):
        n, p, k = self.n, self.p, self.k
        if n < 2:
            raise DomainError(f"n = {n} gives a degenerate modulus; n must be at least 2")
        if k < 1:
            raise DomainError("k must be a positive integer")
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        if math.gcd(n, p) != 1:
            raise HypothesisViolation(f"gcd({n}, {p}) = {math.gcd(n, p)}; n must be coprime to p")
        if p**k * n.bit_length() > MAX_MODULUS_BITS:
            raise ResourceError(f"modulus {n}^({p}^{k}) - 1 is too large to hold exactly")
        modulus = n ** (p**k) - 1
        # n * n**(p**k - 1) == 1, so n is a unit
        if (n * pow(n, p**k - 1, modulus)) % modulus != 1 % modulus:
            raise ConsistencyError("n is not invertible modulo n**(p**k) - 1")
        object.__setattr__(self, "_modulus", modulus)

    @property
    def modulus(self) -> int:
        return self._modulus

    @property
    def size(self) -> int:
        return self._modulus

    @property
    def period(self) -> int:
        return self.p**self.k

    def _check(self, x):
        if not 0 <= x < self._modulus:
            raise DomainError(f"element {x} outside [0, {self._modulus})")
        return x

    def op(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        return (self.n * a + (1 - self.n) * b) % self._modulus

    def as_quandle(self, guard: int = DEFAULT_ENUMERATION_GUARD) -> LinearAlexanderQuandle:
        """Materialise as a rule quandle on ``Z/N``; refused above ``guard``."""
        if self._modulus > guard:
            raise ResourceError(f"modulus {self._modulus} exceeds the enumeration guard {guard}")
        return LinearAlexanderQuandle(self._modulus, self.n)

    def to_json(self) -> dict:
        return {"n": self.n, "p": self.p, "k": self.k, "modulus": str(self._modulus)}

    @classmethod
    def from_json(cls, obj: dict) -> "EulerFamilyQuandle":
        q = cls(int(obj["n"]), int(obj["p"]), int(obj["k"]))
        if "modulus" in obj and int(obj["modulus"]) != q.modulus:
            raise DomainError(f"modulus {obj['modulus']} does not match n**(p**k) - 1")
        return q


@dataclass(frozen=True)
class ProperSolutionCount:
    level: int
    count: int
    method: str

    def to_dict(self) -> dict:
        return {"level": self.level, "count": str(self.count), "method": self.method}


def euler_family(n: int, p: int, k: int) -> EulerFamilyQuandle:
    return EulerFamilyQuandle(n, p, k)


def translate_power(q: EulerFamilyQuandle, a: int, b: int, l: int) -> int:
    """``R_b**l (a) = n**l a - (n**l - 1) b  (mod N)``."""
    q._check(a)
    q._check(b)
    if l < 0:
        raise DomainError("l must be non-negative")
    nl = pow(q.n, l, q.modulus)
    return (nl * a - (nl - 1) * b) % q.modulus


def cycle_length_of(q: EulerFamilyQuandle, a: int, b: int) -> int:
    """Length of the cycle of ``R_b`` through ``a``; one of ``1, p, ..., p**k``."""
    for i in range(q.k + 1):
        if translate_power(q, a, b, q.p**i) == a:
            return q.p**i
    raise ConsistencyError(f"R_{b}^(p^k) does not fix {a}")


def _check_level(q, i):
    if not 0 <= i <= q.k:
        raise DomainError(f"level {i} outside [0, {q.k}]")


def proper_count_formula(q: EulerFamilyQuandle, i: int) -> ProperSolutionCount:
    """``n - 1`` at level 0, ``n**(p**i) - n**(p**(i-1))`` above."""
    _check_level(q, i)
    if i == 0:
        count = q.n - 1
    else:
        count = q.n ** (q.p**i) - q.n ** (q.p ** (i - 1))
    return ProperSolutionCount(i, count, FORMULA)


def _translation_histogram(q, b, guard):
    lq = q.as_quandle(guard)
    q._check(b)
    perm = lq.right_translation(b)
    return cycles.pattern(perm)


def proper_counts_enumerate(q: EulerFamilyQuandle, b: int,
                            guard: int = DEFAULT_ENUMERATION_GUARD) -> list[ProperSolutionCount]:
    """Counts for every level at once, from one walk of ``R_b``'s cycles.

    Raises ConsistencyError if some cycle length is not a power of p up to p**k.
    """
    pat = _translation_histogram(q, b, guard)
    levels = {q.p**i: i for i in range(q.k + 1)}
    stray = [length for length, _ in pat.counts if length not in levels]
    if stray:
        raise ConsistencyError(f"R_{b} has cycles of length {stray}, not powers of {q.p}")
    return [ProperSolutionCount(i, q.p**i * pat.multiplicity(q.p**i), ENUMERATION)
            for i in range(q.k + 1)]


def proper_count_enumerate(q: EulerFamilyQuandle, b: int, i: int,
                           guard: int = DEFAULT_ENUMERATION_GUARD) -> ProperSolutionCount:
    """Number of x whose ``R_b``-cycle has length exactly ``p**i``, by walking cycles."""
    _check_level(q, i)
    pat = _translation_histogram(q, b, guard)
    length = q.p**i
    return ProperSolutionCount(i, length * pat.multiplicity(length), ENUMERATION)


def solutions_of_level(q: EulerFamilyQuandle, b: int, i: int,
                       guard: int = DEFAULT_ENUMERATION_GUARD) -> list[int]:
    """All solutions of ``R_b**(p**i)(x) = x``: ``b + j*S`` for ``0 <= j < n**(p**i) - 1``.

    ``S = N / (n**(p**i) - 1)``. These include the solutions of lower levels.
    """
    _check_level(q, i)
    q._check(b)
    count = q.n ** (q.p**i) - 1
    if count > guard:
        raise ResourceError(f"{count} solutions exceed the output guard {guard}")
    stride, rem = divmod(q.modulus, count)
    if rem:
        raise ConsistencyError(f"n^(p^{i}) - 1 does not divide the modulus")
    return [(b + j * stride) % q.modulus for j in range(count)]


def profile_formula(q: EulerFamilyQuandle) -> Pattern:
    """The common pattern of every right translation, from the proper counts."""
    counts = {1: q.n - 1}
    for i in range(1, q.k + 1):
        length = q.p**i
        mult, rem = divmod(proper_count_formula(q, i).count, length)
        if rem:
            raise ConsistencyError(f"level {i} count is not a multiple of {length}")
        counts[length] = mult
    pat = Pattern.from_mapping(counts)
    if pat.size != q.modulus:
        raise ConsistencyError("cycle lengths do not add up to the modulus")
    return pat
