"""Orbits under right multiplication, connectedness, and the disconnectedness certificate.

The orbit of ``x`` is the closure of ``{x}`` under every right translation.
On a finite carrier each ``R_b`` has finite order, so ``R_b**-1`` is a
positive power of ``R_b`` and the closure already contains everything
reachable through inverse translations; reachability is an equivalence
relation and ``orbit(q, 0)`` alone decides connectedness.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .alexander import DEFAULT_ENUMERATION_GUARD, EulerFamilyQuandle
from .errors import ConsistencyError, DomainError, ResourceError


@dataclass(frozen=True)
class Orbit:
    seed: int
    members: frozenset[int]

    def __contains__(self, x):
        return x in self.members

    def __len__(self):
        return len(self.members)

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def to_json(self) -> list[str]:
        return [str(x) for x in self.sorted()]


def _materialise(q, guard):
    if isinstance(q, EulerFamilyQuandle):
        return q.as_quandle(guard)
    if q.size > guard:
        raise ResourceError(f"quandle of size {q.size} exceeds the enumeration guard {guard}")
    return q


def _closure_mask(q, x):
    reached = np.zeros(q.size, dtype=bool)
    reached[x] = True
    frontier = [x]
    hit = np.zeros(q.size, dtype=bool)
    while frontier:
        for y in frontier:
            hit[q.row(y)] = True
        new = np.flatnonzero(hit & ~reached)
        reached[new] = True
        frontier = new.tolist()
    return reached


def orbit(q, x: int, guard: int = DEFAULT_ENUMERATION_GUARD) -> Orbit:
    """Breadth-first closure of ``{x}`` under ``y -> y*b`` for all b."""
    q = _materialise(q, guard)
    x = q._check(x)
    return Orbit(x, frozenset(np.flatnonzero(_closure_mask(q, x)).tolist()))


def orbits(q, guard: int = DEFAULT_ENUMERATION_GUARD) -> list[Orbit]:
    """Partition of the carrier into orbits, ordered by smallest member."""
    q = _materialise(q, guard)
    covered = np.zeros(q.size, dtype=bool)
    out = []
    for x in range(q.size):
        if covered[x]:
            continue
        mask = _closure_mask(q, x)
        if (covered & mask).any():
            raise ConsistencyError(f"orbit of {x} overlaps an earlier orbit")
        covered |= mask
        out.append(Orbit(x, frozenset(np.flatnonzero(mask).tolist())))
    return out


def is_connected(q, guard: int = DEFAULT_ENUMERATION_GUARD) -> bool:
    q = _materialise(q, guard)
    return bool(_closure_mask(q, 0).all())


def zero_product_formula(q: EulerFamilyQuandle, bs) -> int:
    """``(...((0*b_1)*b_2)...)*b_l = -(n-1) * sum n**(l-t) b_t  (mod N)``."""
    bs = list(bs)
    if not bs:
        raise DomainError("need at least one factor")
    acc = 0
    for b in bs:
        q._check(b)
        acc = (acc * q.n + b) % q.modulus
    return (-(q.n - 1) * acc) % q.modulus


def zero_product_direct(q: EulerFamilyQuandle, bs) -> int:
    """Left-to-right evaluation of the same product through ``q.op``."""
    x = 0
    for b in bs:
        x = q.op(x, b)
    return x


@dataclass(frozen=True)
class Certificate:
    """Evidence about connectedness of an Euler-family quandle.

    ``decided`` is False when no analytic argument applies and the carrier is
    too large to search; ``connected`` is then None.
    """

    quandle: EulerFamilyQuandle
    decided: bool
    connected: bool | None
    witness: int | None
    reason: str
    method: str

    def to_json(self) -> dict:
        return {
            "quandle": self.quandle.to_json(),
            "decided": self.decided,
            "connected": self.connected,
            "witness": None if self.witness is None else str(self.witness),
            "reason": self.reason,
            "method": self.method,
        }


def zero_orbit_certificate(q: EulerFamilyQuandle, guard: int = DEFAULT_ENUMERATION_GUARD) -> Certificate:
    """Show 1 is unreachable from 0 when ``n >= 3``; enumerate for ``n = 2``.

    Every product starting at 0 is a multiple of ``n - 1``. Since ``n - 1``
    divides ``N`` that property survives reduction mod ``N``, and ``1`` is not a
    multiple of ``n - 1`` once ``n >= 3``.
    """
    n, modulus = q.n, q.modulus
    if n >= 3:
        if modulus % (n - 1):
            raise ConsistencyError(f"{n - 1} does not divide {modulus}")
        reason = (f"every product from 0 is a multiple of n-1 = {n - 1} modulo {modulus}, "
                  f"(n-1) | modulus, and 0 < 1 < n-1")
        return Certificate(q, True, False, 1, reason, "analytic")
    if modulus > guard:
        return Certificate(q, False, None, None,
                           "n = 2: every residue is a multiple of n-1 = 1, so no analytic obstruction; "
                           f"modulus {modulus} exceeds the enumeration guard {guard}", "undecided")
    reached = _closure_mask(q.as_quandle(guard), 0)
    if reached.all():
        return Certificate(q, True, True, None,
                           f"n = 2: the orbit of 0 is all of Z/{modulus}", "enumeration")
    w = int(np.flatnonzero(~reached)[0])
    return Certificate(q, True, False, w, f"n = 2: {w} is not in the orbit of 0", "enumeration")
