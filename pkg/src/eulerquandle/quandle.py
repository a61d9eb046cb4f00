"""Finite quandles: explicit tables, closed-form rules, axiom checks.

Elements are the canonical residues ``0 .. N-1``. Two concrete carriers
share one interface:

* :class:`TableQuandle` holds the ``N x N`` operation table (``N <= 2**16``).
* :class:`RuleQuandle` evaluates a total function ``(a, b) -> a*b`` on demand;
  :class:`LinearAlexanderQuandle` is the vectorised special case
  ``a*b = m*a + (1-m)*b mod N``.

Validated constructions raise :class:`~eulerquandle.errors.AxiomError`
when an axiom fails. ``validate=False`` builds an unchecked structure,
which is how near-quandles are produced for testing.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Callable, NamedTuple

import numpy as np

from .cycles import Permutation
from .errors import AxiomError, DomainError, ResourceError, StructuralError

MAX_TABLE_SIZE = 2**16
DEFAULT_MAX_WITNESSES = 16
DEFAULT_MAX_TRIPLES = 2**27
_VECTOR_LIMIT = 2**31  # keeps m*x below 2**62 in int64 arithmetic


class Quandle:
    """Common interface. Subclasses supply ``_op`` and may vectorise ``column``/``row``."""

    size: int
    validated: bool = False

    def _op(self, a: int, b: int) -> int:
        raise NotImplementedError

    def _check(self, x: int) -> int:
        if not isinstance(x, (int, np.integer)) or isinstance(x, bool):
            raise DomainError(f"element {x!r} is not an integer")
        if not 0 <= x < self.size:
            raise DomainError(f"element {x} outside [0, {self.size})")
        return int(x)

    def op(self, a: int, b: int) -> int:
        return self._op(self._check(a), self._check(b))

    def column(self, b: int) -> np.ndarray:
        """Images ``x*b`` for all x (unchecked for bijectivity)."""
        return np.fromiter((self._op(x, b) for x in range(self.size)), np.int64, self.size)

    def row(self, a: int) -> np.ndarray:
        """Products ``a*b`` for all b."""
        return np.fromiter((self._op(a, b) for b in range(self.size)), np.int64, self.size)

    def table(self) -> np.ndarray:
        if self.size > MAX_TABLE_SIZE:
            raise ResourceError(f"refusing to tabulate a quandle of size {self.size}")
        return np.stack([self.row(a) for a in range(self.size)])

    def right_translation(self, b: int, check: bool = True) -> Permutation:
        b = self._check(b)
        return Permutation(self.column(b), check=check)

    def __len__(self):
        return self.size


class TableQuandle(Quandle):
    def __init__(self, table, validate: bool = True, max_witnesses: int = DEFAULT_MAX_WITNESSES):
        arr = np.array(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise DomainError("operation table must be a non-empty square array")
        size = arr.shape[0]
        if size > MAX_TABLE_SIZE:
            raise ResourceError(f"table size {size} exceeds {MAX_TABLE_SIZE}")
        if arr.min() < 0 or arr.max() >= size:
            raise DomainError(f"table entries must lie in [0, {size})")
        arr.setflags(write=False)
        self._table = arr
        self.size = int(size)
        if validate:
            report = validate_axioms(self, max_witnesses=max_witnesses)
            if not report.ok:
                raise AxiomError(f"not a quandle: {report.violations[0]}", report)
        self.validated = validate

    @classmethod
    def unchecked(cls, table) -> "TableQuandle":
        return cls(table, validate=False)

    def _op(self, a, b):
        return int(self._table[a, b])

    def column(self, b):
        return self._table[:, b].copy()

    def row(self, a):
        return self._table[a].copy()

    def table(self):
        return self._table

    def to_json(self) -> dict:
        return {"size": self.size, "table": self._table.tolist()}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj: dict, validate: bool = True) -> "TableQuandle":
        if set(obj) != {"size", "table"}:
            raise DomainError('table quandle JSON needs exactly the keys "size" and "table"')
        size = obj["size"]
        table = obj["table"]
        if not isinstance(size, int) or size < 1:
            raise DomainError("size must be a positive integer")
        if len(table) != size or any(len(row) != size for row in table):
            raise DomainError(f"table must be {size}x{size}")
        return cls(table, validate=validate)

    @classmethod
    def loads(cls, text: str, validate: bool = True) -> "TableQuandle":
        return cls.from_json(json.loads(text), validate=validate)

    def __repr__(self):
        return f"TableQuandle(size={self.size})"


class RuleQuandle(Quandle):
    """Quandle given by a total rule; axioms are checked only on request."""

    def __init__(self, size: int, rule: Callable[[int, int], int], validate: bool = False):
        if size < 1:
            raise DomainError("size must be positive")
        self.size = int(size)
        self._rule = rule
        if validate:
            report = validate_axioms(self)
            if not report.ok:
                raise AxiomError(f"not a quandle: {report.violations[0]}", report)
        self.validated = validate

    def _op(self, a, b):
        return self._rule(a, b) % self.size


class LinearAlexanderQuandle(RuleQuandle):
    """``Z/N`` with ``a*b = m*a + (1-m)*b``, ``m`` a unit mod N."""

    def __init__(self, modulus: int, parameter: int):
        if modulus < 1:
            raise DomainError("modulus must be positive")
        m = parameter % modulus
        if gcd(m, modulus) != 1:
            raise DomainError(f"parameter {parameter} is not invertible modulo {modulus}")
        self.size = int(modulus)
        self.parameter = m
        self._shift = (1 - m) % modulus
        # a quandle for every unit m; tests confirm this exhaustively on small moduli
        self.validated = True

    @property
    def affine_parameter(self):
        return self.parameter if self.size < _VECTOR_LIMIT else None

    def _op(self, a, b):
        return (self.parameter * a + self._shift * b) % self.size

    def column(self, b):
        if self.size >= _VECTOR_LIMIT:
            return super().column(b)
        x = np.arange(self.size, dtype=np.int64)
        return (self.parameter * x + self._shift * b) % self.size

    def row(self, a):
        if self.size >= _VECTOR_LIMIT:
            return super().row(a)
        y = np.arange(self.size, dtype=np.int64)
        return (self.parameter * a + self._shift * y) % self.size

    def __repr__(self):
        return f"LinearAlexanderQuandle(modulus={self.size}, parameter={self.parameter})"


class Violation(NamedTuple):
    axiom: str
    elements: tuple[int, ...]


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of :func:`validate_axioms`.

    Witness shapes: idempotency ``(a,)`` with ``a*a != a``; right invertibility
    ``(x1, x2, b)`` with ``x1*b == x2*b``; self-distributivity ``(a, b, c)``.
    """

    idempotency_ok: bool
    right_invertibility_ok: bool
    self_distributivity_ok: bool
    violations: tuple[Violation, ...] = ()
    truncated: bool = False

    @property
    def ok(self) -> bool:
        return self.idempotency_ok and self.right_invertibility_ok and self.self_distributivity_ok

    def to_dict(self) -> dict:
        return {
            "idempotency_ok": self.idempotency_ok,
            "right_invertibility_ok": self.right_invertibility_ok,
            "self_distributivity_ok": self.self_distributivity_ok,
            "violations": [{"axiom": v.axiom, "elements": list(v.elements)} for v in self.violations],
            "truncated": self.truncated,
        }


def validate_axioms(
    q: Quandle,
    max_witnesses: int = DEFAULT_MAX_WITNESSES,
    max_triples: int = DEFAULT_MAX_TRIPLES,
) -> AxiomReport:
    """Check idempotency, right invertibility and self-distributivity exhaustively.

    Witnesses are listed in lexicographic order, at most ``max_witnesses``
    per axiom. Fails with ResourceError if ``N**3 > max_triples``.
    """
    if max_witnesses < 1:
        raise DomainError("max_witnesses must be at least 1")
    n = q.size
    if n**3 > max_triples:
        raise ResourceError(f"{n}**3 triples exceed the validation budget {max_triples}")
    t = np.asarray(q.table())
    idx = np.arange(n)
    truncated = False
    violations: list[Violation] = []

    bad = np.flatnonzero(t[idx, idx] != idx)
    truncated |= bad.size > max_witnesses
    violations += [Violation("idempotency", (int(a),)) for a in bad[:max_witnesses]]
    idem_ok = bad.size == 0

    inv_found = []
    inv_total = 0
    for x1 in range(n - 1):
        hits = np.argwhere(t[x1 + 1:] == t[x1])  # rows are x2 - x1 - 1
        inv_total += len(hits)
        for d, b in hits[: max_witnesses - len(inv_found)]:
            inv_found.append((x1, x1 + 1 + int(d), int(b)))
        if inv_total > max_witnesses:
            break
    truncated |= inv_total > max_witnesses
    violations += [Violation("right_invertibility", w) for w in inv_found]
    inv_ok = inv_total == 0

    sd_found = []
    sd_total = 0
    for a in range(n):
        ra = t[a]
        lhs = t[ra]  # lhs[b, c] = (a*b)*c
        rhs = t[np.broadcast_to(ra, (n, n)), t]  # rhs[b, c] = (a*c)*(b*c)
        bc = np.argwhere(lhs != rhs)
        sd_total += len(bc)
        for b, c in bc[: max_witnesses - len(sd_found)]:
            sd_found.append((a, int(b), int(c)))
        if len(sd_found) >= max_witnesses and sd_total > max_witnesses:
            break
    truncated |= sd_total > max_witnesses
    violations += [Violation("self_distributivity", w) for w in sd_found]
    sd_ok = sd_total == 0

    return AxiomReport(idem_ok, inv_ok, sd_ok, tuple(violations), truncated)


def op(q: Quandle, a: int, b: int) -> int:
    return q.op(a, b)


def right_translation(q: Quandle, b: int, check: bool = True) -> Permutation:
    """``R_b : x -> x*b``. Raises StructuralError naming a collision if not bijective."""
    return q.right_translation(b, check=check)


def linear_alexander(modulus: int, parameter: int) -> LinearAlexanderQuandle:
    return LinearAlexanderQuandle(modulus, parameter)


def _group_tables(group_size, mul, inv):
    n = group_size
    m = np.array([[mul(a, b) for b in range(n)] for a in range(n)], dtype=np.int64)
    iv = np.array([inv(a) for a in range(n)], dtype=np.int64)
    bad = np.argwhere((m < 0) | (m >= n))
    if bad.size:
        a, b = map(int, bad[0])
        raise StructuralError(f"mul({a}, {b}) = {m[a, b]} is outside the group", witness=(a, b))
    bad = np.flatnonzero((iv < 0) | (iv >= n))
    if bad.size:
        a = int(bad[0])
        raise StructuralError(f"inv({a}) = {iv[a]} is outside the group", witness=(a,))
    return m, iv


def conjugation_quandle(group_size: int, mul: Callable, inv: Callable) -> TableQuandle:
    """Conjugation quandle ``a*b = b a b^-1`` of a finite group on ``[0, group_size)``."""
    if group_size < 1:
        raise DomainError("group_size must be positive")
    n = group_size
    m, iv = _group_tables(n, mul, inv)
    idx = np.arange(n)
    for a in range(n):
        # (a*b)*c vs a*(b*c), all b, c
        diff = np.argwhere(m[m[a]] != m[a][m])
        if diff.size:
            b, c = map(int, diff[0])
            raise StructuralError(f"mul is not associative at {(a, b, c)}", witness=(a, b, c))
    units = [e for e in range(n) if np.array_equal(m[e], idx) and np.array_equal(m[:, e], idx)]
    if not units:
        raise StructuralError("mul has no two-sided identity", witness=())
    e = units[0]
    bad = np.flatnonzero((m[idx, iv] != e) | (m[iv, idx] != e))
    if bad.size:
        a = int(bad[0])
        raise StructuralError(f"inv({a}) = {iv[a]} is not an inverse of {a}", witness=(a,))
    # table[a, b] = mul(mul(b, a), inv(b))
    table = m[m.T, iv[None, :]]
    return TableQuandle(table)
