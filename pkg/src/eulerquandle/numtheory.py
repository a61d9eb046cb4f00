"""Integer arithmetic and the Euler-theorem verifiers.

Two independent routes are provided for ``m | n**phi(m) - 1``:

* the *quandle route* (:func:`verify_prime_power`, :func:`verify_euler`),
  which takes the exponent ``prod(p**k - p**(k-1))`` straight from the
  factorisation of ``m`` and composes prime-power results with
  ``(x**r - 1) | (x**(r*s) - 1)``;
* the *classical oracle* (:func:`classical_units_oracle`), which lists the
  reduced residues mod ``m`` and uses the product argument. It never calls
  :func:`totient` or :func:`modpow`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import ConsistencyError, DomainError, HypothesisViolation, ResourceError

DEFAULT_FACTOR_GUARD = 2**63 - 1
DEFAULT_ORACLE_GUARD = 10**6
DEFAULT_DIVIDEND_BITS = 4096

QUANDLE_ROUTE = "quandle-route"
CLASSICAL_ORACLE = "classical-oracle"

# deterministic for every n < 3.3 * 10**24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def modpow(base: int, exp: int, modulus: int) -> int:
    """``base**exp mod modulus`` by square-and-multiply (the builtin three-argument pow)."""
    if modulus == 0:
        raise DomainError("modulus must be nonzero")
    if modulus < 0:
        raise DomainError("modulus must be positive")
    if exp < 0:
        raise DomainError("exponent must be non-negative")
    return pow(base, exp, modulus)


def is_prime(n: int, allow_trial_division: bool = False) -> bool:
    """Deterministic Miller-Rabin below 2**64.

    Larger inputs need ``allow_trial_division=True`` and then fall back to
    trial division, which is only sensible for modest sizes.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n >= 2**64:
        if not allow_trial_division:
            raise ResourceError(f"{n} is beyond the 64-bit primality range")
        return _trial_is_prime(n)
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _trial_is_prime(n):
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Factorization:
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        primes = [p for p, _ in self.pairs]
        if primes != sorted(set(primes)) or any(k < 1 for _, k in self.pairs):
            raise DomainError("factorisation must have increasing primes and positive exponents")

    @property
    def value(self) -> int:
        out = 1
        for p, k in self.pairs:
            out *= p**k
        return out

    def prime_powers(self) -> list[int]:
        return [p**k for p, k in self.pairs]

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)


@lru_cache(maxsize=4096)
def factorize(m: int, guard: int = DEFAULT_FACTOR_GUARD) -> Factorization:
    """Trial division up to sqrt(m)."""
    if m < 1:
        raise DomainError("can only factorise positive integers")
    if m > guard:
        raise ResourceError(f"{m} exceeds the factorisation guard {guard}")
    pairs = []
    rest = m
    for p in (2, 3):
        k = 0
        while rest % p == 0:
            rest //= p
            k += 1
        if k:
            pairs.append((p, k))
    f = 5
    step = 2
    while f * f <= rest:
        k = 0
        while rest % f == 0:
            rest //= f
            k += 1
        if k:
            pairs.append((f, k))
        f += step
        step = 6 - step
    if rest > 1:
        pairs.append((rest, 1))
    return Factorization(tuple(pairs))


def prime_power_totient(p: int, k: int) -> int:
    return p**k - p ** (k - 1)


def totient(m: int, guard: int = DEFAULT_FACTOR_GUARD) -> int:
    """``prod(p**k - p**(k-1))`` over the factorisation; never counts coprimes."""
    out = 1
    for p, k in factorize(m, guard):
        out *= prime_power_totient(p, k)
    return out


def divisors(m: int) -> list[int]:
    out = [1]
    for p, k in factorize(m):
        out = [d * p**e for d in out for e in range(k + 1)]
    return sorted(out)


def multiplicative_order(n: int, m: int) -> int:
    """Least ``l >= 1`` with ``n**l == 1 (mod m)``, searched among divisors of totient(m)."""
    if m < 2:
        raise DomainError("modulus must be at least 2")
    if math.gcd(n, m) != 1:
        raise DomainError(f"{n} is not a unit modulo {m}")
    for d in divisors(totient(m)):
        if pow(n, d, m) == 1:
            return d
    raise ConsistencyError(f"no divisor of totient({m}) is the order of {n}")


def power_difference_divides(base: int, r: int, s: int) -> bool:
    """Exact check of ``(base**r - 1) | (base**(r*s) - 1)``."""
    if r < 1 or s < 1:
        raise DomainError("r and s must be positive")
    small = base**r - 1
    big = base ** (r * s) - 1
    if small == 0:
        return big == 0
    return big % small == 0


@dataclass(frozen=True)
class VerificationReport:
    """Divisibility claim ``divisor | base**exponent - 1`` and its outcome.

    ``dividend`` and ``quotient`` are only materialised when the dividend has
    at most ``DEFAULT_DIVIDEND_BITS`` bits (or when forced).
    """

    claim: str
    holds: bool
    divisor: int
    base: int
    exponent: int
    method: str
    dividend: int | None = None
    quotient: int | None = None
    steps: tuple["VerificationReport", ...] = field(default=())

    def __post_init__(self):
        if self.holds and self.quotient is not None and self.divisor * self.quotient != self.dividend:
            raise ConsistencyError(f"witness quotient does not reproduce the dividend for {self.claim}")

    def to_dict(self) -> dict:
        out = {
            "claim": self.claim,
            "holds": self.holds,
            "divisor": str(self.divisor),
            "base": str(self.base),
            "exponent": str(self.exponent),
            "dividend": None if self.dividend is None else str(self.dividend),
            "quotient": None if self.quotient is None else str(self.quotient),
            "method": self.method,
        }
        if self.steps:
            out["steps"] = [s.to_dict() for s in self.steps]
        return out


def _witness(base, exponent, divisor, holds, max_bits):
    # dividend bit length is about exponent * log2(base)
    if base <= 1:
        dividend = base**exponent - 1
    elif exponent * base.bit_length() <= max_bits:
        dividend = base**exponent - 1
    else:
        return None, None
    if not holds:
        return dividend, None
    q, r = divmod(dividend, divisor)
    if r:
        raise ConsistencyError(f"{divisor} reported to divide {base}^{exponent}-1 but leaves {r}")
    return dividend, q


def _check_prime_power_hypotheses(n, p, k):
    if n < 1:
        raise DomainError("n must be a positive integer")
    if k < 1:
        raise DomainError("k must be a positive integer")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if math.gcd(n, p) != 1:
        raise HypothesisViolation(f"gcd({n}, {p}) = {math.gcd(n, p)}; n must be coprime to p")


def verify_prime_power(n: int, p: int, k: int, max_dividend_bits: int = DEFAULT_DIVIDEND_BITS) -> VerificationReport:
    """Check ``p**k | n**(p**k - p**(k-1)) - 1`` along the cycle-counting argument.

    The level-k proper-solution count ``n**(p**k) - n**(p**(k-1))`` must be a
    multiple of ``p**k`` (it is a union of ``p**k``-cycles); cancelling the unit
    ``n**(p**(k-1))`` then gives the claim. Both steps are checked modulo ``p**k``.
    """
    _check_prime_power_hypotheses(n, p, k)
    pk = p**k
    e = prime_power_totient(p, k)
    count_residue = (pow(n, pk, pk) - pow(n, p ** (k - 1), pk)) % pk
    cancelled = pow(n, e, pk) == 1 % pk
    if (count_residue == 0) != cancelled:
        raise ConsistencyError(f"cycle count and cancelled form disagree for {(n, p, k)}")
    dividend, quotient = _witness(n, e, pk, cancelled, max_dividend_bits)
    return VerificationReport(
        claim=f"{p}^{k} | {n}^{e} - 1",
        holds=cancelled,
        divisor=pk,
        base=n,
        exponent=e,
        method=QUANDLE_ROUTE,
        dividend=dividend,
        quotient=quotient,
    )


def verify_euler(n: int, m: int, max_dividend_bits: int = DEFAULT_DIVIDEND_BITS) -> VerificationReport:
    """Check ``m | n**phi(m) - 1`` by composing prime-power results.

    For each ``p**k || m`` with ``r = p**k - p**(k-1)`` and ``s = phi(m)/r``:
    ``p**k | n**r - 1 | n**(r*s) - 1``. Distinct primes then combine. The
    direct residue ``n**phi(m) mod m`` must agree.
    """
    if m < 1 or n < 1:
        raise DomainError("n and m must be positive integers")
    if math.gcd(n, m) != 1:
        raise HypothesisViolation(f"gcd({n}, {m}) = {math.gcd(n, m)}; n must be coprime to m")
    fac = factorize(m)
    phi = 1
    for p, k in fac:
        phi *= prime_power_totient(p, k)
    steps = []
    composed = True
    for p, k in fac:
        step = verify_prime_power(n, p, k, max_dividend_bits)
        r = step.exponent
        # (n^r - 1) | (n^(r s) - 1), reduced mod p^k: n^r == 1 forces n^(r s) == 1
        lifted = step.holds and pow(pow(n, r, p**k), phi // r, p**k) == 1 % p**k
        composed &= lifted
        steps.append(step)
    direct = pow(n, phi, m) == 1 % m
    if composed != direct:
        raise ConsistencyError(f"prime-power composition and direct residue disagree for {(n, m)}")
    dividend, quotient = _witness(n, phi, m, direct, max_dividend_bits)
    return VerificationReport(
        claim=f"{m} | {n}^{phi} - 1",
        holds=direct,
        divisor=m,
        base=n,
        exponent=phi,
        method=QUANDLE_ROUTE,
        dividend=dividend,
        quotient=quotient,
        steps=tuple(steps),
    )


@lru_cache(maxsize=4096)
def _reduced_residues(m: int) -> np.ndarray:
    r = np.arange(1, m, dtype=np.int64) if m > 1 else np.array([0], dtype=np.int64)
    if m > 1:
        r = r[np.gcd(r, m) == 1]
    r.setflags(write=False)
    return r


def _product_mod(values: np.ndarray, m: int) -> int:
    # pairwise tree product keeps every intermediate below m**2
    v = values % m
    while v.size > 1:
        if v.size % 2:
            v = np.append(v, 1)
        v = (v[0::2] * v[1::2]) % m
    return int(v[0]) if v.size else 1 % m


def classical_units_oracle(n: int, m: int, guard: int = DEFAULT_ORACLE_GUARD,
                           max_dividend_bits: int = DEFAULT_DIVIDEND_BITS) -> VerificationReport:
    """Product-of-units argument for ``m | n**phi(m) - 1``.

    Lists ``1 <= r_1 < ... < r_phi < m`` coprime to ``m``, checks that
    multiplication by ``n`` permutes them, so ``prod(n r_j) == prod(r_j)``
    and hence ``n**phi == 1``. The power ``n**phi`` is formed by repeated
    multiplication, one factor per listed residue.
    """
    if m < 1 or n < 1:
        raise DomainError("n and m must be positive integers")
    if math.gcd(n, m) != 1:
        raise HypothesisViolation(f"gcd({n}, {m}) = {math.gcd(n, m)}; n must be coprime to m")
    if m > guard:
        raise ResourceError(f"modulus {m} exceeds the oracle guard {guard}")
    if m > 3 * 10**9:
        raise ResourceError("oracle arithmetic is limited to int64-safe moduli")
    res = _reduced_residues(m)
    count = int(res.size)
    if m == 1:
        holds = True
    else:
        images = (n % m) * res % m
        permuted = np.array_equal(np.sort(images), res)
        prod_r = _product_mod(res, m)
        prod_nr = _product_mod(images, m)
        power = _product_mod(np.full(count, n % m, dtype=np.int64), m)
        # prod(n r_j) = n^phi prod(r_j) and prod(r_j) is a unit
        identity_ok = prod_nr == (power * prod_r) % m
        holds = bool(permuted and identity_ok and prod_nr == prod_r and power == 1)
    dividend, quotient = _witness(n, count, m, holds, max_dividend_bits)
    return VerificationReport(
        claim=f"{m} | {n}^{count} - 1",
        holds=holds,
        divisor=m,
        base=n,
        exponent=count,
        method=CLASSICAL_ORACLE,
        dividend=dividend,
        quotient=quotient,
    )


def reduced_residues(m: int) -> list[int]:
    """The residues listed by the classical oracle (``[0]`` stands in for m = 1)."""
    return _reduced_residues(m).tolist()
