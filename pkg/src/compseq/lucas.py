"""Lucas sequences of the first kind: u0 = 0, u1 = 1, u_{n+1} = a*u_n + b*u_{n-1}.

Divisibility structure (u_m | u_n when m | n), rank of apparition, and two
scanners: compositeness of |u_n| for b = -1, |a| >= 3, and pairwise
coprimality of u_p, u_q at prime indices.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field

from .arith import NotComposite, Witness, compositeness_witness, is_prime, small_primes
from .recurrence import RecurrenceParams


class LucasContext:
    """Caches u_n values for one (a, b); u() is observably pure and thread-safe."""

    def __init__(self, params: RecurrenceParams):
        if params.b == 0:
            raise ValueError("b must be nonzero")
        self.params = params
        self._cache = [0, 1]
        self._lock = threading.Lock()

    def u(self, n: int) -> int:
        if n < 0:
            raise ValueError("n must be >= 0")
        if n >= len(self._cache):
            with self._lock:
                a, b = self.params.a, self.params.b
                while len(self._cache) <= n:
                    self._cache.append(a * self._cache[-1] + b * self._cache[-2])
        return self._cache[n]


def u(ctx: LucasContext, n: int) -> int:
    return ctx.u(n)


def check_divisibility(ctx: LucasContext, m: int, n: int) -> bool:
    """True iff u_m | u_n (when u_m = 0, true iff u_n = 0 as well)."""
    if m < 1 or n < 1:
        raise ValueError("indices must be >= 1")
    um, un = ctx.u(m), ctx.u(n)
    if um == 0:
        return un == 0
    return un % um == 0


def rank_of_apparition(ctx: LucasContext, p: int, bound: int | None = None) -> int | None:
    """Smallest m >= 1 with p | u_m, or None when not found within the bound.

    For |b| = 1 the rank divides p - 1 or p + 1, so the default bound
    max(p + 1, 64) is exact there; for general b the search stays bounded.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if math.gcd(p, ctx.params.b) != 1:
        raise ValueError("p must not divide b")
    limit = bound if bound is not None else max(p + 1, 64)
    for m in range(1, limit + 1):
        if ctx.u(m) % p == 0:
            return m
    return None


@dataclass(frozen=True)
class ScanEntry:
    n: int
    term: int
    witness: Witness


@dataclass(frozen=True)
class CompositeScanReport:
    a: int
    n_max: int
    entries: tuple[ScanEntry, ...] = field(default_factory=tuple)

    @property
    def violations(self) -> tuple[ScanEntry, ...]:
        return tuple(e for e in self.entries if isinstance(e.witness, NotComposite))

    @property
    def all_composite(self) -> bool:
        return not self.violations


def composite_scan(a: int, n_max: int) -> CompositeScanReport:
    """Certify |u_n| composite for 3 <= n <= n_max with b = -1, |a| >= 3."""
    if abs(a) < 3:
        raise ValueError("requires |a| >= 3")
    ctx = LucasContext(RecurrenceParams(a, -1))
    entries = []
    for n in range(3, n_max + 1):
        t = ctx.u(n)
        entries.append(ScanEntry(n, t, compositeness_witness(t)))
    return CompositeScanReport(a, n_max, tuple(entries))


@dataclass(frozen=True)
class CoprimalityViolation:
    a: int
    p: int
    q: int
    gcd: int


def conjecture_scan(a_values, prime_bound: int) -> list[CoprimalityViolation]:
    """gcd(u_p, u_q) for all prime pairs p < q <= prime_bound, b = -1.

    Returns the (expected-empty) list of pairs with gcd > 1.
    """
    primes = [p for p in small_primes(prime_bound) if p <= prime_bound]
    violations = []
    for a in a_values:
        if abs(a) < 3:
            raise ValueError("requires |a| >= 3")
        ctx = LucasContext(RecurrenceParams(a, -1))
        for i, p in enumerate(primes):
            for q in primes[i + 1 :]:
                g = math.gcd(ctx.u(p), ctx.u(q))
                if g > 1:
                    violations.append(CoprimalityViolation(a, p, q, g))
    return violations
