"""Arbitrary-precision integer utilities.

Primality testing, compositeness witnesses, factorization, perfect-square
detection, and a Chinese remainder solver.  Everything here is a pure
function of its inputs; the only randomness is the explicitly passed RNG
used for Miller-Rabin rounds above the deterministic range.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass


class NonCoprimeModuli(ValueError):
    """CRT input moduli share a common factor."""


class EffortExceeded(RuntimeError):
    """A cofactor resisted the factoring effort bound."""


class SearchExhausted(RuntimeError):
    """coprime_shift ran past its cap; indicates a precondition violation."""


# Strong-pseudoprime testing with these bases is deterministic below this
# bound (Sorenson & Webster, first 13 primes).
MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
MR_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

DEFAULT_MR_ROUNDS = 64
DEFAULT_TRIAL_BOUND = 10**6
DEFAULT_RHO_EFFORT = 10**6
COPRIME_SHIFT_CAP = 10**6


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i in range(limit + 1) if flags[i]]


_small_primes_cache: dict[int, list[int]] = {}


def small_primes(limit: int = DEFAULT_TRIAL_BOUND) -> list[int]:
    """Primes up to limit, cached."""
    if limit not in _small_primes_cache:
        _small_primes_cache[limit] = _sieve(limit)
    return _small_primes_cache[limit]


def _strong_probable_prime(n: int, base: int) -> bool:
    """Strong (Miller-Rabin) test; True means n is a probable prime to base."""
    if base % n == 0:
        return True
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int, rounds: int = DEFAULT_MR_ROUNDS, rng: random.Random | None = None) -> bool:
    """Primality test.

    Deterministic (fixed base set) for n below MR_DETERMINISTIC_BOUND;
    Miller-Rabin with `rounds` random bases above it.
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < MR_DETERMINISTIC_BOUND:
        return all(_strong_probable_prime(n, a) for a in MR_DETERMINISTIC_BASES)
    rng = rng or random.Random(0xC0FFEE)
    for _ in range(rounds):
        a = rng.randrange(2, n - 1)
        if not _strong_probable_prime(n, a):
            return False
    return True


@dataclass(frozen=True)
class Divisor:
    """A nontrivial divisor d of n with 1 < d < |n|."""

    d: int
    kind = "divisor"


@dataclass(frozen=True)
class MillerRabinBase:
    """A base at which the strong test proves n composite."""

    base: int
    kind = "mr_base"


@dataclass(frozen=True)
class NotComposite:
    """n is 0, +-1, or has prime absolute value."""

    kind = "not_composite"


Witness = Divisor | MillerRabinBase | NotComposite


def compositeness_witness(
    n: int,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
    rng: random.Random | None = None,
) -> Witness:
    """Produce a checkable witness that |n| is composite, or NotComposite.

    Tries bounded trial division first (the covering primes in this project
    are always small), then searches for a Miller-Rabin witness base.
    """
    m = abs(n)
    if m in (0, 1) or is_prime(m, rng=rng):
        return NotComposite()
    limit = min(trial_bound, math.isqrt(m))
    for p in small_primes(trial_bound):
        if p > limit:
            break
        if m % p == 0:
            return Divisor(p)
    for a in MR_DETERMINISTIC_BASES:
        if not _strong_probable_prime(m, a):
            return MillerRabinBase(a)
    rng = rng or random.Random(0xC0FFEE)
    for _ in range(10_000):
        a = rng.randrange(2, m - 1)
        if not _strong_probable_prime(m, a):
            return MillerRabinBase(a)
    raise RuntimeError(f"no compositeness witness found for {n}")  # pragma: no cover


def sqrt_if_square(n: int) -> int | None:
    """Integer square root of n when n is a perfect square, else None."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def is_perfect_square(n: int) -> bool:
    return sqrt_if_square(n) is not None


@dataclass(frozen=True)
class PrimeFactorization:
    """|value| = product of p**e over factors; primes strictly increasing."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def reassemble(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def _pollard_brent(n: int, effort: int, rng: random.Random) -> int | None:
    """Brent's variant of Pollard rho; returns a nontrivial factor or None."""
    if n % 2 == 0:
        return 2
    for _ in range(20):
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        count = 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
            count += r
            if count > effort:
                break
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


def factorize(
    n: int,
    effort: int = DEFAULT_RHO_EFFORT,
    rng: random.Random | None = None,
) -> PrimeFactorization:
    """Complete prime factorization of |n| by trial division plus rho splitting.

    Raises EffortExceeded when a composite cofactor resists splitting within
    the effort bound.
    """
    if n == 0:
        raise ValueError("cannot factorize 0")
    rng = rng or random.Random(0xFAC70)
    m = abs(n)
    counts: dict[int, int] = {}
    for p in small_primes(10**5):
        if p * p > m:
            break
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    stack = [m] if m > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        d = _pollard_brent(m, effort, rng)
        if d is None:
            raise EffortExceeded(f"could not split {m}")
        stack.extend((d, m // d))
    return PrimeFactorization(n, tuple(sorted(counts.items())))


@dataclass(frozen=True)
class CongruenceSystem:
    """x = residue (mod modulus) for each equation; moduli pairwise coprime."""

    equations: tuple[tuple[int, int], ...]

    @staticmethod
    def of(equations) -> "CongruenceSystem":
        normalized = []
        for r, m in equations:
            if m < 1:
                raise ValueError(f"modulus {m} < 1")
            normalized.append((r % m, m))
        return CongruenceSystem(tuple(normalized))


def crt_solve(system: CongruenceSystem | list[tuple[int, int]]) -> tuple[int, int]:
    """Solve the system; returns (solution, modulus) with 0 <= solution < modulus."""
    if not isinstance(system, CongruenceSystem):
        system = CongruenceSystem.of(system)
    x, mod = 0, 1
    for r, m in system.equations:
        r %= m
        g = math.gcd(mod, m)
        if g != 1:
            if (r - x) % g != 0:
                raise NonCoprimeModuli(f"moduli {mod} and {m} share factor {g}")
            raise NonCoprimeModuli(f"moduli not pairwise coprime (gcd {g})")
        inv = pow(mod, -1, m)
        x = x + mod * ((r - x) * inv % m)
        mod *= m
        x %= mod
    return x, mod


def coprime_shift(
    n1: int,
    n2: int,
    n3: int,
    require_greater: bool = False,
    cap: int = COPRIME_SHIFT_CAP,
) -> int:
    """Smallest k >= 0 with gcd(n1, n2 + k*n3) = 1 (and n2 + k*n3 > n1 if asked).

    Existence is guaranteed when no prime divides all three inputs; hitting
    the cap therefore signals a caller bug.
    """
    if n1 <= 0 or n3 <= 0 or n2 < 0:
        raise ValueError("need n1 > 0, n2 >= 0, n3 > 0")
    for k in range(cap):
        v = n2 + k * n3
        if require_greater and v <= n1:
            continue
        if math.gcd(n1, v) == 1:
            return k
    raise SearchExhausted(f"no admissible k below {cap} for ({n1}, {n2}, {n3})")
