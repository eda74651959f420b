import math
import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from compseq.arith import (
    Divisor,
    MillerRabinBase,
    NonCoprimeModuli,
    NotComposite,
    SearchExhausted,
    _strong_probable_prime,
    compositeness_witness,
    coprime_shift,
    crt_solve,
    factorize,
    is_perfect_square,
    is_prime,
    small_primes,
    sqrt_if_square,
)


def trial_division_is_prime(n):
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


class TestIsPrime:
    def test_small_values(self):
        assert is_prime(2)
        assert not is_prime(1)
        assert not is_prime(0)
        assert is_prime(1103)

    def test_agrees_with_trial_division_small(self):
        for n in range(2000):
            assert is_prime(n) == trial_division_is_prime(n), n

    def test_agrees_with_sympy_on_random_64bit(self):
        rng = random.Random(1)
        for _ in range(300):
            n = rng.getrandbits(64)
            assert is_prime(n) == sympy.isprime(n), n

    def test_large_probabilistic_regime(self):
        # above the deterministic bound; cross-check against sympy
        rng = random.Random(2)
        for _ in range(20):
            n = rng.getrandbits(120) | 1
            assert is_prime(n) == sympy.isprime(n), n


class TestWitness:
    def test_divisor_for_105(self):
        w = compositeness_witness(105)
        assert w == Divisor(3)

    def test_prime_and_units(self):
        assert compositeness_witness(7) == NotComposite()
        assert compositeness_witness(0) == NotComposite()
        assert compositeness_witness(1) == NotComposite()
        assert compositeness_witness(-1) == NotComposite()

    def test_negative_uses_absolute_value(self):
        assert compositeness_witness(-105) == Divisor(3)

    def test_divisor_witnesses_are_sound(self):
        rng = random.Random(3)
        for _ in range(200):
            n = rng.randrange(2, 10**12)
            w = compositeness_witness(n)
            if isinstance(w, Divisor):
                assert n % w.d == 0 and 1 < w.d < n
            elif isinstance(w, NotComposite):
                assert sympy.isprime(n)

    def test_mr_witness_for_large_semiprime(self):
        p = sympy.nextprime(10**10)
        q = sympy.nextprime(2 * 10**10)
        w = compositeness_witness(p * q, trial_bound=10**6)
        assert isinstance(w, MillerRabinBase)
        assert not _strong_probable_prime(p * q, w.base)


class TestPerfectSquare:
    def test_examples(self):
        assert is_perfect_square(49)
        assert sqrt_if_square(49) == 7
        assert not is_perfect_square(-4)
        assert not is_perfect_square(2)

    def test_case2_polynomial_value(self):
        a, b = 2, 3
        v = 16 * b**8 + 8 * a * b**5 - 8 * b**4 - 4 * b**3 - 2 * a * b + 1
        assert not is_perfect_square(v)

    def test_squares_and_neighbors(self):
        for k in range(1, 10**4):
            assert is_perfect_square(k * k)
            assert not is_perfect_square(k * k + 1)

    @given(st.integers(min_value=0, max_value=10**40))
    def test_matches_isqrt(self, n):
        r = math.isqrt(n)
        assert is_perfect_square(n) == (r * r == n)


class TestFactorize:
    def test_paper_values(self):
        assert factorize(80).factors == ((2, 4), (5, 1))
        assert factorize(78).factors == ((2, 1), (3, 1), (13, 1))
        assert factorize(13).factors == ((13, 1),)

    def test_reassembles(self):
        rng = random.Random(4)
        for _ in range(100):
            n = rng.randrange(2, 10**14)
            f = factorize(n)
            assert f.reassemble() == n
            for p, _ in f.factors:
                assert is_prime(p)

    def test_matches_sympy(self):
        rng = random.Random(5)
        for _ in range(50):
            n = rng.randrange(2, 10**18)
            assert dict(factorize(n).factors) == sympy.factorint(n)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            factorize(0)


class TestCrt:
    def test_worked_example_minus9(self):
        assert crt_solve([(0, 3), (1, 2), (0, 5), (1, 13)]) == (105, 390)

    def test_worked_example_8(self):
        assert crt_solve([(0, 2), (2, 3), (1, 11)]) == (56, 66)

    def test_single_equation(self):
        assert crt_solve([(0, 2)]) == (0, 2)

    def test_negative_residues_normalized(self):
        x, mod = crt_solve([(-1, 3), (-2, 5)])
        assert 0 <= x < mod and x % 3 == 2 and x % 5 == 3

    def test_non_coprime_rejected(self):
        with pytest.raises(NonCoprimeModuli):
            crt_solve([(0, 4), (1, 6)])

    def test_unique_solution_brute_force(self):
        rng = random.Random(6)
        for _ in range(50):
            moduli = rng.sample([2, 3, 5, 7, 11, 13], rng.randrange(1, 4))
            sys_ = [(rng.randrange(m), m) for m in moduli]
            x, mod = crt_solve(sys_)
            assert mod == math.prod(moduli)
            matches = [
                v for v in range(mod) if all(v % m == r for r, m in sys_)
            ]
            assert matches == [x]


class TestCoprimeShift:
    def test_paper_examples(self):
        assert coprime_shift(56, 63, 66, require_greater=True) == 1
        assert coprime_shift(980, 1464, 1869, require_greater=True) == 1
        assert coprime_shift(4, 1, 4, require_greater=True) == 1

    def test_k_zero_when_already_coprime(self):
        assert coprime_shift(105, 134, 390, require_greater=True) == 0

    def test_result_is_coprime(self):
        rng = random.Random(7)
        for _ in range(200):
            n1 = rng.randrange(1, 10**6)
            n2 = rng.randrange(0, 10**6)
            n3 = rng.randrange(1, 10**6)
            if math.gcd(n1, math.gcd(n2, n3)) != 1:
                continue
            k = coprime_shift(n1, n2, n3)
            assert math.gcd(n1, n2 + k * n3) == 1

    def test_exhaustion_is_signalled(self):
        with pytest.raises(SearchExhausted):
            coprime_shift(6, 0, 6, cap=10)


def test_small_primes_sieve():
    assert small_primes(100) == [p for p in range(101) if trial_division_is_prime(p)]
