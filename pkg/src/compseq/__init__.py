"""Composite-only linear recurrence sequences.

Construct coprime positive seeds (x0, x1) making every |x_n| of
x_{n+1} = a*x_n + b*x_{n-1} composite, and independently verify the
construction with per-term compositeness certificates.
"""

from .arith import (
    CongruenceSystem,
    Divisor,
    EffortExceeded,
    MillerRabinBase,
    NonCoprimeModuli,
    NotComposite,
    PrimeFactorization,
    SearchExhausted,
    compositeness_witness,
    coprime_shift,
    crt_solve,
    factorize,
    is_perfect_square,
    is_prime,
    sqrt_if_square,
)
from .constructor import (
    ConstructionResult,
    NotConstructible,
    Support,
    construct,
    derive_seed_from_triples,
)
from .covering import CoveringTriple, TripleSet, is_covering, search_triples, validate_triples
from .lucas import LucasContext, composite_scan, conjecture_scan, rank_of_apparition
from .recurrence import RecurrenceParams, SeedPair, iter_terms, terms
from .verifier import VerificationReport, audit_table1, verify, verify_construction

__all__ = [
    "CongruenceSystem",
    "ConstructionResult",
    "CoveringTriple",
    "Divisor",
    "EffortExceeded",
    "LucasContext",
    "MillerRabinBase",
    "NonCoprimeModuli",
    "NotComposite",
    "NotConstructible",
    "PrimeFactorization",
    "RecurrenceParams",
    "SearchExhausted",
    "SeedPair",
    "Support",
    "TripleSet",
    "VerificationReport",
    "audit_table1",
    "composite_scan",
    "compositeness_witness",
    "conjecture_scan",
    "construct",
    "coprime_shift",
    "crt_solve",
    "derive_seed_from_triples",
    "factorize",
    "is_covering",
    "is_perfect_square",
    "is_prime",
    "iter_terms",
    "rank_of_apparition",
    "search_triples",
    "sqrt_if_square",
    "terms",
    "validate_triples",
    "verify",
    "verify_construction",
]
