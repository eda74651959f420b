"""Independent audit of composite-only constructions.

Given (a, b, x0, x1, N), certifies coprimality and per-term compositeness.
Certificates prefer the divisor the construction strategy predicts for each
index (covering prime, |b|, parity prime, ...), then bounded trial
division, then a Miller-Rabin witness base.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from . import constructor as C
from .arith import (
    DEFAULT_TRIAL_BOUND,
    Divisor,
    MillerRabinBase,
    NotComposite,
    Witness,
    compositeness_witness,
    factorize,
)
from .covering import TripleSet, validate_triples
from .recurrence import RecurrenceParams, SeedPair, terms


@dataclass(frozen=True)
class CompositenessCertificate:
    index: int
    term: int
    witness: Witness


@dataclass(frozen=True)
class VerificationReport:
    params: RecurrenceParams
    seed: SeedPair
    horizon: int
    verdict: bool
    coprime_ok: bool
    failures: tuple[str, ...]
    certificates: tuple[CompositenessCertificate, ...]
    strategy: str | None = None
    support: C.Support | None = None
    covering_law_ok: bool | None = None

    @property
    def first_failure_index(self) -> int | None:
        for cert in self.certificates:
            if isinstance(cert.witness, NotComposite):
                return cert.index
        return None

    def to_dict(self) -> dict:
        d = {
            "params": {"a": self.params.a, "b": self.params.b},
            "seed": {"x0": str(self.seed.x0), "x1": str(self.seed.x1)},
            "horizon": self.horizon,
            "verdict": "pass" if self.verdict else "fail",
            "coprime_ok": self.coprime_ok,
            "failures": list(self.failures),
            "certificates": [
                {
                    "n": cert.index,
                    "term": str(cert.term),
                    "term_digits": len(str(abs(cert.term))),
                    "witness_kind": cert.witness.kind,
                    "witness_value": (
                        cert.witness.d
                        if isinstance(cert.witness, Divisor)
                        else cert.witness.base
                        if isinstance(cert.witness, MillerRabinBase)
                        else None
                    ),
                }
                for cert in self.certificates
            ],
            "strategy": self.strategy,
        }
        if self.support is not None:
            d["triples"] = [
                {"p": t.p, "m": t.m, "r": t.r} for t in self.support.triples.triples
            ]
            d["P"] = self.support.P
            d["y"] = self.support.y
            d["z"] = self.support.z
        if self.covering_law_ok is not None:
            d["covering_law_ok"] = self.covering_law_ok
        return d


def _witness_from_divisor(term: int, d: int) -> Divisor | None:
    t = abs(term)
    if 1 < d < t and t % d == 0:
        return Divisor(d)
    return None


def _hint_fn(construction: C.ConstructionResult) -> Callable[[int], list[int]]:
    """Per-index candidate divisors predicted by the construction strategy."""
    a, b = construction.params.a, construction.params.b
    strategy = construction.strategy

    if construction.support is not None:
        triples = construction.support.triples.triples

        def covering_hints(n: int) -> list[int]:
            return [t.p for t in triples if n % t.m == t.r]

        return covering_hints

    if strategy == C.A_ZERO:
        return lambda n: [2] if n % 2 == 0 else [3]

    if strategy == C.DEGENERATE_DISC:
        c = abs(a) // 2
        spf = factorize(c).primes()[0]
        return lambda n: [2 * c - 1, 2 * c + 1] if n == 0 else [spf, c]

    if strategy in (C.CASE_I, C.CASE_II, C.CASE_IIIB):
        bb = abs(b)
        spf = factorize(bb).primes()[0]
        first = [bb * bb - 1] if strategy == C.CASE_I else [2 * b * b - 1]
        return lambda n: first if n == 0 else [spf, bb]

    if strategy == C.CASE_IIIA:
        bb = abs(b)
        return lambda n: [2 * b * b - 1] if n == 0 else [bb]

    if strategy == C.CASE_IIIC:
        bb, aa = abs(b), abs(a)
        return lambda n: [aa] if n == 0 else [bb]

    if strategy == C.TWO_PRIME_FACTORS:
        p1, p2 = factorize(a).primes()[:2]
        return lambda n: [p1] if n % 2 == 0 else [p2]

    return lambda n: []


def _covering_law_audit(
    tset: TripleSet, xs: list[int], failures: list[str]
) -> bool:
    """Each index must be claimed by a triple whose prime divides the term,
    with |x_n| strictly above every covering prime."""
    pmax = max(tset.primes())
    ok = True
    for n, x in enumerate(xs):
        claims = [t for t in tset.triples if n % t.m == t.r]
        if not claims:
            failures.append(f"index {n} not covered by any triple")
            ok = False
            continue
        if not any(x % t.p == 0 for t in claims):
            failures.append(f"no claimed prime divides x_{n}")
            ok = False
        if abs(x) <= pmax:
            failures.append(f"|x_{n}| = {abs(x)} not above max covering prime {pmax}")
            ok = False
    return ok


def verify(
    params: RecurrenceParams,
    seed: SeedPair,
    n_terms: int,
    construction: C.ConstructionResult | None = None,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
    covering_audit: bool = True,
) -> VerificationReport:
    """Full audit: positivity, coprimality, per-term compositeness certificates,
    and (when covering support is available) the covering-divisibility law."""
    failures: list[str] = []
    coprime_ok = math.gcd(seed.x0, seed.x1) == 1
    if not coprime_ok:
        failures.append(f"gcd(x0, x1) = {math.gcd(seed.x0, seed.x1)} != 1")
    if seed.x0 <= 0:
        failures.append("x0 not positive")
    if seed.x1 <= 0:
        failures.append("x1 not positive")

    xs = terms(params, seed, n_terms)
    hints = _hint_fn(construction) if construction is not None else (lambda n: [])

    certificates = []
    for n, x in enumerate(xs):
        witness: Witness | None = None
        for d in hints(n):
            witness = _witness_from_divisor(x, d)
            if witness is not None:
                break
        if witness is None:
            witness = compositeness_witness(x, trial_bound=trial_bound)
        if isinstance(witness, NotComposite):
            failures.append(f"|x_{n}| = {abs(x)} is not composite")
        certificates.append(CompositenessCertificate(n, x, witness))

    covering_law_ok = None
    support = construction.support if construction is not None else None
    if support is not None and covering_audit:
        covering_law_ok = _covering_law_audit(support.triples, xs, failures)

    return VerificationReport(
        params=params,
        seed=seed,
        horizon=n_terms,
        verdict=not failures,
        coprime_ok=coprime_ok,
        failures=tuple(failures),
        certificates=tuple(certificates),
        strategy=construction.strategy if construction is not None else None,
        support=support,
        covering_law_ok=covering_law_ok,
    )


def verify_construction(
    construction: C.ConstructionResult, n_terms: int = 200
) -> VerificationReport:
    return verify(
        construction.params, construction.seed, n_terms, construction=construction
    )


@dataclass(frozen=True)
class Table1RowReport:
    a: int
    b: int
    triples_valid: bool
    paper_seed: SeedPair
    paper_report: VerificationReport
    covering_law_ok: bool
    covering_failures: tuple[str, ...]
    anomalies: tuple[str, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "triples_valid": self.triples_valid,
            "paper_seed": {"x0": self.paper_seed.x0, "x1": self.paper_seed.x1},
            "paper_verdict": "pass" if self.paper_report.verdict else "fail",
            "covering_law_ok": self.covering_law_ok,
            "anomalies": list(self.anomalies),
        }


def audit_table1(n_terms: int = 100) -> list[Table1RowReport]:
    """Validate every fixture row's triples and verify its published seed pair.

    The covering-law audit is reported separately from the compositeness
    verdict; anomalies (like the (3, -1) row listing x0 > x1) are recorded,
    not raised.
    """
    reports = []
    for (a, b), (triples, x0, x1) in C.TABLE1.items():
        params = RecurrenceParams(a, b)
        tset = TripleSet.of(triples, a, b)
        validation = validate_triples(tset)
        seed = SeedPair(x0, x1)
        anomalies = []
        if x0 >= x1:
            anomalies.append(f"published pair has x0 = {x0} >= x1 = {x1}")
        report = verify(params, seed, n_terms)
        covering_failures: list[str] = []
        covering_ok = _covering_law_audit(
            tset, terms(params, seed, n_terms), covering_failures
        )
        reports.append(
            Table1RowReport(
                a,
                b,
                validation.ok,
                seed,
                report,
                covering_ok,
                tuple(covering_failures),
                tuple(anomalies),
            )
        )
    return reports
