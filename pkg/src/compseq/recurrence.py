"""Second-order linear recurrences x_{n+1} = a*x_n + b*x_{n-1}.

Exact arbitrary-precision term generation plus two structural checks:
the determinant identity relating consecutive terms and the
strict-growth criterion for |a| > |b| with |x0| < |x1|.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

DEFAULT_HORIZON = 200


@dataclass(frozen=True)
class RecurrenceParams:
    a: int
    b: int

    @property
    def discriminant(self) -> int:
        return self.a * self.a + 4 * self.b


@dataclass(frozen=True)
class SeedPair:
    x0: int
    x1: int


def iter_terms(params: RecurrenceParams, seed: SeedPair) -> Iterator[int]:
    """Stream x0, x1, x2, ... indefinitely."""
    a, b = params.a, params.b
    x, y = seed.x0, seed.x1
    yield x
    while True:
        yield y
        x, y = y, a * y + b * x


def terms(params: RecurrenceParams, seed: SeedPair, n: int) -> list[int]:
    """The list [x0, ..., xn] (length n + 1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    it = iter_terms(params, seed)
    return [next(it) for _ in range(n + 1)]


def lemma1_residual(params: RecurrenceParams, seed: SeedPair, n: int) -> int:
    """x_{n+1}^2 - a*x_n*x_{n+1} - b*x_n^2 minus (-b)^n*(x1^2 - a*x0*x1 - b*x0^2).

    Always 0; exposed as a residual so tests can quantify over inputs.
    """
    a, b = params.a, params.b
    xs = terms(params, seed, n + 1)
    xn, xn1 = xs[n], xs[n + 1]
    lhs = xn1 * xn1 - a * xn * xn1 - b * xn * xn
    x0, x1 = seed.x0, seed.x1
    rhs = (-b) ** n * (x1 * x1 - a * x0 * x1 - b * x0 * x0)
    return lhs - rhs


def is_strictly_growing(
    params: RecurrenceParams, seed: SeedPair, horizon: int = DEFAULT_HORIZON
) -> bool:
    """True iff |x_n| < |x_{n+1}| for every n < horizon."""
    xs = terms(params, seed, horizon)
    return all(abs(xs[i]) < abs(xs[i + 1]) for i in range(horizon))
