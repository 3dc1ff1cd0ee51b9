"""Closed-form convergence rates for periodic gossip on a path.

The per-period convergence rate is the spectral gap R = 1 - |lambda2| of the
primitive gossip matrix, where lambda2 is the eigenvalue of second-largest
modulus.  For the path schedule both parities collapse to one expression in
s = sin((n-2)*pi/(2n)): the slowest non-consensus mode comes from the
quadratic eigenvalue pair at the cosine grid point nearest -1, which has

    lambda2 = 1 - 2w + 2 w^2 s^2 + 2 w s sqrt(w^2 s^2 - 2w + 1)

when the radicand is nonnegative, and |lambda2| = |2w - 1| otherwise (the
pair turns complex-conjugate and Vieta's product fixes the modulus).  The
link-failure variant replaces the weighted matrix with the expected matrix
under i.i.d. Bernoulli link failures at rate p, whose slow mode is always a
real root.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

REAL_ROOTS = "real_roots"
COMPLEX_PAIR = "complex_pair"


@dataclass(frozen=True)
class RateResult:
    """Convergence rate of one configuration.

    parameter is the gossip weight w (rate_weighted) or the link-failure
    probability p (rate_link_failure).  regime records whether the slow
    eigenvalue pair was real or complex-conjugate.
    """

    n: int
    parameter: float
    lambda2_modulus: float
    rate: float
    regime: str


def _edge_mode_sin(n: int) -> float:
    return math.sin((n - 2) * math.pi / (2 * n))


def rate_weighted(n: int, w: float) -> RateResult:
    """Per-period convergence rate of weighted gossip, any parity of n."""
    if n < 3:
        raise ValueError(f"need n >= 3, got n={n}")
    if not 0.0 < w < 1.0:
        raise ValueError(f"gossip weight must lie strictly in (0, 1), got {w}")
    s = _edge_mode_sin(n)
    radicand = w * w * s * s - 2.0 * w + 1.0
    if radicand >= 0.0:
        lam2 = 1.0 - 2.0 * w + 2.0 * w * w * s * s + 2.0 * w * s * math.sqrt(radicand)
        modulus, regime = abs(lam2), REAL_ROOTS
    else:
        modulus, regime = abs(2.0 * w - 1.0), COMPLEX_PAIR
    return RateResult(n=n, parameter=w, lambda2_modulus=modulus,
                      rate=1.0 - modulus, regime=regime)


def rate_link_failure(n: int, p: float) -> RateResult:
    """Rate from the expected per-period matrix under link failures.

    Reduces to rate_weighted(n, 1/2) at p = 0 and to zero at p = 1 (all
    links down, identity dynamics).  The slow mode is a real root for every
    p, with the positive square-root branch: the radicand

        (1-p)^4 s^4 / 4 + p (1-p)^2 s^2

    is a sum of nonnegative terms, and only the + branch matches the
    numerically computed spectrum (it must give lambda2 = s^2 at p = 0).
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got n={n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"failure probability must lie in [0, 1], got {p}")
    if p == 1.0:
        return RateResult(n=n, parameter=p, lambda2_modulus=1.0, rate=0.0,
                          regime=REAL_ROOTS)
    s2 = _edge_mode_sin(n) ** 2
    q = (1.0 - p) ** 2 * s2
    lam2 = p + q / 2.0 + math.sqrt(q * q / 4.0 + p * q)
    return RateResult(n=n, parameter=p, lambda2_modulus=lam2,
                      rate=1.0 - lam2, regime=REAL_ROOTS)


def optimal_weight(n: int, grid: list[float]) -> tuple[float, RateResult]:
    """Grid member maximizing the rate; ties broken toward smaller w."""
    if not grid:
        raise ValueError("weight grid must be nonempty")
    best: tuple[float, RateResult] | None = None
    for w in sorted(grid):
        result = rate_weighted(n, w)
        if best is None or result.rate > best[1].rate:
            best = (w, result)
    return best


def default_weight_grid() -> list[float]:
    """The standard search grid {0.1, 0.2, ..., 0.9}."""
    return [k / 10.0 for k in range(1, 10)]


def relative_error(n: int) -> float:
    """Efficiency of w = 0.9 over plain averaging: (R_0.9 - R_0.5) / R_0.9."""
    r_opt = rate_weighted(n, 0.9).rate
    r_avg = rate_weighted(n, 0.5).rate
    if r_opt == 0.0:
        raise ValueError(f"relative error undefined: zero rate at w=0.9, n={n}")
    return (r_opt - r_avg) / r_opt
