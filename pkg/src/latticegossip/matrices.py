"""Gossip matrices for the n-node path network.

A period of the schedule activates two maximal matchings of the path: first
every edge (2,3), (4,5), ... then every edge (1,2), (3,4), ....  The product
of one period's pairwise averaging matrices is the primitive gossip matrix
whose powers drive the consensus dynamics.  Three families are built here:
plain averaging (w = 1/2), weighted averaging, and the per-period expected
matrix under independent Bernoulli link failures.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np


class GossipPair(NamedTuple):
    """One communicating node pair, 1-based, adjacent on the path."""

    i: int
    j: int


@dataclass(frozen=True)
class ScheduleSpec:
    """The two disjoint matchings making up one period (period = 2 rounds)."""

    e1: tuple[GossipPair, ...]
    e2: tuple[GossipPair, ...]
    period: int = 2


@dataclass(frozen=True, eq=False)
class GossipMatrix:
    """Dense doubly stochastic update matrix with a provenance tag.

    kind is one of "average", "weighted", "expected_failure"; param holds
    the gossip weight w (first two kinds) or the failure probability p.
    """

    n: int
    entries: np.ndarray
    kind: str
    param: float


def _check_pair(n: int, pair: GossipPair) -> None:
    i, j = pair
    if not (1 <= i < j <= n):
        raise ValueError(f"pair {pair!r} out of range for n={n}")
    if j != i + 1:
        raise ValueError(f"pair {pair!r} is not a path edge (j must be i+1)")


def pair_update_matrix(n: int, pair: GossipPair, w: float) -> GossipMatrix:
    """Identity except the 2x2 block [[1-w, w], [w, 1-w]] at rows/cols (i, j).

    w = 1/2 is the plain pairwise average; w = 1 swaps the two states and
    w = 0 is the identity (both degenerate ends are allowed here).
    """
    _check_pair(n, pair)
    if not 0.0 <= w <= 1.0:
        raise ValueError(f"gossip weight must lie in [0, 1], got {w}")
    m = np.eye(n)
    i, j = pair[0] - 1, pair[1] - 1
    m[i, i] = m[j, j] = 1.0 - w
    m[i, j] = m[j, i] = w
    kind = "average" if w == 0.5 else "weighted"
    return GossipMatrix(n=n, entries=m, kind=kind, param=w)


def optimal_schedule(n: int) -> ScheduleSpec:
    """Two-round periodic schedule covering every path edge exactly once.

    e1 = {(2,3), (4,5), ...} and e2 = {(1,2), (3,4), ...} for every n; the
    rounds are applied e1 first, then e2.  Two rounds are optimal because
    the path needs two matchings to cover its edges (its chromatic index).
    """
    if n < 2:
        raise ValueError(f"need at least 2 nodes, got n={n}")
    e1 = tuple(GossipPair(i, i + 1) for i in range(2, n, 2))
    e2 = tuple(GossipPair(i, i + 1) for i in range(1, n, 2))
    return ScheduleSpec(e1=e1, e2=e2)


def _round_matrix(n: int, pairs: tuple[GossipPair, ...], w: float) -> np.ndarray:
    """Product of pairwise updates over one matching (disjoint, so order-free)."""
    m = np.eye(n)
    for pair in pairs:
        m = pair_update_matrix(n, pair, w).entries @ m
    return m


def primitive_gossip_matrix(n: int, w: float) -> GossipMatrix:
    """One full period of weighted gossip: the e2 round applied after e1.

    Returns W = S2 @ S1 where S1/S2 multiply out the e1/e2 matchings, i.e.
    state evolves x -> S1 x -> S2 S1 x across one period.  The result is a
    doubly stochastic pentadiagonal matrix.
    """
    if n < 3:
        raise ValueError(f"primitive gossip matrix needs n >= 3, got n={n}")
    if not 0.0 <= w <= 1.0:
        raise ValueError(f"gossip weight must lie in [0, 1], got {w}")
    sched = optimal_schedule(n)
    entries = _round_matrix(n, sched.e2, w) @ _round_matrix(n, sched.e1, w)
    kind = "average" if w == 0.5 else "weighted"
    return GossipMatrix(n=n, entries=entries, kind=kind, param=w)


def expected_failure_matrix(n: int, p: float) -> GossipMatrix:
    """Expected one-period matrix when each link independently fails.

    Each pairwise average (at w = 1/2) is replaced by identity with
    probability p, so the expected per-edge factor is p*I + (1-p)*P_pair.
    The factors within a round commute (disjoint pairs), and independence
    across edges makes the expectation of the round product the product of
    the per-edge expectations.
    """
    if n < 3:
        raise ValueError(f"expected failure matrix needs n >= 3, got n={n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"failure probability must lie in [0, 1], got {p}")
    sched = optimal_schedule(n)
    eye = np.eye(n)

    def expected_round(pairs: tuple[GossipPair, ...]) -> np.ndarray:
        m = np.eye(n)
        for pair in pairs:
            q = p * eye + (1.0 - p) * pair_update_matrix(n, pair, 0.5).entries
            m = q @ m
        return m

    entries = expected_round(sched.e2) @ expected_round(sched.e1)
    return GossipMatrix(n=n, entries=entries, kind="expected_failure", param=p)
