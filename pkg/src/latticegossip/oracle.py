"""Independent numeric ground truth for the analytic formulas.

Nothing in this module shares formula code with the closed-form layers: the
determinant goes through LU elimination with partial pivoting, spectra come
from the standard Hessenberg-plus-QR dense eigensolver, and the link-failure
expectation is an exhaustive sum over all 2^(n-1) failure patterns.
Agreement between these engines and the analytic expressions is therefore
evidence, not tautology.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matrices import optimal_schedule, pair_update_matrix

MAX_SPECTRUM_ORDER = 2000


@dataclass(frozen=True, eq=False)
class OracleSpectrum:
    """Eigenvalues with a backward-error estimate of the solve."""

    eigenvalues: np.ndarray
    residual: float


def _as_square_array(a) -> np.ndarray:
    m = np.asarray(getattr(a, "entries", a), dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


def determinant_shifted(a, lam: complex) -> complex:
    """det(A - lam*I) by LU elimination with partial pivoting over complex."""
    m = _as_square_array(a).astype(complex)
    shifted = m - lam * np.eye(m.shape[0], dtype=complex)
    return complex(np.linalg.det(shifted))


def full_spectrum(a) -> OracleSpectrum:
    """All eigenvalues of a real square matrix.

    Uses the dense general eigensolver (Hessenberg reduction followed by
    implicitly shifted QR); complex eigenvalues of a real input come out in
    exact conjugate pairs.  The residual reported is the largest relative
    eigenpair defect max_i |A v_i - lam_i v_i| / ||A||_F.
    """
    m = _as_square_array(a)
    n = m.shape[0]
    if n > MAX_SPECTRUM_ORDER:
        raise ValueError(
            f"matrix order {n} exceeds the supported {MAX_SPECTRUM_ORDER}")
    try:
        eigenvalues, vectors = np.linalg.eig(m)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - defensive
        raise RuntimeError(
            f"eigensolver failed to converge on the {n}x{n} matrix "
            f"(fingerprint {hash(m.tobytes()) & 0xFFFFFFFF:08x})") from exc
    defect = m.astype(complex) @ vectors - vectors * eigenvalues
    scale = max(float(np.linalg.norm(m)), 1e-300)
    residual = float(np.linalg.norm(defect, axis=0).max() / scale)
    return OracleSpectrum(eigenvalues=eigenvalues, residual=residual)


def enumerate_failure_expectation(n: int, p: float) -> np.ndarray:
    """Exact expectation of the one-period matrix by exhaustive enumeration.

    Sums Pr(F) * (period product with the edges in F skipped) over every
    subset F of the n-1 path edges.  Exponential in n, hence the small-n
    guard; this is the brute-force check for expected_failure_matrix.
    """
    if n > 12:
        raise ValueError(f"exhaustive enumeration supports n <= 12, got n={n}")
    if n < 3:
        raise ValueError(f"need n >= 3, got n={n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"failure probability must lie in [0, 1], got {p}")
    sched = optimal_schedule(n)
    edges = [(i, i + 1) for i in range(1, n)]
    pair_mats = {pair: pair_update_matrix(n, pair, 0.5).entries
                 for pair in sched.e1 + sched.e2}
    total = np.zeros((n, n))
    for mask in range(1 << (n - 1)):
        failed = {edges[k] for k in range(n - 1) if mask >> k & 1}
        weight = p ** len(failed) * (1.0 - p) ** (n - 1 - len(failed))
        if weight == 0.0:
            continue
        period = np.eye(n)
        for matching in (sched.e1, sched.e2):
            for pair in matching:
                if tuple(pair) not in failed:
                    period = pair_mats[pair] @ period
        total += weight * period
    return total


def spectral_gap_numeric(a) -> float:
    """1 - (second largest eigenvalue modulus) of a doubly stochastic matrix."""
    m = _as_square_array(a)
    ones = np.ones(m.shape[0])
    if np.abs(m @ ones - ones).max() > 1e-9 or \
            np.abs(m.T @ ones - ones).max() > 1e-9:
        raise ValueError("matrix is not doubly stochastic")
    eigs = full_spectrum(m).eigenvalues
    idx = int(np.argmin(np.abs(eigs - 1.0)))
    rest = np.delete(eigs, idx)
    if rest.size == 0:
        return 1.0
    return 1.0 - float(np.abs(rest).max())


def spectrum_match_distance(eigs_a, eigs_b) -> float:
    """Greedy minimal-distance pairing of two equal-size eigenvalue multisets.

    Repeatedly matches the globally closest unmatched pair and returns the
    largest matched distance -- a Hausdorff-style gap between the multisets.
    """
    a = np.asarray(eigs_a, dtype=complex).ravel()
    b = np.asarray(eigs_b, dtype=complex).ravel()
    if a.size != b.size:
        raise ValueError(f"size mismatch: {a.size} vs {b.size}")
    n = a.size
    if n == 0:
        return 0.0
    dist = np.abs(a[:, None] - b[None, :])
    used_a = np.zeros(n, dtype=bool)
    used_b = np.zeros(n, dtype=bool)
    worst = 0.0
    matched = 0
    for flat in np.argsort(dist, axis=None):
        i, j = divmod(int(flat), n)
        if used_a[i] or used_b[j]:
            continue
        used_a[i] = used_b[j] = True
        worst = max(worst, float(dist[i, j]))
        matched += 1
        if matched == n:
            break
    return worst
