"""Tests for the numeric oracles.

Proves:
  1. determinant_shifted evaluates det(A - lambda I) for real and complex
     shifts, and its values at gossip matrices satisfy the three-term
     corner-composition identity built from the closed-form polynomials.
  2. full_spectrum returns verified eigenvalues: known small spectra, exact
     conjugate pairing, a small eigenpair residual, one consensus
     eigenvalue, and moduli bounded by 1 for the stochastic families.
  3. enumerate_failure_expectation averages the full failure lattice and
     matches the product construction exactly, within its documented size
     window.
  4. spectral_gap_numeric computes 1 - |lambda_2| for doubly stochastic
     input and rejects anything else.
  5. spectrum_match_distance pairs two spectra greedily and reports the
     worst gap.
"""
import numpy as np
import pytest

from latticegossip.matrices import expected_failure_matrix, primitive_gossip_matrix
from latticegossip.oracle import (MAX_SPECTRUM_ORDER, determinant_shifted,
                                  enumerate_failure_expectation, full_spectrum,
                                  spectral_gap_numeric, spectrum_match_distance)
from latticegossip.pentadiag import (PentaParams, charpoly_bb, charpoly_bb_bd,
                                     charpoly_bd_bd, weighted_gossip_params)

# --- shifted determinants ------------------------------------------------------


def test_determinant_identity():
    assert determinant_shifted(np.eye(3), 0.0) == pytest.approx(1.0)


def test_determinant_vanishes_at_consensus_eigenvalue():
    m = primitive_gossip_matrix(3, 0.5)
    assert abs(determinant_shifted(m, 1.0)) < 1e-12


def test_determinant_matches_corner_composition():
    # det(A(alpha, beta) - lambda I) decomposes over the corner-free,
    # one-corner, and two-corner polynomials two orders down.
    n, w, lam = 5, 0.7, 0.3 + 0.1j
    gp = weighted_gossip_params(n, w)
    b = gp.b

    def core(order):
        return PentaParams(alpha=0.0, beta=0.0, e=gp.e, b=gp.b, c=gp.c,
                           d=gp.d, n=order)

    composed = (charpoly_bd_bd(core(n), "odd", lam)
                + 2 * b * charpoly_bb_bd(core(n - 1), "even", lam)
                + b * b * charpoly_bb(core(n - 2), "odd", lam))
    direct = determinant_shifted(primitive_gossip_matrix(n, w), lam)
    assert abs(composed - direct) / abs(direct) < 1e-8


def test_determinant_rejects_nonsquare():
    with pytest.raises(ValueError):
        determinant_shifted(np.ones((2, 3)), 0.0)


# --- full spectra ----------------------------------------------------------------


def test_spectrum_of_a_swap():
    spec = full_spectrum(np.array([[0.0, 1.0], [1.0, 0.0]]))
    assert sorted(np.real(spec.eigenvalues)) == pytest.approx([-1.0, 1.0])


def test_spectrum_four_nodes_half_weight():
    spec = full_spectrum(primitive_gossip_matrix(4, 0.5))
    got = sorted(float(np.real(v)) for v in spec.eigenvalues)
    assert got == pytest.approx([0.0, 0.0, 0.5, 1.0], abs=1e-10)


def test_spectrum_four_nodes_complex_pair():
    spec = full_spectrum(primitive_gossip_matrix(4, 0.6))
    complex_vals = [v for v in spec.eigenvalues if abs(np.imag(v)) > 1e-12]
    assert len(complex_vals) == 2
    assert complex_vals[0] == np.conj(complex_vals[1])
    assert abs(complex_vals[0]) == pytest.approx(0.2, abs=1e-8)


@pytest.mark.parametrize("n", [3, 8, 20, 50])
def test_spectrum_residual_is_small(n):
    spec = full_spectrum(primitive_gossip_matrix(n, 0.7))
    assert spec.residual < 1e-10
    assert len(spec.eigenvalues) == n


def test_spectrum_residual_bound_at_large_order():
    assert full_spectrum(primitive_gossip_matrix(500, 0.9)).residual < 1e-8


@pytest.mark.parametrize("n", [3, 6, 15, 40])
@pytest.mark.parametrize("w", [0.25, 0.5, 0.9])
def test_spectrum_has_one_consensus_eigenvalue_and_bounded_moduli(n, w):
    eigs = np.asarray(full_spectrum(primitive_gossip_matrix(n, w)).eigenvalues)
    assert np.sum(np.abs(eigs - 1.0) < 1e-8) == 1
    assert np.abs(eigs).max() <= 1 + 1e-10


@pytest.mark.parametrize("n", [5, 12, 23])
def test_determinant_vanishes_on_computed_eigenvalues(n):
    m = primitive_gossip_matrix(n, 0.7)
    for lam in full_spectrum(m).eigenvalues:
        assert abs(determinant_shifted(m, lam)) < 1e-6


def test_spectrum_order_cap():
    with pytest.raises(ValueError):
        full_spectrum(np.eye(MAX_SPECTRUM_ORDER + 1))


# --- exhaustive failure enumeration -----------------------------------------------


def test_enumeration_p_zero_is_plain_average():
    exact = enumerate_failure_expectation(3, 0.0)
    assert np.allclose(exact, primitive_gossip_matrix(3, 0.5).entries,
                       atol=1e-15)


def test_enumeration_half_failure_top_corner():
    assert enumerate_failure_expectation(4, 0.5)[0, 0] == pytest.approx(0.75)


def test_enumeration_matches_expected_matrix():
    exact = enumerate_failure_expectation(6, 0.3)
    built = expected_failure_matrix(6, 0.3).entries
    assert np.abs(exact - built).max() < 1e-12


def test_enumeration_size_window():
    with pytest.raises(ValueError):
        enumerate_failure_expectation(13, 0.5)
    with pytest.raises(ValueError):
        enumerate_failure_expectation(2, 0.5)


def test_enumeration_rejects_bad_probability():
    with pytest.raises(ValueError):
        enumerate_failure_expectation(5, 1.5)


# --- numeric spectral gap -----------------------------------------------------------


def test_gap_three_nodes_half_weight():
    assert spectral_gap_numeric(primitive_gossip_matrix(3, 0.5)) == \
        pytest.approx(0.75, abs=1e-12)


def test_gap_of_identity_is_zero():
    assert spectral_gap_numeric(np.eye(5)) == pytest.approx(0.0, abs=1e-12)


def test_gap_hundred_nodes_tuned_weight():
    gap = spectral_gap_numeric(primitive_gossip_matrix(100, 0.9))
    assert gap == pytest.approx(0.009, abs=5e-4)


def test_gap_rejects_non_stochastic_input():
    with pytest.raises(ValueError):
        spectral_gap_numeric(np.array([[0.5, 0.2], [0.5, 0.8]]))


# --- spectrum pairing ----------------------------------------------------------------


def test_match_distance_zero_for_identical_sets():
    eigs = full_spectrum(primitive_gossip_matrix(7, 0.4)).eigenvalues
    assert spectrum_match_distance(eigs, list(eigs)) == 0.0


def test_match_distance_reports_known_shift():
    a = [0.0, 1.0, 2.0]
    b = [0.0, 1.0, 2.5]
    assert spectrum_match_distance(a, b) == pytest.approx(0.5)


def test_match_distance_is_permutation_invariant():
    a = [1.0, 0.5 + 0.2j, 0.5 - 0.2j, -0.1]
    rng = np.random.default_rng(0)
    shuffled = list(a)
    rng.shuffle(shuffled)
    assert spectrum_match_distance(a, shuffled) < 1e-15


def test_match_distance_rejects_size_mismatch():
    with pytest.raises(ValueError):
        spectrum_match_distance([1.0, 2.0], [1.0])
