import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ptgauge.cartan import ThetaSignature, make_element, random_element
from ptgauge.jaynes import (
    FockLadder,
    LevelEnergies,
    build_jc,
    jc_equivalence_check,
    jc_pt_check,
    nilpotent_split,
)
from ptgauge.linalg import Grid1D, eig

SIG = ThetaSignature(1, 1)


def _el(alpha=0.3):
    return make_element(SIG, np.zeros((1, 1)), [[alpha]], np.zeros((1, 1)))


class TestLadder:
    def test_number_operator_diagonal(self):
        f = FockLadder(5)
        assert np.abs(f.number - np.diag(np.arange(6.0))).max() <= 1e-13

    def test_truncated_commutator(self):
        """[d, d^H] = I except for the hard-cut top level."""
        f = FockLadder(6)
        C = f.d @ f.d_dag - f.d_dag @ f.d
        want = np.eye(7)
        want[6, 6] = -6.0
        assert np.abs(C - want).max() <= 1e-13

    def test_rejects_trivial_space(self):
        with pytest.raises(ValueError):
            FockLadder(0)


class TestSplit:
    @given(st.integers(min_value=0, max_value=5000),
           st.sampled_from([(1, 1), (2, 1), (2, 2)]))
    @settings(max_examples=40)
    def test_reconstruction_and_nilpotency(self, seed, sig_pq):
        sig = ThetaSignature(*sig_pq)
        el = random_element(sig, np.random.default_rng(seed))
        split = nilpotent_split(el)
        assert np.abs(split.c - np.triu(split.c, k=1)).max() == 0.0
        assert np.abs((split.c - split.c.T) - split.a).max() <= 1e-13
        assert np.abs(np.linalg.matrix_power(split.c, sig.m)).max() == 0.0


class TestBuild:
    def test_decoupled_spectrum_exact(self):
        n_max = 9
        omega = LevelEnergies(omega=np.array([0.0, 0.7]))
        H = build_jc(nilpotent_split(_el(0.0)), omega, n_max)
        want = np.sort([2 * (n + w) for n in range(n_max + 1)
                        for w in (0.0, 0.7)])
        got = np.sort(eig(H).eigenvalues.real)
        assert np.abs(got - want).max() <= 1e-12

    def test_polariton_block_oracle(self):
        """Closed-form 2x2 block diagonalization for the two-level case.

        With coupling d^H (x) c + d (x) c^T the invariant pairs are
        (|n+1, lower>, |n, upper>); |0, lower> and the truncated top state
        |n_max, upper> stay uncoupled.
        """
        alpha, delta, n_max = 0.4, 0.6, 8
        omega = LevelEnergies(omega=np.array([0.0, delta]))
        H = build_jc(nilpotent_split(_el(alpha)), omega, n_max)
        expected = [0.0, 2 * n_max + 2 * delta]
        for n in range(n_max):
            g = 2 * np.sqrt(2) * alpha * np.sqrt(n + 1)
            block = np.array([[2 * (n + 1), g], [g, 2 * n + 2 * delta]])
            expected.extend(np.linalg.eigvalsh(block))
        got = np.sort(eig(H).eigenvalues.real)
        assert np.abs(got - np.sort(expected)).max() <= 1e-10

    def test_omega_length_checked(self):
        with pytest.raises(ValueError):
            build_jc(nilpotent_split(_el()), LevelEnergies(omega=np.zeros(3)), 5)

    def test_minimum_truncation(self):
        with pytest.raises(ValueError):
            build_jc(nilpotent_split(_el()), LevelEnergies(omega=np.zeros(2)), 1)


class TestPt:
    @given(st.floats(min_value=-1, max_value=1),
           st.floats(min_value=-1, max_value=1))
    @settings(max_examples=30, deadline=None)
    def test_pt_symmetry(self, alpha, delta):
        omega = LevelEnergies(omega=np.array([0.0, delta]))
        H = build_jc(nilpotent_split(_el(alpha)), omega, 6)
        assert jc_pt_check(H, SIG, 6).passed

    def test_broken_symmetry_detected(self):
        """Negative control: a complex level energy breaks PT."""
        omega = LevelEnergies(omega=np.array([0.0, 0.5]))
        H = build_jc(nilpotent_split(_el(0.3)), omega, 6)
        H = H + 1j * np.diag(np.arange(H.shape[0], dtype=float))
        assert not jc_pt_check(H, SIG, 6).passed


class TestEquivalence:
    def test_dual_build_two_level(self):
        n_max = 8
        grid = Grid1D.from_box(np.sqrt(2 * n_max) + 4.2, 0.05)
        omega = LevelEnergies(omega=np.array([0.0, 0.5]))
        out = jc_equivalence_check(_el(0.3), omega, grid, n_max)
        assert out.max_dev <= 5e-2
        assert out.truncation_shift < 1e-6
        # the overall sign of a is spectrally irrelevant, so both sign
        # conventions must agree with the grid build
        assert out.max_dev_other <= 5e-2

    def test_small_box_rejected(self):
        grid = Grid1D.from_box(3.0, 0.05)
        omega = LevelEnergies(omega=np.array([0.0, 0.5]))
        with pytest.raises(ValueError):
            jc_equivalence_check(_el(0.3), omega, grid, 12)
