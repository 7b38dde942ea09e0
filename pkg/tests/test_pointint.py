import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ptgauge.pointint import (
    CouplingMatrixT,
    PiecewiseFunction,
    apply_p_phi_traces,
    bound_states,
    boundary_maps,
    boundary_transform_check,
    clifford_angle,
    domain_check,
    p_phi_selfadjointness_check,
    pt_phase_sweep,
)
from ptgauge.verification import VerifyConfig, delta_well_grid_energy

finite = st.floats(min_value=-3, max_value=3, allow_nan=False)


def pt_coupling(t11, t22, b12, b21):
    return CouplingMatrixT(t11=complex(t11), t12=1j * b12, t21=1j * b21,
                           t22=complex(t22))


class TestBoundaryTriple:
    def test_exponential_well_function(self):
        """f = e^{-|x|} solves the delta-well domain condition for t11=-2."""
        f = PiecewiseFunction(f_plus=1, f_minus=1, df_plus=-1, df_minus=1)
        bp = boundary_maps(f)
        assert np.allclose(bp.gamma0, [1, 0])
        assert np.allclose(bp.gamma1, [-2, 0])
        T = pt_coupling(-2, 0, 0, 0)
        assert domain_check(T, f).passed

    def test_adjoint_domain(self):
        # t12 != -t21 makes T genuinely non-Hermitian, so the adjoint
        # condition (T^H in place of T) singles out a different domain
        T = pt_coupling(1, 0, 0.5, 0.3)
        f = PiecewiseFunction(f_plus=1, f_minus=0.2, df_plus=-0.3,
                              df_minus=0.4)
        rep_plain = domain_check(T, f)
        rep_adj = domain_check(T, f, adjoint=True)
        assert rep_plain.residual != rep_adj.residual


class TestCliffordAngle:
    @given(finite, finite, finite)
    @settings(max_examples=60)
    def test_phi_zero_iff_symmetric_offdiagonal(self, t11, t22, b):
        sol = clifford_angle(pt_coupling(t11, t22, b, b))
        assert sol.phi == 0.0

    def test_reference_value(self):
        sol = clifford_angle(CouplingMatrixT(t11=1, t12=1j, t21=-1j, t22=0))
        assert abs(sol.phi - np.arctan2(4, 3)) <= 1e-15
        assert sol.residual <= 1e-13

    def test_degenerate_flagged(self):
        # det T = -4 with t12 = t21 leaves the angle undetermined
        sol = clifford_angle(pt_coupling(2, -2, 0, 0))
        assert sol.degenerate
        assert sol.phi == 0.0

    @given(finite, finite, finite, finite)
    @settings(max_examples=60)
    def test_principal_branch(self, t11, t22, b12, b21):
        sol = clifford_angle(pt_coupling(t11, t22, b12, b21))
        assert -np.pi / 2 < sol.phi <= np.pi / 2

    def test_non_pt_rejected(self):
        with pytest.raises(ValueError):
            clifford_angle(CouplingMatrixT(t11=1j, t12=0, t21=0, t22=0))


class TestBoundaryTransform:
    @given(finite, finite, finite, finite, st.integers(0, 1000))
    @settings(max_examples=60)
    def test_identities_at_solved_angle(self, t11, t22, b12, b21, seed):
        T = pt_coupling(t11, t22, b12, b21)
        sol = clifford_angle(T)
        rng = np.random.default_rng(seed)
        fs = [PiecewiseFunction(*(rng.standard_normal(4)
                                  + 1j * rng.standard_normal(4)))
              for _ in range(3)]
        out = boundary_transform_check(T, sol, fs)
        assert out.passed

    @given(finite, finite, finite, finite)
    @settings(max_examples=60)
    def test_p_phi_selfadjointness(self, t11, t22, b12, b21):
        T = pt_coupling(t11, t22, b12, b21)
        sol = clifford_angle(T)
        assert p_phi_selfadjointness_check(T, sol).passed

    def test_wrong_angle_fails(self):
        T = CouplingMatrixT(t11=1, t12=1j, t21=-1j, t22=0)
        sol = clifford_angle(T)
        bad = type(sol)(phi=sol.phi + 0.3, degenerate=False,
                        m1=np.cos(sol.phi + 0.3) * np.diag([1.0, -1.0]),
                        m2=(1j / 2) * np.sin(sol.phi + 0.3)
                        * np.array([[0, 1], [1, 0]]),
                        residual=0.0)
        f = PiecewiseFunction(1.0, 0.5, -0.3, 0.7)
        out = boundary_transform_check(T, bad, [f])
        assert not out.passed

    @given(st.floats(min_value=-1.5, max_value=1.5), st.integers(0, 500))
    @settings(max_examples=40)
    def test_p_phi_is_involution_on_traces(self, phi, seed):
        rng = np.random.default_rng(seed)
        f = PiecewiseFunction(*(rng.standard_normal(4)
                                + 1j * rng.standard_normal(4)))
        g = apply_p_phi_traces(apply_p_phi_traces(f, phi), phi)
        assert abs(g.f_plus - f.f_plus) <= 1e-13
        assert abs(g.df_minus - f.df_minus) <= 1e-13


class TestBoundStates:
    def test_delta_well_closed_form(self):
        states = bound_states(pt_coupling(-2, 0, 0, 0))
        assert len(states) == 1
        assert abs(states[0].energy - (-1.0)) <= 1e-12
        assert states[0].domain_residual <= 1e-10

    @given(st.floats(min_value=-4, max_value=-0.2))
    @settings(max_examples=40)
    def test_single_coupling_energy_formula(self, t11):
        states = bound_states(pt_coupling(t11, 0, 0, 0))
        assert len(states) == 1
        assert abs(states[0].energy - (-t11**2 / 4)) <= 1e-10

    @given(st.floats(min_value=0.2, max_value=4))
    @settings(max_examples=25)
    def test_repulsive_coupling_no_state(self, t11):
        assert bound_states(pt_coupling(t11, 0, 0, 0)) == []

    def test_grid_oracle(self):
        """Independent narrow-square-well discretization of the delta well."""
        cfg = VerifyConfig()
        assert abs(delta_well_grid_energy(-2.0, cfg) - (-1.0)) <= 1e-3
        assert abs(delta_well_grid_energy(-1.0, cfg) - (-0.25)) <= 1e-3

    # half-integer lattice keeps the quadratic coefficients away from the
    # near-degenerate regime where kappa blows up and rounding dominates
    lattice = st.sampled_from([x / 2 for x in range(-6, 7)])

    @given(lattice, lattice, lattice, lattice)
    @settings(max_examples=60)
    def test_states_satisfy_domain_condition(self, t11, t22, b12, b21):
        for s in bound_states(pt_coupling(t11, t22, b12, b21)):
            assert s.domain_residual <= 1e-8
            assert s.kappa.real > 0


class TestSweep:
    def test_deterministic_and_paired(self):
        grids = (np.linspace(-2, 1, 3), np.linspace(-1, 1, 2),
                 np.linspace(-1, 1, 3), np.linspace(-1, 1, 3))
        rows1 = pt_phase_sweep(*grids)
        rows2 = pt_phase_sweep(*grids)
        assert len(rows1) == 3 * 2 * 3 * 3
        for r1, r2 in zip(rows1, rows2):
            assert r1.classification == r2.classification
            assert np.array_equal(np.nan_to_num(r1.energies),
                                  np.nan_to_num(r2.energies))
            assert r1.classification != "unpaired"

    def test_broken_phase_present(self):
        """Couplings with complex-pair energies appear in a generic sweep."""
        rows = pt_phase_sweep(np.linspace(-3, 3, 5), np.linspace(-3, 3, 5),
                              np.linspace(-2, 2, 3), np.linspace(-2, 2, 3))
        assert any(r.classification == "conjugate_paired" for r in rows)
        assert any(r.classification == "all_real" for r in rows)
