"""Tests for the optical elements and circuit composition."""

import math

import numpy as np
import pytest

from twophoton import optics

from oracles import random_state


class TestBeamSplitter:
    def test_matrix_convention(self):
        expected = np.array([[1, 1j], [1j, 1]]) / math.sqrt(2)
        np.testing.assert_allclose(optics.beam_splitter_5050(), expected, atol=0)

    def test_balanced_splitting(self):
        out = optics.beam_splitter_5050() @ np.array([1.0, 0.0])
        np.testing.assert_allclose(np.abs(out) ** 2, [0.5, 0.5], atol=1e-15)

    def test_unitary(self):
        assert optics.unitarity_deviation(optics.beam_splitter_5050()) <= 1e-12

    def test_two_splitters_swap_ports(self):
        # matrix product oracle: B @ B = [[0, i], [i, 0]]
        bs = optics.beam_splitter_5050()
        out = bs @ bs @ np.array([1.0, 0.0])
        np.testing.assert_allclose(np.abs(out) ** 2, [0.0, 1.0], atol=1e-15)


class TestPhaseShifter:
    def test_zero_phase_is_identity(self):
        np.testing.assert_allclose(optics.phase_shifter(0.0), np.eye(2), atol=0)

    def test_pi_flips_sign(self):
        shifted = optics.phase_shifter(math.pi, branch=1) @ (
            np.array([1.0, 1.0]) / math.sqrt(2)
        )
        np.testing.assert_allclose(
            shifted, np.array([1.0, -1.0]) / math.sqrt(2), atol=1e-15
        )

    def test_diagonal_structure(self):
        mat = optics.phase_shifter(0.3, branch=0)
        assert mat[0, 1] == 0 and mat[1, 0] == 0
        assert abs(mat[0, 0] - np.exp(0.3j)) <= 1e-15
        assert mat[1, 1] == 1

    def test_invalid_branch_rejected(self):
        with pytest.raises(ValueError, match="branch"):
            optics.phase_shifter(0.1, branch=2)

    def test_non_finite_phase_rejected(self):
        with pytest.raises(ValueError, match="finite"):
            optics.phase_shifter(math.nan)


class TestEmbedLocal:
    def test_identity_embeds_to_identity(self):
        np.testing.assert_allclose(
            optics.embed_local(np.eye(2), "S"), np.eye(4), atol=0
        )

    def test_matches_tensor_oracle(self):
        bs = optics.beam_splitter_5050()
        np.testing.assert_allclose(
            optics.embed_local(bs, "S"), np.kron(bs, np.eye(2)), atol=0
        )
        np.testing.assert_allclose(
            optics.embed_local(bs, "A"), np.kron(np.eye(2), bs), atol=0
        )

    def test_local_phases_commute(self):
        p_s = optics.embed_local(optics.phase_shifter(0.4), "S")
        p_a = optics.embed_local(optics.phase_shifter(1.1), "A")
        assert np.max(np.abs(p_s @ p_a - p_a @ p_s)) <= 1e-12

    def test_shape_mismatch_rejected(self):
        with pytest.raises(ValueError, match="mode count"):
            optics.embed_local(np.eye(3), "S")

    def test_bad_side_rejected(self):
        with pytest.raises(ValueError, match="side"):
            optics.embed_local(np.eye(2), "X")


class TestCircuit:
    def test_unitary_over_random_settings(self):
        rng = np.random.default_rng(71)
        for _ in range(100):
            settings = optics.PhaseSettings(*rng.uniform(-10, 10, size=2))
            circuit = optics.build_rto_circuit(settings)
            assert optics.unitarity_deviation(circuit) <= 1e-12

    def test_probability_conservation(self):
        rng = np.random.default_rng(73)
        for _ in range(100):
            settings = optics.PhaseSettings(*rng.uniform(0, 2 * math.pi, size=2))
            state = random_state(rng, 4)
            out = optics.build_rto_circuit(settings) @ state
            assert abs(np.sum(np.abs(out) ** 2) - 1.0) <= 1e-12

    def test_depends_only_on_phase_difference(self):
        from twophoton.experiments import entangled_mode_state

        psi = entangled_mode_state(math.sqrt(0.5), math.sqrt(0.5))
        grid = np.linspace(0.0, 2 * math.pi, 6)
        shifts = (0.3, 1.7, 5.0)
        for x in grid:
            for y in grid:
                base = np.abs(optics.build_rto_circuit(optics.PhaseSettings(x, y)) @ psi) ** 2
                for t in shifts:
                    moved = (
                        np.abs(
                            optics.build_rto_circuit(optics.PhaseSettings(x + t, y + t)) @ psi
                        )
                        ** 2
                    )
                    assert np.max(np.abs(base - moved)) <= 1e-12

    def test_matches_manual_composition(self):
        settings = optics.PhaseSettings(0.8, 2.1)
        manual = np.kron(optics.beam_splitter_5050(), optics.beam_splitter_5050()) @ np.kron(
            optics.phase_shifter(0.8), optics.phase_shifter(2.1)
        )
        np.testing.assert_allclose(optics.build_rto_circuit(settings), manual, atol=1e-15)


class TestPhaseSettings:
    def test_canonical_wraps_for_reporting(self):
        settings = optics.PhaseSettings(-math.pi, 3 * math.pi)
        wrapped = settings.canonical()
        assert 0 <= wrapped[0] < 2 * math.pi
        assert 0 <= wrapped[1] < 2 * math.pi
        assert settings.phi_s == -math.pi  # stored value untouched

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError, match="finite"):
            optics.PhaseSettings(math.inf, 0.0)
