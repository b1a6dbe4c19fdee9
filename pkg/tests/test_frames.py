import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finosc.frames import (
    FiniteFrame,
    coherent_family,
    dequantize,
    displacement,
    frame_analyze,
    quantize,
    schwinger,
)
from finosc.gaussians import Family
from finosc.grid import (
    GridDim,
    GridFunction,
    LinearOperator,
    fourier_operator,
    fourier_transform,
    inner_product,
)
from conftest import rand_state

S3 = 1 / math.sqrt(3)


class TestSchwinger:
    def test_shift_moves_delta(self, d3):
        out = schwinger(d3, "A").apply(GridFunction.delta(d3, 0))
        assert np.array_equal(out.values, GridFunction.delta(d3, 1).values)

    def test_modulation_action(self, d7):
        psi = rand_state(d7, 1)
        out = schwinger(d7, "B", 2).apply(psi)
        for n in d7.indices():
            expected = np.exp(4j * np.pi * n / d7.d) * psi[n]
            assert out[n] == pytest.approx(expected, abs=1e-14)

    def test_order_d(self, d7):
        I = np.eye(d7.d)
        assert np.max(np.abs(schwinger(d7, "A", d7.d).matrix - I)) < 1e-12
        assert np.max(np.abs(schwinger(d7, "B", d7.d).matrix - I)) < 1e-12

    def test_commutation_phase(self):
        dim = GridDim.from_size(5)
        for a in dim.indices():
            for b in dim.indices():
                lhs = (schwinger(dim, "A", a) @ schwinger(dim, "B", b)).matrix
                rhs = np.exp(-2j * np.pi * a * b / dim.d) * (
                    schwinger(dim, "B", b) @ schwinger(dim, "A", a)
                ).matrix
                assert np.max(np.abs(lhs - rhs)) < 1e-12

    def test_rejects_unknown_tag(self, d3):
        with pytest.raises(ValueError):
            schwinger(d3, "C")


class TestDisplacement:
    def test_zero_label_is_identity(self, d3):
        assert np.max(np.abs(displacement(d3, 0, 0).matrix - np.eye(3))) == 0.0

    def test_composition_law_all_pairs_d3(self, d3):
        labels = [(a, b) for a in d3.indices() for b in d3.indices()]
        for a1, b1 in labels:
            for a2, b2 in labels:
                lhs = (displacement(d3, a1, b1) @ displacement(d3, a2, b2)).matrix
                phase = np.exp(-1j * np.pi * (a1 * b2 - a2 * b1) / d3.d)
                rhs = phase * displacement(d3, a1 + a2, b1 + b2).matrix
                assert np.max(np.abs(lhs - rhs)) < 1e-12

    def test_unitary(self, d7):
        D = displacement(d7, 2, -3)
        assert np.max(np.abs((D @ D.adjoint()).matrix - np.eye(d7.d))) < 1e-13

    def test_fourier_rotates_labels(self, d7):
        F = fourier_operator(d7)
        rng = np.random.default_rng(2)
        for _ in range(6):
            a, b = (int(x) for x in rng.integers(-d7.j, d7.j + 1, 2))
            lhs = (F @ displacement(d7, a, b) @ F.adjoint()).matrix
            assert np.max(np.abs(lhs - displacement(d7, b, -a).matrix)) < 1e-12

    def test_full_period_label_flips_sign(self, d3):
        D = displacement(d3, 0, 1)
        shifted = displacement(d3, 3, 1)
        assert np.max(np.abs(shifted.matrix + D.matrix)) < 1e-13


class TestCoherentFamily:
    def test_zero_label_state_is_fiducial(self, d3):
        fam = coherent_family(d3, Family.G1)
        assert np.array_equal(fam.state(0, 0).values, fam.fiducial.values)

    @pytest.mark.parametrize("family", list(Family))
    def test_unit_norms(self, family, d7):
        fam = coherent_family(d7, family)
        for a in d7.indices():
            for b in d7.indices():
                assert fam.state(a, b).norm() == pytest.approx(1.0, abs=1e-12)

    def test_resolution_of_identity_d3(self, d3):
        fam = coherent_family(d3, Family.G1)
        S = fam.state_matrix()
        assert np.max(np.abs(S.T @ S.conj() / d3.d - np.eye(3))) < 1e-10

    @pytest.mark.parametrize("family", list(Family))
    def test_resolution_of_identity_all_families(self, family):
        dim = GridDim.from_size(5)
        S = coherent_family(dim, family).state_matrix()
        assert np.max(np.abs(S.T @ S.conj() / dim.d - np.eye(dim.d))) < 1e-10

    def test_matches_displacement_operator(self, d7):
        fam = coherent_family(d7, Family.G2)
        fid = fam.fiducial
        for a, b in [(1, 2), (-3, 0), (2, -2)]:
            direct = displacement(d7, a, b).apply(fid)
            assert np.max(np.abs(fam.state(a, b).values - direct.values)) < 1e-13

    def test_fourier_covariance_shifted_to_alternating(self):
        dim = GridDim.from_size(5)
        fam2 = coherent_family(dim, Family.G2)
        fam3 = coherent_family(dim, Family.G3)
        for a in dim.indices():
            for b in dim.indices():
                lhs = fourier_transform(fam2.state(a, b)).values
                assert np.max(np.abs(lhs - fam3.state(b, -a).values)) < 1e-10


class TestQuantization:
    def test_constant_symbol_gives_identity(self, d3):
        fam = coherent_family(d3, Family.G1)
        A = quantize(fam, lambda a, b: 1.0)
        assert np.max(np.abs(A.matrix - np.eye(3))) < 1e-10

    def test_scaled_constant(self, d7):
        fam = coherent_family(d7, Family.G4)
        A = quantize(fam, lambda a, b: 2.5)
        assert np.max(np.abs(A.matrix - 2.5 * np.eye(d7.d))) < 1e-10

    def test_harmonic_symbol_spectrum_d3(self, d3):
        from finosc.grid import eigendecompose_hermitian

        fam = coherent_family(d3, Family.G1)
        A = quantize(fam, lambda a, b: (a * a + b * b) / 2)
        got = eigendecompose_hermitian(A).eigenvalues
        expected = np.sort([0.5 * (1 - 0.5 * S3), 0.75, 0.25 * (3 + S3)])
        assert np.max(np.abs(got - expected)) < 1e-12

    def test_real_symbol_gives_hermitian(self, d7):
        rng = np.random.default_rng(4)
        table = rng.normal(size=(d7.d, d7.d))
        j = d7.j
        fam = coherent_family(d7, Family.G3)
        A = quantize(fam, lambda a, b: table[a + j, b + j])
        assert np.max(np.abs(A.matrix - A.matrix.conj().T)) < 1e-12


class TestDequantization:
    def test_identity_symbol_is_one(self, d3):
        fam = coherent_family(d3, Family.G1)
        f = dequantize(fam, LinearOperator.identity(d3))
        assert np.max(np.abs(f - 1.0)) < 1e-12

    def test_projector_self_overlap(self, d3):
        fam = coherent_family(d3, Family.G2)
        st0 = fam.state(1, -1)
        proj = LinearOperator(d3, np.outer(st0.values, st0.values.conj()))
        f = dequantize(fam, proj)
        assert f[1 + d3.j, -1 + d3.j] == pytest.approx(1.0, abs=1e-12)

    def test_hermitian_gives_real_symbol(self):
        dim = GridDim.from_size(5)
        rng = np.random.default_rng(6)
        raw = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
        M = LinearOperator(dim, (raw + raw.conj().T) / 2)
        f = dequantize(coherent_family(dim, Family.G1), M)
        assert np.max(np.abs(f.imag)) < 1e-12

    def test_roundtrip_constant(self, d3):
        fam = coherent_family(d3, Family.G5)
        f = dequantize(fam, quantize(fam, lambda a, b: 3.0))
        assert np.max(np.abs(f - 3.0)) < 1e-10

    def test_dimension_mismatch(self, d3, d7):
        with pytest.raises(ValueError):
            dequantize(coherent_family(d3, Family.G1), LinearOperator.identity(d7))


class TestFrameAnalysis:
    def test_canonical_basis(self, d3):
        diag = frame_analyze([GridFunction.delta(d3, k) for k in d3.indices()])
        assert diag.is_frame and diag.is_tight
        assert diag.frame is not None
        assert np.allclose(diag.frame.weights, 1.0)
        assert diag.frame.weights.sum() == pytest.approx(3.0, abs=1e-12)

    def test_scaled_coherent_family(self, d3):
        fam = coherent_family(d3, Family.G4)
        vectors = [
            fam.state(a, b) / math.sqrt(d3.d) for a in d3.indices() for b in d3.indices()
        ]
        diag = frame_analyze(vectors)
        assert diag.is_tight and diag.frame is not None
        assert diag.frame.weights.sum() == pytest.approx(3.0, abs=1e-10)

    def test_single_delta_is_not_a_frame(self, d3):
        diag = frame_analyze([GridFunction.delta(d3, 0)])
        assert not diag.is_frame
        assert diag.lower == pytest.approx(0.0, abs=1e-12)

    def test_unscaled_coherent_family_is_tight_but_not_normalized(self, d3):
        fam = coherent_family(d3, Family.G1)
        vectors = [fam.state(a, b) for a in d3.indices() for b in d3.indices()]
        diag = frame_analyze(vectors)
        assert diag.is_tight and diag.frame is None
        assert diag.upper == pytest.approx(3.0, abs=1e-10)

    def test_zero_vector_rejected(self, d3):
        with pytest.raises(ValueError):
            frame_analyze([GridFunction.delta(d3, 0), GridFunction.zero(d3)])

    @settings(max_examples=15, deadline=None)
    @given(seed=st.integers(0, 2**31))
    def test_parseval_identity(self, seed):
        dim = GridDim.from_size(5)
        fam = coherent_family(dim, Family.G1)
        vectors = [
            fam.state(a, b) / math.sqrt(dim.d) for a in dim.indices() for b in dim.indices()
        ]
        frame = frame_analyze(vectors).frame
        psi = rand_state(dim, seed)
        total = sum(
            w * abs(inner_product(u, psi)) ** 2
            for w, u in zip(frame.weights, frame.vectors)
        )
        assert total == pytest.approx(psi.norm() ** 2, rel=1e-10)

    def test_finite_frame_validates_unit_norms(self, d3):
        with pytest.raises(ValueError, match="unit norm"):
            FiniteFrame(
                d3,
                tuple(2.0 * GridFunction.delta(d3, k) for k in d3.indices()),
                np.ones(3),
            )
