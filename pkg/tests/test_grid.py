import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finosc.grid import (
    ConvergenceError,
    GridDim,
    GridFunction,
    JacobiConfig,
    LinearOperator,
    canonical_phase,
    convolve,
    eigendecompose_hermitian,
    fourier_operator,
    fourier_transform,
    inner_product,
    inverse_fourier_transform,
    operator_exponential,
    outer,
    parity_operator,
)
from conftest import rand_state

odd_dims = st.integers(min_value=1, max_value=12).map(lambda j: GridDim(j))


class TestGridDim:
    @pytest.mark.parametrize("bad", [0, 1, 2, 4, 10, -3])
    def test_rejects_non_odd_sizes(self, bad):
        with pytest.raises(ValueError):
            GridDim.from_size(bad)

    def test_rejects_bad_j(self):
        with pytest.raises(ValueError):
            GridDim(0)

    def test_indices_and_wrap(self):
        dim = GridDim.from_size(5)
        assert list(dim.indices()) == [-2, -1, 0, 1, 2]
        assert dim.wrap(3) == -2
        assert dim.wrap(-3) == 2
        assert dim.wrap(7) == 2


class TestInnerProduct:
    def test_delta_orthonormality(self, d3):
        for k in d3.indices():
            for l in d3.indices():
                ip = inner_product(GridFunction.delta(d3, k), GridFunction.delta(d3, l))
                assert ip == (1.0 if k == l else 0.0)

    def test_zero_vector(self, d3):
        z = GridFunction.zero(d3)
        assert inner_product(z, z) == 0.0

    def test_hand_evaluated_three_term_sum(self, d3):
        phi = GridFunction(d3, [1, 1j, 0])
        psi = GridFunction(d3, [1, 1, 1])
        assert inner_product(phi, psi) == pytest.approx(1 - 1j, abs=1e-15)

    def test_conjugate_linear_in_first_argument(self, d7):
        phi, psi = rand_state(d7, 1), rand_state(d7, 2)
        lhs = inner_product(2j * phi, psi)
        assert lhs == pytest.approx(np.conj(2j) * inner_product(phi, psi), abs=1e-12)

    def test_dimension_mismatch(self, d3, d7):
        with pytest.raises(ValueError):
            inner_product(GridFunction.zero(d3), GridFunction.zero(d7))


class TestFourier:
    def test_delta_goes_flat(self, d3):
        f = fourier_transform(GridFunction.delta(d3, 0))
        assert np.allclose(f.values, 1 / math.sqrt(3), atol=1e-15)

    def test_square_reflects(self, d15):
        psi = rand_state(d15, 3)
        twice = fourier_transform(fourier_transform(psi))
        assert np.max(np.abs(twice.values - psi.reflected().values)) < 1e-13

    def test_odd_eigenvector_d3(self, d3):
        v = GridFunction(d3, [-1 / math.sqrt(2), 0, 1 / math.sqrt(2)])
        out = fourier_transform(v)
        assert np.max(np.abs(out.values - (-1j) * v.values)) < 1e-15

    @settings(max_examples=30, deadline=None)
    @given(dim=odd_dims, seed=st.integers(0, 2**31))
    def test_unitarity(self, dim, seed):
        psi = rand_state(dim, seed)
        assert fourier_transform(psi).norm() == pytest.approx(psi.norm(), abs=1e-12)

    @pytest.mark.parametrize("d", [3, 45, 201])
    def test_unitarity_large(self, d):
        dim = GridDim.from_size(d)
        psi = rand_state(dim, 5)
        assert abs(fourier_transform(psi).norm() - psi.norm()) < 1e-12 * psi.norm()

    @pytest.mark.parametrize("d", [3, 9, 15])
    def test_fourth_power_is_identity(self, d):
        dim = GridDim.from_size(d)
        F = fourier_operator(dim)
        F4 = F @ F @ F @ F
        assert np.max(np.abs(F4.matrix - np.eye(d))) < 1e-12

    def test_square_is_parity_operator(self, d15):
        F = fourier_operator(d15)
        assert np.max(np.abs((F @ F).matrix - parity_operator(d15).matrix)) < 1e-12

    def test_even_functions_are_self_dual(self, d15):
        rng = np.random.default_rng(8)
        half = rng.normal(size=d15.j + 1)
        even = GridFunction(d15, np.concatenate([half[:0:-1], half]))
        fwd = fourier_transform(even)
        bwd = inverse_fourier_transform(even)
        assert np.max(np.abs(fwd.values - bwd.values)) < 1e-12

    def test_inverse_roundtrip(self, d7):
        psi = rand_state(d7, 9)
        back = inverse_fourier_transform(fourier_transform(psi))
        assert np.max(np.abs(back.values - psi.values)) < 1e-13


class TestConvolution:
    def test_delta_is_unit(self, d7):
        psi = rand_state(d7, 11)
        out = convolve(GridFunction.delta(d7, 0), psi)
        assert np.max(np.abs(out.values - psi.values)) == 0.0

    def test_shift_wraps_mod_d(self, d3):
        out = convolve(GridFunction.delta(d3, 1), GridFunction.delta(d3, 1))
        assert np.max(np.abs(out.values - GridFunction.delta(d3, -1).values)) == 0.0

    @settings(max_examples=25, deadline=None)
    @given(dim=odd_dims, seed=st.integers(0, 2**31))
    def test_commutative(self, dim, seed):
        phi, psi = rand_state(dim, seed), rand_state(dim, seed + 1)
        ab = convolve(phi, psi).values
        ba = convolve(psi, phi).values
        assert np.max(np.abs(ab - ba)) < 1e-12

    def test_fourier_factorization(self, d15):
        phi, psi = rand_state(d15, 13), rand_state(d15, 14)
        lhs = fourier_transform(convolve(phi, psi)).values
        rhs = math.sqrt(d15.d) * fourier_transform(phi).values * fourier_transform(psi).values
        assert np.max(np.abs(lhs - rhs)) < 1e-12


def random_hermitian(dim: GridDim, seed: int) -> LinearOperator:
    rng = np.random.default_rng(seed)
    raw = rng.normal(size=(dim.d, dim.d)) + 1j * rng.normal(size=(dim.d, dim.d))
    return LinearOperator(dim, (raw + raw.conj().T) / 2)


class TestEigendecomposition:
    def test_already_diagonal(self, d3):
        dec = eigendecompose_hermitian(LinearOperator.diagonal(d3, [-1.0, 0.0, 1.0]))
        assert np.allclose(dec.eigenvalues, [-1, 0, 1], atol=1e-15)
        for k, n in enumerate(d3.indices()):
            expected = GridFunction.delta(d3, [-1, 0, 1][k]).values
            assert np.max(np.abs(dec.vector(k).values - expected)) < 1e-14

    def test_spin_x_spectrum_d3(self, d3):
        jx = LinearOperator(d3, np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]]) / math.sqrt(2))
        dec = eigendecompose_hermitian(jx)
        assert np.max(np.abs(dec.eigenvalues - np.array([-1.0, 0.0, 1.0]))) < 1e-12

    def test_rejects_non_hermitian(self, d3):
        with pytest.raises(ValueError, match="Hermitian"):
            eigendecompose_hermitian(LinearOperator(d3, np.triu(np.ones((3, 3)))))

    @settings(max_examples=20, deadline=None)
    @given(dim=odd_dims, seed=st.integers(0, 2**31))
    def test_reconstruction_and_orthonormality(self, dim, seed):
        M = random_hermitian(dim, seed)
        dec = eigendecompose_hermitian(M)
        scale = M.frobenius_norm()
        assert np.max(np.abs(dec.reconstruct().matrix - M.matrix)) <= 1e-10 * scale
        V = dec.vector_matrix()
        assert np.max(np.abs(V.conj().T @ V - np.eye(dim.d))) <= 1e-10
        assert np.all(np.diff(dec.eigenvalues) >= 0)
        for k in range(dim.d):
            resid = M.matrix @ dec.vector(k).values - dec.eigenvalues[k] * dec.vector(k).values
            assert np.max(np.abs(resid)) <= 1e-10 * scale

    def test_deterministic_repeat(self, d7):
        M = random_hermitian(d7, 99)
        a = eigendecompose_hermitian(M)
        b = eigendecompose_hermitian(M)
        assert np.array_equal(a.eigenvalues, b.eigenvalues)
        for va, vb in zip(a.eigenvectors, b.eigenvectors):
            assert np.array_equal(va.values, vb.values)

    def test_degenerate_cluster_stays_orthonormal(self, d3):
        # doubly degenerate eigenvalue 1 plus a separated one
        v = np.array([1.0, 1.0, 1.0]) / math.sqrt(3)
        M = LinearOperator(d3, np.eye(3) + np.outer(v, v))
        dec = eigendecompose_hermitian(M)
        V = dec.vector_matrix()
        assert np.max(np.abs(V.conj().T @ V - np.eye(3))) < 1e-12
        assert np.allclose(dec.eigenvalues, [1.0, 1.0, 2.0], atol=1e-12)

    def test_phase_convention_positive_pivot(self, d7):
        dec = eigendecompose_hermitian(random_hermitian(d7, 17))
        for vec in dec.eigenvectors:
            fixed = canonical_phase(vec.values)
            assert np.max(np.abs(fixed - vec.values)) < 1e-15
            i = int(np.argmax(np.abs(vec.values)))
            assert abs(vec.values[i].imag) < 1e-12
            assert vec.values[i].real > 0

    def test_sweep_cap_raises(self, d15):
        M = random_hermitian(d15, 4)
        with pytest.raises(ConvergenceError):
            eigendecompose_hermitian(M, JacobiConfig(max_sweeps=1))

    def test_zero_matrix(self, d3):
        dec = eigendecompose_hermitian(LinearOperator(d3, np.zeros((3, 3))))
        assert np.array_equal(dec.eigenvalues, np.zeros(3))


class TestOperatorExponential:
    def test_zero_matrix_gives_identity(self, d3):
        U = operator_exponential(LinearOperator(d3, np.zeros((3, 3))), 1.0)
        assert np.max(np.abs(U.matrix - np.eye(3))) < 1e-14

    def test_spin_z_half_turn(self, d3):
        jz = LinearOperator.diagonal(d3, [-1.0, 0.0, 1.0])
        U = operator_exponential(jz, 1j * math.pi)
        assert np.max(np.abs(U.matrix - np.diag([-1, 1, -1]))) < 1e-12

    @settings(max_examples=15, deadline=None)
    @given(dim=odd_dims, seed=st.integers(0, 2**31), t=st.floats(-5, 5))
    def test_imaginary_scale_is_unitary(self, dim, seed, t):
        M = random_hermitian(dim, seed)
        U = operator_exponential(M, 1j * t)
        assert np.max(np.abs((U @ U.adjoint()).matrix - np.eye(dim.d))) < 1e-12


class TestGridFunctionBasics:
    def test_periodic_indexing(self, d3):
        psi = GridFunction(d3, [10, 20, 30])
        assert psi[-1] == 10 and psi[0] == 20 and psi[1] == 30
        assert psi[2] == 10 and psi[-2] == 30 and psi[4] == 30

    def test_values_read_only(self, d3):
        psi = GridFunction(d3, [1, 2, 3])
        with pytest.raises(ValueError):
            psi.values[0] = 5

    def test_outer_product(self, d3):
        a, b = GridFunction.delta(d3, -1), GridFunction.delta(d3, 1)
        op = outer(a, b)
        assert op.entry(-1, 1) == 1.0
        assert op.entry(1, -1) == 0.0
