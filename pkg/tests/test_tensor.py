import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import contract_loops, golden_b
from specrad import (
    DenseTensor,
    EigenPair,
    add_identity_shift,
    contract,
    diagonal_similarity,
    identity_tensor,
    power_iteration,
    random_tensor,
    residual,
    row_sums,
)

shapes = st.sampled_from([(2, 2), (2, 3), (2, 5), (3, 2), (3, 3), (3, 4), (4, 2), (4, 3)])
seeds = st.integers(min_value=0, max_value=2**31 - 1)


class TestDenseTensor:
    def test_rejects_negative_entries(self):
        with pytest.raises(ValueError, match="nonnegative"):
            DenseTensor([[0.0, -1.0], [0.0, 0.0]])

    def test_rejects_nan_and_inf(self):
        with pytest.raises(ValueError, match="finite"):
            DenseTensor([[np.nan, 0.0], [0.0, 0.0]])
        with pytest.raises(ValueError, match="finite"):
            DenseTensor([[np.inf, 0.0], [0.0, 0.0]])

    def test_rejects_non_cubical(self):
        with pytest.raises(ValueError, match="cubical"):
            DenseTensor(np.zeros((2, 3)))

    def test_rejects_rank_one(self):
        with pytest.raises(ValueError, match="order"):
            DenseTensor(np.zeros(4))

    def test_entries_are_lexicographic_flat_view(self):
        t = random_tensor(3, 2, seed=5)
        assert t.entries.shape == (8,)
        assert np.array_equal(t.entries.reshape(2, 2, 2), t.data)

    def test_data_is_read_only(self):
        t = random_tensor(2, 3, seed=1)
        with pytest.raises(ValueError):
            t.data[0, 0] = 1.0

    def test_addition_and_equality(self):
        a = random_tensor(3, 2, seed=1)
        b = random_tensor(3, 2, seed=2)
        total = a + b
        assert np.array_equal(total.data, a.data + b.data)
        assert a == random_tensor(3, 2, seed=1)
        assert a != b


class TestEigenPair:
    def test_rejects_zero_vector(self):
        with pytest.raises(ValueError, match="nonzero"):
            EigenPair(1.0, np.zeros(3))

    def test_holds_value_and_vector(self):
        pair = EigenPair(2.0, [1.0, 0.0])
        assert pair.value == 2.0


class TestContract:
    def test_golden_with_ones(self):
        a = add_identity_shift(golden_b(), 1.0)
        out = contract(a, np.ones(3))
        # hand sums of the slice entries plus the unit shift
        assert out == pytest.approx([4.72, 10.02, 10.55], rel=1e-12)

    def test_identity_tensor_acts_componentwise(self):
        ident = identity_tensor(3, 4, 1.0)
        x = np.array([1.0, 2.0, 3.0, 0.5])
        assert contract(ident, x) == pytest.approx(x**2, rel=1e-15)

    def test_matrix_case_is_matvec(self):
        a = DenseTensor([[1.0, 1.0], [1.0, 1.0]])
        assert contract(a, [1.0, 2.0]) == pytest.approx([3.0, 3.0])

    def test_dimension_mismatch(self):
        a = random_tensor(3, 3, seed=0)
        with pytest.raises(ValueError, match="length 3"):
            contract(a, np.ones(4))

    def test_rejects_non_finite_vector(self):
        a = random_tensor(3, 3, seed=0)
        with pytest.raises(ValueError, match="finite"):
            contract(a, [1.0, np.nan, 1.0])

    @settings(max_examples=40, deadline=None)
    @given(shape=shapes, seed=seeds)
    def test_matches_scalar_loop_oracle(self, shape, seed):
        order, dim = shape
        t = random_tensor(order, dim, seed)
        x = np.random.default_rng(seed + 1).uniform(-2.0, 2.0, size=dim)
        assert contract(t, x) == pytest.approx(contract_loops(t, x), rel=1e-10, abs=1e-10)

    @settings(max_examples=40, deadline=None)
    @given(shape=shapes, seed=seeds, scale=st.floats(min_value=0.01, max_value=100.0))
    def test_homogeneity(self, shape, seed, scale):
        order, dim = shape
        t = random_tensor(order, dim, seed)
        x = np.random.default_rng(seed).uniform(0.1, 2.0, size=dim)
        lhs = contract(t, scale * x)
        rhs = scale ** (order - 1) * contract(t, x)
        assert lhs == pytest.approx(rhs, rel=1e-12)

    @settings(max_examples=30, deadline=None)
    @given(shape=shapes, seed=seeds)
    def test_linear_in_the_tensor(self, shape, seed):
        order, dim = shape
        a = random_tensor(order, dim, seed)
        b = random_tensor(order, dim, seed + 7)
        x = np.random.default_rng(seed).uniform(0.0, 2.0, size=dim)
        assert contract(a + b, x) == pytest.approx(contract(a, x) + contract(b, x), rel=1e-12)


class TestRowSums:
    def test_equals_contract_with_ones_exactly(self):
        for seed in range(5):
            t = random_tensor(3, 4, seed)
            assert np.array_equal(row_sums(t), contract(t, np.ones(4)))

    def test_all_ones_tensor(self):
        t = DenseTensor(np.ones((2, 2, 2)))
        assert row_sums(t) == pytest.approx([4.0, 4.0])

    def test_golden_extremes(self):
        a = add_identity_shift(golden_b(), 1.0)
        sums = row_sums(a)
        assert sums.min() == pytest.approx(4.72, rel=1e-12)
        assert sums.max() == pytest.approx(10.55, rel=1e-12)


class TestDiagonalSimilarity:
    def test_all_ones_scaling_is_identity(self):
        t = random_tensor(3, 3, seed=9)
        out = diagonal_similarity(t, np.ones(3))
        assert np.array_equal(out.data, t.data)

    def test_golden_one_sweep_row_sums(self):
        a = add_identity_shift(golden_b(), 1.0)
        sums = row_sums(a)
        out = diagonal_similarity(a, sums ** 0.5)
        expected = [
            1.0 + 3.72 * 10.02 / 4.72,
            1.0 + 9.02 * 4.72 / 10.02,
            (9.55 * 4.72 + 10.55) / 10.55,
        ]
        assert row_sums(out) == pytest.approx(expected, rel=1e-12)

    def test_rejects_nonpositive_scaling(self):
        t = random_tensor(3, 3, seed=0)
        with pytest.raises(ValueError, match="positive"):
            diagonal_similarity(t, [1.0, 0.0, 1.0])
        with pytest.raises(ValueError, match="positive"):
            diagonal_similarity(t, [1.0, -2.0, 1.0])

    @settings(max_examples=30, deadline=None)
    @given(shape=shapes, seed=seeds)
    def test_composition(self, shape, seed):
        order, dim = shape
        t = random_tensor(order, dim, seed)
        rng = np.random.default_rng(seed + 3)
        d1 = rng.uniform(0.5, 2.0, size=dim)
        d2 = rng.uniform(0.5, 2.0, size=dim)
        twice = diagonal_similarity(diagonal_similarity(t, d1), d2)
        once = diagonal_similarity(t, d1 * d2)
        assert twice.data == pytest.approx(once.data, rel=1e-12)

    def test_eigenpair_transfers_with_inverse_scaling(self):
        # near-exact eigenpair of a random positive 3x3x3 tensor transfers to
        # the rescaled tensor with the componentwise-divided eigenvector
        rng = np.random.default_rng(11)
        t = DenseTensor(rng.uniform(0.5, 10.0, size=(3, 3, 3)))
        est = power_iteration(t, tol=1e-13, max_iter=100_000)
        lam = 0.5 * (est.lower + est.upper)
        assert residual(t, lam, est.vector) <= 1e-12
        d = rng.uniform(0.5, 2.0, size=3)
        scaled = diagonal_similarity(t, d)
        assert residual(scaled, lam, est.vector / d) <= 1e-10

    def test_matrix_case_matches_inv_d_a_d(self):
        m = positive = np.random.default_rng(4).uniform(0.1, 5.0, size=(4, 4))
        d = np.random.default_rng(5).uniform(0.5, 2.0, size=4)
        out = diagonal_similarity(DenseTensor(m), d)
        expected = np.diag(1.0 / d) @ m @ np.diag(d)
        assert out.data == pytest.approx(expected, rel=1e-12)


class TestAddIdentityShift:
    def test_zero_shift_is_identity(self):
        t = random_tensor(3, 3, seed=2)
        assert add_identity_shift(t, 0.0) == t

    def test_golden_row_sums_after_unit_shift(self):
        shifted = add_identity_shift(golden_b(), 1.0)
        assert row_sums(shifted) == pytest.approx([4.72, 10.02, 10.55], rel=1e-12)

    def test_pure_identity_action_on_zero_tensor(self):
        zero = DenseTensor(np.zeros((3, 3, 3)))
        shifted = add_identity_shift(zero, 1.0)
        x = np.array([2.0, 0.5, 3.0])
        assert contract(shifted, x) == pytest.approx(x**2, rel=1e-15)

    def test_rejects_negative_shift(self):
        with pytest.raises(ValueError, match="nonnegative"):
            add_identity_shift(golden_b(), -1.0)

    @settings(max_examples=20, deadline=None)
    @given(shape=shapes, seed=seeds, alpha=st.floats(min_value=0.0, max_value=5.0))
    def test_contract_shifts_componentwise(self, shape, seed, alpha):
        order, dim = shape
        t = random_tensor(order, dim, seed)
        x = np.random.default_rng(seed).uniform(0.1, 2.0, size=dim)
        shifted = add_identity_shift(t, alpha)
        assert contract(shifted, x) == pytest.approx(
            contract(t, x) + alpha * x ** (order - 1), rel=1e-12
        )


class TestRandomTensor:
    def test_deterministic_for_same_seed(self):
        assert random_tensor(3, 5, seed=99) == random_tensor(3, 5, seed=99)
        assert random_tensor(3, 5, seed=99) != random_tensor(3, 5, seed=100)

    def test_entries_within_range(self):
        t = random_tensor(3, 6, seed=3)
        assert t.data.min() >= 0.0
        assert t.data.max() <= 10.0

    def test_mean_near_center(self):
        t = random_tensor(3, 20, seed=0)
        assert abs(t.data.mean() - 5.0) <= 0.2

    def test_entry_cap(self):
        with pytest.raises(ValueError, match="exceeding the cap"):
            random_tensor(3, 1000, seed=0)
        with pytest.raises(ValueError, match="cap"):
            random_tensor(2, 4, seed=0, max_entries=15)

    def test_bad_shape_arguments(self):
        with pytest.raises(ValueError, match="order"):
            random_tensor(1, 3, seed=0)
        with pytest.raises(ValueError, match="dim"):
            random_tensor(2, 0, seed=0)
