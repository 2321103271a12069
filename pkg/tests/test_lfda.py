import numpy as np
import pytest

from localfisher.affinity import local_scaling_affinity
from localfisher.baselines import brute_scatter
from localfisher.errors import BadRank, DimMismatch, MissingLabel
from localfisher.lfda import (
    EmbeddingModel,
    apply_metric,
    build_weights,
    fit_lfda,
    scatter_from_weights,
    transform,
)
from localfisher.matcore import EigenSolution, symmetrize

from conftest import max_principal_angle


class TestBuildWeights:
    def test_two_singleton_classes(self):
        a = np.array([[1.0, 0.3], [0.3, 1.0]])
        w = build_weights(a, ["a", "b"])
        np.testing.assert_array_equal(w.within, [[1.0, 0.0], [0.0, 1.0]])
        np.testing.assert_array_equal(
            w.between, [[1.0 * (0.5 - 1.0), 0.5], [0.5, 1.0 * (0.5 - 1.0)]]
        )

    def test_two_samples_same_class(self):
        a = np.array([[1.0, 0.7], [0.7, 1.0]])
        w = build_weights(a, ["s", "s"])
        assert w.within[0, 1] == pytest.approx(0.7 / 2.0, abs=0)
        assert w.between[0, 1] == 0.0  # 1/n - 1/n_c vanishes with one class

    def test_iris_class_sizes(self, iris):
        x, y = iris
        a = local_scaling_affinity(x, 7)
        w = build_weights(a, y)
        same = np.asarray(y)[:, None] == np.asarray(y)[None, :]
        np.testing.assert_allclose(w.within[same], (a / 50.0)[same], rtol=0, atol=0)
        assert np.all(w.within[~same] == 0.0)
        np.testing.assert_allclose(
            w.between[same], (a * (1.0 / 150.0 - 1.0 / 50.0))[same], rtol=0, atol=0
        )
        assert np.all(w.between[~same] == 1.0 / 150.0)

    def test_missing_label_rejected(self):
        with pytest.raises(MissingLabel):
            build_weights(np.eye(2), ["a", None])

    def test_symmetry(self):
        rng = np.random.default_rng(41)
        x = rng.normal(size=(12, 3))
        y = ["u", "v", "w"] * 4
        w = build_weights(local_scaling_affinity(x, 3), y)
        assert np.array_equal(w.within, w.within.T)
        assert np.array_equal(w.between, w.between.T)


class TestScatterFromWeights:
    def test_zero_weights(self):
        rng = np.random.default_rng(42)
        x = rng.normal(size=(5, 3))
        np.testing.assert_array_equal(
            scatter_from_weights(x, np.zeros((5, 5))), np.zeros((3, 3))
        )

    def test_two_point_hand_value(self):
        x = np.array([[0.0], [2.0]])
        w = np.array([[0.0, 0.5], [0.5, 0.0]])
        np.testing.assert_allclose(scatter_from_weights(x, w), [[2.0]], atol=1e-15)

    def test_matches_brute_force(self):
        rng = np.random.default_rng(43)
        x = rng.normal(size=(12, 4))
        w = symmetrize(rng.random((12, 12)))
        fast = scatter_from_weights(x, w)
        slow = brute_scatter(x, w)
        assert np.abs(fast - slow).max() <= 1e-10 * (1.0 + np.abs(slow).max())


class TestApplyMetric:
    def _solution(self):
        return EigenSolution(
            values=np.array([4.0, 1.0]),
            vectors=np.eye(2),
        )

    def test_plain_is_identity(self):
        np.testing.assert_array_equal(apply_metric(self._solution(), "plain"), np.eye(2))

    def test_weighted_scales_by_sqrt_eigenvalue(self):
        t = apply_metric(self._solution(), "weighted")
        np.testing.assert_array_equal(t, np.diag([2.0, 1.0]))

    def test_weighted_clamps_negative_roundoff(self):
        sol = EigenSolution(values=np.array([1.0, -1e-16]), vectors=np.eye(2))
        t = apply_metric(sol, "weighted")
        assert t[1, 1] == 0.0

    def test_orthonormalized_properties(self):
        rng = np.random.default_rng(44)
        vectors = rng.normal(size=(6, 3))
        sol = EigenSolution(values=np.array([3.0, 2.0, 1.0]), vectors=vectors)
        t = apply_metric(sol, "orthonormalized")
        assert np.abs(t.T @ t - np.eye(3)).max() <= 1e-10
        assert max_principal_angle(t, vectors) <= 1e-8
        for col in t.T:
            assert col[np.argmax(np.abs(col))] > 0.0

    def test_unknown_metric(self):
        with pytest.raises(ValueError):
            apply_metric(self._solution(), "fancy")


class TestFitLfda:
    def test_iris_shapes(self, iris):
        x, y = iris
        model = fit_lfda(x, y, 3, metric="plain")
        assert model.kind == "lfda"
        assert model.transform.shape == (4, 3)
        assert model.embedded.shape == (150, 3)
        assert model.eigenvalues.shape == (3,)
        assert model.fit_params == {"knn": 7}

    def test_duplicate_point_classes_use_ridge(self):
        x = np.vstack([np.tile([0.0, 0.0], (10, 1)), np.tile([1.0, 2.0], (10, 1))])
        y = ["a"] * 10 + ["b"] * 10
        model = fit_lfda(x, y, 1)
        z = model.embedded[:, 0]
        assert abs(z[0] - z[10]) > 1e-6  # the two point masses separate
        assert np.abs(z[:10] - z[0]).max() == 0.0

    def test_transform_columns_are_within_scatter_orthonormal(self):
        rng = np.random.default_rng(45)
        x = rng.normal(size=(40, 5))
        y = [f"c{i % 3}" for i in range(40)]
        model = fit_lfda(x, y, 2)
        a = local_scaling_affinity(x, 7)
        w = build_weights(a, y)
        s_within = scatter_from_weights(x, w.within)
        gram = model.transform.T @ s_within @ model.transform
        assert np.abs(gram - np.eye(2)).max() <= 1e-8

    def test_rayleigh_quotient_consistency(self):
        rng = np.random.default_rng(46)
        x = rng.normal(size=(30, 4))
        y = [f"c{i % 3}" for i in range(30)]
        model = fit_lfda(x, y, 3)
        a = local_scaling_affinity(x, 7)
        w = build_weights(a, y)
        s_w = scatter_from_weights(x, w.within)
        s_b = scatter_from_weights(x, w.between)
        assert np.all(np.diff(model.eigenvalues) <= 0.0)
        for value, vec in zip(model.eigenvalues, model.transform.T):
            quotient = (vec @ s_b @ vec) / (vec @ s_w @ vec)
            assert value == pytest.approx(quotient, abs=1e-8 * (1.0 + abs(value)))

    def test_single_class_gives_zero_eigenvalues(self):
        rng = np.random.default_rng(47)
        x = rng.normal(size=(20, 3))
        model = fit_lfda(x, ["only"] * 20, 2)
        assert np.abs(model.eigenvalues).max() <= 1e-12

    def test_bad_rank(self, iris):
        x, y = iris
        with pytest.raises(BadRank):
            fit_lfda(x, y, 9)

    def test_missing_labels_rejected(self):
        with pytest.raises(MissingLabel):
            fit_lfda(np.eye(4), ["a", None, "b", "b"], 1, k=2)

    def test_singleton_class_warns(self):
        rng = np.random.default_rng(48)
        x = rng.normal(size=(9, 2))
        y = ["a"] * 8 + ["b"]
        with pytest.warns(UserWarning, match="single sample"):
            fit_lfda(x, y, 1, k=3)


class TestTransform:
    def test_round_trip_on_training_data(self, iris):
        x, y = iris
        model = fit_lfda(x, y, 3)
        assert np.abs(transform(model, x) - model.embedded).max() <= 1e-10

    def test_identity_transform(self):
        model = EmbeddingModel(
            kind="lfda",
            transform=np.eye(3),
            embedded=None,
            eigenvalues=np.ones(3),
            metric="plain",
            r=3,
        )
        x_new = np.arange(12.0).reshape(4, 3)
        np.testing.assert_array_equal(transform(model, x_new), x_new)

    def test_dim_mismatch(self, iris):
        x, y = iris
        model = fit_lfda(x, y, 2)
        with pytest.raises(DimMismatch):
            transform(model, x[:, :3])


class TestInvariances:
    def test_translation_invariance(self):
        rng = np.random.default_rng(49)
        x = rng.normal(size=(30, 4))
        y = [f"c{i % 3}" for i in range(30)]
        shift = rng.normal(size=4)
        base = fit_lfda(x, y, 2)
        moved = fit_lfda(x + shift, y, 2)
        assert np.abs(base.transform - moved.transform).max() <= 1e-10

    def test_label_rename_bit_invariance(self):
        rng = np.random.default_rng(50)
        x = rng.normal(size=(24, 3))
        y = [f"c{i % 2}" for i in range(24)]
        renamed = [{"c0": "zebra", "c1": "aardvark"}[lab] for lab in y]
        base = fit_lfda(x, y, 2)
        other = fit_lfda(x, renamed, 2)
        assert base.transform.tobytes() == other.transform.tobytes()

    def test_sample_permutation_equivariance(self):
        rng = np.random.default_rng(51)
        x = rng.normal(size=(30, 4))
        y = [f"c{i % 3}" for i in range(30)]
        perm = rng.permutation(30)
        base = fit_lfda(x, y, 2)
        shuffled = fit_lfda(x[perm], [y[i] for i in perm], 2)
        assert np.abs(base.transform - shuffled.transform).max() <= 1e-10
        assert np.abs(base.embedded[perm] - shuffled.embedded).max() <= 1e-10
