import numpy as np
import pytest
from scipy.linalg import subspace_angles
from sklearn.datasets import load_iris


@pytest.fixture(scope="session")
def iris():
    """Iris features and species names, (150, 4) with 3 classes of 50."""
    bunch = load_iris()
    labels = [str(bunch.target_names[t]) for t in bunch.target]
    return np.asarray(bunch.data, dtype=np.float64), labels


def loo_1nn_accuracy(z, labels):
    """Leave-one-out nearest-neighbor accuracy in the embedded space."""
    z = np.asarray(z, dtype=np.float64)
    labels = np.asarray(labels, dtype=object)
    d2 = ((z[:, None, :] - z[None, :, :]) ** 2).sum(axis=-1)
    np.fill_diagonal(d2, np.inf)
    predicted = labels[d2.argmin(axis=1)]
    return float(np.mean(predicted == labels))


def max_principal_angle(a, b):
    """Largest canonical angle between the column spans of a and b."""
    return float(subspace_angles(np.asarray(a), np.asarray(b)).max())


def two_circles(n=100, seed=0, noise=0.05):
    """Two concentric rings (radii 1 and 3), labeled inner/outer."""
    rng = np.random.default_rng(seed)
    half = n // 2
    theta1 = np.linspace(0.0, 2.0 * np.pi, half, endpoint=False)
    theta2 = np.linspace(0.0, 2.0 * np.pi, n - half, endpoint=False)
    r1 = 1.0 + rng.normal(0.0, noise, half)
    r2 = 3.0 + rng.normal(0.0, noise, n - half)
    x = np.vstack([
        np.c_[r1 * np.cos(theta1), r1 * np.sin(theta1)],
        np.c_[r2 * np.cos(theta2), r2 * np.sin(theta2)],
    ])
    y = ["inner"] * half + ["outer"] * (n - half)
    return x, y


def random_labeled(rng, n=40, d=5, classes=3):
    """Random data with randomly assigned classes, each of size >= 2."""
    x = rng.normal(size=(n, d))
    while True:
        y = [f"c{rng.integers(classes)}" for _ in range(n)]
        _, counts = np.unique(y, return_counts=True)
        if len(counts) == classes and counts.min() >= 2:
            return x, y


def gaussian_blobs(rng, centers, per_class=20, spread=0.3):
    """Well-separated unimodal classes around the given centers."""
    centers = np.asarray(centers, dtype=np.float64)
    xs, ys = [], []
    for c, center in enumerate(centers):
        xs.append(center + spread * rng.normal(size=(per_class, centers.shape[1])))
        ys.extend([f"blob{c}"] * per_class)
    return np.vstack(xs), ys
