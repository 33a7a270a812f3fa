import numpy as np

from circbeta.opuc import SpectralMeasureCircle, VerblunskySeq


def random_verblunsky(g, m, scale=0.9):
    """Random complex sequence: interior uniform in a disk, last uniform on the circle."""
    r = scale * np.sqrt(g.random(m - 1))
    phase = np.exp(2j * np.pi * g.random(m - 1))
    last = np.exp(2j * np.pi * g.random())
    return VerblunskySeq(np.concatenate([r * phase, [last]]))


def random_real_verblunsky(g, m, scale=0.9):
    """Random real sequence with final coefficient -1 (symmetric-measure case)."""
    inner = scale * (2.0 * g.random(m - 1) - 1.0)
    return VerblunskySeq(np.concatenate([inner, [-1.0]]))


def random_measure(g, n, min_gap=1e-3):
    """Random measure with comfortably separated support and non-tiny weights."""
    while True:
        th = np.sort(g.random(n) * 2 * np.pi)
        if n == 1 or min(np.diff(th).min(), 2 * np.pi - th[-1] + th[0]) > min_gap:
            break
    w = g.dirichlet(np.ones(n)) * 0.9 + 0.1 / n
    return SpectralMeasureCircle(th, w / w.sum())
