"""File formats for sample batches and histograms.

CSV: header row then one draw per row, eigenvalues sorted ascending
(columns ``theta_1..theta_n`` for circular batches, ``x_1..x_n`` for Jacobi
ones).  JSON lines: one self-describing record per draw carrying the full
spec, the eigenvalues, the spectral weights, and (when kept) the
coefficient rows as [re, im] pairs.  All floats are written with repr-exact
precision so identical seeds give byte-identical files.
"""

from __future__ import annotations

import json

import numpy as np

from .ensembles import EnsembleSpec, SampleBatch, sorted_gaps
from .rng import RngStream

SCHEMA_VERSION = 1


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def write_batch_csv(batch: SampleBatch, path: str) -> None:
    prefix = "theta" if batch.kind == "circular" else "x"
    n = batch.eigenvalues.shape[1]
    with open(path, "w", newline="") as fh:
        fh.write(",".join(f"{prefix}_{j + 1}" for j in range(n)) + "\n")
        for row in batch.eigenvalues:
            fh.write(",".join(_fmt(x) for x in row) + "\n")


def write_batch_jsonl(batch: SampleBatch, path: str) -> None:
    spec = batch.spec
    base = {
        "schema_version": SCHEMA_VERSION,
        "kind": batch.kind,
        "n": spec.n,
        "beta": spec.beta,
        "a": spec.a,
        "b": spec.b,
        "seed": spec.seed.seed,
        "stream_id": spec.seed.stream_id,
    }
    with open(path, "w") as fh:
        for i in range(batch.count):
            rec = dict(base)
            rec["index"] = i
            rec["eigenvalues"] = [float(x) for x in batch.eigenvalues[i]]
            if batch.weights is not None:
                rec["weights"] = [float(w) for w in batch.weights[i]]
            if batch.alphas is not None:
                rec["alphas"] = [[float(a.real), float(a.imag)] for a in np.atleast_1d(batch.alphas[i]).astype(complex)]
            fh.write(json.dumps(rec, sort_keys=True) + "\n")


def write_batch(batch: SampleBatch, path: str, fmt: str) -> None:
    if fmt == "csv":
        write_batch_csv(batch, path)
    elif fmt == "jsonl":
        write_batch_jsonl(batch, path)
    else:
        raise ValueError(f"unknown format {fmt!r}")


def read_batch(path: str) -> SampleBatch:
    """Read a batch back from either format (eigenvalues always; the rest if present)."""
    if path.endswith(".jsonl"):
        kinds, rows, weights, alphas = set(), [], [], []
        meta = None
        with open(path) as fh:
            for line in fh:
                if not line.strip():
                    continue
                rec = json.loads(line)
                kinds.add(rec["kind"])
                rows.append(rec["eigenvalues"])
                if "weights" in rec:
                    weights.append(rec["weights"])
                if "alphas" in rec:
                    alphas.append([complex(re, im) for re, im in rec["alphas"]])
                meta = rec
        if meta is None:
            raise ValueError(f"{path}: empty batch file")
        if len(kinds) != 1:
            raise ValueError(f"{path}: mixed batch kinds {sorted(kinds)}")
        spec = EnsembleSpec(
            n=meta["n"],
            beta=meta["beta"],
            a=meta.get("a"),
            b=meta.get("b"),
            seed=RngStream(meta.get("seed", 0), meta.get("stream_id", 0)),
        )
        return SampleBatch(
            spec,
            kinds.pop(),
            np.asarray(rows, dtype=float),
            np.asarray(weights, dtype=float) if weights else None,
            np.asarray(alphas) if alphas else None,
        )
    with open(path) as fh:
        header = fh.readline().strip()
        if not header:
            raise ValueError(f"{path}: empty batch file")
        cols = header.split(",")
        if cols[0].startswith("theta_"):
            kind = "circular"
        elif cols[0].startswith("x_"):
            kind = "jacobi"
        else:
            raise ValueError(f"{path}: unrecognized header {header!r}")
        rows = []
        for line in fh:
            if line.strip():
                rows.append([float(tok) for tok in line.split(",")])
    data = np.asarray(rows, dtype=float)
    if data.ndim != 2 or data.shape[1] != len(cols):
        raise ValueError(f"{path}: ragged rows")
    spec = EnsembleSpec(n=len(cols), beta=float("nan"))
    return SampleBatch(spec, kind, data)


def batch_statistic(batch: SampleBatch, stat: str) -> np.ndarray:
    """Pooled scalar statistic across all draws: angle, gap, or eigenvalue."""
    if stat == "angle":
        if batch.kind != "circular":
            raise ValueError("angle statistic requires a circular batch")
        return batch.eigenvalues.reshape(-1)
    if stat == "gap":
        if batch.kind != "circular":
            raise ValueError("gap statistic requires a circular batch")
        return sorted_gaps(batch.eigenvalues).reshape(-1)
    if stat == "eigenvalue":
        return batch.eigenvalues.reshape(-1)
    raise ValueError(f"unknown statistic {stat!r}")


def histogram_rows(values: np.ndarray, bins: int, lo: float | None = None, hi: float | None = None):
    """Fixed-bin histogram as (bin_left, bin_right, count, density) rows.

    The density column integrates to 1: sum(density * width) = 1.
    """
    values = np.asarray(values, dtype=float)
    if bins < 1:
        raise ValueError("bins must be >= 1")
    lo = float(values.min()) if lo is None else float(lo)
    hi = float(values.max()) if hi is None else float(hi)
    if not hi > lo:
        hi = lo + 1.0
    counts, edges = np.histogram(values, bins=bins, range=(lo, hi))
    total = counts.sum()
    widths = np.diff(edges)
    density = counts / (total * widths) if total > 0 else np.zeros_like(widths)
    return [
        (float(edges[i]), float(edges[i + 1]), int(counts[i]), float(density[i]))
        for i in range(bins)
    ]


def write_histogram_csv(rows, path: str) -> None:
    with open(path, "w", newline="") as fh:
        fh.write("bin_left,bin_right,count,density\n")
        for left, right, count, density in rows:
            fh.write(f"{_fmt(left)},{_fmt(right)},{count},{_fmt(density)}\n")
