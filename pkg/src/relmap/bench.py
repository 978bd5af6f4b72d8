"""Accuracy sweeps over ``p`` and wall-clock timing of the map operators."""
import logging
import statistics
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .approx import DEFAULT_EPS, chm_map, conv_map, genmean_map
from .errors import DimensionMismatchError
from .morphology import dilate
from .relation import CHM, Convolution, ExactDilation, GeneralizedMean, compute_map
from .scenes import build_scene

__all__ = ["BenchRecord", "mse", "sweep_p", "timing", "TIMED_METHODS"]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class BenchRecord:
    """One row of a sweep or a timing run.

    ``metric`` is an MSE for sweeps and the median wall time in seconds for
    timings; ``metric_min`` is only filled for timings.
    """

    experiment: str
    method: str
    param: float
    metric: float
    repeats: int = 1
    metric_min: Optional[float] = None

    def __post_init__(self):
        if not self.metric >= 0:
            raise ValueError(f"metric must be >= 0, got {self.metric}")
        if self.repeats < 1:
            raise ValueError(f"repeats must be >= 1, got {self.repeats}")


def mse(a, b):
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.mean((a - b) ** 2))


def sweep_p(source, kernel, p_values, methods=("chm", "genmean"), experiment="sweep-p",
            threads=None):
    """MSE against the exact dilation for each mean method and each ``p``.

    Every ``p`` also gets a row for the parameter-free baselines: the
    convolution map and the dilation itself (MSE 0). The dilation is computed
    once and reused as the per-pixel scale of both mean operators.
    """
    p_values = [float(p) for p in p_values]
    if any(not p > 0 for p in p_values):
        raise ValueError("all p values must be > 0")
    unknown = set(methods) - {"chm", "genmean"}
    if unknown:
        raise ValueError(f"sweep methods must be 'chm' or 'genmean', got {sorted(unknown)}")
    exact = dilate(source, kernel, "product", threads)
    conv_err = mse(conv_map(source, kernel, "kernel_sum", threads), exact)
    records = []
    for p in p_values:
        for name in methods:
            if name == "chm":
                approx = chm_map(source, kernel, p, DEFAULT_EPS, threads=threads, tau=exact)
            else:
                approx = genmean_map(source, kernel, p, threads=threads, tau=exact)
            records.append(BenchRecord(experiment, name, p, mse(approx, exact)))
        records.append(BenchRecord(experiment, "conv", p, conv_err))
        records.append(BenchRecord(experiment, "dilation", p, 0.0))
    return records


TIMED_METHODS = ("dilation", "conv", "chm", "genmean")


def _method(name, p):
    return {
        "dilation": ExactDilation(),
        "conv": Convolution(),
        "chm": CHM(p),
        "genmean": GeneralizedMean(p),
    }[name]


def timing(sizes, methods=TIMED_METHODS, p=100.0, repeats=5, warmup=1):
    """Median and minimum wall time of each map on the "right of" scene per size.

    Runs are single-threaded. Within a repeat the methods run back to back so
    that slow drifts of the machine affect all of them alike.
    """
    if repeats < 3:
        raise ValueError(f"repeats must be >= 3, got {repeats}")
    if warmup < 1:
        raise ValueError(f"warmup must be >= 1, got {warmup}")
    records = []
    for n in sizes:
        scene = build_scene("right", int(n))
        chosen = [(name, _method(name, p)) for name in methods]
        for _ in range(warmup):
            for _, method in chosen:
                compute_map(scene.source, scene.kernel, method, threads=1)
        samples = {name: [] for name, _ in chosen}
        for _ in range(repeats):
            for name, method in chosen:
                t0 = time.perf_counter()
                compute_map(scene.source, scene.kernel, method, threads=1)
                samples[name].append(time.perf_counter() - t0)
        for name, _ in chosen:
            med = statistics.median(samples[name])
            log.info("timing size=%d method=%s median=%.4fs", n, name, med)
            records.append(BenchRecord("timing", name, float(n), med, repeats, min(samples[name])))
    return records
