"""Numeric kernels for tie-aware rank correlation.

Two interchangeable implementations of the same math:

* loop kernels compiled with numba ``@njit`` (the default when numba is
  importable), and
* a vectorized pure-numpy fallback.

Set ``SDG_INTERACTIONS_NO_NUMBA=1`` in the environment to force the numpy
path; ``USING_NUMBA`` reports which one is active. Both paths are exposed
unconditionally (``*_numpy`` names, and ``*_numba`` when available) so the
test suite and the benchmark in ``benchmarks/`` can compare them.

Ranking uses average (fractional) ranks for ties and the correlation is
the Pearson coefficient of the ranked vectors. Degenerate inputs (fewer
than two points, or a constant vector) yield NaN.
"""

from __future__ import annotations

import os

import numpy as np

_FLAG = os.environ.get("SDG_INTERACTIONS_NO_NUMBA", "").strip().lower()
NUMBA_DISABLED = _FLAG in {"1", "true", "yes", "on"}


def _average_ranks_loop(values):
    n = values.shape[0]
    order = np.argsort(values)
    ranks = np.empty(n, dtype=np.float64)
    i = 0
    while i < n:
        j = i
        while j + 1 < n and values[order[j + 1]] == values[order[i]]:
            j += 1
        avg = 0.5 * (i + j) + 1.0
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        i = j + 1
    return ranks


def _pearson_loop(x, y):
    n = x.shape[0]
    if n < 2:
        return np.nan
    mx = 0.0
    my = 0.0
    for i in range(n):
        mx += x[i]
        my += y[i]
    mx /= n
    my /= n
    sxy = 0.0
    sxx = 0.0
    syy = 0.0
    for i in range(n):
        dx = x[i] - mx
        dy = y[i] - my
        sxy += dx * dy
        sxx += dx * dx
        syy += dy * dy
    if sxx == 0.0 or syy == 0.0:
        return np.nan
    return sxy / np.sqrt(sxx * syy)


def _spearman_loop(x, y):
    if x.shape[0] != y.shape[0]:
        raise ValueError("length mismatch")
    return _pearson_loop(_average_ranks_loop(x), _average_ranks_loop(y))


def _spearman_aligned_loop(years_a, vals_a, years_b, vals_b, min_n):
    na = years_a.shape[0]
    nb = years_b.shape[0]
    cap = na if na < nb else nb
    x = np.empty(cap, dtype=np.float64)
    y = np.empty(cap, dtype=np.float64)
    i = 0
    j = 0
    k = 0
    while i < na and j < nb:
        if years_a[i] == years_b[j]:
            x[k] = vals_a[i]
            y[k] = vals_b[j]
            k += 1
            i += 1
            j += 1
        elif years_a[i] < years_b[j]:
            i += 1
        else:
            j += 1
    if k < min_n or k < 2:
        return np.nan
    return _spearman_loop(x[:k], y[:k])


def average_ranks_numpy(values):
    """Average ranks (1-based) with fractional ranks for tie groups."""
    v = np.asarray(values, dtype=np.float64)
    n = v.size
    order = np.argsort(v, kind="mergesort")
    sv = v[order]
    new_group = np.empty(n, dtype=bool)
    new_group[0] = True
    new_group[1:] = sv[1:] != sv[:-1]
    group = np.cumsum(new_group) - 1
    counts = np.bincount(group)
    ends = np.cumsum(counts)
    starts = ends - counts
    group_rank = 0.5 * (starts + ends - 1) + 1.0
    ranks = np.empty(n, dtype=np.float64)
    ranks[order] = group_rank[group]
    return ranks


def _pearson_numpy(x, y):
    if x.size < 2:
        return float("nan")
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    if sxx == 0.0 or syy == 0.0:
        return float("nan")
    return float(dx @ dy) / float(np.sqrt(sxx * syy))


def spearman_numpy(x, y):
    """Spearman rho of two equal-length vectors; NaN when degenerate."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.size != y.size:
        raise ValueError("length mismatch")
    if x.size < 2:
        return float("nan")
    return _pearson_numpy(average_ranks_numpy(x), average_ranks_numpy(y))


def spearman_aligned_numpy(years_a, vals_a, years_b, vals_b, min_n):
    """Spearman rho over the years common to both series; NaN when the
    overlap is below ``min_n`` or the overlapping values are degenerate."""
    common, ia, ib = np.intersect1d(
        years_a, years_b, assume_unique=True, return_indices=True
    )
    if common.size < min_n or common.size < 2:
        return float("nan")
    return spearman_numpy(vals_a[ia], vals_b[ib])


if not NUMBA_DISABLED:
    try:
        from numba import njit
    except ImportError:
        njit = None
else:
    njit = None

if njit is not None:
    average_ranks_numba = njit(cache=True)(_average_ranks_loop)
    _pearson_numba = njit(cache=True)(_pearson_loop)

    @njit(cache=True)
    def spearman_numba(x, y):
        if x.shape[0] != y.shape[0]:
            raise ValueError("length mismatch")
        return _pearson_numba(average_ranks_numba(x), average_ranks_numba(y))

    @njit(cache=True)
    def spearman_aligned_numba(years_a, vals_a, years_b, vals_b, min_n):
        na = years_a.shape[0]
        nb = years_b.shape[0]
        cap = na if na < nb else nb
        x = np.empty(cap, dtype=np.float64)
        y = np.empty(cap, dtype=np.float64)
        i = 0
        j = 0
        k = 0
        while i < na and j < nb:
            if years_a[i] == years_b[j]:
                x[k] = vals_a[i]
                y[k] = vals_b[j]
                k += 1
                i += 1
                j += 1
            elif years_a[i] < years_b[j]:
                i += 1
            else:
                j += 1
        if k < min_n or k < 2:
            return np.nan
        return spearman_numba(x[:k], y[:k])

    USING_NUMBA = True
    average_ranks = average_ranks_numba
    spearman = spearman_numba
    spearman_aligned = spearman_aligned_numba
else:
    USING_NUMBA = False
    average_ranks = average_ranks_numpy
    spearman = spearman_numpy
    spearman_aligned = spearman_aligned_numpy


def warmup():
    """Trigger JIT compilation so timings exclude compile cost."""
    x = np.array([1.0, 2.0, 2.0, 4.0])
    y = np.array([1.0, 3.0, 2.0, 4.0])
    years = np.array([2000, 2001, 2002, 2003], dtype=np.int64)
    average_ranks(x)
    spearman(x, y)
    spearman_aligned(years, x, years, y, 2)
