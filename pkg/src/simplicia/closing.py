"""Completion probabilities p, per-dimension closing contributions, and
matched random baselines.

All probability arithmetic is exact rational; floats appear only when a
report is serialized.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .almost import CensusCounts, count_all_ads
from .graph import DirectedGraph, generate_er


def compute_p(counts: CensusCounts) -> tuple[Fraction, ...]:
    """Completion probability per dimension: completed_d / N^A_d.

    The vector runs through every dimension with a defined ratio, including
    the top row one above the last simplex dimension (where it is 0 for a
    full build).  It stops at the first dimension with no almost-simplices.
    """
    out = []
    for row in counts.rows:
        if row.almost == 0:
            break
        out.append(Fraction(row.completed, row.almost))
    return tuple(out)


def compute_p_hat(p: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Closing contribution by dimension: strip from p_d the closings implied
    by lower dimensions, weighted C(d-1, i-1)."""
    out: list[Fraction] = []
    for d, p_d in enumerate(p, start=1):
        acc = p_d
        for i, prior in enumerate(out, start=1):
            acc -= math.comb(d - 1, i - 1) * prior
        out.append(acc)
    return tuple(out)


def invert_p_hat(p_hat: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Inverse of compute_p_hat (the transform is unitriangular)."""
    out: list[Fraction] = []
    for d, hat_d in enumerate(p_hat, start=1):
        acc = hat_d
        for i, prior in enumerate(p_hat[: d - 1], start=1):
            acc += math.comb(d - 1, i - 1) * prior
        out.append(acc)
    return tuple(out)


def compute_p_hat2(p: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Variant subtracting only the dimension-1 and dimension-2 contributions;
    equals compute_p_hat up to d = 3."""
    hat = compute_p_hat(p[: min(len(p), 2)])
    out = list(hat)
    for d in range(3, len(p) + 1):
        out.append(p[d - 1] - hat[0] - (d - 1) * hat[1])
    return tuple(out)


@dataclass(frozen=True)
class ClosingProfile:
    """Aligned per-dimension vectors; p_hat/p_hat2 stop before a cap-adjacent
    final row, whose p value is only as complete as the capped build."""

    p: tuple[Fraction, ...]
    p_hat: tuple[Fraction, ...]
    p_hat2: tuple[Fraction, ...]


def build_profile(counts: CensusCounts) -> ClosingProfile:
    p = compute_p(counts)
    hat_len = len(p)
    if p and counts.rows[len(p) - 1].cap_adjacent:
        hat_len -= 1
    p_hat = compute_p_hat(p[:hat_len])
    p_hat2 = compute_p_hat2(p[:hat_len])
    for d in range(len(p_hat)):
        acc = p_hat[d]
        for i in range(d):
            acc += math.comb(d, i) * p_hat[i]
        if acc != p[d]:
            raise AssertionError("closing-contribution recursion identity violated")
    return ClosingProfile(p, p_hat, p_hat2)


@dataclass(frozen=True)
class BaselineRow:
    dimension: int
    simplices_mean: Fraction
    simplices_std: float | None
    p_mean: Fraction | None
    p_std: float | None
    p_defined: int
    p_hat_mean: Fraction | None
    p_hat_std: float | None
    p_hat_defined: int


@dataclass(frozen=True)
class BaselineReport:
    replicates: int
    master_seed: int
    seeds: tuple[int, ...]
    rows: tuple[BaselineRow, ...]


def replicate_seeds(master_seed: int, replicates: int) -> tuple[int, ...]:
    # 48-bit so the seeds survive a round-trip through JSON doubles
    rng = random.Random(master_seed)
    return tuple(rng.getrandbits(48) for _ in range(replicates))


def _mean_std(values: Sequence[Fraction]) -> tuple[Fraction, float | None]:
    r = len(values)
    mean = sum(values, Fraction(0)) / r
    if r < 2:
        return mean, None
    var = sum((v - mean) ** 2 for v in values) / (r - 1)
    return mean, math.sqrt(float(var))


def er_baseline(
    g: DirectedGraph, replicates: int, seed: int, threads: int = 1
) -> BaselineReport:
    """Census statistics over matched random digraphs (same vertex and edge
    counts), with per-replicate seeds derived deterministically."""
    if replicates < 1:
        raise ValueError("need at least one replicate")
    seeds = replicate_seeds(seed, replicates)
    n_by_dim: dict[int, list[Fraction]] = {}
    p_by_dim: dict[int, list[Fraction]] = {}
    hat_by_dim: dict[int, list[Fraction]] = {}
    for s in seeds:
        rep = generate_er(g.n, g.edge_count, s)
        counts = count_all_ads(rep, threads=threads)
        profile = build_profile(counts)
        for row in counts.rows:
            n_by_dim.setdefault(row.dimension, []).append(Fraction(row.simplices))
        for d, value in enumerate(profile.p, start=1):
            p_by_dim.setdefault(d, []).append(value)
        for d, value in enumerate(profile.p_hat, start=1):
            hat_by_dim.setdefault(d, []).append(value)
    rows = []
    for d in sorted(n_by_dim):
        ns = n_by_dim[d] + [Fraction(0)] * (replicates - len(n_by_dim[d]))
        n_mean, n_std = _mean_std(ns)
        ps = p_by_dim.get(d, [])
        hats = hat_by_dim.get(d, [])
        p_mean, p_std = _mean_std(ps) if ps else (None, None)
        h_mean, h_std = _mean_std(hats) if hats else (None, None)
        rows.append(
            BaselineRow(d, n_mean, n_std, p_mean, p_std, len(ps), h_mean, h_std, len(hats))
        )
    return BaselineReport(replicates, seed, seeds, tuple(rows))
