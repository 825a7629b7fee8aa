"""Contrast-preservation metrics for (color, gray) image pairs.

For a threshold tau, the preservation ratio looks at pixel pairs whose Lab
color difference reaches tau and asks how many keep a gray difference of
at least tau; the fidelity ratio looks at pairs with gray contrast and
penalizes those without matching color contrast. Their harmonic mean is
the combined score, swept over tau = 1..15.

Gray differences are compared on a 0-100 scale (luminance times 100) so
both sides of every threshold share Lab-lightness units. Pair sets are
either exhaustive or a seeded uniform sample; a sample budget that covers
all pairs degrades to the exhaustive enumeration, which is the built-in
brute-force oracle.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .colorspaces import lab_image
from .core import PlanarImage

#: the standard threshold sweep
TAU_SWEEP = tuple(range(1, 16))

# exhaustive pair enumeration is emitted in slices of about this many pairs
_CHUNK_PAIRS = 2_000_000


@dataclass(frozen=True)
class PairSampleConfig:
    """How pixel pairs are drawn: sample size, seed, or full enumeration."""

    pair_count: int = 50_000
    seed: int = 42
    exhaustive: bool = False

    def __post_init__(self):
        if not self.exhaustive and self.pair_count < 1:
            raise ValueError(f"pair_count must be >= 1, got {self.pair_count}")


@dataclass(frozen=True)
class TauScore:
    tau: float
    ccpr: float
    ccfr: float
    escore: float


@dataclass(frozen=True)
class MetricReport:
    """Per-tau scores for one image pair plus their sweep average."""

    per_tau: tuple[TauScore, ...]
    mean_escore: float


def escore(ccpr_v: float, ccfr_v: float) -> float:
    """Harmonic mean of the two ratios; 0 when both are 0."""
    if ccpr_v == 0.0 and ccfr_v == 0.0:
        return 0.0
    return 2.0 * ccpr_v * ccfr_v / (ccpr_v + ccfr_v)


def _check_pair(color: PlanarImage, gray: PlanarImage) -> None:
    if color.kind != "rgb":
        raise ValueError("color argument must be an rgb image")
    if gray.kind != "luminance":
        raise ValueError("gray argument must be a luminance image")
    if (color.width, color.height) != (gray.width, gray.height):
        raise ValueError(
            f"dimension mismatch: color {color.width}x{color.height} "
            f"vs gray {gray.width}x{gray.height}"
        )


def _pair_delta_chunks(
    color: PlanarImage, gray: PlanarImage, cfg: PairSampleConfig
) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield (delta_e, gray_diff) arrays over the evaluated pair set."""
    n = color.pixel_count
    if n < 2:
        return
    lab = lab_image(color).reshape(n, 3)
    g100 = gray.data.reshape(n) * 100.0
    total = n * (n - 1) // 2
    if cfg.exhaustive or cfg.pair_count >= total:
        # all unordered pairs, anchor-major; sliced to bound memory
        block = max(1, _CHUNK_PAIRS // max(n, 1))
        for a0 in range(0, n - 1, block):
            a1 = min(a0 + block, n - 1)
            i_idx, j_idx = [], []
            for i in range(a0, a1):
                j_idx.append(np.arange(i + 1, n))
                i_idx.append(np.full(n - 1 - i, i))
            i_arr = np.concatenate(i_idx)
            j_arr = np.concatenate(j_idx)
            d = lab[i_arr] - lab[j_arr]
            yield np.sqrt((d * d).sum(axis=1)), np.abs(g100[i_arr] - g100[j_arr])
    else:
        rng = np.random.default_rng(cfg.seed)
        i_arr = rng.integers(0, n, cfg.pair_count)
        # offset in 1..n-1 guarantees two distinct pixels per draw
        j_arr = (i_arr + rng.integers(1, n, cfg.pair_count)) % n
        d = lab[i_arr] - lab[j_arr]
        yield np.sqrt((d * d).sum(axis=1)), np.abs(g100[i_arr] - g100[j_arr])


def _sweep_counts(
    color: PlanarImage,
    gray: PlanarImage,
    taus: Sequence[float],
    cfg: PairSampleConfig,
) -> np.ndarray:
    """Pair counts per tau: columns (color set, kept, gray set, fabricated)."""
    counts = np.zeros((len(taus), 4), dtype=np.int64)
    for delta_e, gray_diff in _pair_delta_chunks(color, gray, cfg):
        for k, tau in enumerate(taus):
            in_color = delta_e >= tau
            in_gray = gray_diff >= tau
            counts[k, 0] += int(in_color.sum())
            counts[k, 1] += int((in_color & in_gray).sum())
            counts[k, 2] += int(in_gray.sum())
            counts[k, 3] += int((in_gray & (delta_e < tau)).sum())
    return counts


def _ccpr_from(counts: np.ndarray) -> float:
    omega, kept = int(counts[0]), int(counts[1])
    return kept / omega if omega else 1.0


def _ccfr_from(counts: np.ndarray) -> float:
    theta, fabricated = int(counts[2]), int(counts[3])
    return 1.0 - fabricated / theta if theta else 1.0


def _check_tau(tau: float) -> None:
    if not tau > 0:
        raise ValueError(f"tau must be positive, got {tau}")


def ccpr(
    color: PlanarImage,
    gray: PlanarImage,
    tau: float,
    cfg: PairSampleConfig = PairSampleConfig(),
) -> float:
    """Fraction of color-contrasting pairs whose gray contrast survives."""
    _check_pair(color, gray)
    _check_tau(tau)
    return _ccpr_from(_sweep_counts(color, gray, [tau], cfg)[0])


def ccfr(
    color: PlanarImage,
    gray: PlanarImage,
    tau: float,
    cfg: PairSampleConfig = PairSampleConfig(),
) -> float:
    """One minus the share of gray-contrasting pairs with no color contrast."""
    _check_pair(color, gray)
    _check_tau(tau)
    return _ccfr_from(_sweep_counts(color, gray, [tau], cfg)[0])


def evaluate(
    color: PlanarImage,
    gray: PlanarImage,
    cfg: PairSampleConfig = PairSampleConfig(),
) -> MetricReport:
    """Run the full tau sweep on one shared pair sample."""
    _check_pair(color, gray)
    counts = _sweep_counts(color, gray, TAU_SWEEP, cfg)
    rows = []
    for k, tau in enumerate(TAU_SWEEP):
        p = _ccpr_from(counts[k])
        f = _ccfr_from(counts[k])
        rows.append(TauScore(float(tau), p, f, escore(p, f)))
    mean = sum(r.escore for r in rows) / len(rows)
    return MetricReport(tuple(rows), mean)


def write_sweep_csv(
    dest: str | os.PathLike | io.TextIOBase,
    reports: Sequence[tuple[str, MetricReport]],
) -> None:
    """Write per-image tau rows plus summary rows.

    Columns are ``image, tau, ccpr, ccfr, escore``. Each image gets a
    ``mean`` summary row; with several images a final ``ALL`` row averages
    the per-image means. Output bytes are deterministic.
    """
    own = not isinstance(dest, io.TextIOBase)
    f = open(dest, "w", newline="") if own else dest
    try:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["image", "tau", "ccpr", "ccfr", "escore"])
        mean_rows = []
        for name, report in reports:
            for row in report.per_tau:
                writer.writerow(
                    [name, f"{row.tau:g}", f"{row.ccpr:.6f}", f"{row.ccfr:.6f}", f"{row.escore:.6f}"]
                )
            means = tuple(
                sum(getattr(r, field) for r in report.per_tau) / len(report.per_tau)
                for field in ("ccpr", "ccfr")
            )
            mean_rows.append((means[0], means[1], report.mean_escore))
            writer.writerow(
                [name, "mean", f"{means[0]:.6f}", f"{means[1]:.6f}", f"{report.mean_escore:.6f}"]
            )
        if len(reports) > 1:
            agg = tuple(sum(col) / len(mean_rows) for col in zip(*mean_rows))
            writer.writerow(
                ["ALL", "mean", f"{agg[0]:.6f}", f"{agg[1]:.6f}", f"{agg[2]:.6f}"]
            )
    finally:
        if own:
            f.close()
