"""Synthetic scenes with known ground truth, and mask scoring.

Scenes are built the way the segmentation assumes the world works: a
background of one uniform hue with a single differently-hued shape inside
it. Colors are fully saturated (one channel zero) so every pixel lands in a
known hue bin, and optional salt-and-pepper noise recolors a fraction of the
background pixels without touching the ground truth. Generation is driven by
a fixed SplitMix64 sequence, so a spec plus seed reproduces the same bytes
on any platform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .colorspace import NUM_HUE_BINS
from .errors import ConfigError, DimensionMismatchError
from .imgio import RgbImage, SegMask

__all__ = [
    "SplitMix64",
    "Rectangle",
    "Disk",
    "SynthSpec",
    "MaskMetrics",
    "saturated_bin_color",
    "synth_scene",
    "score",
]


class SplitMix64:
    """SplitMix64 pseudo-random sequence (Steele, Lea & Flood's generator).

    state += 0x9E3779B97F4A7C15
    z = state; z = (z ^ z >> 30) * 0xBF58476D1CE4E5B9
    z = (z ^ z >> 27) * 0x94D049BB133111EB
    output z ^ z >> 31

    All arithmetic is modulo 2**64. Used instead of a platform RNG so seeded
    scenes are identical everywhere.
    """

    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self._state = seed & self._MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & self._MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self._MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self._MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n), without modulo bias."""
        if n <= 0:
            raise ValueError(f"below() needs n >= 1, got {n}")
        limit = ((1 << 64) // n) * n
        while True:
            v = self.next_u64()
            if v < limit:
                return v % n


@dataclass(frozen=True)
class Rectangle:
    x: int
    y: int
    w: int
    h: int

    def bounds(self) -> tuple[int, int, int, int]:
        return self.x, self.y, self.x + self.w, self.y + self.h

    def render(self, width: int, height: int) -> np.ndarray:
        mask = np.zeros((height, width), dtype=bool)
        mask[self.y : self.y + self.h, self.x : self.x + self.w] = True
        return mask


@dataclass(frozen=True)
class Disk:
    cx: int
    cy: int
    r: int

    def bounds(self) -> tuple[int, int, int, int]:
        return self.cx - self.r, self.cy - self.r, self.cx + self.r + 1, self.cy + self.r + 1

    def render(self, width: int, height: int) -> np.ndarray:
        yy, xx = np.mgrid[0:height, 0:width]
        return (xx - self.cx) ** 2 + (yy - self.cy) ** 2 <= self.r * self.r


Shape = Union[Rectangle, Disk]


@dataclass(frozen=True)
class SynthSpec:
    """Recipe for one synthetic scene."""

    width: int
    height: int
    bg_bin: int
    fg_bin: int
    shape: Shape
    noise_fraction: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ConfigError(f"scene size must be >= 1x1, got {self.width}x{self.height}")
        for name, b in (("bg_bin", self.bg_bin), ("fg_bin", self.fg_bin)):
            if not 0 <= b < NUM_HUE_BINS:
                raise ConfigError(f"{name}={b} outside [0, 255]")
        if self.bg_bin == self.fg_bin:
            raise ConfigError("bg_bin and fg_bin must differ")
        if not 0.0 <= self.noise_fraction <= 1.0:
            raise ConfigError(f"noise_fraction must be in [0, 1], got {self.noise_fraction}")
        if isinstance(self.shape, Rectangle) and (self.shape.w < 1 or self.shape.h < 1):
            raise ConfigError("rectangle must be at least 1x1")
        if isinstance(self.shape, Disk) and self.shape.r < 1:
            raise ConfigError("disk radius must be >= 1")
        x0, y0, x1, y1 = self.shape.bounds()
        if x0 < 1 or y0 < 1 or x1 > self.width - 1 or y1 > self.height - 1:
            raise ConfigError(
                f"shape bounds {self.shape.bounds()} must lie strictly inside "
                f"the {self.width}x{self.height} image"
            )


def _make_bin_color(b: int) -> tuple[int, int, int]:
    # Fully saturated color at the bin's center angle. One channel is zero,
    # so saturation is exactly 1; the other two are the 120-degree-sector
    # inversion of the arccos hue form at intensity 255/3, rounded. Rounding
    # moves the recomputed hue at most ~0.38 degrees off center, well under
    # the 0.70-degree half bin, so the color quantizes back to bin b.
    phi = (b + 0.5) * 360.0 / NUM_HUE_BINS
    if phi < 120.0:
        local, order = phi, 0
    elif phi < 240.0:
        local, order = phi - 120.0, 1
    else:
        local, order = phi - 240.0, 2
    rad = math.radians(local)
    first = 85.0 * (1.0 + math.cos(rad) / math.cos(math.radians(60.0) - rad))
    a = round(first)
    c = round(255.0 - first)
    if order == 0:
        return a, c, 0
    if order == 1:
        return 0, a, c
    return c, 0, a


_BIN_COLORS: list[tuple[int, int, int]] = [_make_bin_color(b) for b in range(NUM_HUE_BINS)]


def saturated_bin_color(b: int) -> tuple[int, int, int]:
    """The canonical fully saturated RGB color whose hue bin is ``b``."""
    if not 0 <= b < NUM_HUE_BINS:
        raise ValueError(f"bin {b} outside [0, 255]")
    return _BIN_COLORS[b]


def synth_scene(spec: SynthSpec) -> tuple[RgbImage, SegMask]:
    """Render a scene and its ground-truth mask.

    Background pixels get the canonical color of ``bg_bin``, shape pixels
    that of ``fg_bin``. Then ``floor(noise_fraction * background_count)``
    distinct background pixels are recolored to the canonical color of a
    uniformly drawn bin other than ``bg_bin``. Noise never touches the
    shape, so the returned mask is exact regardless of noise.
    """
    gt = spec.shape.render(spec.width, spec.height)
    img = np.empty((spec.height, spec.width, 3), dtype=np.uint8)
    img[:, :] = saturated_bin_color(spec.bg_bin)
    img[gt] = saturated_bin_color(spec.fg_bin)

    if spec.noise_fraction > 0.0:
        rng = SplitMix64(spec.seed)
        bg_indices = np.flatnonzero(~gt.ravel())
        noise_count = math.floor(spec.noise_fraction * bg_indices.size)
        flat = img.reshape(-1, 3)
        # partial Fisher-Yates: the first noise_count entries end up being
        # a uniform sample of distinct background positions
        for i in range(noise_count):
            j = i + rng.below(bg_indices.size - i)
            bg_indices[i], bg_indices[j] = bg_indices[j], bg_indices[i]
            draw = rng.below(NUM_HUE_BINS - 1)
            if draw >= spec.bg_bin:
                draw += 1
            flat[bg_indices[i]] = saturated_bin_color(draw)

    return RgbImage(img), SegMask(gt)


@dataclass(frozen=True)
class MaskMetrics:
    """Pixel-level confusion counts and the ratios derived from them.

    Ratios with an empty denominator are defined as 1.0 (nothing to get
    wrong), so every metric stays in [0, 1]; in particular IoU of two empty
    masks is 1.0.
    """

    tp: int
    fp: int
    fn: int
    tn: int
    iou: float
    precision: float
    recall: float
    f1: float
    pixel_accuracy: float

    @classmethod
    def from_counts(cls, tp: int, fp: int, fn: int, tn: int) -> "MaskMetrics":
        union = tp + fp + fn
        iou = tp / union if union else 1.0
        precision = tp / (tp + fp) if tp + fp else 1.0
        recall = tp / (tp + fn) if tp + fn else 1.0
        f1 = 2.0 * precision * recall / (precision + recall) if precision + recall else 0.0
        total = tp + fp + fn + tn
        pixel_accuracy = (tp + tn) / total
        return cls(tp, fp, fn, tn, iou, precision, recall, f1, pixel_accuracy)

    def to_dict(self) -> dict:
        return {
            "tp": self.tp,
            "fp": self.fp,
            "fn": self.fn,
            "tn": self.tn,
            "iou": self.iou,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "pixel_accuracy": self.pixel_accuracy,
        }


def score(pred: SegMask, gt: SegMask) -> MaskMetrics:
    """Confusion counts of a predicted mask against a reference mask."""
    if (pred.height, pred.width) != (gt.height, gt.width):
        raise DimensionMismatchError(
            f"prediction is {pred.width}x{pred.height} but "
            f"reference is {gt.width}x{gt.height}"
        )
    p = pred.foreground
    g = gt.foreground
    tp = int((p & g).sum())
    fp = int((p & ~g).sum())
    fn = int((~p & g).sum())
    tn = int((~p & ~g).sum())
    return MaskMetrics.from_counts(tp, fp, fn, tn)
