"""Background hue model built from the four border strips of an image.

The strips partition the border region: top and bottom span the full width,
left and right cover only the rows between them, so no pixel is counted
twice. Each strip gets its own 256-bin hue histogram (achromatic pixels are
tallied separately, never in a bin), a per-strip threshold keeps the bins
whose count is strictly above it, and the background set is the union of the
four per-strip results.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .colorspace import NUM_HUE_BINS, HueField
from .errors import ConfigError, StripTooThickError

DEFAULT_THRESHOLD = 5
DEFAULT_BORDER_FRACTION = 0.02


@dataclass(frozen=True)
class BorderSpec:
    """Thickness, in pixels, of the four border strips."""

    thickness: int

    def __post_init__(self):
        if self.thickness < 1:
            raise ConfigError(f"border thickness must be >= 1, got {self.thickness}")

    def validate_for(self, width: int, height: int) -> None:
        """Strips must leave a nonempty interior: 2*thickness < min(w, h)."""
        if 2 * self.thickness >= min(width, height):
            raise StripTooThickError(
                f"border thickness {self.thickness} too thick for a "
                f"{width}x{height} image (needs 2*t < min side)"
            )

    @classmethod
    def auto(cls, width: int, height: int) -> "BorderSpec":
        """Default thickness: 2% of the shorter side, at least 1 pixel."""
        return cls(max(1, round(DEFAULT_BORDER_FRACTION * min(width, height))))


class Strip(NamedTuple):
    """Hue bins and achromatic flags of one border strip, flattened."""

    bins: np.ndarray
    achromatic: np.ndarray


class BorderStrips(NamedTuple):
    top: Strip
    bottom: Strip
    left: Strip
    right: Strip


@dataclass
class HueHistogram:
    """256 bin counts plus a separate achromatic tally for one strip."""

    counts: np.ndarray
    achromatic_count: int
    total: int


@dataclass(frozen=True)
class BackgroundHueSet:
    """Hue bins declared background, with circular tolerance.

    A bin ``b`` matches when its distance to some member on the 256-bin
    wheel is at most ``tolerance``. Achromatic pixels are matched by the
    ``achromatic_is_background`` flag alone, never by a bin.
    """

    bins: frozenset[int]
    achromatic_is_background: bool
    tolerance: int = 0

    def __post_init__(self):
        if self.tolerance < 0:
            raise ConfigError(f"tolerance must be >= 0, got {self.tolerance}")
        if any(not 0 <= b < NUM_HUE_BINS for b in self.bins):
            raise ConfigError("background bins must lie in [0, 255]")

    def matches_bin(self, b: int) -> bool:
        for member in self.bins:
            d = abs(b - member) % NUM_HUE_BINS
            if min(d, NUM_HUE_BINS - d) <= self.tolerance:
                return True
        return False

    def to_lut(self) -> np.ndarray:
        """256-entry boolean table with the tolerance expanded."""
        lut = np.zeros(NUM_HUE_BINS, dtype=bool)
        for member in self.bins:
            for d in range(-self.tolerance, self.tolerance + 1):
                lut[(member + d) % NUM_HUE_BINS] = True
        return lut


def _strip(field: HueField, rows: slice, cols: slice) -> Strip:
    return Strip(
        field.bins[rows, cols].ravel(),
        field.achromatic[rows, cols].ravel(),
    )


def extract_borders(field: HueField, spec: BorderSpec) -> BorderStrips:
    """Cut the four border strips out of a hue field.

    Top and bottom take rows [0, t) and [H-t, H) across the full width;
    left and right take columns [0, t) and [W-t, W) restricted to the
    remaining rows, so the strips are pairwise disjoint.
    """
    spec.validate_for(field.width, field.height)
    t = spec.thickness
    w, h = field.width, field.height
    return BorderStrips(
        top=_strip(field, slice(0, t), slice(0, w)),
        bottom=_strip(field, slice(h - t, h), slice(0, w)),
        left=_strip(field, slice(t, h - t), slice(0, t)),
        right=_strip(field, slice(t, h - t), slice(w - t, w)),
    )


def histogram(strip: Strip) -> HueHistogram:
    """Count strip pixels per hue bin; achromatic pixels only in their tally."""
    chromatic = strip.bins[~strip.achromatic]
    counts = np.bincount(chromatic, minlength=NUM_HUE_BINS).astype(np.int64)
    achromatic_count = int(strip.achromatic.sum())
    return HueHistogram(counts, achromatic_count, int(strip.bins.size))


def threshold_bins(hist: HueHistogram, threshold: int) -> set[int]:
    """Bins whose count is strictly above the threshold."""
    if threshold < 1:
        raise ConfigError(f"threshold must be >= 1, got {threshold}")
    return set(np.flatnonzero(hist.counts > threshold).tolist())


def build_background_set(
    field: HueField,
    spec: BorderSpec,
    threshold: int = DEFAULT_THRESHOLD,
    tolerance: int = 0,
) -> BackgroundHueSet:
    """Threshold each border strip's histogram and union the results.

    Achromatic pixels count as background when their tally exceeds the
    threshold on any single strip.
    """
    strips = extract_borders(field, spec)
    bins: set[int] = set()
    achromatic_is_background = False
    for strip in strips:
        hist = histogram(strip)
        bins |= threshold_bins(hist, threshold)
        if hist.achromatic_count > threshold:
            achromatic_is_background = True
    return BackgroundHueSet(frozenset(bins), achromatic_is_background, tolerance)
