"""Per-pixel background classification, mask cleanup, and compositing.

A pixel is background when its hue bin matches the background set (or it is
achromatic and achromatic pixels were declared background); everything else
is foreground. The raw mask usually carries isolated misclassified pixels
where background hues vary or foreground hues overlap the background, so a
binary median filter (equivalently, a majority filter) cleans it before
compositing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backend
from .bordermodel import BackgroundHueSet, BorderSpec, build_background_set
from .colorspace import HueField, to_hue_field
from .errors import ConfigError, DimensionMismatchError
from .imgio import RgbImage, SegMask

DEFAULT_MEDIAN_KERNEL = 3
DEFAULT_MEDIAN_PASSES = 1


@dataclass(frozen=True)
class SegConfig:
    """Pipeline configuration.

    ``border`` of None means: derive the strip thickness from the image
    (2% of the shorter side, at least 1 pixel).
    """

    border: BorderSpec | None = None
    threshold: int = 5
    tolerance: int = 0
    median_kernel: int = DEFAULT_MEDIAN_KERNEL
    median_passes: int = DEFAULT_MEDIAN_PASSES
    fill: tuple[int, int, int] = (0, 0, 0)

    def __post_init__(self):
        if self.threshold < 1:
            raise ConfigError(f"threshold must be >= 1, got {self.threshold}")
        if self.tolerance < 0:
            raise ConfigError(f"tolerance must be >= 0, got {self.tolerance}")
        if self.median_kernel < 1 or self.median_kernel % 2 == 0:
            raise ConfigError(
                f"median_kernel must be odd and >= 1, got {self.median_kernel}"
            )
        if self.median_passes < 0:
            raise ConfigError(f"median_passes must be >= 0, got {self.median_passes}")
        if len(self.fill) != 3 or any(not 0 <= c <= 255 for c in self.fill):
            raise ConfigError(f"fill must be three channels in [0, 255], got {self.fill}")

    def border_for(self, width: int, height: int) -> BorderSpec:
        return self.border if self.border is not None else BorderSpec.auto(width, height)


@dataclass
class SegmentResult:
    """All pipeline intermediates, for inspection and reporting."""

    raw_mask: SegMask
    filtered_mask: SegMask
    composite: RgbImage
    background: BackgroundHueSet


def classify_pixels(field: HueField, bg: BackgroundHueSet) -> SegMask:
    """Raw, pre-filter mask: foreground iff the pixel does not match ``bg``."""
    fg = backend.classify_kernel(
        field.bins, field.achromatic, bg.to_lut(), bg.achromatic_is_background
    )
    return SegMask(fg)


def median_filter(
    mask: SegMask,
    kernel: int = DEFAULT_MEDIAN_KERNEL,
    passes: int = DEFAULT_MEDIAN_PASSES,
) -> SegMask:
    """Binary median filter: each pass takes the majority of the k x k
    neighborhood, with edge replication. ``passes=0`` is the identity."""
    if kernel < 1 or kernel % 2 == 0:
        raise ConfigError(f"median kernel must be odd and >= 1, got {kernel}")
    if passes < 0:
        raise ConfigError(f"median passes must be >= 0, got {passes}")
    if passes == 0 or kernel == 1:
        return SegMask(mask.foreground.copy())
    return SegMask(backend.majority_filter_kernel(mask.foreground, kernel, passes))


def composite(img: RgbImage, mask: SegMask, fill: tuple[int, int, int] = (0, 0, 0)) -> RgbImage:
    """Copy foreground pixels, set background pixels to the fill color."""
    if (img.height, img.width) != (mask.height, mask.width):
        raise DimensionMismatchError(
            f"image is {img.width}x{img.height} but mask is {mask.width}x{mask.height}"
        )
    fill_px = np.array(fill, dtype=np.uint8)
    out = np.where(mask.foreground[:, :, None], img.pixels, fill_px[None, None, :])
    return RgbImage(out.astype(np.uint8))


def segment_image(img: RgbImage, cfg: SegConfig | None = None) -> SegmentResult:
    """Run the whole pipeline on one image.

    Steps: hue field -> background set from the border strips -> per-pixel
    classification -> median filter -> composite. Deterministic: equal
    inputs and configuration give identical outputs.
    """
    if cfg is None:
        cfg = SegConfig()
    field = to_hue_field(img)
    border = cfg.border_for(img.width, img.height)
    bg = build_background_set(field, border, cfg.threshold, cfg.tolerance)
    raw = classify_pixels(field, bg)
    filtered = median_filter(raw, cfg.median_kernel, cfg.median_passes)
    comp = composite(img, filtered, cfg.fill)
    return SegmentResult(raw, filtered, comp, bg)
