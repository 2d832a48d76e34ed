"""RGB to HSI conversion and 256-bin hue quantization.

The conversion is the classical arccos formulation, computed in double
precision:

* ``I = (R + G + B) / 3``
* ``S = 1 - 3 * min(R, G, B) / (R + G + B)``
* ``theta = acos(0.5 * ((R-G) + (R-B)) / sqrt((R-G)^2 + (R-B)(G-B)))``
* ``H = theta`` if ``B <= G`` else ``360 - theta``

The arccos argument is clamped to [-1, 1] before evaluation because roundoff
can exceed the domain by a few ulps. Pixels with R == G == B (including pure
black) have no defined hue; they are flagged achromatic, given hue 0 and
saturation 0, and handled downstream as a pseudo-class distinct from every
chromatic bin.

Hue is quantized into 256 equal bins of 360/256 degrees each, by flooring so
bin edges fall exactly on multiples of 360/256.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import backend
from .imgio import RgbImage

NUM_HUE_BINS = 256
DEGREES_PER_BIN = 360.0 / NUM_HUE_BINS


class HsiPixel(NamedTuple):
    hue_deg: float
    saturation: float
    intensity: float
    achromatic: bool


@dataclass(eq=False)
class HueField:
    """Per-pixel hue bins plus achromatic flags for a whole image."""

    bins: np.ndarray
    achromatic: np.ndarray

    def __post_init__(self):
        if not isinstance(self.bins, np.ndarray) or self.bins.dtype != np.uint8:
            raise ValueError("HueField.bins must be a uint8 ndarray")
        if not isinstance(self.achromatic, np.ndarray) or self.achromatic.dtype != np.bool_:
            raise ValueError("HueField.achromatic must be a bool ndarray")
        if self.bins.ndim != 2 or self.bins.shape != self.achromatic.shape:
            raise ValueError("HueField.bins and HueField.achromatic must share a 2-d shape")

    @property
    def width(self) -> int:
        return self.bins.shape[1]

    @property
    def height(self) -> int:
        return self.bins.shape[0]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HueField)
            and np.array_equal(self.bins, other.bins)
            and np.array_equal(self.achromatic, other.achromatic)
        )


def rgb_to_hsi(r: int, g: int, b: int) -> HsiPixel:
    """Convert one 8-bit RGB triple to HSI."""
    for name, c in (("r", r), ("g", g), ("b", b)):
        if not 0 <= c <= 255:
            raise ValueError(f"channel {name}={c} outside [0, 255]")
    total = r + g + b
    intensity = total / 3.0
    if r == g == b:
        return HsiPixel(0.0, 0.0, intensity, True)
    saturation = 1.0 - (3.0 * min(r, g, b)) / total
    num = 0.5 * ((r - g) + (r - b))
    den = math.sqrt((r - g) * (r - g) + (r - b) * (g - b))
    arg = num / den
    if arg > 1.0:
        arg = 1.0
    elif arg < -1.0:
        arg = -1.0
    theta = math.acos(arg) * (180.0 / math.pi)
    hue = theta if b <= g else 360.0 - theta
    return HsiPixel(hue, saturation, intensity, False)


def bin_of_hue(hue_deg: float) -> int:
    """Quantize a hue angle in degrees to its bin: floor(h*256/360), clamped."""
    b = int(math.floor(hue_deg * 256.0 / 360.0))
    return max(0, min(NUM_HUE_BINS - 1, b))


def hue_bin(pixel: HsiPixel) -> int:
    """Hue bin of an HSI pixel; achromatic pixels map to bin 0."""
    if pixel.achromatic:
        return 0
    return bin_of_hue(pixel.hue_deg)


def to_hue_field(img: RgbImage) -> HueField:
    """Quantize every pixel of an image, preserving dimensions.

    Element-wise equivalent of ``hue_bin(rgb_to_hsi(...))`` but runs through
    the active kernel backend.
    """
    bins, achromatic = backend.hue_field_kernel(np.ascontiguousarray(img.pixels))
    return HueField(bins, achromatic)
