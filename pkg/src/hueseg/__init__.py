"""Hue-histogram background removal for images with near-uniform backgrounds.

The border strips of an image are assumed to show only background. Their
pixels are converted to HSI, the hue channel is histogrammed into 256 bins
per strip, and every bin whose count exceeds a threshold is declared a
background hue. Pixels anywhere in the image whose hue bin matches that set
are removed; a binary median filter then cleans up the salt-and-pepper
misclassifications that uneven backgrounds produce.
"""

from .backend import BACKEND, available_backends
from .bordermodel import (
    BackgroundHueSet,
    BorderSpec,
    HueHistogram,
    build_background_set,
    extract_borders,
    histogram,
    threshold_bins,
)
from .colorspace import (
    DEGREES_PER_BIN,
    NUM_HUE_BINS,
    HsiPixel,
    HueField,
    bin_of_hue,
    hue_bin,
    rgb_to_hsi,
    to_hue_field,
)
from .errors import (
    ConfigError,
    DimensionMismatchError,
    FormatError,
    HuesegError,
    StripTooThickError,
)
from .evalkit import (
    Disk,
    MaskMetrics,
    Rectangle,
    SplitMix64,
    SynthSpec,
    saturated_bin_color,
    score,
    synth_scene,
)
from .imgio import (
    GrayImage,
    RgbImage,
    SegMask,
    read_mask,
    read_pgm,
    read_ppm,
    write_mask,
    write_pgm,
    write_ppm,
)
from .segment import (
    SegConfig,
    SegmentResult,
    classify_pixels,
    composite,
    median_filter,
    segment_image,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BackgroundHueSet",
    "BorderSpec",
    "ConfigError",
    "DEGREES_PER_BIN",
    "DimensionMismatchError",
    "Disk",
    "FormatError",
    "GrayImage",
    "HsiPixel",
    "HueField",
    "HueHistogram",
    "HuesegError",
    "MaskMetrics",
    "NUM_HUE_BINS",
    "Rectangle",
    "RgbImage",
    "SegConfig",
    "SegMask",
    "SegmentResult",
    "SplitMix64",
    "StripTooThickError",
    "SynthSpec",
    "available_backends",
    "bin_of_hue",
    "build_background_set",
    "classify_pixels",
    "composite",
    "extract_borders",
    "histogram",
    "hue_bin",
    "median_filter",
    "read_mask",
    "read_pgm",
    "read_ppm",
    "rgb_to_hsi",
    "saturated_bin_color",
    "score",
    "segment_image",
    "synth_scene",
    "threshold_bins",
    "to_hue_field",
    "write_mask",
    "write_pgm",
    "write_ppm",
]
