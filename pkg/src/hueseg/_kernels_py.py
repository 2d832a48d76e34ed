"""Vectorized numpy implementations of the per-pixel kernels.

This module is the fallback used when the compiled extension
(:mod:`hueseg._kernels`) is not available. Both implementations follow the
same arithmetic, operation for operation, so they agree exactly on integer
outputs (hue bins, flags, masks); see tests/test_backends.py.
"""

from __future__ import annotations

import numpy as np


def hue_field_kernel(rgb: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Map a (h, w, 3) uint8 image to (hue bins, achromatic flags).

    Hue follows the arccos form
    ``theta = acos(0.5*((r-g)+(r-b)) / sqrt((r-g)^2 + (r-b)*(g-b)))``
    with ``hue = theta`` when ``b <= g`` else ``360 - theta``, and bins are
    ``floor(hue * 256 / 360)`` clamped to [0, 255]. Pixels with r == g == b
    are achromatic and get bin 0.
    """
    r = rgb[:, :, 0].astype(np.int64)
    g = rgb[:, :, 1].astype(np.int64)
    b = rgb[:, :, 2].astype(np.int64)
    achromatic = (r == g) & (g == b)

    num = 0.5 * ((r - g) + (r - b)).astype(np.float64)
    den_sq = ((r - g) ** 2 + (r - b) * (g - b)).astype(np.float64)
    # den_sq == 0 exactly when r == g == b; substitute 1 to keep the
    # division defined, the result is overwritten below.
    den = np.sqrt(np.where(achromatic, 1.0, den_sq))
    arg = np.clip(num / den, -1.0, 1.0)
    theta = np.arccos(arg) * (180.0 / np.pi)
    hue = np.where(b <= g, theta, 360.0 - theta)

    bins = np.clip(np.floor(hue * 256.0 / 360.0), 0.0, 255.0).astype(np.uint8)
    bins[achromatic] = 0
    return bins, achromatic


def classify_kernel(
    bins: np.ndarray,
    achromatic: np.ndarray,
    allowed: np.ndarray,
    achromatic_is_background: bool,
) -> np.ndarray:
    """Return the foreground mask for a hue field against a bin lookup table.

    ``allowed`` is a 256-entry boolean table of background bins (circular
    tolerance already expanded). A pixel is background when its bin is in
    the table, or when it is achromatic and ``achromatic_is_background``.
    """
    background = np.where(achromatic, achromatic_is_background, allowed[bins])
    return ~background


def majority_filter_kernel(mask: np.ndarray, kernel: int, passes: int) -> np.ndarray:
    """Binary median (= majority) filter with edge replication.

    Each pass sets a pixel true iff more than ``kernel**2 / 2`` of its
    kernel x kernel neighborhood is true; replicated border pixels count.
    Implemented with a summed-area table, so each pass is O(pixels).
    """
    out = mask
    half = kernel // 2
    need = (kernel * kernel) // 2  # strict majority: count > need
    for _ in range(passes):
        padded = np.pad(out, half, mode="edge").astype(np.int64)
        sat = np.zeros((padded.shape[0] + 1, padded.shape[1] + 1), dtype=np.int64)
        np.cumsum(np.cumsum(padded, axis=0), axis=1, out=sat[1:, 1:])
        counts = (
            sat[kernel:, kernel:]
            - sat[:-kernel, kernel:]
            - sat[kernel:, :-kernel]
            + sat[:-kernel, :-kernel]
        )
        out = counts > need
    return np.array(out, dtype=bool, copy=True)
