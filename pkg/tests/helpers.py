"""Shared test utilities: the seeded scene corpus and brute-force oracles."""

from __future__ import annotations

import numpy as np

from hueseg import Disk, Rectangle, SplitMix64, SynthSpec

SUITE_SEED = 42


def scene_suite(count: int = 100, noise_fraction: float = 0.0, master_seed: int = SUITE_SEED):
    """Deterministic corpus of synthetic scenes, sizes 32..256.

    Rectangles and disks are sized relative to the image so that the 4-8
    pixels a 3x3 majority filter shaves off convex corners, plus any noise
    residue, stay under 1% of the shape area. Geometry and per-scene seeds
    depend only on ``master_seed``, not on ``noise_fraction``, so the noisy
    corpus reuses the clean corpus's scenes exactly.
    """
    rng = SplitMix64(master_seed)
    specs = []
    for _ in range(count):
        size = 32 + rng.below(225)
        thickness = max(1, round(0.02 * size))
        margin = thickness + 1
        inner = size - 2 * margin
        bg = rng.below(256)
        fg = rng.below(255)
        if fg >= bg:
            fg += 1
        if size >= 52 and rng.below(2) == 1:
            rmin = max(21, round(0.2 * size))
            rmax = (inner - 1) // 2
            r = rmin + rng.below(rmax - rmin + 1)
            cx = margin + r + rng.below(size - 2 * margin - 2 * r)
            cy = margin + r + rng.below(size - 2 * margin - 2 * r)
            shape: Rectangle | Disk = Disk(cx, cy, r)
        else:
            lo = min(max(28, round(0.45 * size)), inner)
            w = lo + rng.below(inner - lo + 1)
            hmin = min(max(lo, -(-900 // w)), inner)
            h = hmin + rng.below(inner - hmin + 1)
            x = margin + rng.below(inner - w + 1)
            y = margin + rng.below(inner - h + 1)
            shape = Rectangle(x, y, w, h)
        seed = rng.next_u64()
        specs.append(SynthSpec(size, size, bg, fg, shape, noise_fraction, seed))
    return specs


def median_oracle(mask: np.ndarray, kernel: int, passes: int) -> np.ndarray:
    """Reference median filter: gather the replicated k x k window, sort,
    take the middle element. Deliberately naive and independent of the
    library's implementations."""
    h, w = mask.shape
    half = kernel // 2
    cur = mask.astype(np.uint8)
    for _ in range(passes):
        nxt = np.zeros_like(cur)
        for y in range(h):
            for x in range(w):
                window = []
                for dy in range(-half, half + 1):
                    yy = min(max(y + dy, 0), h - 1)
                    for dx in range(-half, half + 1):
                        xx = min(max(x + dx, 0), w - 1)
                        window.append(int(cur[yy, xx]))
                window.sort()
                nxt[y, x] = window[len(window) // 2]
        cur = nxt
    return cur.astype(bool)


def random_rgb(rng: np.random.Generator, width: int, height: int):
    return rng.integers(0, 256, size=(height, width, 3), dtype=np.uint8)


def random_mask(rng: np.random.Generator, width: int, height: int):
    return rng.integers(0, 2, size=(height, width), dtype=np.uint8).astype(bool)
