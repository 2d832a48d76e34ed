"""Bit-exact raster I/O: binary PPM (P6) and PGM (P5), maxval 255.

Decoding is strict so results stay reproducible byte for byte: the payload
must have exactly the length implied by the header, nothing is truncated or
padded, and every error reports the byte offset at which it was detected.
Encoding is canonical ("P6\\n<w> <h>\\n255\\n" + payload) and never emits
comments, so ``decode(encode(x)) == x`` and equal inputs produce identical
bytes.

Header comments (``#`` to end of line) are accepted on read only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import FormatError

__all__ = [
    "RgbImage",
    "GrayImage",
    "SegMask",
    "read_ppm",
    "write_ppm",
    "read_pgm",
    "write_pgm",
    "read_mask",
    "write_mask",
]

_WHITESPACE = b" \t\n\r\x0b\x0c"


@dataclass(eq=False)
class RgbImage:
    """A width x height raster of 8-bit RGB pixels.

    ``pixels`` is a (height, width, 3) uint8 array in row-major order, so
    the dtype itself enforces the [0, 255] channel range.
    """

    pixels: np.ndarray

    def __post_init__(self):
        p = self.pixels
        if not isinstance(p, np.ndarray) or p.dtype != np.uint8:
            raise ValueError("RgbImage.pixels must be a uint8 ndarray")
        if p.ndim != 3 or p.shape[2] != 3:
            raise ValueError(f"RgbImage.pixels must have shape (h, w, 3), got {p.shape}")
        if p.shape[0] < 1 or p.shape[1] < 1:
            raise ValueError("image dimensions must be at least 1x1")

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def __eq__(self, other) -> bool:
        return isinstance(other, RgbImage) and np.array_equal(self.pixels, other.pixels)


@dataclass(eq=False)
class GrayImage:
    """A width x height raster of 8-bit gray values, row-major."""

    pixels: np.ndarray

    def __post_init__(self):
        p = self.pixels
        if not isinstance(p, np.ndarray) or p.dtype != np.uint8:
            raise ValueError("GrayImage.pixels must be a uint8 ndarray")
        if p.ndim != 2:
            raise ValueError(f"GrayImage.pixels must have shape (h, w), got {p.shape}")
        if p.shape[0] < 1 or p.shape[1] < 1:
            raise ValueError("image dimensions must be at least 1x1")

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def __eq__(self, other) -> bool:
        return isinstance(other, GrayImage) and np.array_equal(self.pixels, other.pixels)


@dataclass(eq=False)
class SegMask:
    """A binary foreground mask with the dimensions of its source image."""

    foreground: np.ndarray

    def __post_init__(self):
        f = self.foreground
        if not isinstance(f, np.ndarray) or f.dtype != np.bool_:
            raise ValueError("SegMask.foreground must be a bool ndarray")
        if f.ndim != 2:
            raise ValueError(f"SegMask.foreground must have shape (h, w), got {f.shape}")
        if f.shape[0] < 1 or f.shape[1] < 1:
            raise ValueError("mask dimensions must be at least 1x1")

    @property
    def width(self) -> int:
        return self.foreground.shape[1]

    @property
    def height(self) -> int:
        return self.foreground.shape[0]

    def foreground_count(self) -> int:
        return int(self.foreground.sum())

    def background_count(self) -> int:
        return self.foreground.size - self.foreground_count()

    def __eq__(self, other) -> bool:
        return isinstance(other, SegMask) and np.array_equal(self.foreground, other.foreground)


def _skip_space_and_comments(data: bytes, pos: int) -> int:
    n = len(data)
    while pos < n:
        c = data[pos : pos + 1]
        if c in (b"#",):
            while pos < n and data[pos : pos + 1] != b"\n":
                pos += 1
        elif c in _WHITESPACE:
            pos += 1
        else:
            break
    return pos

def _read_int_token(data: bytes, pos: int, what: str) -> tuple[int, int]:
    pos = _skip_space_and_comments(data, pos)
    start = pos
    n = len(data)
    while pos < n and data[pos : pos + 1].isdigit():
        pos += 1
    if pos == start:
        raise FormatError(f"malformed header: expected {what}", start)
    return int(data[start:pos]), pos


def _read_pnm(data: bytes, magic: bytes, channels: int) -> np.ndarray:
    if data[:2] != magic:
        raise FormatError(f"not a {magic.decode()} file: bad magic", 0)
    pos = 2
    width, pos = _read_int_token(data, pos, "width")
    height, pos = _read_int_token(data, pos, "height")
    if width < 1 or height < 1:
        raise FormatError(f"malformed header: dimensions {width}x{height}", 2)
    maxval, pos = _read_int_token(data, pos, "maxval")
    if maxval != 255:
        raise FormatError(f"unsupported maxval {maxval}, only 255 is accepted", pos)
    if pos >= len(data) or data[pos : pos + 1] not in _WHITESPACE:
        raise FormatError("malformed header: expected whitespace before payload", pos)
    pos += 1
    expected = width * height * channels
    payload = data[pos:]
    if len(payload) < expected:
        raise FormatError(
            f"truncated pixel payload: expected {expected} bytes, got {len(payload)}",
            len(data),
        )
    if len(payload) > expected:
        raise FormatError(
            f"trailing data after pixel payload: expected {expected} bytes, got {len(payload)}",
            pos + expected,
        )
    arr = np.frombuffer(payload, dtype=np.uint8)
    if channels == 1:
        return arr.reshape(height, width).copy()
    return arr.reshape(height, width, channels).copy()


def read_ppm(data: bytes) -> RgbImage:
    """Decode a binary P6 PPM (maxval 255) into an :class:`RgbImage`."""
    return RgbImage(_read_pnm(data, b"P6", 3))


def write_ppm(img: RgbImage) -> bytes:
    """Encode an :class:`RgbImage` as a canonical binary P6 PPM."""
    header = b"P6\n%d %d\n255\n" % (img.width, img.height)
    return header + img.pixels.tobytes()


def read_pgm(data: bytes) -> GrayImage:
    """Decode a binary P5 PGM (maxval 255) into a :class:`GrayImage`."""
    return GrayImage(_read_pnm(data, b"P5", 1))


def write_pgm(img: GrayImage) -> bytes:
    """Encode a :class:`GrayImage` as a canonical binary P5 PGM."""
    header = b"P5\n%d %d\n255\n" % (img.width, img.height)
    return header + img.pixels.tobytes()


def read_mask(data: bytes) -> SegMask:
    """Decode a P5 PGM into a binary mask: values above 127 are foreground."""
    gray = read_pgm(data)
    return SegMask(gray.pixels > 127)


def write_mask(mask: SegMask) -> bytes:
    """Encode a mask as a P5 PGM with foreground 255 and background 0."""
    gray = GrayImage(np.where(mask.foreground, 255, 0).astype(np.uint8))
    return write_pgm(gray)
