# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled per-pixel kernels: hue binning, classification, majority filter.

Same arithmetic as hueseg._kernels_py, pixel for pixel; the numpy module is
the fallback when this extension is not built.
"""

from libc.math cimport acos, floor, sqrt, M_PI

import numpy as np

cimport numpy as cnp

cnp.import_array()


def hue_field_kernel(const unsigned char[:, :, ::1] rgb):
    cdef Py_ssize_t h = rgb.shape[0]
    cdef Py_ssize_t w = rgb.shape[1]
    bins_arr = np.zeros((h, w), dtype=np.uint8)
    ach_arr = np.zeros((h, w), dtype=np.uint8)
    cdef unsigned char[:, ::1] bins = bins_arr
    cdef unsigned char[:, ::1] ach = ach_arr
    cdef Py_ssize_t y, x
    cdef long r, g, b
    cdef double num, den, arg, theta, hue, binf
    cdef long bi
    for y in range(h):
        for x in range(w):
            r = rgb[y, x, 0]
            g = rgb[y, x, 1]
            b = rgb[y, x, 2]
            if r == g and g == b:
                ach[y, x] = 1
                bins[y, x] = 0
                continue
            num = 0.5 * <double>((r - g) + (r - b))
            den = sqrt(<double>((r - g) * (r - g) + (r - b) * (g - b)))
            arg = num / den
            if arg > 1.0:
                arg = 1.0
            elif arg < -1.0:
                arg = -1.0
            theta = acos(arg) * (180.0 / M_PI)
            hue = theta if b <= g else 360.0 - theta
            binf = floor(hue * 256.0 / 360.0)
            bi = <long>binf
            if bi < 0:
                bi = 0
            elif bi > 255:
                bi = 255
            bins[y, x] = <unsigned char>bi
    return bins_arr, ach_arr.astype(bool)


def classify_kernel(
    const unsigned char[:, ::1] bins,
    cnp.ndarray achromatic,
    cnp.ndarray allowed,
    bint achromatic_is_background,
):
    cdef Py_ssize_t h = bins.shape[0]
    cdef Py_ssize_t w = bins.shape[1]
    fg_arr = np.zeros((h, w), dtype=np.uint8)
    cdef unsigned char[:, ::1] fg = fg_arr
    cdef const unsigned char[:, ::1] ach = np.ascontiguousarray(achromatic, dtype=np.uint8)
    cdef const unsigned char[::1] lut = np.ascontiguousarray(allowed, dtype=np.uint8)
    cdef Py_ssize_t y, x
    cdef bint background
    for y in range(h):
        for x in range(w):
            if ach[y, x]:
                background = achromatic_is_background
            else:
                background = lut[bins[y, x]]
            fg[y, x] = 0 if background else 1
    return fg_arr.astype(bool)


cdef inline Py_ssize_t _clamp(Py_ssize_t i, Py_ssize_t n) noexcept nogil:
    if i < 0:
        return 0
    if i >= n:
        return n - 1
    return i


def majority_filter_kernel(cnp.ndarray mask, int kernel, int passes):
    # separable box sum with sliding windows: O(1) work per pixel per pass
    cdef Py_ssize_t h = mask.shape[0]
    cdef Py_ssize_t w = mask.shape[1]
    cur_arr = np.ascontiguousarray(mask, dtype=np.uint8)
    if passes > 0:
        cur_arr = cur_arr.copy()
    nxt_arr = np.zeros((h, w), dtype=np.uint8)
    colsum_arr = np.zeros((h, w), dtype=np.int32)
    cdef unsigned char[:, ::1] cur = cur_arr
    cdef unsigned char[:, ::1] nxt = nxt_arr
    cdef int[:, ::1] colsum = colsum_arr
    cdef Py_ssize_t half = kernel // 2
    cdef int need = (kernel * kernel) // 2
    cdef Py_ssize_t y, x, add_row, sub_row
    cdef int p, s
    for p in range(passes):
        # vertical window sums, replicated edges; rows update incrementally
        for x in range(w):
            s = 0
            for y in range(-half, half + 1):
                s += cur[_clamp(y, h), x]
            colsum[0, x] = s
        for y in range(1, h):
            add_row = _clamp(y + half, h)
            sub_row = _clamp(y - 1 - half, h)
            for x in range(w):
                colsum[y, x] = colsum[y - 1, x] + cur[add_row, x] - cur[sub_row, x]
        # horizontal window sums and the majority decision
        for y in range(h):
            s = 0
            for x in range(-half, half + 1):
                s += colsum[y, _clamp(x, w)]
            nxt[y, 0] = 1 if s > need else 0
            for x in range(1, w):
                s += colsum[y, _clamp(x + half, w)] - colsum[y, _clamp(x - 1 - half, w)]
                nxt[y, x] = 1 if s > need else 0
        cur_arr, nxt_arr = nxt_arr, cur_arr
        cur = cur_arr
        nxt = nxt_arr
    return cur_arr.astype(bool)
