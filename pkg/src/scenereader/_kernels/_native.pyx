# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the hot per-pixel kernels in ``_fallback``.

Each function follows the exact float64 arithmetic of the numpy version so
the two backends are interchangeable bit-for-bit.
"""

from libc.stdlib cimport free, malloc

import numpy as np

cimport numpy as cnp

cnp.import_array()


def hsv_mask_coords(const cnp.uint8_t[:, :, ::1] rgb, double hue_lo, double hue_hi,
                    double s_min, double v_min):
    cdef Py_ssize_t h = rgb.shape[0]
    cdef Py_ssize_t w = rgb.shape[1]
    cdef Py_ssize_t x, y, k, n = 0
    cdef double r, g, b, mx, mn, delta, s, v, hue
    cdef bint wrap = hue_lo > hue_hi
    cdef bint hit
    cdef cnp.int32_t[::1] xs_v
    cdef cnp.int32_t[::1] ys_v

    cdef cnp.uint8_t *mask = <cnp.uint8_t *> malloc(h * w)
    if mask == NULL:
        raise MemoryError()
    try:
        for y in range(h):
            for x in range(w):
                r = rgb[y, x, 0]
                g = rgb[y, x, 1]
                b = rgb[y, x, 2]
                mx = r
                if g > mx:
                    mx = g
                if b > mx:
                    mx = b
                mn = r
                if g < mn:
                    mn = g
                if b < mn:
                    mn = b
                delta = mx - mn
                v = mx / 255.0
                s = delta / mx if mx > 0.0 else 0.0
                if delta > 0.0:
                    if mx == r:
                        hue = 60.0 * (g - b) / delta
                        if hue < 0.0:
                            hue += 360.0
                    elif mx == g:
                        hue = 60.0 * (b - r) / delta + 120.0
                    else:
                        hue = 60.0 * (r - g) / delta + 240.0
                else:
                    hue = 0.0
                if wrap:
                    hit = hue >= hue_lo or hue <= hue_hi
                else:
                    hit = hue_lo <= hue <= hue_hi
                if hit and s >= s_min and v >= v_min:
                    mask[y * w + x] = 1
                    n += 1
                else:
                    mask[y * w + x] = 0

        xs = np.empty(n, dtype=np.int32)
        ys = np.empty(n, dtype=np.int32)
        xs_v = xs
        ys_v = ys
        k = 0
        for y in range(h):
            for x in range(w):
                if mask[y * w + x]:
                    xs_v[k] = <cnp.int32_t> x
                    ys_v[k] = <cnp.int32_t> y
                    k += 1
        return xs, ys
    finally:
        free(mask)


def line_distances(const cnp.int32_t[::1] xs, const cnp.int32_t[::1] ys,
                   double px, double py, double dx, double dy):
    cdef Py_ssize_t n = xs.shape[0]
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] out_v = out
    cdef Py_ssize_t i
    cdef double d
    for i in range(n):
        d = (<double> xs[i] - px) * dy - (<double> ys[i] - py) * dx
        out_v[i] = -d if d < 0.0 else d
    return out


cdef float _quickselect(float *buf, Py_ssize_t n, Py_ssize_t k) noexcept nogil:
    """Puts the k-th order statistic at buf[k] with every smaller-or-equal
    element to its left. Hoare partition, median-of-three pivot; safe here
    because depth values are NaN-free by construction."""
    cdef Py_ssize_t lo = 0, hi = n - 1, i, j, mid
    cdef float pivot, tmp
    while True:
        if lo >= hi:
            return buf[k]
        mid = lo + (hi - lo) // 2
        if buf[mid] < buf[lo]:
            tmp = buf[lo]; buf[lo] = buf[mid]; buf[mid] = tmp
        if buf[hi] < buf[lo]:
            tmp = buf[lo]; buf[lo] = buf[hi]; buf[hi] = tmp
        if buf[hi] < buf[mid]:
            tmp = buf[mid]; buf[mid] = buf[hi]; buf[hi] = tmp
        pivot = buf[mid]
        i = lo
        j = hi
        while i <= j:
            while buf[i] < pivot:
                i += 1
            while buf[j] > pivot:
                j -= 1
            if i <= j:
                tmp = buf[i]; buf[i] = buf[j]; buf[j] = tmp
                i += 1
                j -= 1
        if k <= j:
            hi = j
        elif k >= i:
            lo = i
        else:
            return buf[k]


def box_median(const cnp.float32_t[:, ::1] values, Py_ssize_t x0, Py_ssize_t y0,
               Py_ssize_t x1, Py_ssize_t y1):
    cdef Py_ssize_t bw = x1 - x0 + 1
    cdef Py_ssize_t bh = y1 - y0 + 1
    cdef Py_ssize_t n = bw * bh
    cdef Py_ssize_t x, y, k = 0
    cdef double lo, hi
    if n <= 0:
        raise ValueError("empty pixel rectangle")
    cdef float *buf = <float *> malloc(n * sizeof(float))
    if buf == NULL:
        raise MemoryError()
    try:
        for y in range(y0, y1 + 1):
            for x in range(x0, x1 + 1):
                buf[k] = values[y, x]
                k += 1
        hi = <double> _quickselect(buf, n, n // 2)
        if n % 2 == 1:
            return hi
        # After selection everything left of n//2 is <= buf[n//2], so the
        # lower middle value is the prefix maximum.
        lo = <double> buf[0]
        for k in range(1, n // 2):
            if <double> buf[k] > lo:
                lo = <double> buf[k]
        return (lo + hi) / 2.0
    finally:
        free(buf)


def iou_matrix(const cnp.float64_t[:, ::1] a, const cnp.float64_t[:, ::1] b):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t m = b.shape[0]
    out = np.zeros((n, m), dtype=np.float64)
    cdef double[:, ::1] out_v = out
    cdef Py_ssize_t i, j
    cdef double ix0, iy0, ix1, iy1, iw, ih, inter, area_a, area_b, union
    for i in range(n):
        area_a = (a[i, 2] - a[i, 0]) * (a[i, 3] - a[i, 1])
        for j in range(m):
            ix0 = a[i, 0] if a[i, 0] > b[j, 0] else b[j, 0]
            iy0 = a[i, 1] if a[i, 1] > b[j, 1] else b[j, 1]
            ix1 = a[i, 2] if a[i, 2] < b[j, 2] else b[j, 2]
            iy1 = a[i, 3] if a[i, 3] < b[j, 3] else b[j, 3]
            iw = ix1 - ix0
            if iw < 0.0:
                iw = 0.0
            ih = iy1 - iy0
            if ih < 0.0:
                ih = 0.0
            inter = iw * ih
            area_b = (b[j, 2] - b[j, 0]) * (b[j, 3] - b[j, 1])
            union = area_a + area_b - inter
            if union > 0.0:
                out_v[i, j] = inter / union
    return out
