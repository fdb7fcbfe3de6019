# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled inner loop for the dual-pixel defocus gather.

Keep this in lockstep with ``pyfallback.halfdisc_gather``: same tap sets,
same centroid placement, same clamping. Releases the GIL so callers can
split rows across threads; every output pixel depends only on read-only
inputs, so any row partition produces identical results.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, floor, sqrt


def halfdisc_gather(double[:, ::1] src, double[:, ::1] disp, int side,
                    double[:, ::1] out, Py_ssize_t row0, Py_ssize_t row1):
    """Defocus gather with a signed half-disc kernel, rows [row0, row1)."""
    cdef Py_ssize_t h_img = src.shape[0]
    cdef Py_ssize_t w_img = src.shape[1]
    cdef Py_ssize_t x, y, u, v, rmax, n, yc, i0, i1
    cdef double d, r, r2, hsign, ubar, base, acc, xs, x0, fx, sum_u
    with nogil:
        for y in range(row0, row1):
            for x in range(w_img):
                d = disp[y, x]
                r = fabs(d)
                if r < 0.5:
                    out[y, x] = src[y, x]
                    continue
                hsign = 1.0 if (side > 0) == (d > 0) else -1.0
                r2 = r * r
                rmax = <Py_ssize_t>floor(r)
                n = 0
                sum_u = 0.0
                for v in range(-rmax, rmax + 1):
                    for u in range(-rmax, rmax + 1):
                        if u * u + v * v <= r2 and u * hsign <= 0:
                            n += 1
                            sum_u += u
                ubar = sum_u / n
                base = x + (-side * d / 2.0 - ubar)
                acc = 0.0
                for v in range(-rmax, rmax + 1):
                    yc = y + v
                    if yc < 0:
                        yc = 0
                    elif yc >= h_img:
                        yc = h_img - 1
                    for u in range(-rmax, rmax + 1):
                        if u * u + v * v <= r2 and u * hsign <= 0:
                            xs = base + u
                            x0 = floor(xs)
                            fx = xs - x0
                            i0 = <Py_ssize_t>x0
                            i1 = i0 + 1
                            if i0 < 0:
                                i0 = 0
                            elif i0 >= w_img:
                                i0 = w_img - 1
                            if i1 < 0:
                                i1 = 0
                            elif i1 >= w_img:
                                i1 = w_img - 1
                            acc += (1.0 - fx) * src[yc, i0] + fx * src[yc, i1]
                out[y, x] = acc / n
