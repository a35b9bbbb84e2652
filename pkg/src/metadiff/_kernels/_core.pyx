# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels: stride-1 NCHW convolution passes and CRC-64.

All loops use a fixed accumulation order, so per-sample results do not
depend on batch composition.
"""

import numpy as np

cimport numpy as cnp

ctypedef fused real:
    float
    double


def conv2d_forward_padded(real[:, :, :, ::1] xp, real[:, :, :, ::1] w,
                          real[::1] b, real[:, :, :, ::1] y):
    cdef Py_ssize_t n = y.shape[0], f = y.shape[1], ho = y.shape[2], wo = y.shape[3]
    cdef Py_ssize_t c = w.shape[1], kh = w.shape[2], kw = w.shape[3]
    cdef Py_ssize_t i, j, cc, ki, kj, p, q
    cdef real wv
    with nogil:
        for i in range(n):
            for j in range(f):
                for p in range(ho):
                    for q in range(wo):
                        y[i, j, p, q] = b[j]
                for cc in range(c):
                    for ki in range(kh):
                        for kj in range(kw):
                            wv = w[j, cc, ki, kj]
                            for p in range(ho):
                                for q in range(wo):
                                    y[i, j, p, q] += xp[i, cc, p + ki, q + kj] * wv


def conv2d_grad_input_padded(real[:, :, :, ::1] gy, real[:, :, :, ::1] w,
                             real[:, :, :, ::1] gxp):
    cdef Py_ssize_t n = gy.shape[0], f = gy.shape[1], ho = gy.shape[2], wo = gy.shape[3]
    cdef Py_ssize_t c = w.shape[1], kh = w.shape[2], kw = w.shape[3]
    cdef Py_ssize_t i, j, cc, ki, kj, p, q
    cdef real wv
    with nogil:
        for i in range(n):
            for cc in range(c):
                for j in range(f):
                    for ki in range(kh):
                        for kj in range(kw):
                            wv = w[j, cc, ki, kj]
                            for p in range(ho):
                                for q in range(wo):
                                    gxp[i, cc, p + ki, q + kj] += gy[i, j, p, q] * wv


def conv2d_grad_weight_padded(real[:, :, :, ::1] xp, real[:, :, :, ::1] gy,
                              real[:, :, :, ::1] gw):
    cdef Py_ssize_t n = gy.shape[0], f = gy.shape[1], ho = gy.shape[2], wo = gy.shape[3]
    cdef Py_ssize_t c = gw.shape[1], kh = gw.shape[2], kw = gw.shape[3]
    cdef Py_ssize_t i, j, cc, ki, kj, p, q
    cdef real acc
    with nogil:
        for i in range(n):
            for j in range(f):
                for cc in range(c):
                    for ki in range(kh):
                        for kj in range(kw):
                            acc = 0
                            for p in range(ho):
                                for q in range(wo):
                                    acc += xp[i, cc, p + ki, q + kj] * gy[i, j, p, q]
                            gw[j, cc, ki, kj] += acc


cdef unsigned long long _CRC64_POLY = 0xC96C5795D7870F42ULL
cdef unsigned long long[256] _CRC64_TABLE

cdef void _fill_crc_table() noexcept nogil:
    cdef unsigned long long crc
    cdef int i, k
    for i in range(256):
        crc = <unsigned long long> i
        for k in range(8):
            if crc & 1ULL:
                crc = (crc >> 1) ^ _CRC64_POLY
            else:
                crc = crc >> 1
        _CRC64_TABLE[i] = crc

_fill_crc_table()


def crc64(const unsigned char[::1] data):
    cdef unsigned long long crc = 0xFFFFFFFFFFFFFFFFULL
    cdef Py_ssize_t i, n = data.shape[0]
    with nogil:
        for i in range(n):
            crc = _CRC64_TABLE[(crc ^ data[i]) & 0xFFULL] ^ (crc >> 8)
    return crc ^ 0xFFFFFFFFFFFFFFFFULL
