"""Pure-numpy implementations of the hot kernels.

Convolutions go through im2col + GEMM. Semantics match the compiled core:
stride 1, symmetric zero padding, NCHW layout, weights [F, C, kh, kw].
"""

import numpy as np

NAME = "python"


def _im2col(xp, kh, kw):
    # xp: padded input [N, C, Hp, Wp] -> [N*Ho*Wo, C*kh*kw]
    n, c, hp, wp = xp.shape
    ho, wo = hp - kh + 1, wp - kw + 1
    win = np.lib.stride_tricks.sliding_window_view(xp, (kh, kw), axis=(2, 3))
    cols = win.transpose(0, 2, 3, 1, 4, 5).reshape(n * ho * wo, c * kh * kw)
    return cols, ho, wo


def conv2d_forward(x, w, b, pad):
    n, c, h, wd = x.shape
    f, _, kh, kw = w.shape
    xp = np.pad(x, ((0, 0), (0, 0), (pad, pad), (pad, pad)))
    cols, ho, wo = _im2col(xp, kh, kw)
    y = cols @ w.reshape(f, -1).T
    if b is not None:
        y += b
    return y.reshape(n, ho, wo, f).transpose(0, 3, 1, 2)


def conv2d_grad_input(gy, w, pad, in_hw):
    n, f, ho, wo = gy.shape
    _, c, kh, kw = w.shape
    h, wd = in_hw
    gcols = gy.transpose(0, 2, 3, 1).reshape(n * ho * wo, f) @ w.reshape(f, -1)
    gcols = gcols.reshape(n, ho, wo, c, kh, kw).transpose(0, 3, 4, 5, 1, 2)
    gxp = np.zeros((n, c, h + 2 * pad, wd + 2 * pad), dtype=gy.dtype)
    for ki in range(kh):
        for kj in range(kw):
            gxp[:, :, ki:ki + ho, kj:kj + wo] += gcols[:, :, ki, kj]
    if pad:
        return gxp[:, :, pad:pad + h, pad:pad + wd].copy()
    return gxp


def conv2d_grad_weight(x, gy, pad, kh, kw):
    n, f, ho, wo = gy.shape
    c = x.shape[1]
    xp = np.pad(x, ((0, 0), (0, 0), (pad, pad), (pad, pad)))
    cols, _, _ = _im2col(xp, kh, kw)
    gw = gy.transpose(0, 2, 3, 1).reshape(n * ho * wo, f).T @ cols
    return gw.reshape(f, c, kh, kw)


_CRC64_POLY = 0xC96C5795D7870F42  # reflected ECMA-182 polynomial


def _crc64_table():
    table = []
    for i in range(256):
        crc = i
        for _ in range(8):
            crc = (crc >> 1) ^ _CRC64_POLY if crc & 1 else crc >> 1
        table.append(crc)
    return table


_TABLE = _crc64_table()


def crc64(data):
    crc = 0xFFFFFFFFFFFFFFFF
    table = _TABLE
    for byte in data:
        crc = table[(crc ^ byte) & 0xFF] ^ (crc >> 8)
    return crc ^ 0xFFFFFFFFFFFFFFFF
