"""
Bit-sliced vector kernels.

A vector of length n is stored as two planes of packed uint64 words, shape
(..., 2, W) with W = ceil(n / 64):

    F3: plane 0 = is-one, plane 1 = is-two
    F4: plane 0 = high bit, plane 1 = low bit (value = 2*hi + lo)

Addition, scalar multiplication and weight then run word-parallel over any
number of leading batch axes.
"""

import numpy as np

from fields.galois_fields import FieldTag

WORD_BITS = 64

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_S1 = np.uint64(1)
_S2 = np.uint64(2)
_S4 = np.uint64(4)
_S56 = np.uint64(56)


def word_count(n: int) -> int:
    return max(1, -(-n // WORD_BITS))


def _pack_bits(bits: np.ndarray, words: int) -> np.ndarray:
    padded = np.zeros(bits.shape[:-1] + (words * WORD_BITS,), dtype=bool)
    padded[..., : bits.shape[-1]] = bits
    packed = np.packbits(padded, axis=-1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64, copy=False)


def _unpack_bits(words: np.ndarray, n: int) -> np.ndarray:
    raw = np.ascontiguousarray(words.astype("<u8", copy=False)).view(np.uint8)
    return np.unpackbits(raw, axis=-1, bitorder="little")[..., :n]


def pack(tag: FieldTag, rows) -> np.ndarray:
    """Pack integer vectors of shape (..., n) into planes of shape (..., 2, W)."""
    rows = np.asarray(rows, dtype=np.int64)
    words = word_count(rows.shape[-1])
    if FieldTag.parse(tag) is FieldTag.F3:
        first, second = rows == 1, rows == 2
    else:
        first, second = (rows & 2) != 0, (rows & 1) != 0
    return np.stack([_pack_bits(first, words), _pack_bits(second, words)], axis=-2)


def unpack(tag: FieldTag, planes: np.ndarray, n: int) -> np.ndarray:
    """Inverse of :func:`pack`; returns int64 vectors of shape (..., n)."""
    first = _unpack_bits(planes[..., 0, :], n).astype(np.int64)
    second = _unpack_bits(planes[..., 1, :], n).astype(np.int64)
    if FieldTag.parse(tag) is FieldTag.F3:
        return first + 2 * second
    return 2 * first + second


def add(tag: FieldTag, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    if FieldTag.parse(tag) is FieldTag.F4:
        return x ^ y
    a1, a2 = x[..., 0, :], x[..., 1, :]
    b1, b2 = y[..., 0, :], y[..., 1, :]
    a0 = ~(a1 | a2)
    b0 = ~(b1 | b2)
    r1 = (a0 & b1) | (a1 & b0) | (a2 & b2)
    r2 = (a0 & b2) | (a2 & b0) | (a1 & b1)
    return np.stack([r1, r2], axis=-2)


def scale(tag: FieldTag, scalar: int, x: np.ndarray) -> np.ndarray:
    scalar = int(scalar)
    if scalar == 0:
        return np.zeros_like(x)
    if scalar == 1:
        return x.copy()
    if FieldTag.parse(tag) is FieldTag.F3:
        # 2*x swaps the ones and the twos
        return x[..., ::-1, :].copy()
    hi, lo = x[..., 0, :], x[..., 1, :]
    if scalar == 2:
        return np.stack([hi ^ lo, hi], axis=-2)
    return np.stack([lo, hi ^ lo], axis=-2)


def popcount(words: np.ndarray) -> np.ndarray:
    """Per-word population count of a uint64 array."""
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(words)
    x = words - ((words >> _S1) & _M1)
    x = (x & _M2) + ((x >> _S2) & _M2)
    x = (x + (x >> _S4)) & _M4
    return (x * _H01) >> _S56


def weights(planes: np.ndarray) -> np.ndarray:
    """Hamming weight of every packed vector in a batch."""
    return popcount(planes[..., 0, :] | planes[..., 1, :]).sum(axis=-1, dtype=np.int64)
