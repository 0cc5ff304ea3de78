# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled number-theoretic transform kernel.

Mirrors the pure numpy backend in ``_ntt_py.py`` exactly: DIF forward
(natural in, bit-reversed out), DIT inverse (bit-reversed in, natural out),
both over a word-size prime.  The twiddle table holds the n/2 powers of a
primitive n-th root; level of block size L reads it with stride n/L.  Twiddle
products use Shoup's precomputed quotients and the pointwise product uses
Barrett reduction, so the hot loops contain no division.  Results are
bit-identical to the fallback.
"""

import numpy as np

cimport numpy as cnp
from libc.stdint cimport uint64_t

cnp.import_array()

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"


cdef inline uint64_t mul_shoup(uint64_t w, uint64_t x, uint64_t wq, uint64_t prime) nogil:
    # w*x mod prime for x < prime, with wq = floor(w * 2^64 / prime).
    cdef uint64_t q = <uint64_t> ((<u128> wq * x) >> 64)
    cdef uint64_t r = w * x - q * prime
    if r >= prime:
        r -= prime
    return r


def ntt_forward(cnp.uint64_t[::1] a, uint64_t prime, cnp.uint64_t[::1] wtab,
                cnp.uint64_t[::1] wquot):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t length = n
    cdef Py_ssize_t half, start, i, stride
    cdef uint64_t lo, hi, s, d
    with nogil:
        while length >= 2:
            half = length >> 1
            stride = n // length
            start = 0
            while start < n:
                for i in range(half):
                    lo = a[start + i]
                    hi = a[start + i + half]
                    s = lo + hi
                    if s >= prime:
                        s -= prime
                    d = lo + prime - hi
                    if d >= prime:
                        d -= prime
                    a[start + i] = s
                    a[start + i + half] = mul_shoup(wtab[i * stride], d,
                                                    wquot[i * stride], prime)
                start += length
            length >>= 1


def ntt_inverse(cnp.uint64_t[::1] a, uint64_t prime, cnp.uint64_t[::1] wtab_inv,
                cnp.uint64_t[::1] wquot_inv, uint64_t n_inv, uint64_t n_inv_quot):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t length = 2
    cdef Py_ssize_t half, start, i, stride
    cdef uint64_t lo, v, s, d
    with nogil:
        while length <= n:
            half = length >> 1
            stride = n // length
            start = 0
            while start < n:
                for i in range(half):
                    lo = a[start + i]
                    v = mul_shoup(wtab_inv[i * stride], a[start + i + half],
                                  wquot_inv[i * stride], prime)
                    s = lo + v
                    if s >= prime:
                        s -= prime
                    d = lo + prime - v
                    if d >= prime:
                        d -= prime
                    a[start + i] = s
                    a[start + i + half] = d
                start += length
            length <<= 1
        for i in range(n):
            a[i] = mul_shoup(n_inv, a[i], n_inv_quot, prime)


def pointwise_mul(cnp.uint64_t[::1] a, cnp.uint64_t[::1] b, uint64_t prime,
                  uint64_t barrett):
    # barrett = floor(2^64 / prime); products stay below prime^2 < 2^62.
    cdef Py_ssize_t i, n = a.shape[0]
    cdef uint64_t x, q, r
    with nogil:
        for i in range(n):
            x = a[i] * b[i]
            q = <uint64_t> ((<u128> x * barrett) >> 64)
            r = x - q * prime
            while r >= prime:
                r -= prime
            a[i] = r
