"""Pure numpy number-theoretic transform, the fallback convolution kernel.

Same transform layout as the compiled kernel in ``_ntt.pyx``: DIF forward
(natural order in, bit-reversed out), DIT inverse (bit-reversed in, natural
out), so no bit-reversal pass is needed for convolution.  The twiddle table
holds the n/2 powers of a primitive n-th root; level of block size L reads it
with stride n/L.  The precomputed-quotient arguments exist only to match the
compiled interface; vectorized ``%`` is used instead.
"""

from __future__ import annotations

import numpy as np


def ntt_forward(a: np.ndarray, prime: int, wtab: np.ndarray, wquot: np.ndarray) -> None:
    """In-place forward transform of a uint64 array of power-of-two length."""
    n = a.shape[0]
    length = n
    while length >= 2:
        half = length // 2
        w = wtab[:: n // length][:half]
        view = a.reshape(-1, length)
        lo = view[:, :half]
        hi = view[:, half:]
        s = (lo + hi) % prime
        d = ((lo + prime - hi) * w) % prime
        view[:, :half] = s
        view[:, half:] = d
        length //= 2


def ntt_inverse(
    a: np.ndarray,
    prime: int,
    wtab_inv: np.ndarray,
    wquot_inv: np.ndarray,
    n_inv: int,
    n_inv_quot: int,
) -> None:
    """In-place inverse transform; undoes ntt_forward, including 1/n scaling."""
    n = a.shape[0]
    length = 2
    while length <= n:
        half = length // 2
        w = wtab_inv[:: n // length][:half]
        view = a.reshape(-1, length)
        lo = view[:, :half]
        hi = view[:, half:]
        v = (hi * w) % prime
        s = (lo + v) % prime
        d = (lo + prime - v) % prime
        view[:, :half] = s
        view[:, half:] = d
        length *= 2
    a *= np.uint64(n_inv)
    a %= np.uint64(prime)


def pointwise_mul(a: np.ndarray, b: np.ndarray, prime: int, barrett: int) -> None:
    """a <- a * b mod prime, elementwise, in place."""
    a *= b
    a %= np.uint64(prime)
