"""Exact convolution of residue vectors mod a small prime.

The inner loops live in a compiled Cython kernel (``seqinv._ntt``) when it was
built, and in a numpy fallback (``seqinv._ntt_py``) otherwise; both compute
the identical transform, so results are bit-for-bit equal.  Set
``SEQINV_PURE=1`` to force the fallback (the benchmark uses this).

The integer convolution is recovered from NTTs over one or two word-size
primes with CRT; with coefficients below 2^16 and lengths below 2^26 two
primes always suffice.
"""

from __future__ import annotations

import os

import numpy as np

# Primes with large power-of-two subgroups, paired with a primitive root.
_NTT_PRIMES = ((2013265921, 31), (1811939329, 13))
_MAX_LOG2 = (27, 26)

_SCHOOLBOOK_CUTOFF = 32

if os.environ.get("SEQINV_PURE") == "1":
    from . import _ntt_py as _kernel

    BACKEND = "pure"
else:
    try:
        from . import _ntt as _kernel  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _ntt_py as _kernel

        BACKEND = "pure"


def backend_name() -> str:
    """Which convolution kernel is active: 'compiled' or 'pure'."""
    return BACKEND


# Twiddle tables keyed by (prime, size), LRU-evicted above this many entries.
_table_cache: "dict[tuple, tuple]" = {}
_TABLE_CACHE_BUDGET = 1 << 25


def _shoup(values: np.ndarray, prime: int) -> np.ndarray:
    """floor(v * 2^64 / prime) per entry, for division-free twiddle products.

    Computed exactly in two 32-bit halves so it vectorizes in uint64.
    """
    v = values.astype(np.uint64)
    pr = np.uint64(prime)
    hi = (v << np.uint64(32)) // pr
    rem = (v << np.uint64(32)) - hi * pr
    lo = (rem << np.uint64(32)) // pr
    return (hi << np.uint64(32)) + lo


def _power_table(w: int, count: int, prime: int) -> np.ndarray:
    """[w^0, w^1, ..., w^(count-1)] mod prime, built by doubling."""
    powers = np.ones(max(count, 1), dtype=np.uint64)
    m = 1
    while m < count:
        powers[m : 2 * m] = (powers[:m] * np.uint64(pow(w, m, prime))) % np.uint64(prime)
        m *= 2
    return powers[:count] if count else powers[:0]


def _root_tables(prime: int, g: int, n: int):
    """Twiddle tables for size-n transforms: powers of a primitive n-th root
    of unity (and of its inverse), each with Shoup quotients alongside."""
    key = (prime, n)
    tab = _table_cache.pop(key, None)
    if tab is None:
        w = pow(g, (prime - 1) // n, prime) if n > 1 else 1
        fwd = _power_table(w, max(n // 2, 1), prime)
        inv = _power_table(pow(w, prime - 2, prime), max(n // 2, 1), prime)
        n_inv = pow(n, prime - 2, prime)
        tab = (fwd, _shoup(fwd, prime), inv, _shoup(inv, prime), n_inv,
               (n_inv << 64) // prime, (1 << 64) // prime)
    _table_cache[key] = tab  # reinsert as most recently used
    total = sum(k[1] * 2 for k in _table_cache)
    for old_key in list(_table_cache):
        if total <= _TABLE_CACHE_BUDGET or old_key == key:
            break
        _table_cache.pop(old_key)
        total -= old_key[1] * 2
    return tab


def ntt_convolve_prime(a: np.ndarray, b: np.ndarray, prime: int, g: int, size: int) -> np.ndarray:
    """Cyclic size-`size` convolution of a and b mod the NTT prime."""
    fa = np.zeros(size, dtype=np.uint64)
    fa[: len(a)] = a
    fwd, fwd_q, inv, inv_q, n_inv, n_inv_q, barrett = _root_tables(prime, g, size)
    _kernel.ntt_forward(fa, prime, fwd, fwd_q)
    if b is a:
        fb = fa.copy()
    else:
        fb = np.zeros(size, dtype=np.uint64)
        fb[: len(b)] = b
        _kernel.ntt_forward(fb, prime, fwd, fwd_q)
    _kernel.pointwise_mul(fa, fb, prime, barrett)
    _kernel.ntt_inverse(fa, prime, inv, inv_q, n_inv, n_inv_q)
    return fa


def convolve_mod(a: np.ndarray, b: np.ndarray, p: int, nout: int | None = None) -> np.ndarray:
    """Convolution of integer vectors a and b, reduced mod p.

    Inputs must already be reduced into [0, p).  Returns exactly `nout`
    coefficients (zero-padded past the support), or the full product when
    `nout` is None.
    """
    la, lb = len(a), len(b)
    full = la + lb - 1 if la and lb else 0
    if nout is None:
        nout = full
    out = np.zeros(nout, dtype=np.int64)
    if la == 0 or lb == 0 or nout == 0:
        return out
    # only the first nout output terms are wanted, so longer inputs can be cut
    if la > nout or lb > nout:
        if b is a:
            a = a[:nout]
            b = a
        else:
            if la > nout:
                a = a[:nout]
            if lb > nout:
                b = b[:nout]
        la, lb = len(a), len(b)
    full = la + lb - 1
    need = min(nout, full)
    bound = min(la, lb, need) * (p - 1) * (p - 1)

    if min(la, lb) <= _SCHOOLBOOK_CUTOFF:
        if bound < (1 << 62):
            res = np.convolve(a.astype(np.int64), b.astype(np.int64))
            out[:need] = res[:need] % p
            return out

    size = 1
    while size < full:
        size *= 2

    au = np.ascontiguousarray(a, dtype=np.uint64)
    bu = au if b is a else np.ascontiguousarray(b, dtype=np.uint64)
    residues = []
    primes = []
    acc = 1
    for (prime, g), log2 in zip(_NTT_PRIMES, _MAX_LOG2):
        if size > (1 << log2):
            raise ValueError(f"convolution size {size} exceeds transform capacity")
        residues.append(ntt_convolve_prime(au, bu, prime, g, size))
        primes.append(prime)
        acc *= prime
        if acc > bound:
            break
    else:
        raise ValueError(f"coefficient bound {bound} too large for CRT prime set")

    if len(primes) == 1:
        out[:need] = (residues[0][:need] % np.uint64(p)).astype(np.int64)
        return out

    # Mixed-radix CRT for two primes, folded mod p as we go: every
    # intermediate stays far below 2^63.
    p1, p2 = primes
    r1 = residues[0][:need].astype(np.int64)
    r2 = residues[1][:need].astype(np.int64)
    inv_p1 = pow(p1 % p2, p2 - 2, p2)
    a2 = ((r2 - r1) % p2) * inv_p1 % p2
    out[:need] = (r1 % p + (p1 % p) * (a2 % p)) % p
    return out


def convolve_mod_reference(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Schoolbook convolution in exact big-integer arithmetic, for tests."""
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        return np.zeros(0, dtype=np.int64)
    out = [0] * (la + lb - 1)
    for i, ai in enumerate(int(x) for x in a):
        if ai == 0:
            continue
        for j, bj in enumerate(int(x) for x in b):
            out[i + j] += ai * bj
    return np.array([x % p for x in out], dtype=np.int64)
