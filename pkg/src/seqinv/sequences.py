"""Term oracles for every sequence under study.

Each sequence is computable by at least two independent methods, and the
block generators cross-check them on the overlap they can afford:

  t(p)  digit-sum mod p              digit definition  vs  t[pn+i] = t[n]+i
  r     0/1 Rudin-Shapiro            recurrence  vs  parity of 11-occurrences
  r', r''                            the two modifications of r
  s(p), w(p)                         joint quadratic convolution recurrence
  c(p)  inverse of t(p)              c[n] = -s[n+1]  vs  Newton on S-equation
  u, v  inverses of r', r''          triangular solve  vs  Newton lifting

Trust flows from the cross-checks, not from any single route.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import catalog
from .fieldcore import as_prime
from .series import PowerSeries, comp_inverse_ref


class OracleMismatch(AssertionError):
    """Two supposedly identical term oracles disagreed."""


@dataclass(frozen=True)
class TermBlock:
    """A prefix of a sequence: values[n] for n < count, reduced mod p."""

    tag: str
    p: int
    values: np.ndarray
    method: str

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.int64)
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    @property
    def count(self) -> int:
        return len(self.values)

    def __getitem__(self, n):
        return int(self.values[n]) if np.isscalar(n) else self.values[n]

    def series(self, order=None) -> PowerSeries:
        return PowerSeries(self.values, self.p, order=order or self.count)

    def bfile_text(self, offset: int = 0) -> str:
        """OEIS b-file style serialization: one 'n value' pair per line."""
        lines = [f"{n + offset} {int(v)}" for n, v in enumerate(self.values)]
        return "\n".join(lines) + "\n"


def _compare(tag, a, b, what):
    if not np.array_equal(a, b):
        idx = int(np.nonzero(a != b)[0][0])
        raise OracleMismatch(
            f"{tag}: {what} disagree first at n={idx}: {int(a[idx])} vs {int(b[idx])}"
        )


def digit_sums(n_count: int, p: int) -> np.ndarray:
    """Vector of base-p digit sums of 0..n_count-1, reduced mod p."""
    m = np.arange(n_count, dtype=np.int64)
    s = np.zeros(n_count, dtype=np.int64)
    while m.any():
        s += m % p
        m //= p
    return s % p


def thue_terms(p, n_count: int) -> TermBlock:
    """Generalized Thue-Morse block: digit sum mod p, checked against the
    recurrence t[0] = 0, t[p*n + i] = t[n] + i."""
    p = as_prime(p)
    by_digits = digit_sums(n_count, p)
    t = np.zeros(n_count, dtype=np.int64)
    # fill [p^k, p^(k+1)) blocks; each depends only on earlier indices
    lo = 1
    while lo < n_count:
        hi = min(lo * p, n_count)
        idx = np.arange(lo, hi)
        t[lo:hi] = (t[idx // p] + idx % p) % p
        lo = hi
    _compare(f"t{p}", by_digits, t, "digit-sum and recurrence definitions")
    return TermBlock(f"t{p}", p, by_digits, "digit-definition")


def _rudin_base(n_count: int) -> np.ndarray:
    """0/1 Rudin-Shapiro by recurrence r[0]=1, r[2n]=r[4n+1]=r[n],
    r[4n+3] = 1 + r[2n+1], cross-checked against counting 11-factors."""
    r = np.zeros(n_count, dtype=np.int64)
    if n_count:
        r[0] = 1
    lo = 1
    while lo < n_count:
        hi = min(lo * 2, n_count)
        idx = np.arange(lo, hi)
        rem = idx % 4
        src = np.where(rem % 2 == 0, idx // 2, np.where(rem == 1, idx // 4, idx // 2))
        val = r[src]
        r[lo:hi] = np.where(rem == 3, 1 - val, val) % 2
        lo = hi

    # independent oracle: parity of (possibly overlapping) 11-blocks in (n)_2
    m = np.arange(n_count, dtype=np.uint64)
    pairs = m & (m >> np.uint64(1))
    parity = np.zeros(n_count, dtype=np.uint64)
    while pairs.any():
        parity ^= pairs & np.uint64(1)
        pairs >>= np.uint64(1)
    by_count = (1 - parity.astype(np.int64)) % 2  # even count of 11s -> 1
    _compare("r", r, by_count, "recurrence and 11-count definitions")
    return r


def rudin_terms(variant: str, n_count: int) -> TermBlock:
    """r, r' (term 0 zeroed) or r'' (shifted right, 0 prepended)."""
    if variant not in ("r", "r'", "r''"):
        raise ValueError(f"unknown Rudin-Shapiro variant {variant!r}")
    r = _rudin_base(n_count if variant != "r''" else max(n_count - 1, 0))
    if variant == "r":
        vals = r
    elif variant == "r'":
        vals = r.copy()
        if n_count:
            vals[0] = 0
    else:
        vals = np.zeros(n_count, dtype=np.int64)
        vals[1:] = r
    return TermBlock({"r": "r", "r'": "r1", "r''": "r2"}[variant], 2, vals, "recurrence")


def sw_terms(p, n_count: int):
    """The joint recurrence for s and its convolution partner w:

        s[0] = 0, s[1] = 1, w[0] = -1,
        s[n] = s[1]w[n-1] + ... + s[n-1]w[1]          (n >= 2)
        w[n] = -s[n] (+ s[n/p] when p | n)            (n >= 1)

    Quadratic reference; everything else about c(p) is checked against it.
    """
    p = as_prime(p)
    s = np.zeros(n_count, dtype=np.int64)
    w = np.zeros(n_count, dtype=np.int64)
    if n_count:
        w[0] = p - 1
    if n_count > 1:
        s[1] = 1
        w[1] = p - 1
    for n in range(2, n_count):
        acc = int(np.dot(s[1:n], w[n - 1 : 0 : -1]) % p)
        s[n] = acc
        wn = -acc
        if n % p == 0:
            wn += s[n // p]
        w[n] = wn % p
    return (
        TermBlock(f"s{p}", p, s, "recurrence"),
        TermBlock(f"w{p}", p, w, "recurrence"),
    )


def _c_from_s(s: np.ndarray, p: int, n_count: int) -> np.ndarray:
    """c[0] = 0, c[1] = 1, c[n] = -s[n+1] for n >= 2."""
    c = np.zeros(n_count, dtype=np.int64)
    if n_count > 1:
        c[1] = 1
    if n_count > 2:
        c[2:] = (-s[3 : n_count + 1]) % p
    return c


CROSS_CHECK_DEPTH = 2048


def c_terms(p, n_count: int, method: str = "auto") -> TermBlock:
    """Formal inverse of the digit-sum sequence.

    method 'recurrence': quadratic s/w route; 'newton': lifting on the
    S-equation; 'auto': Newton values cross-checked against the recurrence
    on the first CROSS_CHECK_DEPTH terms.
    """
    p = as_prime(p)
    tag = f"c{p}"
    if method == "recurrence":
        s, _ = sw_terms(p, n_count + 1)
        return TermBlock(tag, p, _c_from_s(s.values, p, n_count), "recurrence")
    s_root = catalog.entry(f"s{p}").root(n_count + 1)
    vals = _c_from_s(s_root.coeffs, p, n_count)
    if method == "auto":
        k = min(n_count, CROSS_CHECK_DEPTH)
        s_ref, _ = sw_terms(p, k + 1)
        _compare(tag, vals[:k], _c_from_s(s_ref.values, p, k), "Newton and recurrence routes")
    elif method != "newton":
        raise ValueError(f"unknown method {method!r}")
    return TermBlock(tag, p, vals, "newton")


def inverse_terms(which: str, n_count: int, method: str = "auto") -> TermBlock:
    """Coefficients of the inverse of R_1 (tag 'u') or R_2 (tag 'v').

    method 'reference-inverse': triangular degree-by-degree solve;
    'newton': lifting on the catalogued equation; 'auto': Newton values
    cross-checked against the reference on the first CROSS_CHECK_DEPTH terms.
    """
    if which not in ("u", "v"):
        raise ValueError(f"unknown inverse tag {which!r}")
    variant = "r'" if which == "u" else "r''"

    def reference(count):
        outer = rudin_terms(variant, count)
        return comp_inverse_ref(outer.series()).coeffs

    if method == "reference-inverse":
        return TermBlock(which, 2, reference(n_count), "reference-inverse")
    vals = catalog.entry(which).root(n_count).coeffs
    if method == "auto":
        k = min(n_count, CROSS_CHECK_DEPTH)
        _compare(which, vals[:k], reference(k), "Newton and reference-inverse routes")
    elif method != "newton":
        raise ValueError(f"unknown method {method!r}")
    return TermBlock(which, 2, vals, "newton")


def terms(tag: str, n_count: int, method: str = "auto") -> TermBlock:
    """Uniform entry point: 't3', 'c5', 'r', "r'", 'u', 's3', ..."""
    if tag.startswith("t") and tag[1:].isdigit():
        return thue_terms(int(tag[1:]), n_count)
    if tag in ("r", "r'", "r''"):
        return rudin_terms(tag, n_count)
    if tag in ("r1", "r2"):
        return rudin_terms("r'" if tag == "r1" else "r''", n_count)
    if tag.startswith("s") and tag[1:].isdigit():
        return sw_terms(int(tag[1:]), n_count)[0]
    if tag.startswith("w") and tag[1:].isdigit():
        return sw_terms(int(tag[1:]), n_count)[1]
    if tag.startswith("c") and tag[1:].isdigit():
        return c_terms(int(tag[1:]), n_count, method=method)
    if tag in ("u", "v"):
        return inverse_terms(tag, n_count, method=method)
    raise ValueError(f"unknown sequence tag {tag!r}")
