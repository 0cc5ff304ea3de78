"""Truncated formal power series over F_p and bivariate polynomial roots.

A PowerSeries is a coefficient vector known mod X^order; mixing orders
truncates to the minimum.  Multiplication goes through the fast convolution
backend.  Two independent routes produce compositional inverses: a
degree-by-degree triangular solve (`comp_inverse_ref`, the reference) and
Newton-Hensel lifting of a root of the algebraic equation the inverse
satisfies (`newton_root`, the fast path).

Newton lifting tolerates a derivative dP/dY whose value at the root has a
zero constant term but finite valuation e (the update then gains k -> 2k - e
certified coefficients per step); with e = 0 this is the classical
simple-root iteration.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .convolution import convolve_mod
from .fieldcore import as_prime


class SeriesError(ValueError):
    """Invalid power-series operation."""


class CompositionError(SeriesError):
    """Composition or compositional inverse undefined for these operands."""


class NewtonError(SeriesError):
    """Newton lifting is not applicable to this equation/seed pair."""


class PowerSeries:
    """Coefficients of a formal power series over F_p, known mod X^order."""

    __slots__ = ("p", "coeffs")

    def __init__(self, coeffs, p, order=None):
        self.p = as_prime(p)
        arr = np.asarray(coeffs, dtype=np.int64) % self.p
        if order is not None:
            if len(arr) < order:
                arr = np.concatenate([arr, np.zeros(order - len(arr), dtype=np.int64)])
            else:
                arr = arr[:order]
        self.coeffs = np.ascontiguousarray(arr)
        self.coeffs.flags.writeable = False

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, p, order):
        return cls(np.zeros(order, dtype=np.int64), p)

    @classmethod
    def one(cls, p, order):
        c = np.zeros(order, dtype=np.int64)
        if order > 0:
            c[0] = 1
        return cls(c, p)

    @classmethod
    def x(cls, p, order):
        c = np.zeros(order, dtype=np.int64)
        if order > 1:
            c[1] = 1
        return cls(c, p)

    def _check(self, other: "PowerSeries"):
        if self.p != other.p:
            raise SeriesError(f"modulus mismatch: {self.p} vs {other.p}")

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return (
            self.p == other.p
            and self.order == other.order
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.p, self.coeffs.tobytes()))

    def __repr__(self):
        head = ", ".join(str(int(c)) for c in self.coeffs[:8])
        tail = ", ..." if self.order > 8 else ""
        return f"PowerSeries([{head}{tail}] mod {self.p}, order={self.order})"

    def __add__(self, other):
        self._check(other)
        n = min(self.order, other.order)
        return PowerSeries((self.coeffs[:n] + other.coeffs[:n]) % self.p, self.p)

    def __sub__(self, other):
        self._check(other)
        n = min(self.order, other.order)
        return PowerSeries((self.coeffs[:n] - other.coeffs[:n]) % self.p, self.p)

    def __neg__(self):
        return PowerSeries((-self.coeffs) % self.p, self.p)

    def scale(self, c: int) -> "PowerSeries":
        return PowerSeries((self.coeffs * (c % self.p)) % self.p, self.p)

    def __mul__(self, other):
        self._check(other)
        n = min(self.order, other.order)
        va = self.valuation()
        vb = other.valuation()
        if va is None or vb is None or va + vb >= n:
            return PowerSeries.zero(self.p, n)
        # strip low-order zeros so the convolution only covers the support
        need = n - va - vb
        prod = convolve_mod(self.coeffs[va:], other.coeffs[vb:], self.p, nout=need)
        out = np.zeros(n, dtype=np.int64)
        out[va + vb :] = prod
        return PowerSeries(out, self.p)

    def square(self) -> "PowerSeries":
        n = self.order
        va = self.valuation()
        if va is None or 2 * va >= n:
            return PowerSeries.zero(self.p, n)
        body = self.coeffs[va:]
        prod = convolve_mod(body, body, self.p, nout=n - 2 * va)
        out = np.zeros(n, dtype=np.int64)
        out[2 * va :] = prod
        return PowerSeries(out, self.p)

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries(self.coeffs, self.p, order=order)

    def substitute_power(self, k: int) -> "PowerSeries":
        """X -> X^k, truncated to this series' order."""
        if k < 1:
            raise SeriesError("substitution exponent must be >= 1")
        n = self.order
        out = np.zeros(n, dtype=np.int64)
        m = (n + k - 1) // k
        out[: (m - 1) * k + 1 : k] = self.coeffs[:m] if m else 0
        return PowerSeries(out, self.p)

    def frobenius(self) -> "PowerSeries":
        """p-th power: over F_p this is just X -> X^p on the coefficients."""
        return self.substitute_power(self.p)

    def valuation(self):
        nz = np.nonzero(self.coeffs)[0]
        return int(nz[0]) if len(nz) else None

    def shift_right(self, k: int) -> "PowerSeries":
        """Divide by X^k; requires the k low coefficients to vanish."""
        if np.any(self.coeffs[:k]):
            raise SeriesError(f"series not divisible by X^{k}")
        return PowerSeries(self.coeffs[k:], self.p)

    def shift_left(self, k: int) -> "PowerSeries":
        """Multiply by X^k, keeping the order (coefficients fall off the end)."""
        out = np.zeros(self.order, dtype=np.int64)
        out[k:] = self.coeffs[: self.order - k]
        return PowerSeries(out, self.p)

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def reciprocal(self) -> "PowerSeries":
        """Multiplicative inverse mod X^order by Newton iteration."""
        if self.order == 0:
            return self
        c0 = int(self.coeffs[0])
        if c0 == 0:
            raise SeriesError("non-invertible: constant term is zero")
        n = self.order
        inv0 = pow(c0, self.p - 2, self.p)
        z = PowerSeries([inv0], self.p, order=1)
        k = 1
        while k < n:
            k = min(2 * k, n)
            zk = z.truncate(k)
            f = self.truncate(k)
            # z <- z*(2 - f*z) mod X^k
            t = (f * zk).scale(-1) + PowerSeries([2], self.p, order=k)
            z = zk * t
        return z


def compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """f(g(X)) mod X^N, N = min order; g must have zero constant term.

    Baby-step/giant-step: O(sqrt(N)) series multiplications plus an O(N^2)
    vectorized accumulation.
    """
    f._check(g)
    n = min(f.order, g.order)
    if n == 0:
        return PowerSeries.zero(f.p, 0)
    if int(g.coeffs[0]) != 0:
        raise CompositionError("composition undefined: inner series has nonzero constant term")
    p = f.p
    fc = f.coeffs[:n]
    g = g.truncate(n)
    b = max(1, int(np.ceil(np.sqrt(n))))
    # baby powers g^0 .. g^(b-1)
    pows = np.zeros((b, n), dtype=np.int64)
    pows[0, 0] = 1
    cur = PowerSeries.one(p, n)
    for i in range(1, b):
        cur = cur * g
        pows[i] = cur.coeffs
    giant = cur * g  # g^b
    nchunks = (n + b - 1) // b
    res = PowerSeries.zero(p, n)
    for j in range(nchunks - 1, -1, -1):
        chunk = fc[j * b : (j + 1) * b]
        part = (chunk[:, None] * pows[: len(chunk)]).sum(axis=0) % p
        res = res * giant + PowerSeries(part, p)
    return res


def comp_inverse_ref(f: PowerSeries) -> PowerSeries:
    """Compositional inverse by degree-by-degree triangular solve.

    Reference implementation with quadratic cost: solves G(F) = X for the
    coefficients of G one at a time, maintaining the powers F^m.  Independent
    of the Newton lifting route.
    """
    n = f.order
    if n == 0:
        return f
    f0 = int(f.coeffs[0]) if n > 0 else 0
    f1 = int(f.coeffs[1]) if n > 1 else 0
    if f0 != 0 or f1 == 0:
        raise CompositionError(
            "not invertible under composition: need zero constant term and nonzero linear term"
        )
    p = f.p
    g = np.zeros(n, dtype=np.int64)
    acc = np.zeros(n, dtype=np.int64)  # sum of g_m * F^m added so far
    fpow = f.coeffs.copy()  # F^m, currently m = 1
    fbody = f.coeffs[1:]  # F / X
    for m in range(1, n):
        target = 1 if m == 1 else 0
        pm = int(fpow[m])  # equals f1^m, nonzero
        gm = (target - int(acc[m])) * pow(pm, p - 2, p) % p
        g[m] = gm
        if gm:
            acc[m:] = (acc[m:] + gm * fpow[m:]) % p
        if m + 1 < n:
            # F^(m+1) = F^m * F, valuations stripped on both sides
            prod = convolve_mod(fpow[m:], fbody, p, nout=n - m - 1)
            fpow[: m + 1] = 0
            fpow[m + 1 :] = prod
    return PowerSeries(g, p)


@dataclass(frozen=True)
class BivariatePoly:
    """P(X, Y) = sum of c[(i, j)] X^i Y^j over F_p, sparsely stored."""

    coeffs: dict
    p: int

    @classmethod
    def build(cls, entries, p):
        p = as_prime(p)
        clean = {}
        for (i, j), c in dict(entries).items():
            c %= p
            if c:
                clean[(int(i), int(j))] = c
        return cls(clean, p)

    def __post_init__(self):
        object.__setattr__(self, "p", as_prime(self.p))

    def y_degree(self) -> int:
        return max((j for (_, j) in self.coeffs), default=0)

    def derivative_y(self) -> "BivariatePoly":
        """dP/dY computed symbolically in F_p, so (p+1)Y^p collapses to Y^p."""
        out = {}
        for (i, j), c in self.coeffs.items():
            if j >= 1:
                cj = c * j % self.p
                if cj:
                    out[(i, j - 1)] = (out.get((i, j - 1), 0) + cj) % self.p
        return BivariatePoly.build(out, self.p)

    def _x_polys(self):
        """Group coefficients by Y-power: j -> list of (i, c)."""
        by_j: dict = {}
        for (i, j), c in sorted(self.coeffs.items()):
            by_j.setdefault(j, []).append((i, c))
        return by_j

    def eval_series(self, y: PowerSeries, powers: dict | None = None) -> PowerSeries:
        """P(X, y) truncated to y's order.

        `powers` may carry precomputed powers of y (shared between P and
        dP/dY evaluations); it is updated in place.
        """
        if self.p != y.p:
            raise SeriesError(f"modulus mismatch: {self.p} vs {y.p}")
        n = y.order
        out = np.zeros(n, dtype=np.int64)
        by_j = self._x_polys()
        if powers is None:
            powers = {}
        for j, terms in by_j.items():
            yj = _y_power(y, j, powers)
            for i, c in terms:
                if i < n:
                    if j == 0:
                        out[i] = (out[i] + c) % self.p
                    else:
                        out[i:] = (out[i:] + c * yj.coeffs[: n - i]) % self.p
        return PowerSeries(out, self.p)

    # algebra on the sparse dicts, used to build catalogued equations
    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = (out.get(k, 0) + c) % self.p
        return BivariatePoly.build(out, self.p)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = (out.get(k, 0) - c) % self.p
        return BivariatePoly.build(out, self.p)

    def __mul__(self, other):
        out: dict = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                k = (i1 + i2, j1 + j2)
                out[k] = (out.get(k, 0) + c1 * c2) % self.p
        return BivariatePoly.build(out, self.p)

    def __pow__(self, e: int):
        result = BivariatePoly.build({(0, 0): 1}, self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result


def bp_x(p, power=1, coeff=1):
    return BivariatePoly.build({(power, 0): coeff}, p)


def bp_y(p, power=1, coeff=1):
    return BivariatePoly.build({(0, power): coeff}, p)


def bp_const(p, c):
    return BivariatePoly.build({(0, 0): c}, p)


def _y_power(y: PowerSeries, j: int, cache: dict) -> PowerSeries:
    """y^j with Frobenius shortcuts: y^(p*m) = (y^m)(X^p) costs nothing."""
    if j in cache:
        return cache[j]
    if j == 0:
        r = PowerSeries.one(y.p, y.order)
    elif j == 1:
        r = y
    elif j % y.p == 0:
        r = _y_power(y, j // y.p, cache).frobenius()
    elif j % 2 == 0:
        r = _y_power(y, j // 2, cache).square()
    else:
        r = _y_power(y, j - 1, cache) * y
    cache[j] = r
    return r


def residual(P: BivariatePoly, f: PowerSeries) -> PowerSeries:
    """P(X, f) truncated to f's order; zero iff f is a root at that precision."""
    return P.eval_series(f)


# full-precision residual re-checks are capped at this window for huge lifts;
# the window always covers the acceptance checks and the oracle cross-checks
RESIDUAL_CHECK_WINDOW = 1 << 17


def newton_root(P: BivariatePoly, seed: PowerSeries, n: int, check: bool = True) -> PowerSeries:
    """Lift the root of P(X, Y) = 0 starting from `seed` to precision X^n.

    Requires residual(P, seed) = 0 mod X^2 and a derivative dP/dY whose value
    at the root is nonzero with some finite valuation e (constant term
    invertible in the classical case e = 0).  Each step turns k certified
    coefficients into 2k - e.  The reciprocal of the derivative's unit part is
    lifted alongside the root, one inversion step per iteration.

    With check=True the result's residual is re-evaluated, in full below
    RESIDUAL_CHECK_WINDOW and on that window prefix beyond it.
    """
    p = P.p
    if p != seed.p:
        raise SeriesError(f"modulus mismatch: {P.p} vs {seed.p}")
    r0 = P.eval_series(seed.truncate(2))
    if not r0.is_zero():
        raise NewtonError("Newton inapplicable: seed is not a root mod X^2")
    dP = P.derivative_y()

    probe = 8
    e = None
    while probe <= max(64, 2 * n):
        d0 = dP.eval_series(seed.truncate(probe))
        e = d0.valuation()
        if e is not None:
            break
        probe *= 2
    if e is None:
        raise NewtonError("Newton inapplicable: dP/dY vanishes at the seed")
    if e >= 2:
        raise NewtonError(
            f"Newton inapplicable: derivative valuation {e} exceeds seed precision"
        )

    k = 2
    y = seed.truncate(min(2, n))
    z = None  # for e = 0: reciprocal of dP/dY at y, lifted alongside the root
    while k < n:
        # certified growth: 2k for a unit derivative, 2k - 2e with valuation e
        target = min(n, max(2 * k - 2 * e, k + 1))
        w = target + e
        yw = y.truncate(w)
        powers: dict = {}
        py = P.eval_series(yw, powers)
        pyd = dP.eval_series(yw, powers)
        e_now = pyd.valuation()
        if e_now is None:
            raise NewtonError("Newton inapplicable: dP/dY vanishes at the iterate")
        if e_now != e:
            raise NewtonError(
                f"Newton inapplicable: derivative valuation drifted ({e} -> {e_now})"
            )
        if py.valuation() is not None and py.valuation() < e:
            raise NewtonError("Newton inapplicable: residual not divisible by derivative")
        unit = pyd.shift_right(e).truncate(target)
        if e > 0:
            z = unit.reciprocal()
        elif z is None:
            z = unit.reciprocal()
        else:
            # one lifting step: z was correct mod X^k, now mod X^min(2k, target)
            zt = z.truncate(target)
            z = zt * (PowerSeries([2], p, order=target) - unit * zt)
        h = py.shift_right(e).truncate(target) * z
        y = (yw.truncate(target) - h).truncate(target)
        k = target
    y = y.truncate(n)
    if check:
        window = y if n <= RESIDUAL_CHECK_WINDOW else y.truncate(RESIDUAL_CHECK_WINDOW)
        res = P.eval_series(window)
        if not res.is_zero():
            raise NewtonError(
                f"Newton result fails residual check at order {res.valuation()}"
            )
    return y
