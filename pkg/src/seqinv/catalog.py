"""Catalogue of the algebraic equations satisfied by the generating series.

Each entry pairs a bivariate equation P(X, Y) = 0 over F_p with the two-term
seed of its power-series root, so Newton lifting can start from the
degree-one truncation.  Tags:

  f(p)   digit-sum series F_p:            (1-X)^(p+1) F^p - (1-X)^2 F + X = 0
  c(p)   compositional inverse C_p:       (1-C)^(p+1) X^p - (1-C)^2 X + C = 0
  s(p)   S_p = X(1 - C_p):                S^(p+1) - S^2 - S + X = 0
  r      0/1 Rudin-Shapiro series R:      (1+X)^5 R^2 + (1+X)^4 R + X^3 = 0
  r1     R_1 = R + 1 (first modification, term 0 zeroed)
  u      inverse of R_1:  (X^2+1)U^5 + (X^2+X)U^4 + U^3 + (X^2+1)U + X^2+X = 0
  r2     R_2 = X R (second modification, shifted)
  v      inverse of R_2:  (X^2+X+1)V^5 + X^2 V^4 + (X^2+X)V + X^2 = 0
"""

from __future__ import annotations

from dataclasses import dataclass

from .fieldcore import as_prime
from .series import BivariatePoly, PowerSeries, bp_const, bp_x, bp_y, newton_root


@dataclass(frozen=True)
class CatalogEntry:
    tag: str
    p: int
    equation: BivariatePoly
    seed: tuple  # first two coefficients of the root

    def seed_series(self) -> PowerSeries:
        return PowerSeries(list(self.seed), self.p, order=2)

    def root(self, order: int, check: bool = True) -> PowerSeries:
        return newton_root(self.equation, self.seed_series(), order, check=check)


def digit_sum_series_equation(p) -> BivariatePoly:
    """(1 - X)^(p+1) Y^p - (1 - X)^2 Y + X = 0."""
    p = as_prime(p)
    one_minus_x = bp_const(p, 1) - bp_x(p)
    return (
        one_minus_x ** (p + 1) * bp_y(p, p)
        - one_minus_x**2 * bp_y(p)
        + bp_x(p)
    )


def inverse_series_equation(p) -> BivariatePoly:
    """(1 - Y)^(p+1) X^p - (1 - Y)^2 X + Y = 0, the relation for C_p."""
    p = as_prime(p)
    one_minus_y = bp_const(p, 1) - bp_y(p)
    return (
        one_minus_y ** (p + 1) * bp_x(p, p)
        - one_minus_y**2 * bp_x(p)
        + bp_y(p)
    )


def s_series_equation(p) -> BivariatePoly:
    """Y^(p+1) - Y^2 - Y + X = 0, the relation for S_p = X(1 - C_p)."""
    p = as_prime(p)
    return bp_y(p, p + 1) - bp_y(p, 2) - bp_y(p) + bp_x(p)


def rudin_series_equation() -> BivariatePoly:
    """(1 + X)^5 Y^2 + (1 + X)^4 Y + X^3 = 0 over F_2."""
    one_plus_x = bp_const(2, 1) + bp_x(2)
    return one_plus_x**5 * bp_y(2, 2) + one_plus_x**4 * bp_y(2) + bp_x(2, 3)


def rudin_mod1_equation() -> BivariatePoly:
    """Relation for R_1 = R + 1:
    (Y^2+1)X^5 + (Y^2+Y)X^4 + X^3 + (Y^2+1)X + Y^2 + Y = 0."""
    y2 = bp_y(2, 2)
    y = bp_y(2)
    one = bp_const(2, 1)
    return (
        (y2 + one) * bp_x(2, 5)
        + (y2 + y) * bp_x(2, 4)
        + bp_x(2, 3)
        + (y2 + one) * bp_x(2)
        + y2
        + y
    )


def u_series_equation() -> BivariatePoly:
    """(X^2+1)Y^5 + (X^2+X)Y^4 + Y^3 + (X^2+1)Y + X^2 + X = 0."""
    x2_1 = bp_x(2, 2) + bp_const(2, 1)
    x2_x = bp_x(2, 2) + bp_x(2)
    return x2_1 * bp_y(2, 5) + x2_x * bp_y(2, 4) + bp_y(2, 3) + x2_1 * bp_y(2) + x2_x


def rudin_mod2_equation() -> BivariatePoly:
    """Relation for R_2 = X R:
    (Y^2+Y+1)X^5 + Y^2 X^4 + (Y^2+Y)X + Y^2 = 0."""
    y2 = bp_y(2, 2)
    y = bp_y(2)
    one = bp_const(2, 1)
    return (
        (y2 + y + one) * bp_x(2, 5)
        + y2 * bp_x(2, 4)
        + (y2 + y) * bp_x(2)
        + y2
    )


def v_series_equation() -> BivariatePoly:
    """(X^2+X+1)Y^5 + X^2 Y^4 + (X^2+X)Y + X^2 = 0."""
    x2_x_1 = bp_x(2, 2) + bp_x(2) + bp_const(2, 1)
    return (
        x2_x_1 * bp_y(2, 5)
        + bp_x(2, 2) * bp_y(2, 4)
        + (bp_x(2, 2) + bp_x(2)) * bp_y(2)
        + bp_x(2, 2)
    )


def entry(tag: str) -> CatalogEntry:
    """Look up a catalogue entry; parametric tags look like 'f3', 'c5', 's7'."""
    if tag in _FIXED:
        return _FIXED[tag]
    if len(tag) >= 2 and tag[0] in "fcs" and tag[1:].isdigit():
        p = as_prime(int(tag[1:]))
        kind = tag[0]
        if kind == "f":
            return CatalogEntry(tag, p, digit_sum_series_equation(p), (0, 1))
        if kind == "c":
            return CatalogEntry(tag, p, inverse_series_equation(p), (0, 1))
        return CatalogEntry(tag, p, s_series_equation(p), (0, 1))
    raise KeyError(f"unknown series tag {tag!r}")


_FIXED = {
    "r": CatalogEntry("r", 2, rudin_series_equation(), (1, 1)),
    "r1": CatalogEntry("r1", 2, rudin_mod1_equation(), (0, 1)),
    "u": CatalogEntry("u", 2, u_series_equation(), (0, 1)),
    "r2": CatalogEntry("r2", 2, rudin_mod2_equation(), (0, 1)),
    "v": CatalogEntry("v", 2, v_series_equation(), (0, 1)),
}

# every (equation, root) pair whose residual must vanish identically
RESIDUAL_PAIRS = ("f2", "f3", "f5", "c2", "c3", "c5", "s2", "s3", "s5", "r", "r1", "u", "r2", "v")
