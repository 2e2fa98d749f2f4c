"""Fundamental units of real quadratic fields via continued fractions."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from .intkernel import is_squarefree, isqrt

DEFAULT_PERIOD_CAP = 10**6


class PeriodCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class QuadraticUnit:
    """The unit (x + y*sqrt(d)) / denom of Q(sqrt(d))."""

    d: int
    x: int
    y: int
    denom: int = 1
    norm: int = 1

    def __post_init__(self):
        if self.denom not in (1, 2):
            raise ValueError("denom must be 1 or 2")
        if self.denom == 2 and self.d % 4 != 1:
            raise ValueError("half-integral units need d = 1 mod 4")
        if self.x * self.x - self.d * self.y * self.y != self.denom**2 * self.norm:
            raise ValueError(f"{self} does not satisfy its norm equation")

    def __str__(self):
        coef = "" if self.y == 1 else f"{self.y}*"
        s = f"{self.x}+{coef}sqrt({self.d})"
        return s if self.denom == 1 else f"({s})/2"

    @property
    def is_integral(self) -> bool:
        return self.denom == 1

    def as_dict(self) -> dict:
        return {"d": self.d, "x": str(self.x), "y": str(self.y),
                "denom": self.denom, "norm": self.norm}

    @classmethod
    def from_dict(cls, data: dict) -> QuadraticUnit:
        return cls(int(data["d"]), int(data["x"]), int(data["y"]),
                   int(data["denom"]), int(data["norm"]))


def period_cap_from_env() -> int:
    raw = os.environ.get("CAPITULA_PERIOD_CAP")
    if raw is None:
        return DEFAULT_PERIOD_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError("CAPITULA_PERIOD_CAP must be positive")
    return cap


def fundamental_unit(d: int, period_cap: int | None = None) -> QuadraticUnit:
    """Fundamental unit of the maximal order of Q(sqrt(d)), d > 1 squarefree.

    Expands sqrt(d) (or (1 + sqrt(d))/2 when d = 1 mod 4) until the complete
    quotient denominator returns to its starting value; the last convergent
    then yields the unit and the period parity its norm.
    """
    if d <= 1 or not is_squarefree(d):
        raise ValueError(f"d must be squarefree and > 1, got {d}")
    if period_cap is None:
        period_cap = period_cap_from_env()
    return _fundamental_unit(d, period_cap)


@lru_cache(maxsize=4096)
def _fundamental_unit(d: int, period_cap: int) -> QuadraticUnit:
    r = isqrt(d)
    P, Q = (1, 2) if d % 4 == 1 else (0, 1)
    Q0 = Q
    h_prev, h, k_prev, k = 0, 1, 1, 0
    for n in range(period_cap):
        a = (P + r) // Q
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
        P = a * Q - P
        Q = (d - P * P) // Q
        if Q == Q0:
            norm = -1 if n % 2 == 0 else 1
            break
    else:
        raise PeriodCapExceeded(f"continued fraction of sqrt({d}) exceeded {period_cap} steps")

    if Q0 == 1:
        return QuadraticUnit(d, h, k, 1, norm)
    X, Y = 2 * h - k, k
    if X % 2 == 0 and Y % 2 == 0:
        return QuadraticUnit(d, X // 2, Y // 2, 1, norm)
    return QuadraticUnit(d, X, Y, 2, norm)


def unit_norm(u: QuadraticUnit) -> int:
    return (u.x * u.x - u.d * u.y * u.y) // (u.denom * u.denom)
